//! Plain-text configuration files.
//!
//! One point per line as three whitespace-separated decimals `a re(z) im(z)`;
//! blank lines and lines starting with `#` are ignored. Writing uses 17
//! significant digits, so a written file re-parses to identical values.

use std::fmt::Write as _;

use thiserror::Error;

use crate::geometry::{Configuration, Point};

#[derive(Debug, Clone, PartialEq, Error)]
pub enum ParseError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("coincident points at lines {0}, {1}")]
    Coincident(usize, usize),
    #[error("need at least 2 points, found {0}")]
    TooFewPoints(usize),
}

pub fn parse_configuration(text: &str) -> Result<Configuration, ParseError> {
    let mut points = Vec::new();
    let mut lines = Vec::new();
    for (k, raw) in text.lines().enumerate() {
        let line = k + 1;
        let body = raw.trim();
        if body.is_empty() || body.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = body.split_whitespace().collect();
        if fields.len() != 3 {
            return Err(ParseError::Syntax {
                line,
                msg: format!("expected 3 numbers, found {}", fields.len()),
            });
        }
        let mut v = [0.0; 3];
        for (slot, f) in v.iter_mut().zip(&fields) {
            *slot = f.parse::<f64>().map_err(|e| ParseError::Syntax {
                line,
                msg: format!("'{f}': {e}"),
            })?;
            if !slot.is_finite() {
                return Err(ParseError::Syntax {
                    line,
                    msg: format!("'{f}' is not finite"),
                });
            }
        }
        let p = Point::new(v[0], v[1], v[2]);
        if let Some(prev) = points.iter().position(|q| *q == p) {
            return Err(ParseError::Coincident(lines[prev], line));
        }
        points.push(p);
        lines.push(line);
    }
    let n = points.len();
    Configuration::new(points).map_err(|_| ParseError::TooFewPoints(n))
}

pub fn format_configuration(c: &Configuration, comment: Option<&str>) -> String {
    let mut out = String::new();
    if let Some(text) = comment {
        for l in text.lines() {
            let _ = writeln!(out, "# {l}");
        }
    }
    for p in c.points() {
        let _ = writeln!(out, "{:.16e} {:.16e} {:.16e}", p.a, p.z.re, p.z.im);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_with_comments() {
        let c = parse_configuration("# two points\n0 0 0\n\n  1.5 -2 3e-1  \n").unwrap();
        assert_eq!(c.points(), &[Point::new(0.0, 0.0, 0.0), Point::new(1.5, -2.0, 0.3)]);
    }

    #[test]
    fn reports_coincident_lines() {
        let err = parse_configuration("# x\n0 0 0\n1 0 0\n0 0 0\n").unwrap_err();
        assert_eq!(err, ParseError::Coincident(2, 4));
        assert_eq!(err.to_string(), "coincident points at lines 2, 4");
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_configuration("0 0\n1 1 1\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_configuration("0 0 x\n"), Err(ParseError::Syntax { line: 1, .. })));
        assert!(matches!(parse_configuration("0 0 inf\n1 1 1"), Err(ParseError::Syntax { .. })));
        assert_eq!(parse_configuration("1 2 3\n"), Err(ParseError::TooFewPoints(1)));
    }

    #[test]
    fn round_trip_exact() {
        let c = Configuration::new(vec![
            Point::new(0.1, 1.0 / 3.0, -2.0f64.sqrt()),
            Point::new(1e-300, 6.02214076e23, -0.0),
        ])
        .unwrap();
        let back = parse_configuration(&format_configuration(&c, Some("round trip"))).unwrap();
        for (p, q) in c.points().iter().zip(back.points()) {
            assert_eq!(p.a.to_bits(), q.a.to_bits());
            assert_eq!(p.z.re.to_bits(), q.z.re.to_bits());
            assert_eq!(p.z.im.to_bits(), q.z.im.to_bits());
        }
    }
}
