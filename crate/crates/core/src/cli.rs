//! Command-line front end.
//!
//! Every subcommand prints a short human summary followed by one JSON summary
//! line on stdout. With `--output`, the full line-delimited record stream
//! (per-sample records, then the summary) is written to that file instead of
//! only the summary.
//!
//! Exit codes:
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success, nothing flagged |
//! | 1 | invalid arguments, unreadable or malformed input |
//! | 2 | a ratio fell below `1 - 1e-9` (bound flagged) |
//! | 3 | a configuration was numerically dependent (ratio <= `--tol`) |
//! | 4 | a numerical check failed (closed-form mismatch, identity residual, invariance delta) |

use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::atiyah_core::{evaluate, AtiyahEvaluation, DEFAULT_INDEPENDENCE_TOL};
use crate::closed_forms::specialized_identity;
use crate::generators::{case_a_config, case_b_config, random_config, GeneratorKind, GeneratorSpec};
use crate::geometry::{Configuration, OrientationPolicy};
use crate::harness::crosscheck::crosscheck_special_cases;
use crate::harness::fuzz::{fuzz_records, summarize, VIOLATION_TOL};
use crate::harness::invariance::invariance_suite;
use crate::harness::minimize::{minimize_ratio, minimize_with_restarts};
use crate::harness::probe::probe_case_b;
use crate::io::{format_configuration, parse_configuration};

pub const EXIT_OK: i32 = 0;
pub const EXIT_ERROR: i32 = 1;
pub const EXIT_BOUND_FLAG: i32 = 2;
pub const EXIT_DEPENDENT: i32 = 3;
pub const EXIT_CHECK_FAILED: i32 = 4;

/// Relative residual allowed for the binomial identity.
pub const IDENTITY_RTOL: f64 = 1e-12;

#[derive(Debug, Parser)]
#[command(name = "atiyah-lab", version, about = "Probe Atiyah's point-configuration conjectures")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Orientation {
    Canonical,
    Table1,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate the determinant, bound and ratio of a configuration file.
    Eval(EvalArgs),
    /// Write a generated configuration file.
    Generate(GenerateArgs),
    /// Seeded fuzz campaign over generated configurations.
    Fuzz(FuzzArgs),
    /// Simplex descent on the ratio, optionally with perturbed restarts.
    Minimize(MinimizeArgs),
    /// Cross-check the special configurations against their closed forms.
    Cases(CasesArgs),
    /// Check the all-equal binomial identity and product inequality.
    Identities(IdentitiesArgs),
    /// Probe the open case-B inequality on random lambda lists.
    ProbeB(ProbeArgs),
    /// Run the ratio invariance suite on one configuration.
    Invariance(InvarianceArgs),
}

#[derive(Debug, Args)]
pub struct EvalArgs {
    #[arg(long)]
    pub input: PathBuf,
    #[arg(long)]
    pub output: Option<PathBuf>,
    #[arg(long, value_enum, default_value = "canonical")]
    pub orientation: Orientation,
    /// Number of leading points on the first line (table1 orientation only).
    #[arg(long)]
    pub m: Option<usize>,
    /// Ratios at or below this count as dependent.
    #[arg(long, default_value_t = DEFAULT_INDEPENDENCE_TOL)]
    pub tol: f64,
    /// Exit 2 when the ratio is below `1 - violation_tol`.
    #[arg(long, default_value_t = VIOLATION_TOL)]
    pub violation_tol: f64,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[arg(long, value_parser = parse_kind)]
    pub kind: GeneratorKind,
    #[arg(long, required_unless_present = "a")]
    pub n: Option<usize>,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Comma-separated positions on the first line (case_a / case_b only).
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    pub a: Option<Vec<f64>>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct FuzzArgs {
    /// Point counts, `lo..hi` (inclusive) or a single value.
    #[arg(long, default_value = "3..7", value_parser = parse_range)]
    pub n: (usize, usize),
    #[arg(long, default_value_t = 1000)]
    pub samples: u64,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, value_parser = parse_kind, default_value = "random_gaussian")]
    pub kind: GeneratorKind,
    #[arg(long, default_value_t = 1.0)]
    pub scale: f64,
    #[arg(long, default_value_t = DEFAULT_INDEPENDENCE_TOL)]
    pub tol: f64,
    /// Evaluate samples on one thread.
    #[arg(long)]
    pub serial: bool,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct MinimizeArgs {
    /// Start configuration; when absent one is generated from `--kind/--n/--seed`.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_kind, default_value = "random_gaussian")]
    pub kind: GeneratorKind,
    #[arg(long, default_value_t = 4)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 2000)]
    pub budget: usize,
    /// Number of perturbed restarts; 0 runs a single descent from the start itself.
    #[arg(long, default_value_t = 0)]
    pub restarts: usize,
    #[arg(long, default_value_t = 0.05)]
    pub perturbation: f64,
    /// Simplex size at which a descent stops.
    #[arg(long, default_value_t = 1e-10)]
    pub tol: f64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CasesArgs {
    #[arg(long, default_value_t = 10)]
    pub m_max: usize,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct IdentitiesArgs {
    #[arg(long, default_value = "1..20", value_parser = parse_range)]
    pub m: (usize, usize),
    /// `start:stop:step`, inclusive of both ends.
    #[arg(long, default_value = "0.01:4:0.01", value_parser = parse_grid)]
    pub grid: Grid,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ProbeArgs {
    #[arg(long, default_value_t = 100_000)]
    pub samples: u64,
    #[arg(long = "m", default_value_t = 8)]
    pub m_max: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct InvarianceArgs {
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long, value_parser = parse_kind, default_value = "random_gaussian")]
    pub kind: GeneratorKind,
    #[arg(long, default_value_t = 5)]
    pub n: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long, default_value_t = 100)]
    pub trials: usize,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Grid {
    pub start: f64,
    pub stop: f64,
    pub step: f64,
}

impl Grid {
    pub fn points(&self) -> impl Iterator<Item = f64> + '_ {
        let count = ((self.stop - self.start) / self.step + 1e-9).floor() as usize;
        (0..=count).map(move |k| self.start + k as f64 * self.step)
    }
}

fn parse_kind(s: &str) -> Result<GeneratorKind, String> {
    match s {
        "gaussian" => Ok(GeneratorKind::RandomGaussian),
        "box" => Ok(GeneratorKind::RandomBox),
        "collinear" => Ok(GeneratorKind::CollinearVertical),
        _ => s.parse().map_err(|e: crate::Error| e.to_string()),
    }
}

pub fn parse_range(s: &str) -> Result<(usize, usize), String> {
    let parse = |t: &str| t.trim().parse::<usize>().map_err(|e| format!("'{t}': {e}"));
    let (lo, hi) = match s.split_once("..") {
        Some((lo, hi)) => (parse(lo)?, parse(hi.trim_start_matches('='))?),
        None => {
            let v = parse(s)?;
            (v, v)
        }
    };
    if hi < lo {
        return Err(format!("empty range {s}"));
    }
    Ok((lo, hi))
}

pub fn parse_grid(s: &str) -> Result<Grid, String> {
    let parts: Vec<f64> = s
        .split(':')
        .map(|t| t.trim().parse::<f64>().map_err(|e| format!("'{t}': {e}")))
        .collect::<Result<_, _>>()?;
    let [start, stop, step] = parts[..] else {
        return Err(format!("grid must be start:stop:step, got '{s}'"));
    };
    if !(step > 0.0 && start > 0.0 && stop >= start && stop.is_finite()) {
        return Err(format!("grid needs 0 < start <= stop and step > 0, got '{s}'"));
    }
    Ok(Grid { start, stop, step })
}

struct Failure(String);

impl<E: std::fmt::Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure(e.to_string())
    }
}

type CmdResult = Result<i32, Failure>;

/// Line-delimited output: records go to the `--output` file when given; the
/// summary always goes to stdout as well.
struct Sink<'a> {
    out: &'a mut dyn Write,
    file: Option<std::io::BufWriter<fs::File>>,
}

impl<'a> Sink<'a> {
    fn new(out: &'a mut dyn Write, path: Option<&Path>) -> Result<Self, Failure> {
        let file = match path {
            Some(p) => Some(std::io::BufWriter::new(
                fs::File::create(p).map_err(|e| Failure(format!("{}: {e}", p.display())))?,
            )),
            None => None,
        };
        Ok(Self { out, file })
    }

    fn say(&mut self, line: impl std::fmt::Display) -> Result<(), Failure> {
        writeln!(self.out, "{line}")?;
        Ok(())
    }

    fn record<T: Serialize>(&mut self, kind: &str, value: &T) -> Result<(), Failure> {
        if let Some(f) = &mut self.file {
            writeln!(f, "{}", tagged(kind, value)?)?;
        }
        Ok(())
    }

    fn summary<T: Serialize>(&mut self, value: &T) -> Result<(), Failure> {
        let line = tagged("summary", value)?;
        writeln!(self.out, "{line}")?;
        if let Some(f) = &mut self.file {
            writeln!(f, "{line}")?;
            f.flush()?;
        }
        Ok(())
    }
}

fn tagged<T: Serialize>(kind: &str, value: &T) -> Result<String, Failure> {
    let mut v = serde_json::to_value(value)?;
    match &mut v {
        serde_json::Value::Object(map) => {
            map.insert("record".into(), serde_json::Value::String(kind.into()));
        }
        other => {
            let inner = other.take();
            v = serde_json::json!({ "record": kind, "value": inner });
        }
    }
    Ok(serde_json::to_string(&v)?)
}

fn read_configuration(path: &Path) -> Result<Configuration, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure(format!("{}: {e}", path.display())))?;
    parse_configuration(&text).map_err(|e| Failure(format!("{}: {e}", path.display())))
}

fn verdict_code(ratio: f64, independent: bool, violation_tol: f64) -> i32 {
    if !independent {
        EXIT_DEPENDENT
    } else if ratio < 1.0 - violation_tol {
        EXIT_BOUND_FLAG
    } else {
        EXIT_OK
    }
}

/// Parse `args` (including the program name) and run; returns the exit code.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let _ = if e.use_stderr() {
                write!(err, "{}", e.render())
            } else {
                write!(out, "{}", e.render())
            };
            return code;
        }
    };
    let result = match cli.command {
        Command::Eval(a) => cmd_eval(a, out),
        Command::Generate(a) => cmd_generate(a, out),
        Command::Fuzz(a) => cmd_fuzz(a, out),
        Command::Minimize(a) => cmd_minimize(a, out),
        Command::Cases(a) => cmd_cases(a, out),
        Command::Identities(a) => cmd_identities(a, out),
        Command::ProbeB(a) => cmd_probe_b(a, out),
        Command::Invariance(a) => cmd_invariance(a, out),
    };
    match result {
        Ok(code) => code,
        Err(Failure(msg)) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_ERROR
        }
    }
}

#[derive(Serialize)]
struct EvalSummary<'a> {
    input: String,
    points: &'a Configuration,
    #[serde(flatten)]
    evaluation: &'a AtiyahEvaluation,
    exit_code: i32,
}

fn cmd_eval(a: EvalArgs, out: &mut dyn Write) -> CmdResult {
    let c = read_configuration(&a.input)?;
    let policy = match a.orientation {
        Orientation::Canonical => OrientationPolicy::Canonical,
        Orientation::Table1 => {
            let m = a.m.ok_or_else(|| Failure("--orientation table1 needs --m".into()))?;
            OrientationPolicy::table1(c.len(), m)?
        }
    };
    let e = evaluate(&c, &policy, a.tol)?;
    let code = verdict_code(e.ratio, e.independent, a.violation_tol);
    let mut sink = Sink::new(out, a.output.as_deref())?;
    sink.say(format_args!("N             {}", e.n))?;
    sink.say(format_args!("log|det P|    {:.12}", e.log_abs_det))?;
    sink.say(format_args!("log bound     {:.12}", e.log_rhs))?;
    sink.say(format_args!("ratio         {:.15}", e.ratio))?;
    sink.say(format_args!("independent   {}", e.independent))?;
    sink.summary(&EvalSummary {
        input: a.input.display().to_string(),
        points: &c,
        evaluation: &e,
        exit_code: code,
    })?;
    Ok(code)
}

fn cmd_generate(a: GenerateArgs, out: &mut dyn Write) -> CmdResult {
    let c = match (a.kind, &a.a) {
        (GeneratorKind::CaseA, Some(list)) => case_a_config(list, -1.0)?.0,
        (GeneratorKind::CaseB, Some(list)) => case_b_config(list)?.0,
        (_, Some(_)) => return Err(Failure("--a only applies to case_a and case_b".into())),
        (kind, None) => random_config(a.n.unwrap_or_default(), a.seed, kind)?,
    };
    let comment = format!("kind={} n={} seed={}", a.kind.name(), c.len(), a.seed);
    let text = format_configuration(&c, Some(&comment));
    match a.output {
        Some(p) => fs::write(&p, text).map_err(|e| Failure(format!("{}: {e}", p.display())))?,
        None => out.write_all(text.as_bytes())?,
    }
    Ok(EXIT_OK)
}

fn cmd_fuzz(a: FuzzArgs, out: &mut dyn Write) -> CmdResult {
    if a.samples == 0 {
        return Err(Failure("--samples must be at least 1".into()));
    }
    let spec = GeneratorSpec::new(a.kind, a.n.0, a.n.1, a.seed)?.with_scale(a.scale)?;
    let t0 = std::time::Instant::now();
    let records = fuzz_records(&spec, a.samples, a.tol, !a.serial);
    let report = summarize(&spec, a.tol, &records, t0.elapsed().as_secs_f64());
    let mut sink = Sink::new(out, a.output.as_deref())?;
    for r in &records {
        sink.record("sample", r)?;
    }
    let code = if !report.independence_failures.is_empty() || !report.errors.is_empty() {
        EXIT_DEPENDENT
    } else if !report.violations.is_empty() {
        EXIT_BOUND_FLAG
    } else {
        EXIT_OK
    };
    sink.say(format_args!(
        "fuzz {} N={}..{} samples={} seed={}",
        spec.kind.name(),
        spec.n_min,
        spec.n_max,
        report.samples,
        report.seed
    ))?;
    sink.say(format_args!("min ratio              {:.15}", report.min_ratio))?;
    sink.say(format_args!("max ratio              {:.15}", report.max_ratio))?;
    sink.say(format_args!("independence failures  {}", report.independence_failures.len()))?;
    sink.say(format_args!("violations (< 1-1e-9)  {}", report.violations.len()))?;
    sink.say(format_args!("wall time              {:.3}s", report.wall_time_secs))?;
    sink.summary(&report)?;
    Ok(code)
}

fn start_configuration(input: Option<&Path>, kind: GeneratorKind, n: usize, seed: u64) -> Result<Configuration, Failure> {
    match input {
        Some(p) => read_configuration(p),
        None => Ok(random_config(n, seed, kind)?),
    }
}

fn reproducer_path(output: Option<&Path>, seed: u64) -> PathBuf {
    match output {
        Some(p) => {
            let mut s = p.as_os_str().to_owned();
            s.push(".reproducer.txt");
            PathBuf::from(s)
        }
        None => PathBuf::from(format!("minimize-reproducer-seed{seed}.txt")),
    }
}

fn cmd_minimize(a: MinimizeArgs, out: &mut dyn Write) -> CmdResult {
    let c0 = start_configuration(a.input.as_deref(), a.kind, a.n, a.seed)?;
    let mut sink = Sink::new(out, a.output.as_deref())?;
    let (best, start_ratio) = if a.restarts == 0 {
        let r = minimize_ratio(&c0, a.budget, a.tol)?;
        sink.record("run", &r)?;
        sink.say(format_args!(
            "descent: {} iterations, converged={}",
            r.iterations, r.converged
        ))?;
        let s = r.start_ratio;
        (r, s)
    } else {
        let rep = minimize_with_restarts(&c0, a.budget, a.tol, a.restarts, a.perturbation, a.seed)?;
        for r in &rep.runs {
            sink.record("run", r)?;
        }
        sink.say(format_args!(
            "{} restarts (perturbation {}), best run {}",
            rep.restarts, rep.perturbation, rep.best_run
        ))?;
        let start = crate::atiyah_core::ratio(&c0)?;
        (rep.runs[rep.best_run].clone(), start)
    };
    let e = evaluate(&best.final_config, &OrientationPolicy::Canonical, DEFAULT_INDEPENDENCE_TOL)?;
    let code = verdict_code(best.final_ratio, e.independent, VIOLATION_TOL);
    sink.say(format_args!("start ratio   {:.15}", start_ratio))?;
    sink.say(format_args!("final ratio   {:.15}", best.final_ratio))?;
    let mut reproducer = None;
    if code != EXIT_OK {
        let path = reproducer_path(a.output.as_deref(), a.seed);
        let comment = format!("minimize reproducer seed={} ratio={:.17e}", a.seed, best.final_ratio);
        fs::write(&path, format_configuration(&best.final_config, Some(&comment)))
            .map_err(|e| Failure(format!("{}: {e}", path.display())))?;
        sink.say(format_args!("reproducer    {}", path.display()))?;
        reproducer = Some(path.display().to_string());
    }
    #[derive(Serialize)]
    struct Summary<'a> {
        seed: u64,
        budget: usize,
        restarts: usize,
        start_ratio: f64,
        best: &'a crate::harness::MinimizeResult,
        reproducer: Option<String>,
        exit_code: i32,
    }
    sink.summary(&Summary {
        seed: a.seed,
        budget: a.budget,
        restarts: a.restarts,
        start_ratio,
        best: &best,
        reproducer,
        exit_code: code,
    })?;
    Ok(code)
}

fn cmd_cases(a: CasesArgs, out: &mut dyn Write) -> CmdResult {
    if a.m_max == 0 || a.trials == 0 {
        return Err(Failure("--m-max and --trials must be at least 1".into()));
    }
    let rep = crosscheck_special_cases(a.m_max, a.trials, a.seed)?;
    let mut sink = Sink::new(out, a.output.as_deref())?;
    for e in &rep.entries {
        sink.record("case", e)?;
    }
    let failures = rep.failures().count();
    sink.say(format_args!(
        "cases m<={} trials/m={} seed={}: {} checks, {} failures",
        a.m_max,
        a.trials,
        a.seed,
        rep.entries.len(),
        failures
    ))?;
    sink.say(format_args!("max det rel err    {:.3e}", rep.max_det_rel_err()))?;
    sink.say(format_args!("max bound rel err  {:.3e}", rep.max_bound_rel_err()))?;
    #[derive(Serialize)]
    struct Summary {
        m_max: usize,
        trials_per_m: usize,
        seed: u64,
        checks: usize,
        failures: usize,
        max_det_rel_err: f64,
        max_bound_rel_err: f64,
        min_case_a_ratio: f64,
    }
    let min_case_a_ratio = rep
        .entries
        .iter()
        .filter(|e| e.case == crate::harness::crosscheck::SpecialCase::A)
        .map(|e| e.ratio)
        .fold(f64::INFINITY, f64::min);
    sink.summary(&Summary {
        m_max: a.m_max,
        trials_per_m: a.trials,
        seed: a.seed,
        checks: rep.entries.len(),
        failures,
        max_det_rel_err: rep.max_det_rel_err(),
        max_bound_rel_err: rep.max_bound_rel_err(),
        min_case_a_ratio,
    })?;
    Ok(if failures == 0 { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_identities(a: IdentitiesArgs, out: &mut dyn Write) -> CmdResult {
    if a.m.0 == 0 {
        return Err(Failure("--m must start at 1".into()));
    }
    let mut sink = Sink::new(out, a.output.as_deref())?;
    let mut max_residual: f64 = 0.0;
    let mut product_failures = 0usize;
    let mut evaluated = 0usize;
    for m in a.m.0..=a.m.1 {
        let mut m_residual: f64 = 0.0;
        let mut m_fail = 0usize;
        for lam in a.grid.points() {
            let s = specialized_identity(m as u32, lam)?;
            m_residual = m_residual.max(s.relative_residual());
            if !s.product_holds {
                m_fail += 1;
            }
            evaluated += 1;
        }
        #[derive(Serialize)]
        struct PerM {
            m: usize,
            max_relative_residual: f64,
            product_failures: usize,
        }
        sink.record(
            "identity",
            &PerM {
                m,
                max_relative_residual: m_residual,
                product_failures: m_fail,
            },
        )?;
        max_residual = max_residual.max(m_residual);
        product_failures += m_fail;
    }
    let ok = max_residual <= IDENTITY_RTOL && product_failures == 0;
    sink.say(format_args!(
        "identities m={}..{} grid {}:{}:{}: {} evaluations",
        a.m.0, a.m.1, a.grid.start, a.grid.stop, a.grid.step, evaluated
    ))?;
    sink.say(format_args!("max relative residual  {:.3e}", max_residual))?;
    sink.say(format_args!("product inequality failures  {}", product_failures))?;
    #[derive(Serialize)]
    struct Summary {
        m_min: usize,
        m_max: usize,
        evaluations: usize,
        max_relative_residual: f64,
        product_failures: usize,
        passed: bool,
    }
    sink.summary(&Summary {
        m_min: a.m.0,
        m_max: a.m.1,
        evaluations: evaluated,
        max_relative_residual: max_residual,
        product_failures,
        passed: ok,
    })?;
    Ok(if ok { EXIT_OK } else { EXIT_CHECK_FAILED })
}

fn cmd_probe_b(a: ProbeArgs, out: &mut dyn Write) -> CmdResult {
    let rep = probe_case_b(a.samples, a.m_max, a.seed)?;
    let mut sink = Sink::new(out, a.output.as_deref())?;
    if let Some(v) = &rep.violation {
        sink.record("violation", v)?;
    }
    sink.say(format_args!(
        "case-B probe m<={} seed={}: {} samples, min slack {:.15}",
        a.m_max, a.seed, rep.samples_run, rep.min_slack
    ))?;
    if let Some(v) = &rep.violation {
        sink.say(format_args!("VIOLATION at sample {} (seed {}): lambdas {:?}", v.index, v.seed, v.lambdas))?;
    }
    sink.summary(&rep)?;
    Ok(if rep.violation.is_some() { EXIT_BOUND_FLAG } else { EXIT_OK })
}

fn cmd_invariance(a: InvarianceArgs, out: &mut dyn Write) -> CmdResult {
    let c = start_configuration(a.input.as_deref(), a.kind, a.n, a.seed)?;
    let rep = invariance_suite(&c, a.trials, a.seed)?;
    let mut sink = Sink::new(out, a.output.as_deref())?;
    for check in &rep.checks {
        sink.record("invariance", check)?;
        sink.say(format_args!(
            "{:<18} trials={:<4} max rel delta {:.3e} {}",
            format!("{:?}", check.transform),
            check.trials,
            check.max_rel_delta,
            if check.passed { "ok" } else { "FAIL" }
        ))?;
    }
    sink.summary(&rep)?;
    Ok(if rep.all_passed() { EXIT_OK } else { EXIT_CHECK_FAILED })
}
