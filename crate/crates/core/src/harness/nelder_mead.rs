//! Nelder–Mead simplex search with the standard coefficients.
//!
//! The objective may return `+inf` to reject a point; such vertices are never
//! accepted as improvements.

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NelderMead {
    pub max_iter: usize,
    /// Stop once every vertex is within this distance of the best vertex.
    pub xtol: f64,
    pub initial_step: f64,
}

impl Default for NelderMead {
    fn default() -> Self {
        Self {
            max_iter: 2000,
            xtol: 1e-8,
            initial_step: 0.05,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct NmOutcome {
    pub x: Vec<f64>,
    pub fx: f64,
    pub iterations: usize,
    pub converged: bool,
    /// Best objective value before the first iteration and after each one.
    pub trace: Vec<f64>,
}

const REFLECT: f64 = 1.0;
const EXPAND: f64 = 2.0;
const CONTRACT: f64 = 0.5;
const SHRINK: f64 = 0.5;

fn lerp(from: &[f64], to: &[f64], t: f64) -> Vec<f64> {
    from.iter().zip(to).map(|(a, b)| a + t * (b - a)).collect()
}

fn dist(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y) * (x - y)).sum::<f64>().sqrt()
}

impl NelderMead {
    pub fn minimize<F: FnMut(&[f64]) -> f64>(&self, mut f: F, x0: &[f64]) -> NmOutcome {
        let f0 = f(x0);
        if self.max_iter == 0 || x0.is_empty() {
            return NmOutcome {
                x: x0.to_vec(),
                fx: f0,
                iterations: 0,
                converged: false,
                trace: vec![f0],
            };
        }
        let dim = x0.len();
        let mut simplex: Vec<(Vec<f64>, f64)> = Vec::with_capacity(dim + 1);
        simplex.push((x0.to_vec(), f0));
        for k in 0..dim {
            let mut x = x0.to_vec();
            x[k] += self.initial_step;
            let fx = f(&x);
            simplex.push((x, fx));
        }
        let order = |s: &mut Vec<(Vec<f64>, f64)>| s.sort_by(|a, b| a.1.total_cmp(&b.1));
        order(&mut simplex);
        let mut trace = vec![f0];
        let mut converged = false;
        let mut iterations = 0;

        while iterations < self.max_iter {
            if simplex[1..].iter().all(|(x, _)| dist(x, &simplex[0].0) < self.xtol) {
                converged = true;
                break;
            }
            iterations += 1;
            let worst = simplex[dim].clone();
            let mut centroid = vec![0.0; dim];
            for (x, _) in &simplex[..dim] {
                for (c, xi) in centroid.iter_mut().zip(x) {
                    *c += xi / dim as f64;
                }
            }
            let xr = lerp(&centroid, &worst.0, -REFLECT);
            let fr = f(&xr);
            if fr < simplex[0].1 {
                let xe = lerp(&centroid, &worst.0, -EXPAND);
                let fe = f(&xe);
                simplex[dim] = if fe < fr { (xe, fe) } else { (xr, fr) };
            } else if fr < simplex[dim - 1].1 {
                simplex[dim] = (xr, fr);
            } else {
                // contract toward the better of the reflected and worst points
                let (xc, fc) = if fr < worst.1 {
                    let xc = lerp(&centroid, &xr, CONTRACT);
                    let fc = f(&xc);
                    (xc, fc)
                } else {
                    let xc = lerp(&centroid, &worst.0, CONTRACT);
                    let fc = f(&xc);
                    (xc, fc)
                };
                if fc < worst.1.min(fr) {
                    simplex[dim] = (xc, fc);
                } else {
                    let best = simplex[0].0.clone();
                    for v in simplex.iter_mut().skip(1) {
                        let x = lerp(&best, &v.0, SHRINK);
                        let fx = f(&x);
                        *v = (x, fx);
                    }
                }
            }
            order(&mut simplex);
            trace.push(simplex[0].1.min(*trace.last().unwrap()));
        }
        let (x, fx) = simplex.swap_remove(0);
        NmOutcome {
            x,
            fx,
            iterations,
            converged,
            trace,
        }
    }
}
