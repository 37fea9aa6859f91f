//! Limited-memory BFGS with a backtracking Armijo line search.

use std::collections::VecDeque;

const HISTORY: usize = 10;
const ARMIJO_C1: f64 = 1e-4;
const MAX_BACKTRACKS: usize = 40;

pub struct Outcome {
    pub x: Vec<f64>,
    /// Objective after each accepted step, starting with the initial point.
    pub trace: Vec<f64>,
    pub iterations: usize,
    pub converged: bool,
}

fn dot(a: &[f64], b: &[f64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

/// Minimizes `f`, which returns the value and gradient at a point.
///
/// Stops once an accepted step changes the value by less than `tol`
/// relative to `max(|f|, 1)`, or after `max_iterations` steps.
pub fn minimize(
    mut f: impl FnMut(&[f64]) -> (f64, Vec<f64>),
    x0: Vec<f64>,
    max_iterations: usize,
    tol: f64,
) -> Outcome {
    let mut x = x0;
    let (mut fx, mut g) = f(&x);
    let mut trace = vec![fx];
    let mut hist: VecDeque<(Vec<f64>, Vec<f64>, f64)> = VecDeque::new();
    let mut iterations = 0;
    let mut converged = false;

    while iterations < max_iterations {
        let gnorm = dot(&g, &g).sqrt();
        if gnorm < 1e-12 {
            converged = true;
            break;
        }
        let mut d = direction(&g, &hist);
        let mut slope = dot(&g, &d);
        if hist.is_empty() || slope >= 0.0 {
            hist.clear();
            d = g.iter().map(|v| -v / gnorm).collect();
            slope = dot(&g, &d);
        }

        let mut accepted = None;
        for attempt in 0..2 {
            let mut step = 1.0;
            for _ in 0..MAX_BACKTRACKS {
                let xn: Vec<f64> = x.iter().zip(&d).map(|(a, b)| a + step * b).collect();
                let (fn_, gn) = f(&xn);
                if fn_.is_finite() && fn_ <= fx + ARMIJO_C1 * step * slope {
                    accepted = Some((xn, fn_, gn));
                    break;
                }
                step *= 0.5;
            }
            if accepted.is_some() || attempt == 1 || hist.is_empty() {
                break;
            }
            // curvature history misled the search; restart from steepest descent
            hist.clear();
            d = g.iter().map(|v| -v / gnorm).collect();
            slope = dot(&g, &d);
        }
        let Some((xn, fn_, gn)) = accepted else {
            break;
        };

        let s: Vec<f64> = xn.iter().zip(&x).map(|(a, b)| a - b).collect();
        let y: Vec<f64> = gn.iter().zip(&g).map(|(a, b)| a - b).collect();
        let sy = dot(&s, &y);
        if sy > 1e-12 {
            if hist.len() == HISTORY {
                hist.pop_front();
            }
            hist.push_back((s, y, 1.0 / sy));
        }
        let rel = (fx - fn_).abs() / fx.abs().max(1.0);
        x = xn;
        fx = fn_;
        g = gn;
        trace.push(fx);
        iterations += 1;
        if rel < tol {
            converged = true;
            break;
        }
    }
    Outcome {
        x,
        trace,
        iterations,
        converged,
    }
}

/// Two-loop recursion: approximate inverse Hessian times `-g`.
fn direction(g: &[f64], hist: &VecDeque<(Vec<f64>, Vec<f64>, f64)>) -> Vec<f64> {
    let mut q: Vec<f64> = g.to_vec();
    let mut alphas = Vec::with_capacity(hist.len());
    for (s, y, rho) in hist.iter().rev() {
        let a = rho * dot(s, &q);
        for (qi, yi) in q.iter_mut().zip(y) {
            *qi -= a * yi;
        }
        alphas.push(a);
    }
    if let Some((s, y, _)) = hist.back() {
        let gamma = dot(s, y) / dot(y, y);
        q.iter_mut().for_each(|v| *v *= gamma);
    }
    for ((s, y, rho), a) in hist.iter().zip(alphas.into_iter().rev()) {
        let b = rho * dot(y, &q);
        for (qi, si) in q.iter_mut().zip(s) {
            *qi += (a - b) * si;
        }
    }
    q.iter_mut().for_each(|v| *v = -*v);
    q
}
