//! Oscillatory sine-transform quadrature.
//!
//! Computes `I(r) = integral_0^inf g(kappa) sin(kappa r) d kappa` for a
//! smooth `g` decaying at least like `1/kappa`: the integrand is integrated
//! exactly (Gauss-Legendre) between consecutive zeros of the sine, and the
//! resulting alternating series of half-period contributions is summed with
//! Wynn's epsilon extrapolation, which turns the conditionally convergent
//! tail into a rapidly converging sequence.

use crate::error::{Error, Result};

/// Gauss-Legendre nodes/weights on [-1, 1], computed once per transform by
/// Newton iteration on the Legendre polynomial.
pub(crate) struct GaussRule {
    nodes: Vec<f64>,
    weights: Vec<f64>,
}

impl GaussRule {
    pub(crate) fn new(n: usize) -> GaussRule {
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        for i in 0..n.div_ceil(2) {
            // Chebyshev-based initial guess
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                // Legendre recurrence for P_n(x) and P_n'(x)
                let mut p0 = 1.0;
                let mut p1 = x;
                for k in 2..=n {
                    let kf = k as f64;
                    let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
                    p0 = p1;
                    p1 = p2;
                }
                dp = n as f64 * (x * p1 - p0) / (x * x - 1.0);
                let dx = p1 / dp;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        GaussRule { nodes, weights }
    }

    pub(crate) fn integrate(&self, a: f64, b: f64, f: impl Fn(f64) -> f64) -> f64 {
        let half = 0.5 * (b - a);
        let mid = 0.5 * (a + b);
        let mut acc = 0.0;
        for (x, w) in self.nodes.iter().zip(&self.weights) {
            acc += w * f(mid + half * x);
        }
        acc * half
    }
}

/// Wynn's epsilon table, diagonal storage. Feeding partial sums returns the
/// current best extrapolated limit (the highest even-order entry).
struct WynnEpsilon {
    diag: Vec<f64>,
}

impl WynnEpsilon {
    fn new() -> WynnEpsilon {
        WynnEpsilon { diag: Vec::new() }
    }

    fn push(&mut self, s: f64) -> f64 {
        let n = self.diag.len();
        let mut next = Vec::with_capacity(n + 1);
        next.push(s);
        for j in 1..=n {
            let delta = next[j - 1] - self.diag[j - 1];
            let prev = if j >= 2 { self.diag[j - 2] } else { 0.0 };
            if delta == 0.0 {
                // column converged; truncate rather than divide by zero
                break;
            }
            next.push(prev + 1.0 / delta);
        }
        self.diag = next;
        // best estimate sits at the highest even order
        let best_idx = if (self.diag.len() - 1).is_multiple_of(2) {
            self.diag.len() - 1
        } else {
            self.diag.len() - 2
        };
        self.diag[best_idx]
    }
}

const MAX_HALF_PERIODS: usize = 400;
const GAUSS_ORDER: usize = 24;
const MAX_PANEL_DEPTH: usize = 18;

/// Integrates one half-period panel, bisecting until a refinement no longer
/// moves the estimate. Large panels (small `r`) can span the whole feature
/// of the non-oscillatory factor, so a single fixed-order rule is not
/// enough.
fn adaptive_panel(
    rule: &GaussRule,
    f: &impl Fn(f64) -> f64,
    a: f64,
    b: f64,
    depth: usize,
    floor_scale: f64,
) -> f64 {
    let whole = rule.integrate(a, b, f);
    if depth >= MAX_PANEL_DEPTH {
        return whole;
    }
    let mid = 0.5 * (a + b);
    let refined = rule.integrate(a, mid, f) + rule.integrate(mid, b, f);
    if (whole - refined).abs() <= 1e-13 * refined.abs().max(floor_scale) {
        refined
    } else {
        adaptive_panel(rule, f, a, mid, depth + 1, floor_scale)
            + adaptive_panel(rule, f, mid, b, depth + 1, floor_scale)
    }
}

/// `integral_0^inf g(kappa) sin(kappa r) d kappa` to roughly `rel_tol`.
pub(crate) fn fourier_sine_integral(
    g: &dyn Fn(f64) -> f64,
    r: f64,
    rel_tol: f64,
) -> Result<f64> {
    assert!(r > 0.0, "transform radius must be positive");
    let rule = GaussRule::new(GAUSS_ORDER);
    let half_period = std::f64::consts::PI / r;
    let integrand = |kappa: f64| g(kappa) * (kappa * r).sin();

    let mut wynn = WynnEpsilon::new();
    let mut partial = 0.0f64;
    let mut term_scale = 0.0f64;
    let mut prev_term = f64::INFINITY;
    let mut best = f64::INFINITY;
    let mut stable_steps = 0;
    for n in 0..MAX_HALF_PERIODS {
        let a = half_period * n as f64;
        let b = half_period * (n + 1) as f64;
        let term = adaptive_panel(&rule, &integrand, a, b, 0, term_scale);
        if !term.is_finite() {
            return Err(Error::QuadratureNotConverged { r });
        }
        partial += term;
        term_scale = term_scale.max(term.abs());

        // absolutely convergent case: two consecutive negligible terms mean
        // the raw sum is already done and no extrapolation is needed
        let floor = |x: f64| rel_tol * x.abs() + 1e-16 * term_scale;
        if n >= 3 && term.abs() <= floor(partial) && prev_term.abs() <= floor(partial) {
            return Ok(partial);
        }
        prev_term = term;

        let mut estimate = wynn.push(partial);
        if !estimate.is_finite() {
            estimate = partial;
        }
        if n >= 5 {
            let delta = (estimate - best).abs();
            if delta <= rel_tol * estimate.abs() + 1e-15 * term_scale {
                stable_steps += 1;
                if stable_steps >= 2 {
                    return Ok(estimate);
                }
            } else {
                stable_steps = 0;
            }
        }
        best = estimate;
    }
    Err(Error::QuadratureNotConverged { r })
}
