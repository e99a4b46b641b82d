//! Tanh-sinh quadrature on a truncated half line.
//!
//! The integrand is assumed to decay at least like `e^{-rate·t}`, so `[0, ∞)`
//! is cut at a point `T` where the tail is below the requested tolerance and
//! the finite interval is mapped by `t = T / (1 + e^{-π sinh u})`. Written in
//! that form the nodes next to `t = 0` keep full relative precision, which
//! matters for integrable endpoint singularities like `t^{-1/2}`.

use std::f64::consts::FRAC_PI_2;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// Step-halving levels attempted before giving up.
pub const MAX_LEVELS: usize = 12;

/// Levels always computed before the convergence test is trusted.
const MIN_LEVELS: usize = 4;

/// Half-width of the `u` window. At `u = 4.5` the nodes sit within
/// `T·e^{-140}` of either end and the weights are negligible.
const U_MAX: f64 = 4.5;

/// Upper bound on how far the truncation point may be pushed out.
const MAX_TRUNCATION: f64 = 1.0e4;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuadratureOutcome {
    pub value: Complex64,
    pub err_estimate: f64,
    pub n_evals: usize,
    pub truncation_point: f64,
}

/// Integrates `f` over `(0, ∞)` to absolute tolerance `tol`.
///
/// `decay_rate` is the exponential rate at which `|f|` eventually decays; it
/// sets the initial truncation point, which is then pushed outward while the
/// integrand at the cut is still non-negligible.
pub fn integrate_half_line<F>(f: F, tol: f64, decay_rate: f64) -> Result<QuadratureOutcome>
where
    F: Fn(f64) -> Complex64,
{
    if !(tol > 0.0 && tol.is_finite()) {
        return Err(Error::domain(format!("tolerance must be positive, got {tol}")));
    }
    if !(decay_rate > 0.0 && decay_rate.is_finite()) {
        return Err(Error::domain(format!(
            "decay rate must be positive, got {decay_rate}"
        )));
    }

    let (truncation, tail) = truncation_point(&f, tol, decay_rate)?;
    let mut out = integrate_interval(f, 0.0, truncation, tol)?;
    out.err_estimate += tail;
    Ok(out)
}

/// Integrates `f` over the finite interval `[lo, hi]` to absolute tolerance
/// `tol`. The endpoints themselves are never sampled.
pub fn integrate_interval<F>(f: F, lo: f64, hi: f64, tol: f64) -> Result<QuadratureOutcome>
where
    F: Fn(f64) -> Complex64,
{
    if !(lo.is_finite() && hi.is_finite() && lo <= hi) {
        return Err(Error::domain(format!("bad interval [{lo}, {hi}]")));
    }
    let mut rule = TanhSinh::new(lo, hi);
    let mut previous = rule.level(&f, 0)?;
    let mut last_diff = f64::INFINITY;
    for level in 1..=MAX_LEVELS {
        let current = rule.level(&f, level)?;
        last_diff = (current - previous).norm();
        if level >= MIN_LEVELS && last_diff <= tol {
            return Ok(QuadratureOutcome {
                value: current,
                err_estimate: last_diff,
                n_evals: rule.n_evals,
                truncation_point: hi,
            });
        }
        previous = current;
    }
    Err(Error::NoConvergence {
        levels: MAX_LEVELS,
        last_diff,
        tol,
    })
}

/// Picks `T` with `e^{-rate·T} < tol/100`, then extends it until samples of
/// `|f|` around the cut bound the tail below `tol/100`. Returns `T` and the
/// tail estimate.
fn truncation_point<F>(f: &F, tol: f64, rate: f64) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Complex64,
{
    let mut t = (100.0 / tol).ln().max(1.0) / rate;
    loop {
        let mut peak: f64 = 0.0;
        for probe in [0.9 * t, t, 1.1 * t] {
            let v = f(probe);
            if !(v.re.is_finite() && v.im.is_finite()) {
                return Err(Error::BadIntegrand(probe));
            }
            peak = peak.max(v.norm());
        }
        // ∫_T^∞ C e^{-rate·(x-T)} dx = C / rate
        let tail = peak / rate;
        if tail < tol / 100.0 {
            return Ok((t, tail));
        }
        if t > MAX_TRUNCATION {
            return Err(Error::NoConvergence {
                levels: 0,
                last_diff: tail,
                tol,
            });
        }
        t *= 1.25;
    }
}

struct TanhSinh {
    lo: f64,
    length: f64,
    sum: Complex64,
    n_evals: usize,
}

impl TanhSinh {
    fn new(lo: f64, hi: f64) -> Self {
        TanhSinh {
            lo,
            length: hi - lo,
            sum: Complex64::new(0.0, 0.0),
            n_evals: 0,
        }
    }

    /// Adds the nodes new at `level` (step `2^-level`) and returns the
    /// current trapezoid estimate.
    fn level<F>(&mut self, f: &F, level: usize) -> Result<Complex64>
    where
        F: Fn(f64) -> Complex64,
    {
        let h = 0.5f64.powi(level as i32);
        let (start, stride) = if level == 0 { (0i64, 1i64) } else { (1, 2) };
        let k_max = (U_MAX / h).floor() as i64;

        let mut k = start;
        while k <= k_max {
            let u = k as f64 * h;
            let mut contribution = self.node(f, u)?;
            if k != 0 {
                contribution += self.node(f, -u)?;
            }
            self.sum += contribution;
            k += stride;
        }
        Ok(self.sum * h)
    }

    fn node<F>(&mut self, f: &F, u: f64) -> Result<Complex64>
    where
        F: Fn(f64) -> Complex64,
    {
        let v = FRAC_PI_2 * u.sinh();
        let e = (-2.0 * v).exp();
        let offset = self.length / (1.0 + e);
        // dx/du = L · (π/2) cosh u · sech² v / 2
        let sech = 1.0 / v.cosh();
        let weight = 0.5 * self.length * FRAC_PI_2 * u.cosh() * sech * sech;
        if weight == 0.0 || offset <= 0.0 || offset >= self.length {
            return Ok(Complex64::new(0.0, 0.0));
        }
        let x = self.lo + offset;
        let value = f(x);
        self.n_evals += 1;
        if !(value.re.is_finite() && value.im.is_finite()) {
            return Err(Error::BadIntegrand(x));
        }
        Ok(value * weight)
    }
}
