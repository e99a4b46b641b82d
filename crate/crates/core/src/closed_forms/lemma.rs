//! The bose-even integral rewritten, through Parseval's identity for sine
//! transforms, as an integral over the frequency `w`:
//!
//! `(−1)^n (2n)! / (2Γ(s)) ∫₀^∞ e^{−aw} w^k L_{2n}^k(aw) [1/(e^w−1) + ½ − 1/w] dw`,
//! `k = s − 2n − 1`.

use num_complex::Complex64;

use crate::laguerre::{laguerre_explicit, LaguerreQuery};
use crate::quadrature::{integrate_half_line, Family, FamilySpec};
use crate::transforms::bose_bracket;
use crate::zeta::{gamma, log_gamma};
use crate::{ensure_finite, Result};

/// Absolute tolerance of [`lemma21_rhs`].
pub const LEMMA_TOL: f64 = 1e-12;

/// See the module documentation. When `Re(s) > 2n+1` the bracket is split:
/// the `1/(e^w−1)` piece is integrated numerically and the other two are
/// Laguerre moments with closed forms,
///
/// * `∫ e^{−aw} w^k L_{2n}^k(aw) dw = Γ(k+1) a^{−k−1}` for `n = 0`, else `0`
/// * `∫ e^{−aw} w^{k−1} L_{2n}^k(aw) dw = Γ(k) a^{−k}`
///
/// (the second from summing the explicit Laguerre series term by term and
/// collapsing `Σ_j (−1)^j C(2n,j)/(k+j)` with the beta integral). Otherwise
/// the whole bracket is integrated at once.
pub fn lemma21_rhs(n: usize, a: Complex64, s: Complex64) -> Result<Complex64> {
    lemma21_rhs_with_tol(n, a, s, LEMMA_TOL)
}

pub fn lemma21_rhs_with_tol(n: usize, a: Complex64, s: Complex64, tol: f64) -> Result<Complex64> {
    FamilySpec::new(Family::BoseEven, n, a, s).validate()?;
    let two_n = 2 * n;
    let k = s - (two_n as f64 + 1.0);
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    let log_fact = log_gamma(Complex64::new(two_n as f64 + 1.0, 0.0))?;
    let prefactor = sign * 0.5 * (log_fact - log_gamma(s)?).exp();
    let inner_tol = tol / prefactor.norm().max(f64::MIN_POSITIVE);

    // e^{−aw} w^k L_{2n}^k(aw) without the bracket; the Laguerre query is
    // validated by the family check above (k + j is never a negative integer
    // once Re(s) > 2n).
    let weight = move |w: f64| -> Complex64 {
        let lag = laguerre_explicit(LaguerreQuery::new(two_n, k, a * w))
            .map(|l| l.value)
            .unwrap_or(Complex64::new(f64::NAN, 0.0));
        (-a * w + k * w.ln()).exp() * lag
    };

    let integral = if k.re > 0.0 {
        let bose = integrate_half_line(
            |w| if w == 0.0 { Complex64::new(0.0, 0.0) } else { weight(w) / w.exp_m1() },
            inner_tol,
            a.re + 1.0,
        )?;
        let half = if n == 0 {
            0.5 * gamma(k + 1.0)? * a.powc(-k - 1.0)
        } else {
            Complex64::new(0.0, 0.0)
        };
        let inverse = gamma(k)? * a.powc(-k);
        bose.value + half - inverse
    } else {
        integrate_half_line(
            |w| if w == 0.0 { Complex64::new(0.0, 0.0) } else { weight(w) * bose_bracket(w) },
            inner_tol,
            a.re,
        )?
        .value
    };
    ensure_finite("lemma21_rhs", prefactor * integral)
}
