//! Complex log-gamma.
//!
//! Lanczos approximation (g = 7, nine coefficients) on `Re z >= 0.5`, and the
//! reflection formula with an explicit branch correction below that, so that
//! the result is the principal branch `loggamma` (continuous off the negative
//! real axis, real on the positive one).

use std::f64::consts::PI;

use num_complex::Complex64;

use crate::{ensure_finite, Error, Result, POLE_GUARD};

const LANCZOS_G: f64 = 7.0;

const LANCZOS_COEFFS: [f64; 9] = [
    0.999_999_999_999_809_93,
    676.520_368_121_885_1,
    -1_259.139_216_722_402_8,
    771.323_428_777_653_13,
    -176.615_029_162_140_59,
    12.507_343_278_686_905,
    -0.138_571_095_265_720_12,
    9.984_369_578_019_571_6e-6,
    1.505_632_735_149_311_6e-7,
];

const LN_SQRT_2PI: f64 = 0.918_938_533_204_672_8;
const LN_PI: f64 = 1.144_729_885_849_400_2;

/// Principal-branch `ln Γ(z)`.
///
/// Fails with [`Error::PoleProximity`] when `z` is within [`POLE_GUARD`] of a
/// non-positive integer.
pub fn log_gamma(z: Complex64) -> Result<Complex64> {
    if !(z.re.is_finite() && z.im.is_finite()) {
        return Err(Error::domain(format!("log_gamma of non-finite {z}")));
    }
    let nearest = z.re.round();
    if nearest <= 0.0 && (z - nearest).norm() < POLE_GUARD {
        return Err(Error::PoleProximity {
            what: "gamma",
            point: format!("{z}"),
            guard: POLE_GUARD,
        });
    }
    ensure_finite("log_gamma", log_gamma_unchecked(z))
}

/// `Γ(z)` as `exp(log_gamma(z))`.
pub fn gamma(z: Complex64) -> Result<Complex64> {
    log_gamma(z).map(|l| l.exp())
}

fn log_gamma_unchecked(z: Complex64) -> Complex64 {
    if z.re >= 0.5 {
        return lanczos(z);
    }
    // ln Γ(z) = ln π − ln sin(πz) − ln Γ(1−z), plus the 2πi multiple that
    // keeps the branch principal.
    let branch = (0.5 * z.re + 0.25).floor() * 2.0 * PI;
    let branch = if z.im < 0.0 { -branch } else { branch };
    Complex64::new(LN_PI, branch) - log_sin_pi(z) - lanczos(Complex64::new(1.0, 0.0) - z)
}

fn lanczos(z: Complex64) -> Complex64 {
    let x = z - 1.0;
    let mut series = Complex64::new(LANCZOS_COEFFS[0], 0.0);
    for (i, &coef) in LANCZOS_COEFFS.iter().enumerate().skip(1) {
        series += coef / (x + i as f64);
    }
    let t = x + LANCZOS_G + 0.5;
    (x + 0.5) * t.ln() - t + LN_SQRT_2PI + series.ln()
}

/// Principal `ln sin(πz)`, evaluated without overflow for large `|Im z|`.
fn log_sin_pi(z: Complex64) -> Complex64 {
    let k = z.re.round();
    let r = z.re - k;
    let parity = if (k as i64).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
    let (sr, cr) = (PI * r).sin_cos();
    // At half-integers cos(πr) rounds to ±6e-17 with a sign that depends on
    // how `round` broke the tie; an exact zero puts the arg of sin(πz) on the
    // same side of its ±π cut as the branch count in `log_gamma_unchecked`.
    let (sin_x, cos_x) = (parity * sr, if r.abs() == 0.5 { 0.0 } else { parity * cr });
    let y = PI * z.im;

    let log_mod = if y.abs() > 20.0 {
        let log_sinh = y.abs() - std::f64::consts::LN_2 + (-(-2.0 * y.abs()).exp()).ln_1p();
        let ratio = sin_x / y.abs().sinh();
        log_sinh + 0.5 * (ratio * ratio).ln_1p()
    } else {
        0.5 * (sin_x * sin_x + y.sinh() * y.sinh()).ln()
    };
    let arg = (cos_x * y.tanh()).atan2(sin_x);
    Complex64::new(log_mod, arg)
}
