//! Hurwitz zeta function ζ(s,a) = Σ_{n≥0} (a+n)^{-s} and friends.
//!
//! [`hurwitz_zeta`] is the workhorse (Euler–Maclaurin summation, valid for all
//! `s ≠ 1`). [`hermite_zeta`] evaluates Hermite's integral representation by
//! quadrature and serves as an independent check of the continuation;
//! [`hurwitz_zeta_ds`] differentiates that representation in `s`.

mod gamma;
mod mellin;

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::quadrature::integrate_half_line;
use crate::{ensure_finite, Error, Result, POLE_GUARD};

pub use gamma::{gamma, log_gamma};
pub use mellin::{kernel_mellin, ConstantFactor, KernelKind, MellinChoice};

/// `B_{2j}` for `j = 1..=15`.
const BERNOULLI_EVEN: [f64; 15] = [
    1.0 / 6.0,
    -1.0 / 30.0,
    1.0 / 42.0,
    -1.0 / 30.0,
    5.0 / 66.0,
    -691.0 / 2730.0,
    7.0 / 6.0,
    -3617.0 / 510.0,
    43867.0 / 798.0,
    -174611.0 / 330.0,
    854513.0 / 138.0,
    -236364091.0 / 2730.0,
    8553103.0 / 6.0,
    -23749461029.0 / 870.0,
    8615841276005.0 / 14322.0,
];

/// Absolute tolerance used for the tail integral of [`hermite_zeta`].
pub const HERMITE_TOL: f64 = 1e-14;

/// Absolute tolerance used for the integrals of [`hurwitz_zeta_ds`].
pub const DERIVATIVE_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ZetaParams {
    pub s: Complex64,
    pub a: Complex64,
}

impl ZetaParams {
    pub fn new(s: Complex64, a: Complex64) -> Self {
        ZetaParams { s, a }
    }

    pub fn real(s: f64, a: f64) -> Self {
        ZetaParams::new(Complex64::new(s, 0.0), Complex64::new(a, 0.0))
    }

    fn validate(&self) -> Result<()> {
        if !(self.s.re.is_finite() && self.s.im.is_finite()) {
            return Err(Error::domain(format!("s = {} is not finite", self.s)));
        }
        if !(self.a.re > 0.0 && self.a.im.is_finite()) {
            return Err(Error::domain(format!("Re(a) must be positive, got a = {}", self.a)));
        }
        check_pole(self.s)
    }
}

pub(crate) fn check_pole(s: Complex64) -> Result<()> {
    if (s - 1.0).norm() < POLE_GUARD {
        return Err(Error::PoleProximity {
            what: "zeta(s, a) at s = 1",
            point: format!("{s}"),
            guard: POLE_GUARD,
        });
    }
    Ok(())
}

/// Number of terms summed directly before the Euler–Maclaurin tail.
///
/// For `Re(s) ≥ 0` this is `max(15, ⌈|Im s|/2⌉ + 15)`. For `Re(s) < 0` the
/// direct terms grow like `(a+k)^{-s}` and cancel against the tail, so the
/// rounding error scales with `N^{1−Re s}`; there `N` is instead the smallest
/// shift for which the omitted `B₃₂` term falls below the rounding level of
/// the tail `(a+N)^{1−s}/(s−1)`.
fn shift(s: Complex64, a: Complex64) -> usize {
    let fixed = 15usize.max((s.im.abs() / 2.0).ceil() as usize + 15);
    if s.re >= 0.0 {
        return fixed;
    }
    // |B₃₂/32!| · |s(s+1)…(s+30)| · |s−1| / |a+N|^{32} ≤ ε
    let mut log_bound = (7_709_321_041_217.0f64 / 510.0).ln() - (1..=32).map(|k| (k as f64).ln()).sum::<f64>();
    for k in 0..=30 {
        log_bound += (s + k as f64).norm().max(f64::MIN_POSITIVE).ln();
    }
    log_bound += (s - 1.0).norm().ln() - f64::EPSILON.ln();
    let radius = (log_bound / 32.0).exp();
    let mut n = 0usize;
    while (a + n as f64).norm() < radius && n < fixed {
        n += 1;
    }
    n
}

/// ζ(s,a) for `s ≠ 1`, `Re(a) > 0`.
pub fn hurwitz_zeta(p: ZetaParams) -> Result<Complex64> {
    p.validate()?;
    let ZetaParams { s, a } = p;
    if s.re <= REFLECTION_BELOW && a.im == 0.0 {
        return hurwitz_reflected(s, a.re);
    }
    let n = shift(s, a);

    let mut direct = Complex64::new(0.0, 0.0);
    for k in 0..n {
        direct += (a + k as f64).powc(-s);
    }

    let base = a + n as f64;
    let inv = 1.0 / base;
    let inv2 = inv * inv;
    let base_pow = base.powc(-s);
    let mut tail = base_pow * base / (s - 1.0) + 0.5 * base_pow;

    // term_j = B_{2j}/(2j)! · s(s+1)…(s+2j−2) · base^{-s-2j+1}
    let mut rising = s * base_pow * inv;
    let mut factorial = 2.0;
    for (j, &b) in BERNOULLI_EVEN.iter().enumerate() {
        let term = rising * (b / factorial);
        tail += term;
        let m = 2.0 * (j as f64 + 1.0);
        rising *= (s + (m - 1.0)) * (s + m) * inv2;
        factorial *= (m + 1.0) * (m + 2.0);
    }
    ensure_finite("hurwitz_zeta", direct + tail)
}

/// Below this real part, real `a` goes through Hurwitz's formula instead of
/// Euler–Maclaurin.
const REFLECTION_BELOW: f64 = -5.0;

/// Hurwitz's formula for `0 < a ≤ 1`,
/// `ζ(s,a) = 2Γ(1−s)/(2π)^{1−s} Σ_{k≥1} cos(π(1−s)/2 − 2πka) / k^{1−s}`,
/// with `a > 1` brought into range by `ζ(s,a) = ζ(s,a−m) − Σ_{k<m} (a−m+k)^{-s}`.
/// For very negative `Re(s)` the Euler–Maclaurin terms are large and cancel;
/// here the series converges absolutely with no cancellation of note.
fn hurwitz_reflected(s: Complex64, a: f64) -> Result<Complex64> {
    let m = (a.ceil() - 1.0).max(0.0);
    let frac = a - m;
    let sp = 1.0 - s;
    // Σ_{k>K} k^{-σ} ≤ K^{1−σ}/(σ−1) below ε relative to the leading term
    let sigma = sp.re;
    let terms = ((1.0 / (f64::EPSILON * 0.1 * (sigma - 1.0))).ln() / (sigma - 1.0)).exp().ceil() as usize;
    let phase = 0.5 * PI * sp;
    let mut series = Complex64::new(0.0, 0.0);
    for k in (1..=terms.clamp(1, 1_000_000)).rev() {
        let angle = TAU * (k as f64 * frac).fract();
        series += (phase - angle).cos() * Complex64::new(k as f64, 0.0).powc(-sp);
    }
    let prefactor = 2.0 * gamma(sp)? * Complex64::new(TAU, 0.0).powc(-sp);
    let mut value = prefactor * series;
    for k in 0..m as usize {
        value -= Complex64::new(frac + k as f64, 0.0).powc(-s);
    }
    ensure_finite("hurwitz_zeta", value)
}

/// Shorthand for real arguments.
pub fn hurwitz_zeta_real(s: f64, a: f64) -> Result<f64> {
    hurwitz_zeta(ZetaParams::real(s, a)).map(|z| z.re)
}

/// `sin(s·atan(t/a)) / (a²+t²)^{s/2}` written as `((a−it)^{-s} − (a+it)^{-s}) / 2i`,
/// which stays analytic for complex `a` and `s`.
#[inline]
pub(crate) fn sine_part(a: Complex64, s: Complex64, t: f64) -> Complex64 {
    let minus = Complex64::new(a.re, a.im - t).powc(-s);
    let plus = Complex64::new(a.re, a.im + t).powc(-s);
    (minus - plus) / Complex64::new(0.0, 2.0)
}

/// `cos(s·atan(t/a)) / (a²+t²)^{s/2}` as `((a−it)^{-s} + (a+it)^{-s}) / 2`.
#[inline]
pub(crate) fn cosine_part(a: Complex64, s: Complex64, t: f64) -> Complex64 {
    let minus = Complex64::new(a.re, a.im - t).powc(-s);
    let plus = Complex64::new(a.re, a.im + t).powc(-s);
    (minus + plus) * 0.5
}

/// `e^z − 1` without cancellation for small `|z|`.
pub(crate) fn exp_m1(z: Complex64) -> Complex64 {
    if z.im == 0.0 {
        return Complex64::new(z.re.exp_m1(), 0.0);
    }
    let (sin_y, cos_y) = z.im.sin_cos();
    let half = (0.5 * z.im).sin();
    Complex64::new(
        z.re.exp_m1() * cos_y - 2.0 * half * half,
        z.re.exp() * sin_y,
    )
}

/// ζ(s,a) through Hermite's representation
/// `a^{-s}/2 + a^{1-s}/(s-1) + 2∫₀^∞ sin(s·atan(t/a)) / ((a²+t²)^{s/2}(e^{2πt}−1)) dt`.
pub fn hermite_zeta(p: ZetaParams) -> Result<Complex64> {
    hermite_zeta_with_tol(p, HERMITE_TOL)
}

pub fn hermite_zeta_with_tol(p: ZetaParams, tol: f64) -> Result<Complex64> {
    p.validate()?;
    let ZetaParams { s, a } = p;
    let head = 0.5 * a.powc(-s) + a.powc(1.0 - s) / (s - 1.0);
    let at_zero = s * a.powc(-s - 1.0) / (2.0 * PI);
    let integrand = |t: f64| {
        if t == 0.0 {
            at_zero
        } else {
            sine_part(a, s, t) / (2.0 * PI * t).exp_m1()
        }
    };
    let out = integrate_half_line(integrand, tol * head.norm().max(1.0), 2.0 * PI)?;
    ensure_finite("hermite_zeta", head + 2.0 * out.value)
}

/// ∂ζ(s,a)/∂s from the s-derivative of Hermite's representation after the
/// substitution `t → a·u`:
///
/// `−a^{-s}ln a/2 − a^{1-s}ln a/(s−1) − a^{1-s}/(s−1)² + a^{1-s}∫₀^∞ R(u) du`
///
/// with `R(u) = [2φ cos(sφ) − (2 ln a + ln(1+u²)) sin(sφ)] (1+u²)^{-s/2} / (e^{2πau}−1)`,
/// `φ = atan u`.
pub fn hurwitz_zeta_ds(p: ZetaParams) -> Result<Complex64> {
    p.validate()?;
    let ZetaParams { s, a } = p;
    let ln_a = a.ln();
    let a_pow = a.powc(1.0 - s);
    let sm1 = s - 1.0;
    let head = -0.5 * a.powc(-s) * ln_a - a_pow * ln_a / sm1 - a_pow / (sm1 * sm1);

    // u → 0: sin(sφ) ≈ s·u, cos(sφ) ≈ 1, φ ≈ u, kernel ≈ 1/(2πau).
    let at_zero = (2.0 - 2.0 * ln_a * s) / (2.0 * PI * a);
    let integrand = |u: f64| {
        if u == 0.0 {
            return at_zero;
        }
        let phi = u.atan();
        let log1p = (u * u).ln_1p();
        let sphi = s * phi;
        let damp = (-0.5 * s * log1p).exp();
        let bracket = 2.0 * phi * sphi.cos() - (2.0 * ln_a + log1p) * sphi.sin();
        bracket * damp / exp_m1(2.0 * PI * u * a)
    };
    let out = integrate_half_line(integrand, DERIVATIVE_TOL, 2.0 * PI * a.re)?;
    ensure_finite("hurwitz_zeta_ds", head + a_pow * out.value)
}
