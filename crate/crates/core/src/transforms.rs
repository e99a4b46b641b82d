//! Closed-form Fourier sine/cosine transforms of the kernels and of the
//! algebraic factor `g(t) = t^{2n} sin(s·atan(t/a)) / (a²+t²)^{s/2}`.
//!
//! The transforms here are the unnormalised ones, `∫₀^∞ f(t) sin(wt) dt`;
//! the unitary transform multiplies by `√(2/π)`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::laguerre::{laguerre_explicit, LaguerreQuery};
use crate::quadrature::{integrate_half_line, Kernel, QuadratureOutcome};
use crate::zeta::{log_gamma, KernelKind};
use crate::{ensure_finite, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Sine,
    Cosine,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformQuery {
    pub kernel: KernelKind,
    pub w: f64,
    /// Kernel scale β. Ignored for `Bose`, whose scale is fixed at 2π.
    pub beta: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TransformValue {
    pub value: f64,
    pub sense: Sense,
}

impl TransformQuery {
    pub fn new(kernel: KernelKind, w: f64, beta: f64) -> Self {
        TransformQuery { kernel, w, beta }
    }

    /// The transform pairing available in closed form for this kernel.
    pub fn sense(&self) -> Sense {
        match self.kernel {
            KernelKind::Cosh => Sense::Cosine,
            _ => Sense::Sine,
        }
    }

    fn scale(&self) -> f64 {
        match self.kernel {
            KernelKind::Bose => TAU,
            _ => self.beta,
        }
    }

    fn damping(&self) -> Kernel {
        match self.kernel {
            KernelKind::Bose => Kernel::Bose,
            KernelKind::Fermi => Kernel::Fermi,
            KernelKind::Sinh => Kernel::Sinh,
            KernelKind::Cosh => Kernel::Sech,
        }
    }

    fn validate(&self) -> Result<()> {
        let w_ok = match self.sense() {
            Sense::Sine => self.w > 0.0,
            Sense::Cosine => self.w >= 0.0,
        };
        if !(w_ok && self.w.is_finite()) {
            return Err(Error::domain(format!(
                "frequency w = {} outside the domain of the {} transform",
                self.w, self.kernel
            )));
        }
        if self.kernel != KernelKind::Bose && !(self.beta > 0.0 && self.beta.is_finite()) {
            return Err(Error::domain(format!("kernel scale must be positive, got {}", self.beta)));
        }
        Ok(())
    }
}

/// `1/(e^w − 1) + 1/2 − 1/w`, with its Taylor series near zero.
pub fn bose_bracket(w: f64) -> f64 {
    if w.abs() < 0.1 {
        let w2 = w * w;
        w * (1.0 / 12.0 - w2 * (1.0 / 720.0 - w2 * (1.0 / 30_240.0 - w2 / 1_209_600.0)))
    } else {
        1.0 / w.exp_m1() + 0.5 - 1.0 / w
    }
}

/// `1/x − 1/sinh x`, with its Taylor series near zero.
fn inv_minus_csch(x: f64) -> f64 {
    if x.abs() < 0.1 {
        let x2 = x * x;
        x * (1.0 / 6.0 - x2 * (7.0 / 360.0 - x2 * (31.0 / 15_120.0 - x2 * (127.0 / 604_800.0 - x2 * 73.0 / 3_421_440.0))))
    } else {
        1.0 / x - 1.0 / x.sinh()
    }
}

/// Closed-form transform of the kernel:
///
/// * bose (β = 2π): `½(1/(e^w−1) + ½ − 1/w)`
/// * sinh: `(π/2β) tanh(πw/2β)`
/// * fermi: `1/(2w) − π/(2β sinh(πw/β))`
/// * cosh (cosine transform): `(π/2β) / cosh(πw/2β)`
pub fn kernel_sine_transform(q: TransformQuery) -> Result<TransformValue> {
    q.validate()?;
    let TransformQuery { w, beta, .. } = q;
    let value = match q.kernel {
        KernelKind::Bose => 0.5 * bose_bracket(w),
        KernelKind::Sinh => PI / (2.0 * beta) * (PI * w / (2.0 * beta)).tanh(),
        KernelKind::Fermi => PI / (2.0 * beta) * inv_minus_csch(PI * w / beta),
        KernelKind::Cosh => PI / (2.0 * beta) / (PI * w / (2.0 * beta)).cosh(),
    };
    Ok(TransformValue {
        value,
        sense: q.sense(),
    })
}

/// The defining integral of [`kernel_sine_transform`], by quadrature.
pub fn kernel_transform_quadrature(q: TransformQuery, tol: f64) -> Result<QuadratureOutcome> {
    q.validate()?;
    let damping = q.damping();
    let scale = q.scale();
    let w = q.w;
    let sense = q.sense();
    let at_zero = match (sense, damping) {
        (Sense::Cosine, _) => damping_at_zero(damping),
        (Sense::Sine, Kernel::Bose | Kernel::Sinh) => w / scale,
        (Sense::Sine, _) => 0.0,
    };
    let f = move |t: f64| {
        if t == 0.0 {
            return Complex64::new(at_zero, 0.0);
        }
        let osc = match sense {
            Sense::Sine => (w * t).sin(),
            Sense::Cosine => (w * t).cos(),
        };
        Complex64::new(osc * damping.eval(scale, t), 0.0)
    };
    integrate_half_line(f, tol, scale)
}

fn damping_at_zero(k: Kernel) -> f64 {
    match k {
        Kernel::Fermi => 0.5,
        Kernel::Sech => 1.0,
        Kernel::Bose | Kernel::Sinh => f64::INFINITY,
    }
}

/// `∫₀^∞ t^{2n} sin(s·atan(t/a)) / (a²+t²)^{s/2} · sin(wt) dt`
/// `= (−1)^n π (2n)! / (2Γ(s)) · e^{-aw} w^{s−2n−1} L_{2n}^{s−2n−1}(aw)`.
pub fn g_sine_transform(n: usize, a: Complex64, s: Complex64, w: f64) -> Result<Complex64> {
    if !(a.re > 0.0) {
        return Err(Error::domain(format!("Re(a) must be positive, got a = {a}")));
    }
    let two_n = 2.0 * n as f64;
    if !(two_n < s.re) {
        return Err(Error::domain(format!("need 2n < Re(s), got n = {n}, s = {s}")));
    }
    if !(w > 0.0 && w.is_finite()) {
        return Err(Error::domain(format!("frequency must be positive, got {w}")));
    }
    let k = s - (two_n + 1.0);
    let lag = laguerre_explicit(LaguerreQuery::new(2 * n, k, a * w))?;
    let log_fact = log_gamma(Complex64::new(two_n + 1.0, 0.0))?;
    let log_mag = log_fact - log_gamma(s)? - a * w + k * w.ln();
    let sign = if n % 2 == 0 { 1.0 } else { -1.0 };
    ensure_finite("g_sine_transform", sign * 0.5 * PI * log_mag.exp() * lag.value)
}
