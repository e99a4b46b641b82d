//! Mellin-type integrals `∫₀^∞ t^{s-1} e^{-at} w(t) dt` for the four kernel
//! weights, in closed form.
//!
//! The tabulated constants for the `1/sinh` and `1/cosh` weights are not
//! trusted: each kernel carries candidates scaled by `c ∈ {1/2, 1, 2}` and the
//! verification harness certifies one of them against quadrature.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{gamma, hurwitz_zeta, ZetaParams};
use crate::hypothesis::Canon;
use crate::{ensure_finite, Error, Result};

/// The weight `w(t)` multiplying `t^{s-1} e^{-at}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum KernelKind {
    /// `1/(1 − e^{-t})`
    Bose,
    /// `1/(1 + e^{-t})`
    Fermi,
    /// `1/sinh t`
    Sinh,
    /// `1/cosh t`
    Cosh,
}

impl KernelKind {
    pub const ALL: [KernelKind; 4] = [
        KernelKind::Bose,
        KernelKind::Fermi,
        KernelKind::Sinh,
        KernelKind::Cosh,
    ];

    pub fn name(self) -> &'static str {
        match self {
            KernelKind::Bose => "bose",
            KernelKind::Fermi => "fermi",
            KernelKind::Sinh => "sinh",
            KernelKind::Cosh => "cosh",
        }
    }

    /// The weight itself, `w(t)`.
    pub fn weight(self, t: f64) -> f64 {
        match self {
            KernelKind::Bose => -1.0 / (-t).exp_m1(),
            KernelKind::Fermi => 1.0 / (1.0 + (-t).exp()),
            KernelKind::Sinh => 1.0 / t.sinh(),
            KernelKind::Cosh => 1.0 / t.cosh(),
        }
    }

    /// Whether `Re(a) = 0` still gives a convergent integral for `Re(s) > 1`.
    fn allows_zero_a(self) -> bool {
        matches!(self, KernelKind::Sinh | KernelKind::Cosh)
    }
}

impl fmt::Display for KernelKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for KernelKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        KernelKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::domain(format!("unknown kernel {s:?}")))
    }
}

/// Multiplicative constant applied to a tabulated Mellin closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ConstantFactor {
    #[serde(rename = "1/2")]
    Half,
    #[serde(rename = "1")]
    One,
    #[serde(rename = "2")]
    Two,
}

impl ConstantFactor {
    pub const ALL: [ConstantFactor; 3] = [ConstantFactor::Half, ConstantFactor::One, ConstantFactor::Two];

    pub fn value(self) -> f64 {
        match self {
            ConstantFactor::Half => 0.5,
            ConstantFactor::One => 1.0,
            ConstantFactor::Two => 2.0,
        }
    }

    pub fn id(self) -> &'static str {
        match self {
            ConstantFactor::Half => "c=1/2",
            ConstantFactor::One => "c=1",
            ConstantFactor::Two => "c=2",
        }
    }
}

/// Which constant to apply.
#[derive(Debug, Clone, Copy)]
pub enum MellinChoice<'a> {
    Candidate(ConstantFactor),
    /// The constant certified in `Canon`; fails if none has been certified.
    Canonical(&'a Canon),
}

/// `c · T(s,a)` where `T` is the tabulated closed form:
///
/// * bose: `Γ(s) ζ(s,a)`
/// * sinh: `Γ(s) (ζ(s,a) − 2^{-s} ζ(s,a/2))`
/// * fermi: `Γ(s) (2^{1-s} ζ(s,a/2) − ζ(s,a))`
/// * cosh: `Γ(s) 2^{-2s} (ζ(s,(1+a)/4) − ζ(s,(3+a)/4))`
pub fn kernel_mellin(
    kind: KernelKind,
    s: Complex64,
    a: Complex64,
    choice: MellinChoice<'_>,
) -> Result<Complex64> {
    let factor = match choice {
        MellinChoice::Candidate(c) => c,
        MellinChoice::Canonical(canon) => canon
            .mellin_factor(kind)
            .ok_or_else(|| Error::UnresolvedHypothesis(format!("mellin constant for {kind}")))?,
    };
    if !(s.re > 1.0) {
        return Err(Error::domain(format!("Re(s) must exceed 1, got s = {s}")));
    }
    let a_ok = if kind.allows_zero_a() { a.re >= 0.0 } else { a.re > 0.0 };
    if !a_ok || !a.im.is_finite() {
        return Err(Error::domain(format!("a = {a} outside the {kind} kernel's domain")));
    }

    let zeta = |a: Complex64| hurwitz_zeta(ZetaParams::new(s, a));
    let two = Complex64::new(2.0, 0.0);
    let tabulated = match kind {
        KernelKind::Bose => zeta(a)?,
        // ζ(s,a) − 2^{-s}ζ(s,a/2) sums the odd shifts only, which is
        // 2^{-s}ζ(s,(a+1)/2); that form has no a^{-s} cancellation as a → 0.
        KernelKind::Sinh => two.powc(-s) * zeta((a + 1.0) * 0.5)?,
        KernelKind::Fermi => two.powc(1.0 - s) * zeta(a * 0.5)? - zeta(a)?,
        KernelKind::Cosh => two.powc(-2.0 * s) * (zeta((a + 1.0) * 0.25)? - zeta((a + 3.0) * 0.25)?),
    };
    ensure_finite("kernel_mellin", factor.value() * gamma(s)? * tabulated)
}
