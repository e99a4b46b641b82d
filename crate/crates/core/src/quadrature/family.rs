use std::f64::consts::{FRAC_PI_2, PI};
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::tanh_sinh::{integrate_half_line, QuadratureOutcome};
use crate::zeta::{cosine_part, sine_part};
use crate::{Error, Result};

/// Damping factor of an integral family, `1/K(βt)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kernel {
    /// `1/(e^{βt} − 1)`
    Bose,
    /// `1/sinh(βt)`
    Sinh,
    /// `1/(e^{βt} + 1)`
    Fermi,
    /// `1/cosh(βt)`
    Sech,
}

impl Kernel {
    pub fn eval(self, scale: f64, t: f64) -> f64 {
        let x = scale * t;
        match self {
            Kernel::Bose => 1.0 / x.exp_m1(),
            Kernel::Sinh => 1.0 / x.sinh(),
            Kernel::Fermi => 1.0 / (x.exp() + 1.0),
            Kernel::Sech => 1.0 / x.cosh(),
        }
    }

    /// Whether the kernel has a simple pole at `t = 0`.
    fn has_pole(self) -> bool {
        matches!(self, Kernel::Bose | Kernel::Sinh)
    }

    /// `K(0)` for the kernels without a pole.
    fn at_zero(self) -> f64 {
        match self {
            Kernel::Bose | Kernel::Sinh => f64::INFINITY,
            Kernel::Fermi => 0.5,
            Kernel::Sech => 1.0,
        }
    }
}

/// Which trigonometric factor multiplies the power of `t`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Reading {
    /// `sin(s·atan(t/a)) / (a²+t²)^{s/2}`
    Sin,
    /// `cos(s·atan(t/a)) / (a²+t²)^{s/2}`
    Cos,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "bose-even")]
    BoseEven,
    #[serde(rename = "sinh-even")]
    SinhEven,
    #[serde(rename = "fermi-even")]
    FermiEven,
    #[serde(rename = "sech-even")]
    SechEven,
    #[serde(rename = "bose-odd")]
    BoseOdd,
    #[serde(rename = "sinh-odd")]
    SinhOdd,
    #[serde(rename = "fermi-odd")]
    FermiOdd,
    #[serde(rename = "sech-odd")]
    SechOdd,
    /// `I_k(q) = ∫ t / ((1+t²)^{k+1} (e^{2πqt}−1)) dt`
    #[serde(rename = "open-I")]
    OpenI,
    /// `T_k(q) = ∫ t^k atan t / (e^{2πqt}−1) dt`
    #[serde(rename = "open-T")]
    OpenT,
    /// `L_k(q) = ∫ t^k ln(1+t²) / (e^{2πqt}−1) dt`
    #[serde(rename = "open-L")]
    OpenL,
}

impl Family {
    pub const ALL: [Family; 11] = [
        Family::BoseEven,
        Family::SinhEven,
        Family::FermiEven,
        Family::SechEven,
        Family::BoseOdd,
        Family::SinhOdd,
        Family::FermiOdd,
        Family::SechOdd,
        Family::OpenI,
        Family::OpenT,
        Family::OpenL,
    ];

    /// Families with a closed form.
    pub const CLOSED: [Family; 8] = [
        Family::BoseEven,
        Family::SinhEven,
        Family::FermiEven,
        Family::SechEven,
        Family::BoseOdd,
        Family::SinhOdd,
        Family::FermiOdd,
        Family::SechOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::BoseEven => "bose-even",
            Family::SinhEven => "sinh-even",
            Family::FermiEven => "fermi-even",
            Family::SechEven => "sech-even",
            Family::BoseOdd => "bose-odd",
            Family::SinhOdd => "sinh-odd",
            Family::FermiOdd => "fermi-odd",
            Family::SechOdd => "sech-odd",
            Family::OpenI => "open-I",
            Family::OpenT => "open-T",
            Family::OpenL => "open-L",
        }
    }

    pub fn kernel(self) -> Kernel {
        match self {
            Family::BoseEven | Family::BoseOdd => Kernel::Bose,
            Family::SinhEven | Family::SinhOdd => Kernel::Sinh,
            Family::FermiEven | Family::FermiOdd => Kernel::Fermi,
            Family::SechEven | Family::SechOdd => Kernel::Sech,
            Family::OpenI | Family::OpenT | Family::OpenL => Kernel::Bose,
        }
    }

    pub fn is_open(self) -> bool {
        matches!(self, Family::OpenI | Family::OpenT | Family::OpenL)
    }

    pub fn is_odd(self) -> bool {
        matches!(
            self,
            Family::BoseOdd | Family::SinhOdd | Family::FermiOdd | Family::SechOdd
        )
    }

    /// Power of `t` in the integrand for index `n`.
    pub fn power(self, n: usize) -> usize {
        if self.is_odd() {
            2 * n + 1
        } else {
            2 * n
        }
    }

    /// Kernel scale as printed in the family's defining integral.
    pub fn default_scale(self) -> f64 {
        match self {
            Family::BoseEven | Family::BoseOdd => 2.0 * PI,
            Family::SinhEven | Family::SinhOdd => PI,
            Family::FermiEven => 2.0 * PI,
            Family::FermiOdd => PI,
            Family::SechEven | Family::SechOdd => FRAC_PI_2,
            Family::OpenI | Family::OpenT | Family::OpenL => 2.0 * PI,
        }
    }

    /// Trigonometric factor as printed.
    pub fn printed_reading(self) -> Reading {
        match self {
            Family::BoseOdd | Family::SinhOdd | Family::FermiOdd => Reading::Cos,
            _ => Reading::Sin,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::domain(format!("unknown family {s:?}")))
    }
}

/// One integral: family, power index, parameters and optional overrides.
///
/// For the open families `n` is the index `k` and `q` is required; `a` and
/// `s` are ignored.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub n: usize,
    #[serde(with = "crate::serde_complex", default = "one")]
    pub a: Complex64,
    #[serde(with = "crate::serde_complex", default = "one")]
    pub s: Complex64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kernel_scale: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub reading: Option<Reading>,
}

fn one() -> Complex64 {
    Complex64::new(1.0, 0.0)
}

impl FamilySpec {
    pub fn new(family: Family, n: usize, a: Complex64, s: Complex64) -> Self {
        FamilySpec {
            family,
            n,
            a,
            s,
            kernel_scale: None,
            q: None,
            reading: None,
        }
    }

    pub fn real(family: Family, n: usize, a: f64, s: f64) -> Self {
        FamilySpec::new(family, n, Complex64::new(a, 0.0), Complex64::new(s, 0.0))
    }

    pub fn open(family: Family, k: usize, q: f64) -> Self {
        FamilySpec {
            q: Some(q),
            ..FamilySpec::new(family, k, one(), one())
        }
    }

    pub fn with_scale(mut self, scale: f64) -> Self {
        self.kernel_scale = Some(scale);
        self
    }

    pub fn with_reading(mut self, reading: Reading) -> Self {
        self.reading = Some(reading);
        self
    }

    pub fn scale(&self) -> f64 {
        if self.family.is_open() {
            return 2.0 * PI * self.q.unwrap_or(f64::NAN);
        }
        self.kernel_scale.unwrap_or_else(|| self.family.default_scale())
    }

    pub fn reading(&self) -> Reading {
        self.reading.unwrap_or_else(|| self.family.printed_reading())
    }

    /// Exponential decay rate of the integrand.
    pub fn decay_rate(&self) -> f64 {
        self.scale()
    }

    pub fn validate(&self) -> Result<()> {
        if self.family.is_open() {
            return match self.q {
                Some(q) if q > 0.0 && q.is_finite() => Ok(()),
                other => Err(Error::domain(format!(
                    "{} needs a positive q, got {other:?}",
                    self.family
                ))),
            };
        }
        let FamilySpec { family, n, a, s, .. } = *self;
        if !(a.re > 0.0 && a.im.is_finite()) {
            return Err(Error::domain(format!("Re(a) must be positive, got a = {a}")));
        }
        if !(s.re.is_finite() && s.im.is_finite()) {
            return Err(Error::domain(format!("s = {s} is not finite")));
        }
        let power = family.power(n) as f64;
        if !(power < s.re) {
            return Err(Error::domain(format!(
                "{family} with n = {n} needs Re(s) > {power}, got s = {s}"
            )));
        }
        let scale = self.scale();
        if !(scale > 0.0 && scale.is_finite()) {
            return Err(Error::domain(format!("kernel scale must be positive, got {scale}")));
        }
        if family.kernel().has_pole() && family.power(n) == 0 && self.reading() == Reading::Cos {
            return Err(Error::domain(format!(
                "{family} with n = 0 and the cos reading diverges at t = 0"
            )));
        }
        Ok(())
    }
}

/// The integrand of `spec` as a function of `t > 0`, with the analytic limit
/// supplied at `t = 0`.
pub fn family_integrand(spec: &FamilySpec) -> Result<impl Fn(f64) -> Complex64> {
    spec.validate()?;
    let spec = *spec;
    let at_zero = integrand_at_zero(&spec);
    let scale = spec.scale();
    let kernel = spec.family.kernel();
    let power = spec.family.power(spec.n) as i32;
    let reading = spec.reading();
    let FamilySpec { family, n, a, s, .. } = spec;

    Ok(move |t: f64| -> Complex64 {
        if t == 0.0 {
            return at_zero;
        }
        let damp = kernel.eval(scale, t);
        match family {
            Family::OpenI => Complex64::new(t * (1.0 + t * t).powi(-(n as i32) - 1) * damp, 0.0),
            Family::OpenT => Complex64::new(t.powi(n as i32) * t.atan() * damp, 0.0),
            Family::OpenL => Complex64::new(t.powi(n as i32) * (t * t).ln_1p() * damp, 0.0),
            _ => {
                let trig = match reading {
                    Reading::Sin => sine_part(a, s, t),
                    Reading::Cos => cosine_part(a, s, t),
                };
                trig * (t.powi(power) * damp)
            }
        }
    })
}

fn integrand_at_zero(spec: &FamilySpec) -> Complex64 {
    let zero = Complex64::new(0.0, 0.0);
    let scale = spec.scale();
    let kernel = spec.family.kernel();
    match spec.family {
        // t / (βt) and atan t / (βt) → 1/β; t^k ln(1+t²)/(βt) → 0.
        Family::OpenI => Complex64::new(1.0 / scale, 0.0),
        Family::OpenT if spec.n == 0 => Complex64::new(1.0 / scale, 0.0),
        Family::OpenT | Family::OpenL => zero,
        _ => {
            let (a, s) = (spec.a, spec.s);
            let power = spec.family.power(spec.n);
            // Leading behaviour: sin part ≈ s·t·a^{-s-1}, cos part ≈ a^{-s}.
            let (order, coef) = match spec.reading() {
                Reading::Sin => (power + 1, s * a.powc(-s - 1.0)),
                Reading::Cos => (power, a.powc(-s)),
            };
            if kernel.has_pole() {
                match order {
                    1 => coef / scale,
                    _ => zero,
                }
            } else {
                match order {
                    0 => coef * kernel.at_zero(),
                    _ => zero,
                }
            }
        }
    }
}

/// Integrates `spec` over `(0, ∞)` to absolute tolerance `tol`.
pub fn family_quadrature(spec: &FamilySpec, tol: f64) -> Result<QuadratureOutcome> {
    let f = family_integrand(spec)?;
    integrate_half_line(f, tol, spec.decay_rate())
}
