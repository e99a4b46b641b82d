//! Hurwitz zeta function, the integrals connected to it, and a harness that
//! checks every closed form against independent semi-infinite quadrature.
//!
//! The crate is organised bottom-up:
//!
//! * [`zeta`]: log-gamma, ζ(s,a) by Euler–Maclaurin, Hermite's integral
//!   representation, ∂ζ/∂s, and the Mellin-type kernel integrals.
//! * [`laguerre`]: associated Laguerre polynomials with complex upper parameter.
//! * [`transforms`]: closed-form sine/cosine transforms of the kernels and of
//!   the algebraic factor `t^{2n} sin(s·atan(t/a)) / (a²+t²)^{s/2}`.
//! * [`quadrature`]: tanh-sinh integration on the half line and the integrands
//!   of every integral family.
//! * [`closed_forms`]: the auxiliary functions P₁..P₄, the binomial-sum
//!   evaluations, and the Laguerre-integral route.
//! * [`verification`]: grid sweeps, Parseval checks and hypothesis resolution
//!   producing an errata report.
//! * [`cli`]: the `hurwitz` command-line front end.

pub mod cli;
pub mod closed_forms;
pub mod error;
pub mod hypothesis;
pub mod laguerre;
pub mod quadrature;
pub mod transforms;
pub mod verification;
pub mod zeta;

pub use num_complex::Complex64;

pub use error::{Error, Result};

/// Every parameter and function value in the crate is a double-precision
/// complex number.
pub type ComplexValue = Complex64;

/// Distance from a pole below which evaluation is refused.
pub const POLE_GUARD: f64 = 1e-6;

pub(crate) fn ensure_finite(what: &'static str, z: Complex64) -> Result<Complex64> {
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(what))
    }
}

/// Shorthand for a real-valued complex number.
#[inline]
pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Serde adapter for complex numbers as `[re, im]`; a bare number is accepted
/// on input as a real value.
pub(crate) mod serde_complex {
    use num_complex::Complex64;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Deserialize)]
    #[serde(untagged)]
    enum Repr {
        Real(f64),
        Pair([f64; 2]),
    }

    pub fn serialize<S: Serializer>(z: &Complex64, ser: S) -> Result<S::Ok, S::Error> {
        [z.re, z.im].serialize(ser)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(de: D) -> Result<Complex64, D::Error> {
        Ok(match Repr::deserialize(de)? {
            Repr::Real(re) => Complex64::new(re, 0.0),
            Repr::Pair([re, im]) => Complex64::new(re, im),
        })
    }
}
