//! Numerical evaluation of every half-line integral in the crate. This is
//! the independent side of each closed-form check.

mod family;
mod tanh_sinh;

pub use family::{family_integrand, family_quadrature, Family, FamilySpec, Kernel, Reading};
pub use tanh_sinh::{integrate_half_line, integrate_interval, QuadratureOutcome, MAX_LEVELS};
