use std::f64::consts::PI;
use std::time::Instant;

use num_complex::Complex64;

use super::{Status, VerificationRecord, QUAD_TOL};
use crate::quadrature::{family_quadrature, integrate_half_line, Family, FamilySpec};
use crate::transforms::{g_sine_transform, kernel_sine_transform, TransformQuery};
use crate::zeta::KernelKind;
use crate::Result;

/// Candidate label carried by Parseval records.
pub const PARSEVAL: &str = "parseval";

/// `∫ f g dt` against `(2/π) ∫ F(w) G(w) dw` for the bose-even integrand
/// split as `f = 1/(e^{2πt}−1)`, `g = t^{2n} sin(s·atan(t/a))/(a²+t²)^{s/2}`,
/// with `F`, `G` their closed-form sine transforms. Both sides are
/// quadratures; the record's `closed` field holds the transform side.
pub fn parseval_check(n: usize, a: Complex64, s: Complex64, tol: f64) -> Result<VerificationRecord> {
    let start = Instant::now();
    let spec = FamilySpec::new(Family::BoseEven, n, a, s);
    spec.validate()?;

    let direct = match family_quadrature(&spec, QUAD_TOL) {
        Ok(out) => out,
        Err(e) if e.is_quadrature_failure() => {
            return Ok(VerificationRecord::incomplete(spec, PARSEVAL, tol, Status::NoConvergence))
        }
        Err(e) => return Err(e),
    };

    let product = |w: f64| -> Complex64 {
        if w == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        let kernel = kernel_sine_transform(TransformQuery::new(KernelKind::Bose, w, 0.0)).map(|v| v.value);
        match (kernel, g_sine_transform(n, a, s, w)) {
            (Ok(f), Ok(g)) => 2.0 / PI * f * g,
            _ => Complex64::new(f64::NAN, 0.0),
        }
    };
    let mut record = match integrate_half_line(product, QUAD_TOL, a.re) {
        Ok(out) => {
            let mut r = VerificationRecord::compare(spec, PARSEVAL, out.value, direct.value, tol);
            r.quad_err = Some(direct.err_estimate + out.err_estimate);
            r.n_evals = direct.n_evals + out.n_evals;
            r
        }
        Err(e) if e.is_quadrature_failure() => {
            let mut r = VerificationRecord::incomplete(spec, PARSEVAL, tol, Status::NoConvergence);
            r.quad = Some(direct.value);
            r
        }
        Err(e) => return Err(e),
    };
    record.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(record)
}
