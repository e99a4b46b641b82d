//! Associated Laguerre polynomials `L_n^k(x)` with integer degree and complex
//! upper parameter.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::zeta::log_gamma;
use crate::{ensure_finite, Error, Result, POLE_GUARD};

pub const MAX_DEGREE: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LaguerreQuery {
    pub n: usize,
    pub k: Complex64,
    pub x: Complex64,
}

impl LaguerreQuery {
    pub fn new(n: usize, k: Complex64, x: Complex64) -> Self {
        LaguerreQuery { n, k, x }
    }

    fn validate(&self) -> Result<()> {
        if self.n > MAX_DEGREE {
            return Err(Error::domain(format!(
                "Laguerre degree {} exceeds the supported maximum {MAX_DEGREE}",
                self.n
            )));
        }
        for z in [self.k, self.x] {
            if !(z.re.is_finite() && z.im.is_finite()) {
                return Err(Error::domain(format!("non-finite Laguerre argument {z}")));
            }
        }
        for j in 0..=self.n {
            let kj = self.k + j as f64;
            let nearest = kj.re.round();
            if nearest < 0.0 && (kj - nearest).norm() < POLE_GUARD {
                return Err(Error::domain(format!(
                    "k + {j} = {kj} is a negative integer; Γ(k+j+1) has a pole"
                )));
            }
        }
        Ok(())
    }
}

/// Value of the explicit sum together with a cancellation indicator.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaguerreValue {
    pub value: Complex64,
    /// `max_j |term_j| / |value|`. Roughly the factor by which rounding
    /// error is amplified; values far above 1e3 mean the alternating sum has
    /// lost digits and the result should be treated with suspicion.
    pub cancellation: f64,
}

/// `Σ_{j=0}^{n} (−1)^j Γ(n+k+1) / (Γ(n−j+1) Γ(k+j+1) Γ(j+1)) · x^j`.
///
/// The common factor `Γ(n+k+1) / (Γ(n+1) Γ(k+1))` is formed from log-gamma
/// differences so that large `n + |k|` does not overflow. The normalised
/// terms follow from the exact ratio
/// `term_{j+1}/term_j = −(n−j) x / ((j+1)(k+j+1))` and are accumulated in
/// double-double arithmetic: for complex `x` and `k` the terms can exceed
/// the result by six orders of magnitude or more inside `|x|, |k| ≤ 20`.
pub fn laguerre_explicit(q: LaguerreQuery) -> Result<LaguerreValue> {
    q.validate()?;
    let LaguerreQuery { n, k, x } = q;
    let nf = n as f64;
    let log_lead = log_gamma(k + (nf + 1.0))?
        - log_gamma(Complex64::new(nf + 1.0, 0.0))?
        - log_gamma(k + 1.0)?;
    let lead = log_lead.exp();

    let x_dd = DdComplex::from(x);
    let mut ratio = DdComplex::from(Complex64::new(1.0, 0.0));
    let mut sum = ratio;
    let mut largest: f64 = 1.0;
    for j in 0..n {
        let jf = j as f64;
        let num = x_dd.scale(-(nf - jf));
        let den = DdComplex::from(k).add_real(jf + 1.0).scale(jf + 1.0);
        ratio = ratio.mul(num).div(den);
        largest = largest.max(ratio.to_complex().norm());
        sum = sum.add(ratio);
    }
    let sum = sum.to_complex();
    let value = ensure_finite("laguerre_explicit", lead * sum)?;
    let cancellation = if sum.norm() > 0.0 {
        largest / sum.norm()
    } else {
        f64::INFINITY
    };
    Ok(LaguerreValue { value, cancellation })
}

/// Unevaluated sum `hi + lo` with `|lo| ≤ ulp(hi)/2`.
#[derive(Debug, Clone, Copy)]
struct Dd {
    hi: f64,
    lo: f64,
}

impl Dd {
    fn new(v: f64) -> Self {
        Dd { hi: v, lo: 0.0 }
    }

    fn two_sum(a: f64, b: f64) -> Self {
        let s = a + b;
        let bb = s - a;
        Dd {
            hi: s,
            lo: (a - (s - bb)) + (b - bb),
        }
    }

    fn renorm(hi: f64, lo: f64) -> Self {
        let s = hi + lo;
        Dd { hi: s, lo: lo - (s - hi) }
    }

    fn add(self, o: Dd) -> Dd {
        let s = Dd::two_sum(self.hi, o.hi);
        let t = Dd::two_sum(self.lo, o.lo);
        let u = Dd::renorm(s.hi, s.lo + t.hi);
        Dd::renorm(u.hi, u.lo + t.lo)
    }

    fn neg(self) -> Dd {
        Dd {
            hi: -self.hi,
            lo: -self.lo,
        }
    }

    fn mul(self, o: Dd) -> Dd {
        let p = self.hi * o.hi;
        let err = self.hi.mul_add(o.hi, -p);
        Dd::renorm(p, err + (self.hi * o.lo + self.lo * o.hi))
    }

    fn div(self, o: Dd) -> Dd {
        let q1 = self.hi / o.hi;
        let r = self.add(o.mul(Dd::new(q1)).neg());
        let q2 = r.hi / o.hi;
        let r = r.add(o.mul(Dd::new(q2)).neg());
        let q3 = r.hi / o.hi;
        Dd::renorm(q1, q2).add(Dd::new(q3))
    }
}

#[derive(Debug, Clone, Copy)]
struct DdComplex {
    re: Dd,
    im: Dd,
}

impl From<Complex64> for DdComplex {
    fn from(z: Complex64) -> Self {
        DdComplex {
            re: Dd::new(z.re),
            im: Dd::new(z.im),
        }
    }
}

impl DdComplex {
    fn to_complex(self) -> Complex64 {
        Complex64::new(self.re.hi + self.re.lo, self.im.hi + self.im.lo)
    }

    fn add(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.add(o.re),
            im: self.im.add(o.im),
        }
    }

    fn add_real(self, v: f64) -> DdComplex {
        DdComplex {
            re: self.re.add(Dd::new(v)),
            im: self.im,
        }
    }

    fn scale(self, v: f64) -> DdComplex {
        DdComplex {
            re: self.re.mul(Dd::new(v)),
            im: self.im.mul(Dd::new(v)),
        }
    }

    fn mul(self, o: DdComplex) -> DdComplex {
        DdComplex {
            re: self.re.mul(o.re).add(self.im.mul(o.im).neg()),
            im: self.re.mul(o.im).add(self.im.mul(o.re)),
        }
    }

    fn div(self, o: DdComplex) -> DdComplex {
        let norm = o.re.mul(o.re).add(o.im.mul(o.im));
        let conj = DdComplex {
            re: o.re,
            im: o.im.neg(),
        };
        let p = self.mul(conj);
        DdComplex {
            re: p.re.div(norm),
            im: p.im.div(norm),
        }
    }
}

/// `L_n^k(x)` by the three-term recurrence in the degree,
/// `(j+1) L_{j+1} = (2j+1+k−x) L_j − (j+k) L_{j−1}`.
pub fn laguerre_recurrence(q: LaguerreQuery) -> Result<Complex64> {
    q.validate()?;
    let LaguerreQuery { n, k, x } = q;
    let mut prev = Complex64::new(1.0, 0.0);
    if n == 0 {
        return Ok(prev);
    }
    let mut cur = k + 1.0 - x;
    for j in 1..n {
        let jf = j as f64;
        let next = ((2.0 * jf + 1.0 + k - x) * cur - (k + jf) * prev) / (jf + 1.0);
        prev = cur;
        cur = next;
    }
    ensure_finite("laguerre_recurrence", cur)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use proptest::prelude::*;

    fn q(n: usize, k: f64, x: f64) -> LaguerreQuery {
        LaguerreQuery::new(n, c(k), c(x))
    }

    /// `L_n^k(x)` for integer `k ≥ 0` from the Rodrigues formula expanded with
    /// Leibniz's rule: `x^{-k}/n! · Σ_i C(n,i) (−1)^{n−i} (n+k)!/(n+k−i)! · x^{n+k−i}`.
    fn rodrigues(n: u32, k: u32, x: f64) -> f64 {
        let fact = |m: u32| (1..=m).map(f64::from).product::<f64>();
        let binom = |a: u32, b: u32| fact(a) / (fact(b) * fact(a - b));
        let mut total = 0.0;
        for i in 0..=n {
            let sign = if (n - i) % 2 == 0 { 1.0 } else { -1.0 };
            total += binom(n, i) * sign * fact(n + k) / fact(n + k - i) * x.powi((n - i) as i32);
        }
        total / fact(n)
    }

    #[test]
    fn low_degree_anchors() {
        for (k, x) in [(0.0, 0.0), (3.2, 7.0), (-0.5, 1.5)] {
            assert_eq!(laguerre_recurrence(q(0, k, x)).unwrap(), c(1.0));
            let e = laguerre_explicit(q(0, k, x)).unwrap().value;
            assert!((e - 1.0).norm() < 1e-14);
        }
        assert_eq!(laguerre_recurrence(q(1, 3.2, 7.0)).unwrap(), c(3.2 + 1.0 - 7.0));
        let e = laguerre_explicit(q(1, 3.2, 7.0)).unwrap().value;
        assert!((e.re + 2.8).abs() < 1e-13);
    }

    #[test]
    fn quadratic_example() {
        // x²/2 − (k+2)x + (k+1)(k+2)/2 at k = 1.5, x = 2
        let e = laguerre_explicit(q(2, 1.5, 2.0)).unwrap().value;
        let r = laguerre_recurrence(q(2, 1.5, 2.0)).unwrap();
        assert!((e.re + 0.625).abs() < 1e-13);
        assert!((r.re + 0.625).abs() < 1e-15);
    }

    #[test]
    fn integer_parameter_matches_rodrigues() {
        for n in 0..=6u32 {
            for k in [0u32, 1, 3] {
                for x in [0.0, 0.3, 1.7, 5.0] {
                    let oracle = rodrigues(n, k, x);
                    let e = laguerre_explicit(q(n as usize, k as f64, x)).unwrap().value;
                    assert!((e.re - oracle).abs() < 1e-12 * oracle.abs().max(1.0), "n={n} k={k} x={x}");
                }
            }
        }
    }

    #[test]
    fn gamma_pole_rejected() {
        assert!(laguerre_explicit(q(3, -2.0, 1.0)).is_err());
        assert!(laguerre_recurrence(q(3, -2.0, 1.0)).is_err());
        assert!(laguerre_explicit(q(65, 0.0, 1.0)).is_err());
        assert!(laguerre_explicit(q(3, -2.5, 1.0)).is_ok());
    }

    #[test]
    fn cancellation_flag_grows_with_x() {
        let small = laguerre_explicit(q(12, 0.5, 0.5)).unwrap().cancellation;
        let large = laguerre_explicit(q(12, 0.5, 30.0)).unwrap().cancellation;
        assert!(large > small);
    }

    proptest! {
        #[test]
        fn explicit_and_recurrence_agree(
            n in 0usize..=16,
            k_r in 0.0f64..=20.0,
            k_arg in -std::f64::consts::PI..std::f64::consts::PI,
            x_r in 0.0f64..=20.0,
            x_arg in -std::f64::consts::PI..std::f64::consts::PI,
        ) {
            let k = Complex64::from_polar(k_r, k_arg);
            let x = Complex64::from_polar(x_r, x_arg);
            let query = LaguerreQuery::new(n, k, x);
            prop_assume!(query.validate().is_ok());
            let e = laguerre_explicit(query).unwrap();
            let r = laguerre_recurrence(query).unwrap();
            prop_assert!((e.value - r).norm() <= 1e-10 * r.norm().max(1.0),
                "n={} k={} x={} explicit={} recurrence={} cancellation={}", n, k, x, e.value, r, e.cancellation);
        }
    }
}
