//! Closed-form right-hand sides.
//!
//! Every family shares the shape
//! `½ Σ_m (−1)^{m+n} C(N,m) a^m P(a, m+s−N)` with `N = 2n` (even powers) or
//! `N = 2n+1` (odd powers), differing only in the auxiliary function `P` and
//! in the integral the sum is claimed to equal. Those choices are collected
//! per family as [`Candidate`]s so the verification harness can decide
//! between competing readings.

mod candidates;
mod lemma;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

pub use candidates::{candidates, find_candidate, Candidate, Selection, PRINTED};
pub use lemma::lemma21_rhs;

use crate::quadrature::{Family, FamilySpec};
use crate::zeta::{check_pole, hurwitz_zeta, ZetaParams};
use crate::{ensure_finite, Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AuxVariant {
    Printed,
    Corrected,
}

/// Selects `P₁..P₄` and whether the tabulated or a re-derived form is used.
///
/// Corrected forms exist for `P₃` and `P₄` only:
///
/// * `P₃ = a^{1−σ}/(σ−1) − 2^{1−σ} ζ(σ,(a+1)/2)`
/// * `P₄ = 2^{2−2σ} [ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]`, four times the tabulated one
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct AuxKind {
    pub kind: u8,
    pub variant: AuxVariant,
}

impl AuxKind {
    pub fn printed(kind: u8) -> Self {
        AuxKind {
            kind,
            variant: AuxVariant::Printed,
        }
    }

    pub fn corrected(kind: u8) -> Self {
        AuxKind {
            kind,
            variant: AuxVariant::Corrected,
        }
    }

    fn validate(&self) -> Result<()> {
        match (self.kind, self.variant) {
            (1..=4, AuxVariant::Printed) | (3 | 4, AuxVariant::Corrected) => Ok(()),
            (k, v) => Err(Error::domain(format!("no auxiliary function P{k} with variant {v:?}"))),
        }
    }
}

/// The auxiliary function `P_k(a, σ)`:
///
/// * `P₁ = ζ(σ,a) − a^{−σ}/2 − a^{1−σ}/(σ−1)`
/// * `P₂ = 2^{2−σ} ζ(σ,a/2) − 2ζ(σ,a) − a^{−σ}`
/// * `P₃ = a^{1−σ}/(σ−1) − ζ(σ,a) − 2^{−σ} ζ(σ,a/2)`
/// * `P₄ = 2^{−2σ} [ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]`
///
/// `σ` within the pole guard of 1 is refused for every kind, including the
/// ones whose singular parts cancel.
pub fn p_aux(kind: AuxKind, a: Complex64, sigma: Complex64) -> Result<Complex64> {
    kind.validate()?;
    if !(a.re > 0.0 && a.im.is_finite()) {
        return Err(Error::domain(format!("Re(a) must be positive, got a = {a}")));
    }
    check_pole(sigma)?;
    let zeta = |x: Complex64| hurwitz_zeta(ZetaParams::new(sigma, x));
    let two = Complex64::new(2.0, 0.0);
    let pole_part = || a.powc(1.0 - sigma) / (sigma - 1.0);

    let value = match (kind.kind, kind.variant) {
        (1, _) => zeta(a)? - 0.5 * a.powc(-sigma) - pole_part(),
        (2, _) => two.powc(2.0 - sigma) * zeta(a * 0.5)? - 2.0 * zeta(a)? - a.powc(-sigma),
        (3, AuxVariant::Printed) => pole_part() - zeta(a)? - two.powc(-sigma) * zeta(a * 0.5)?,
        (3, AuxVariant::Corrected) => pole_part() - two.powc(1.0 - sigma) * zeta((a + 1.0) * 0.5)?,
        (4, variant) => {
            let factor = match variant {
                AuxVariant::Printed => two.powc(-2.0 * sigma),
                AuxVariant::Corrected => two.powc(2.0 - 2.0 * sigma),
            };
            factor * (zeta((a + 1.0) * 0.25)? - zeta((a + 3.0) * 0.25)?)
        }
        _ => unreachable!("validated above"),
    };
    ensure_finite("p_aux", value)
}

/// `½ Σ_{m=0}^{N} (−1)^{m+n} C(N,m) a^m P(a, m+s−N)`.
fn binomial_sum(order: usize, n: usize, a: Complex64, s: Complex64, aux: AuxKind) -> Result<Complex64> {
    let mut total = Complex64::new(0.0, 0.0);
    let mut binom = 1.0;
    let mut a_pow = Complex64::new(1.0, 0.0);
    for m in 0..=order {
        let sigma = s + (m as f64 - order as f64);
        let sign = if (m + n) % 2 == 0 { 1.0 } else { -1.0 };
        total += sign * binom * a_pow * p_aux(aux, a, sigma)?;
        binom = binom * (order - m) as f64 / (m + 1) as f64;
        a_pow *= a;
    }
    Ok(0.5 * total)
}

fn check_closed(family: Family, n: usize, a: Complex64, s: Complex64, odd: bool) -> Result<()> {
    if family.is_open() || family.is_odd() != odd {
        let parity = if odd { "odd" } else { "even" };
        return Err(Error::domain(format!("{family} is not an {parity}-power family with a closed form")));
    }
    FamilySpec::new(family, n, a, s).validate()
}

/// Closed form of an even-power family, `½ Σ_{m=0}^{2n} (−1)^{m+n} C(2n,m) a^m P(a, m+s−2n)`
/// with `P` and overall sign taken from the selected candidate.
pub fn closed_even(family: Family, n: usize, a: Complex64, s: Complex64, selection: Selection<'_>) -> Result<Complex64> {
    check_closed(family, n, a, s, false)?;
    let cand = selection.resolve(family)?;
    Ok(cand.sign * binomial_sum(2 * n, n, a, s, cand.aux)?)
}

/// Closed form of an odd-power family, `½ Σ_{m=0}^{2n+1} (−1)^{m+n} C(2n+1,m) a^m P(a, m+s−2n−1)`
/// with `P` and overall sign taken from the selected candidate.
pub fn closed_odd(family: Family, n: usize, a: Complex64, s: Complex64, selection: Selection<'_>) -> Result<Complex64> {
    check_closed(family, n, a, s, true)?;
    let cand = selection.resolve(family)?;
    Ok(cand.sign * binomial_sum(2 * n + 1, n, a, s, cand.aux)?)
}

/// [`closed_even`] or [`closed_odd`] according to the family's parity.
pub fn closed_form(spec: &FamilySpec, selection: Selection<'_>) -> Result<Complex64> {
    let FamilySpec { family, n, a, s, .. } = *spec;
    if family.is_odd() {
        closed_odd(family, n, a, s, selection)
    } else {
        closed_even(family, n, a, s, selection)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;
    use crate::hypothesis::Canon;
    use crate::quadrature::family_quadrature;
    use std::f64::consts::PI;

    const PRINTED_SEL: Selection<'static> = Selection::Candidate(PRINTED);

    #[test]
    fn p_aux_examples() {
        let p1 = p_aux(AuxKind::printed(1), c(1.0), c(2.0)).unwrap();
        assert!((p1.re - (PI * PI / 6.0 - 1.5)).abs() < 1e-14);
        let p4 = p_aux(AuxKind::printed(4), c(1.0), c(2.0)).unwrap();
        assert!((p4.re - (PI * PI / 2.0 - PI * PI / 6.0) / 16.0).abs() < 1e-14);
        assert!((p4.re - 0.205_616_758_356_028_3).abs() < 1e-14);
        let p4c = p_aux(AuxKind::corrected(4), c(1.0), c(2.0)).unwrap();
        assert!((p4c - 4.0 * p4).norm() < 1e-14);
    }

    #[test]
    fn p_aux_errors() {
        assert!(matches!(p_aux(AuxKind::printed(1), c(1.0), c(1.0)), Err(Error::PoleProximity { .. })));
        assert!(matches!(p_aux(AuxKind::printed(2), c(1.0), c(1.0 + 1e-7)), Err(Error::PoleProximity { .. })));
        assert!(p_aux(AuxKind::printed(5), c(1.0), c(2.0)).is_err());
        assert!(p_aux(AuxKind::corrected(1), c(1.0), c(2.0)).is_err());
        assert!(p_aux(AuxKind::printed(3), c(-1.0), c(2.0)).is_err());
    }

    #[test]
    fn p1_is_the_hermite_bracket() {
        // 2·∫ sin(s·atan(t/a))/((a²+t²)^{s/2}(e^{2πt}−1)) dt = ζ(s,a) − a^{−s}/2 − a^{1−s}/(s−1)
        for (a, s) in [(1.0, 2.0), (0.7, 3.3), (2.5, 1.5)] {
            let quad = family_quadrature(&FamilySpec::real(Family::BoseEven, 0, a, s), 1e-13).unwrap();
            let p1 = p_aux(AuxKind::printed(1), c(a), c(s)).unwrap();
            assert!((2.0 * quad.value - p1).norm() < 1e-12, "a={a} s={s}");
        }
    }

    #[test]
    fn n_zero_collapse() {
        for (a, s) in [(1.0, 2.0), (0.7, 3.3), (2.3, 1.5)] {
            let (a, s) = (c(a), c(s));
            let closed = closed_even(Family::BoseEven, 0, a, s, PRINTED_SEL).unwrap();
            let half = 0.5 * p_aux(AuxKind::printed(1), a, s).unwrap();
            assert_eq!(closed - half, c(0.0));
        }
        let v = closed_even(Family::BoseEven, 0, c(1.0), c(2.0), PRINTED_SEL).unwrap();
        assert!((v.re - 0.072_467_033_424_113_2).abs() < 1e-14);
    }

    #[test]
    fn odd_sum_at_n_zero() {
        // ½[P(a,s−1) − a·P(a,s)]
        let (a, s) = (c(1.3), c(4.2));
        let odd = closed_odd(Family::BoseOdd, 0, a, s, PRINTED_SEL).unwrap();
        let p = |sigma| p_aux(AuxKind::printed(1), a, sigma).unwrap();
        assert!((odd - 0.5 * (p(s - 1.0) - a * p(s))).norm() < 1e-15);
    }

    #[test]
    fn binomial_sum_symmetry() {
        // reversing the summation order only reassociates
        let (n, a, s) = (3usize, Complex64::new(1.3, 0.4), Complex64::new(9.7, 0.5));
        let aux = AuxKind::printed(1);
        let forward = binomial_sum(2 * n, n, a, s, aux).unwrap();
        let mut reverse = Complex64::new(0.0, 0.0);
        let binom = |k: usize, m: usize| (1..=m).fold(1.0, |acc, i| acc * (k + 1 - i) as f64 / i as f64);
        for m in (0..=2 * n).rev() {
            let sign = if (m + n) % 2 == 0 { 1.0 } else { -1.0 };
            reverse += sign * binom(2 * n, m) * a.powu(m as u32) * p_aux(aux, a, s + (m as f64 - 2.0 * n as f64)).unwrap();
        }
        reverse *= 0.5;
        assert!((forward - reverse).norm() <= 64.0 * f64::EPSILON * forward.norm().max(1.0));
    }

    #[test]
    fn shifted_pole_is_refused() {
        // s = 2n+1: the m = 2n term evaluates P at σ = 1
        assert!(matches!(
            closed_even(Family::BoseEven, 1, c(1.0), c(3.0), PRINTED_SEL),
            Err(Error::PoleProximity { .. })
        ));
    }

    #[test]
    fn selection_errors() {
        let canon = Canon::default();
        assert!(matches!(
            closed_even(Family::FermiEven, 0, c(1.0), c(2.5), Selection::Canonical(&canon)),
            Err(Error::UnresolvedHypothesis(_))
        ));
        assert!(matches!(
            closed_even(Family::BoseEven, 0, c(1.0), c(2.5), Selection::Candidate("nope")),
            Err(Error::UnknownCandidate { .. })
        ));
        assert!(closed_even(Family::BoseOdd, 0, c(1.0), c(2.5), PRINTED_SEL).is_err());
        assert!(closed_odd(Family::BoseEven, 0, c(1.0), c(2.5), PRINTED_SEL).is_err());
        assert!(closed_even(Family::BoseEven, 2, c(1.0), c(3.5), PRINTED_SEL).is_err());
    }

    #[test]
    fn registry_shape() {
        for family in Family::CLOSED {
            let list = candidates(family);
            assert!(list.iter().any(Candidate::is_printed), "{family}");
            let mut ids: Vec<_> = list.iter().map(|c| c.id).collect();
            ids.sort();
            ids.dedup();
            assert_eq!(ids.len(), list.len(), "{family}");
            for cand in list {
                cand.aux.validate().unwrap();
            }
        }
        assert!(candidates(Family::OpenT).is_empty());
    }
}
