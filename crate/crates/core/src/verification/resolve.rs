use num_complex::Complex64;
use rayon::prelude::*;
use serde::Serialize;

use super::{mellin_points, resolution_grid, verify_point, Status, QUAD_TOL};
use crate::closed_forms::{candidates, Candidate, Selection, PRINTED};
use crate::hypothesis::Canon;
use crate::quadrature::{integrate_half_line, Family, FamilySpec};
use crate::zeta::{kernel_mellin, ConstantFactor, KernelKind, MellinChoice};
use crate::{Error, Result};

/// How one candidate fared on a resolution grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CandidateEvidence {
    pub candidate: &'static str,
    pub description: &'static str,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub no_convergence: usize,
    /// Points where the candidate's integral is not defined.
    pub invalid: usize,
    pub max_rel_err: f64,
}

impl CandidateEvidence {
    fn survived(&self) -> bool {
        self.fail + self.skipped + self.no_convergence + self.invalid == 0 && self.pass > 0
    }

    fn points(&self) -> usize {
        self.pass + self.fail + self.skipped + self.no_convergence + self.invalid
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FamilyResolution {
    pub family: Family,
    pub canonical: &'static str,
    pub description: &'static str,
    pub evidence: Vec<CandidateEvidence>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct FactorEvidence {
    pub constant: ConstantFactor,
    pub pass: usize,
    pub fail: usize,
    pub max_rel_err: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MellinResolution {
    pub kernel: KernelKind,
    pub constant: ConstantFactor,
    pub constant_value: f64,
    pub evidence: Vec<FactorEvidence>,
}

/// A tabulated formula that did not survive, next to the one that did.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Discrepancy {
    pub subject: String,
    pub printed: String,
    pub canonical: String,
    pub canonical_description: String,
    pub printed_failures: usize,
    pub canonical_passes: usize,
    pub grid_points: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrataReport {
    pub tol: f64,
    pub families: Vec<FamilyResolution>,
    pub mellin: Vec<MellinResolution>,
    pub discrepancies: Vec<Discrepancy>,
}

impl ErrataReport {
    pub fn canon(&self) -> Canon {
        let mut canon = Canon::default();
        for f in &self.families {
            canon.certify_family(f.family, f.canonical);
        }
        for m in &self.mellin {
            canon.certify_mellin(m.kernel, m.constant);
        }
        canon
    }
}

fn evidence_for(cand: &'static Candidate, grid: &[FamilySpec], tol: f64, parallel: bool) -> CandidateEvidence {
    let run = |spec: &FamilySpec| verify_point(spec, Selection::Candidate(cand.id), tol);
    let results: Vec<_> = if parallel {
        grid.par_iter().map(run).collect()
    } else {
        grid.iter().map(run).collect()
    };
    let mut ev = CandidateEvidence {
        candidate: cand.id,
        description: cand.description,
        pass: 0,
        fail: 0,
        skipped: 0,
        no_convergence: 0,
        invalid: 0,
        max_rel_err: 0.0,
    };
    for r in results {
        match r {
            Ok(r) => {
                match r.status {
                    Status::Pass => ev.pass += 1,
                    Status::Fail => ev.fail += 1,
                    Status::SkippedPole => ev.skipped += 1,
                    Status::NoConvergence => ev.no_convergence += 1,
                }
                if let Some(e) = r.rel_err {
                    ev.max_rel_err = ev.max_rel_err.max(e);
                }
            }
            Err(_) => ev.invalid += 1,
        }
    }
    ev
}

/// Runs every registered candidate of `family` over `grid` and certifies the
/// one that passes every point. Zero or several survivors is an error.
pub fn resolve_hypotheses(family: Family, grid: &[FamilySpec], tol: f64, parallel: bool) -> Result<FamilyResolution> {
    let list = candidates(family);
    if list.is_empty() {
        return Err(Error::domain(format!("{family} has no closed-form candidates")));
    }
    if grid.is_empty() {
        return Err(Error::domain("empty resolution grid"));
    }
    let evidence: Vec<_> = list.iter().map(|c| evidence_for(c, grid, tol, parallel)).collect();
    let survivors: Vec<_> = list.iter().zip(&evidence).filter(|(_, e)| e.survived()).collect();
    match survivors.as_slice() {
        [(cand, _)] => Ok(FamilyResolution {
            family,
            canonical: cand.id,
            description: cand.description,
            evidence,
        }),
        _ => Err(Error::AmbiguousResolution {
            family: family.to_string(),
            survivors: survivors.len(),
        }),
    }
}

/// `∫₀^∞ t^{s−1} e^{−at} w(t) dt` by quadrature.
fn mellin_quadrature(kind: KernelKind, s: Complex64, a: Complex64, tol: f64) -> Result<Complex64> {
    let decay = match kind {
        KernelKind::Bose | KernelKind::Fermi => a.re,
        KernelKind::Sinh | KernelKind::Cosh => a.re + 1.0,
    };
    let f = move |t: f64| {
        if t == 0.0 {
            return Complex64::new(0.0, 0.0);
        }
        ((s - 1.0) * t.ln() - a * t).exp() * kind.weight(t)
    };
    Ok(integrate_half_line(f, tol, decay)?.value)
}

/// Certifies the constant `c` in front of the tabulated Mellin closed form of
/// `kind`: the unique `c ∈ {1/2, 1, 2}` matching quadrature at every point.
pub fn resolve_mellin(kind: KernelKind, points: &[(Complex64, Complex64)], tol: f64) -> Result<MellinResolution> {
    let mut evidence = Vec::new();
    for factor in ConstantFactor::ALL {
        let mut ev = FactorEvidence {
            constant: factor,
            pass: 0,
            fail: 0,
            max_rel_err: 0.0,
        };
        for &(s, a) in points {
            let closed = kernel_mellin(kind, s, a, MellinChoice::Candidate(factor))?;
            let quad = mellin_quadrature(kind, s, a, QUAD_TOL * closed.norm().max(1.0))?;
            let rel = (closed - quad).norm() / quad.norm().max(1.0);
            ev.max_rel_err = ev.max_rel_err.max(rel);
            if rel <= tol {
                ev.pass += 1;
            } else {
                ev.fail += 1;
            }
        }
        evidence.push(ev);
    }
    let survivors: Vec<_> = evidence.iter().filter(|e| e.fail == 0).collect();
    match survivors.as_slice() {
        [ev] => Ok(MellinResolution {
            kernel: kind,
            constant: ev.constant,
            constant_value: ev.constant.value(),
            evidence: evidence.clone(),
        }),
        _ => Err(Error::AmbiguousResolution {
            family: format!("mellin constant for {kind}"),
            survivors: survivors.len(),
        }),
    }
}

/// Tolerance for the Mellin constants.
pub const MELLIN_TOL: f64 = 1e-10;

/// Resolves every closed family on its [`resolution_grid`] and every Mellin
/// constant, and lists where the tabulated form lost.
pub fn resolve_all(tol: f64, parallel: bool) -> Result<ErrataReport> {
    let mut families = Vec::new();
    let mut discrepancies = Vec::new();
    for family in Family::CLOSED {
        let grid = resolution_grid(family);
        let res = resolve_hypotheses(family, &grid, tol, parallel)?;
        if res.canonical != PRINTED {
            let printed = res.evidence.iter().find(|e| e.candidate == PRINTED);
            let canonical = res.evidence.iter().find(|e| e.candidate == res.canonical);
            if let (Some(p), Some(c)) = (printed, canonical) {
                discrepancies.push(Discrepancy {
                    subject: family.to_string(),
                    printed: p.description.to_string(),
                    canonical: res.canonical.to_string(),
                    canonical_description: res.description.to_string(),
                    printed_failures: p.points() - p.pass,
                    canonical_passes: c.pass,
                    grid_points: grid.len(),
                });
            }
        }
        families.push(res);
    }

    let points = mellin_points();
    let mut mellin = Vec::new();
    for kind in KernelKind::ALL {
        let res = resolve_mellin(kind, &points, MELLIN_TOL)?;
        if res.constant != ConstantFactor::One {
            let tabulated = res.evidence.iter().find(|e| e.constant == ConstantFactor::One);
            discrepancies.push(Discrepancy {
                subject: format!("mellin-{kind}"),
                printed: format!("tabulated {kind} Mellin closed form (c=1)"),
                canonical: res.constant.id().to_string(),
                canonical_description: format!("tabulated {kind} Mellin closed form times {}", res.constant_value),
                printed_failures: tabulated.map_or(0, |e| e.fail),
                canonical_passes: points.len(),
                grid_points: points.len(),
            });
        }
        mellin.push(res);
    }
    Ok(ErrataReport {
        tol,
        families,
        mellin,
        discrepancies,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::c;

    #[test]
    fn single_candidate_family_is_trivially_canonical() {
        let grid = resolution_grid(Family::BoseEven);
        let res = resolve_hypotheses(Family::BoseEven, &grid[..4], 1e-8, false).unwrap();
        assert_eq!(res.canonical, PRINTED);
        assert_eq!(res.evidence.len(), 1);
        assert_eq!(res.evidence[0].pass, 4);
    }

    #[test]
    fn mellin_sinh_constant() {
        let res = resolve_mellin(KernelKind::Sinh, &[(c(2.0), c(1.0))], 1e-10).unwrap();
        assert_eq!(res.constant, ConstantFactor::Two);
        let fermi = resolve_mellin(KernelKind::Fermi, &[(c(2.0), c(1.0))], 1e-10).unwrap();
        assert_eq!(fermi.constant, ConstantFactor::One);
    }

    #[test]
    fn open_family_has_nothing_to_resolve() {
        assert!(resolve_hypotheses(Family::OpenL, &[FamilySpec::open(Family::OpenL, 0, 1.0)], 1e-8, false).is_err());
    }
}
