//! Closed form against quadrature, one grid point at a time or in sweeps,
//! and the resolution of competing closed-form candidates.

mod grids;
mod parseval;
mod resolve;

use std::time::Instant;

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

pub use grids::{mellin_points, resolution_grid, theorem_grid};
pub use parseval::parseval_check;
pub use resolve::{
    resolve_all, resolve_hypotheses, resolve_mellin, CandidateEvidence, Discrepancy, ErrataReport,
    FamilyResolution, FactorEvidence, MellinResolution, MELLIN_TOL,
};

use crate::closed_forms::{closed_form, Selection};
use crate::hypothesis::Canon;
use crate::quadrature::{family_quadrature, FamilySpec};
use crate::{Error, Result};

/// Default acceptance tolerance on `rel_err`.
pub const DEFAULT_TOL: f64 = 1e-8;

/// Absolute quadrature tolerance per unit of `max(1, |closed form|)`.
pub const QUAD_TOL: f64 = 1e-11;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Status {
    Pass,
    Fail,
    SkippedPole,
    NoConvergence,
}

impl Status {
    pub fn name(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::SkippedPole => "SKIPPED_POLE",
            Status::NoConvergence => "NO_CONVERGENCE",
        }
    }
}

/// Outcome of comparing one closed form with its quadrature.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationRecord {
    pub spec: FamilySpec,
    pub candidate: String,
    pub closed: Option<Complex64>,
    pub quad: Option<Complex64>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub tol: f64,
    pub status: Status,
    /// Error estimate reported by the quadrature, when it converged.
    pub quad_err: Option<f64>,
    pub n_evals: usize,
    pub runtime_ms: f64,
}

/// The serialised shape of a [`VerificationRecord`].
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RecordRow {
    pub family: String,
    pub n: usize,
    pub a: [f64; 2],
    pub s: [f64; 2],
    pub candidate: String,
    pub closed: Option<[f64; 2]>,
    pub quad: Option<[f64; 2]>,
    pub abs_err: Option<f64>,
    pub rel_err: Option<f64>,
    pub tol: f64,
    pub status: Status,
    pub n_evals: usize,
    pub runtime_ms: f64,
}

impl VerificationRecord {
    pub fn row(&self) -> RecordRow {
        let pair = |z: Complex64| [z.re, z.im];
        RecordRow {
            family: self.spec.family.to_string(),
            n: self.spec.n,
            a: pair(self.spec.a),
            s: pair(self.spec.s),
            candidate: self.candidate.clone(),
            closed: self.closed.map(pair),
            quad: self.quad.map(pair),
            abs_err: self.abs_err,
            rel_err: self.rel_err,
            tol: self.tol,
            status: self.status,
            n_evals: self.n_evals,
            runtime_ms: self.runtime_ms,
        }
    }

    /// Copy with `runtime_ms` zeroed, for comparing runs.
    pub fn without_timing(&self) -> VerificationRecord {
        VerificationRecord {
            runtime_ms: 0.0,
            ..self.clone()
        }
    }

    fn compare(spec: FamilySpec, candidate: &str, closed: Complex64, quad: Complex64, tol: f64) -> Self {
        let abs_err = (closed - quad).norm();
        let rel_err = abs_err / quad.norm().max(1.0);
        VerificationRecord {
            spec,
            candidate: candidate.to_string(),
            closed: Some(closed),
            quad: Some(quad),
            abs_err: Some(abs_err),
            rel_err: Some(rel_err),
            tol,
            status: if rel_err <= tol { Status::Pass } else { Status::Fail },
            quad_err: None,
            n_evals: 0,
            runtime_ms: 0.0,
        }
    }

    fn incomplete(spec: FamilySpec, candidate: &str, tol: f64, status: Status) -> Self {
        VerificationRecord {
            spec,
            candidate: candidate.to_string(),
            closed: None,
            quad: None,
            abs_err: None,
            rel_err: None,
            tol,
            status,
            quad_err: None,
            n_evals: 0,
            runtime_ms: 0.0,
        }
    }
}

impl Serialize for VerificationRecord {
    fn serialize<S: serde::Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        self.row().serialize(ser)
    }
}

/// Evaluates the selected closed form for `spec` and the integral it claims
/// to equal. The integral uses the candidate's trigonometric factor and
/// kernel scale unless `spec` overrides them.
///
/// A closed form refused for pole proximity gives `SKIPPED_POLE`; a failed
/// quadrature gives `NO_CONVERGENCE`. Invalid specs and unknown candidates
/// are errors.
///
/// The open families have no closed form. With the canonical selection they
/// get a [`QUADRATURE_ONLY`] record whose error is the quadrature's own
/// estimate.
pub fn verify_point(spec: &FamilySpec, selection: Selection<'_>, tol: f64) -> Result<VerificationRecord> {
    let start = Instant::now();
    spec.validate()?;
    if spec.family.is_open() {
        if let Selection::Canonical(_) = selection {
            let mut record = quadrature_only(spec, tol)?;
            record.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
            return Ok(record);
        }
    }
    let cand = selection.resolve(spec.family)?;
    let quad_spec = FamilySpec {
        kernel_scale: Some(spec.kernel_scale.unwrap_or(cand.scale)),
        reading: Some(spec.reading.unwrap_or(cand.reading)),
        ..*spec
    };
    quad_spec.validate()?;

    let mut record = match closed_form(spec, Selection::Candidate(cand.id)) {
        Err(Error::PoleProximity { .. }) => VerificationRecord::incomplete(*spec, cand.id, tol, Status::SkippedPole),
        Err(e) => return Err(e),
        Ok(closed) => match family_quadrature(&quad_spec, QUAD_TOL * closed.norm().max(1.0)) {
            Ok(out) => {
                let mut r = VerificationRecord::compare(*spec, cand.id, closed, out.value, tol);
                r.quad_err = Some(out.err_estimate);
                r.n_evals = out.n_evals;
                r
            }
            Err(e) if e.is_quadrature_failure() => {
                let mut r = VerificationRecord::incomplete(*spec, cand.id, tol, Status::NoConvergence);
                r.closed = Some(closed);
                r
            }
            Err(e) => return Err(e),
        },
    };
    record.runtime_ms = start.elapsed().as_secs_f64() * 1e3;
    Ok(record)
}

/// Candidate label of open-family records.
pub const QUADRATURE_ONLY: &str = "quadrature";

fn quadrature_only(spec: &FamilySpec, tol: f64) -> Result<VerificationRecord> {
    match family_quadrature(spec, QUAD_TOL) {
        Ok(out) => {
            let rel_err = out.err_estimate / out.value.norm().max(1.0);
            Ok(VerificationRecord {
                quad: Some(out.value),
                abs_err: Some(out.err_estimate),
                rel_err: Some(rel_err),
                status: if rel_err <= tol { Status::Pass } else { Status::NoConvergence },
                quad_err: Some(out.err_estimate),
                n_evals: out.n_evals,
                ..VerificationRecord::incomplete(*spec, QUADRATURE_ONLY, tol, Status::Pass)
            })
        }
        Err(e) if e.is_quadrature_failure() => Ok(VerificationRecord::incomplete(
            *spec,
            QUADRATURE_ONLY,
            tol,
            Status::NoConvergence,
        )),
        Err(e) => Err(e),
    }
}

/// Which closed form a grid point is checked against.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(from = "Option<String>", into = "Option<String>")]
pub enum CandidateChoice {
    Named(String),
    Canonical,
}

impl CandidateChoice {
    pub const CANONICAL: &'static str = "canonical";

    pub fn selection<'a>(&'a self, canon: &'a Canon) -> Selection<'a> {
        match self {
            CandidateChoice::Named(id) => Selection::Candidate(id),
            CandidateChoice::Canonical => Selection::Canonical(canon),
        }
    }
}

impl From<Option<String>> for CandidateChoice {
    fn from(v: Option<String>) -> Self {
        match v {
            None => CandidateChoice::Canonical,
            Some(id) if id == CandidateChoice::CANONICAL => CandidateChoice::Canonical,
            Some(id) => CandidateChoice::Named(id),
        }
    }
}

impl From<CandidateChoice> for Option<String> {
    fn from(c: CandidateChoice) -> Self {
        match c {
            CandidateChoice::Named(id) => Some(id),
            CandidateChoice::Canonical => None,
        }
    }
}

/// One sweep entry; in a grid file this is a [`FamilySpec`] object with an
/// optional `candidate` field (absent or `"canonical"` for the certified one).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GridPoint {
    #[serde(flatten)]
    pub spec: FamilySpec,
    #[serde(default = "canonical_choice", skip_serializing_if = "is_canonical")]
    pub candidate: CandidateChoice,
}

fn canonical_choice() -> CandidateChoice {
    CandidateChoice::Canonical
}

fn is_canonical(c: &CandidateChoice) -> bool {
    *c == CandidateChoice::Canonical
}

impl GridPoint {
    pub fn new(spec: FamilySpec, candidate: &str) -> Self {
        GridPoint {
            spec,
            candidate: CandidateChoice::from(Some(candidate.to_string())),
        }
    }

    pub fn canonical(spec: FamilySpec) -> Self {
        GridPoint {
            spec,
            candidate: CandidateChoice::Canonical,
        }
    }
}

/// Verifies every point, in parallel when `parallel` is set. Records come
/// back in grid order either way. Specs and candidates are checked before
/// any integration starts.
pub fn sweep(grid: &[GridPoint], canon: &Canon, tol: f64, parallel: bool) -> Result<Vec<VerificationRecord>> {
    if grid.is_empty() {
        return Err(Error::domain("empty grid"));
    }
    for p in grid {
        p.spec.validate()?;
        if !(p.spec.family.is_open() && p.candidate == CandidateChoice::Canonical) {
            p.candidate.selection(canon).resolve(p.spec.family)?;
        }
    }
    let run = |p: &GridPoint| verify_point(&p.spec, p.candidate.selection(canon), tol);
    if parallel {
        grid.par_iter().map(run).collect()
    } else {
        grid.iter().map(run).collect()
    }
}
