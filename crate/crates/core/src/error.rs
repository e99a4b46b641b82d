use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("argument {point} lies within {guard:e} of a pole ({what})")]
    PoleProximity {
        what: &'static str,
        point: String,
        guard: f64,
    },

    #[error("domain error: {0}")]
    Domain(String),

    #[error("quadrature did not converge after {levels} levels (last difference {last_diff:e}, tolerance {tol:e})")]
    NoConvergence {
        levels: usize,
        last_diff: f64,
        tol: f64,
    },

    #[error("integrand returned a non-finite value at t = {0}")]
    BadIntegrand(f64),

    #[error("non-finite result in {0}")]
    NonFinite(&'static str),

    #[error("no canonical candidate has been certified for {0}")]
    UnresolvedHypothesis(String),

    #[error("unknown candidate {candidate:?} for {family}")]
    UnknownCandidate { family: String, candidate: String },

    #[error("ambiguous resolution for {family}: {survivors} surviving candidates")]
    AmbiguousResolution { family: String, survivors: usize },
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    /// True for the two quadrature failure modes.
    pub fn is_quadrature_failure(&self) -> bool {
        matches!(self, Error::NoConvergence { .. } | Error::BadIntegrand(_))
    }
}
