use std::f64::consts::{FRAC_PI_2, PI, TAU};

use serde::Serialize;

use super::{AuxKind, AuxVariant};
use crate::hypothesis::Canon;
use crate::quadrature::{Family, Reading};
use crate::{Error, Result};

/// One reading of a family's closed form: which integral it claims to equal
/// (trigonometric factor and kernel scale) and which binomial sum it uses.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Candidate {
    pub id: &'static str,
    pub description: &'static str,
    pub reading: Reading,
    pub scale: f64,
    pub aux: AuxKind,
    /// Overall sign applied to the binomial sum.
    pub sign: f64,
}

impl Candidate {
    /// Whether this is the formula exactly as tabulated.
    pub fn is_printed(&self) -> bool {
        self.id == PRINTED
    }
}

pub const PRINTED: &str = "printed";

const fn cand(
    id: &'static str,
    description: &'static str,
    reading: Reading,
    scale: f64,
    kind: u8,
    variant: AuxVariant,
    sign: f64,
) -> Candidate {
    Candidate {
        id,
        description,
        reading,
        scale,
        aux: AuxKind { kind, variant },
        sign,
    }
}

use AuxVariant::{Corrected, Printed};
use Reading::{Cos, Sin};

const BOSE_EVEN: &[Candidate] = &[cand(
    PRINTED,
    "sin reading, kernel 1/(e^{2πt}−1), tabulated P₁",
    Sin,
    TAU,
    1,
    Printed,
    1.0,
)];

const SINH_EVEN: &[Candidate] = &[cand(
    PRINTED,
    "sin reading, kernel 1/sinh(πt), tabulated P₂",
    Sin,
    PI,
    2,
    Printed,
    1.0,
)];

const FERMI_EVEN: &[Candidate] = &[
    cand(PRINTED, "sin reading, kernel 1/(e^{2πt}+1), tabulated P₃", Sin, TAU, 3, Printed, 1.0),
    cand("printed@pi", "sin reading, kernel 1/(e^{πt}+1), tabulated P₃", Sin, PI, 3, Printed, 1.0),
    cand(
        "corrected@pi",
        "sin reading, kernel 1/(e^{πt}+1), P₃ = a^{1−σ}/(σ−1) − 2^{1−σ}ζ(σ,(a+1)/2)",
        Sin,
        PI,
        3,
        Corrected,
        1.0,
    ),
    cand(
        "corrected@2pi",
        "sin reading, kernel 1/(e^{2πt}+1), P₃ = a^{1−σ}/(σ−1) − 2^{1−σ}ζ(σ,(a+1)/2)",
        Sin,
        TAU,
        3,
        Corrected,
        1.0,
    ),
];

const SECH_EVEN: &[Candidate] = &[
    cand(PRINTED, "sin reading, kernel 1/cosh(πt/2), tabulated P₄", Sin, FRAC_PI_2, 4, Printed, 1.0),
    cand("printed@pi", "sin reading, kernel 1/cosh(πt), tabulated P₄", Sin, PI, 4, Printed, 1.0),
    cand("cos@pi/2", "cos reading, kernel 1/cosh(πt/2), tabulated P₄", Cos, FRAC_PI_2, 4, Printed, 1.0),
    cand(
        "corrected-cos@pi/2",
        "cos reading, kernel 1/cosh(πt/2), P₄ = 2^{2−2σ}[ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]",
        Cos,
        FRAC_PI_2,
        4,
        Corrected,
        1.0,
    ),
    cand(
        "corrected-cos@pi",
        "cos reading, kernel 1/cosh(πt), P₄ = 2^{2−2σ}[ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]",
        Cos,
        PI,
        4,
        Corrected,
        1.0,
    ),
    cand(
        "corrected-sin@pi/2",
        "sin reading, kernel 1/cosh(πt/2), P₄ = 2^{2−2σ}[ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]",
        Sin,
        FRAC_PI_2,
        4,
        Corrected,
        1.0,
    ),
];

const BOSE_ODD: &[Candidate] = &[
    cand(PRINTED, "cos reading, kernel 1/(e^{2πt}−1), tabulated P₁ sum", Cos, TAU, 1, Printed, 1.0),
    cand(
        "sign-corrected",
        "cos reading, kernel 1/(e^{2πt}−1), tabulated P₁ sum with opposite sign",
        Cos,
        TAU,
        1,
        Printed,
        -1.0,
    ),
];

const SINH_ODD: &[Candidate] = &[
    cand(PRINTED, "cos reading, kernel 1/sinh(πt), tabulated P₂ sum", Cos, PI, 2, Printed, 1.0),
    cand(
        "sign-corrected",
        "cos reading, kernel 1/sinh(πt), tabulated P₂ sum with opposite sign",
        Cos,
        PI,
        2,
        Printed,
        -1.0,
    ),
];

const FERMI_ODD: &[Candidate] = &[
    cand(PRINTED, "cos reading, kernel 1/(e^{πt}+1), tabulated P₃ sum", Cos, PI, 3, Printed, 1.0),
    cand("printed@2pi", "cos reading, kernel 1/(e^{2πt}+1), tabulated P₃ sum", Cos, TAU, 3, Printed, 1.0),
    cand(
        "corrected@pi",
        "cos reading, kernel 1/(e^{πt}+1), opposite sign, P₃ = a^{1−σ}/(σ−1) − 2^{1−σ}ζ(σ,(a+1)/2)",
        Cos,
        PI,
        3,
        Corrected,
        -1.0,
    ),
    cand(
        "corrected@2pi",
        "cos reading, kernel 1/(e^{2πt}+1), opposite sign, P₃ = a^{1−σ}/(σ−1) − 2^{1−σ}ζ(σ,(a+1)/2)",
        Cos,
        TAU,
        3,
        Corrected,
        -1.0,
    ),
];

const SECH_ODD: &[Candidate] = &[
    cand(PRINTED, "sin reading, kernel 1/cosh(πt/2), tabulated P₄ sum", Sin, FRAC_PI_2, 4, Printed, 1.0),
    cand("printed@pi", "sin reading, kernel 1/cosh(πt), tabulated P₄ sum", Sin, PI, 4, Printed, 1.0),
    cand("cos@pi/2", "cos reading, kernel 1/cosh(πt/2), tabulated P₄ sum", Cos, FRAC_PI_2, 4, Printed, 1.0),
    cand(
        "corrected@pi/2",
        "sin reading, kernel 1/cosh(πt/2), P₄ = 2^{2−2σ}[ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]",
        Sin,
        FRAC_PI_2,
        4,
        Corrected,
        1.0,
    ),
    cand(
        "corrected@pi",
        "sin reading, kernel 1/cosh(πt), P₄ = 2^{2−2σ}[ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]",
        Sin,
        PI,
        4,
        Corrected,
        1.0,
    ),
    cand(
        "corrected-cos@pi/2",
        "cos reading, kernel 1/cosh(πt/2), P₄ = 2^{2−2σ}[ζ(σ,(a+1)/4) − ζ(σ,(a+3)/4)]",
        Cos,
        FRAC_PI_2,
        4,
        Corrected,
        1.0,
    ),
];

/// Every registered candidate for `family`; empty for the open families.
pub fn candidates(family: Family) -> &'static [Candidate] {
    match family {
        Family::BoseEven => BOSE_EVEN,
        Family::SinhEven => SINH_EVEN,
        Family::FermiEven => FERMI_EVEN,
        Family::SechEven => SECH_EVEN,
        Family::BoseOdd => BOSE_ODD,
        Family::SinhOdd => SINH_ODD,
        Family::FermiOdd => FERMI_ODD,
        Family::SechOdd => SECH_ODD,
        Family::OpenI | Family::OpenT | Family::OpenL => &[],
    }
}

pub fn find_candidate(family: Family, id: &str) -> Result<&'static Candidate> {
    candidates(family)
        .iter()
        .find(|c| c.id == id)
        .ok_or_else(|| Error::UnknownCandidate {
            family: family.to_string(),
            candidate: id.to_string(),
        })
}

/// How a closed form picks its candidate.
#[derive(Debug, Clone, Copy)]
pub enum Selection<'a> {
    Candidate(&'a str),
    /// The candidate certified in `Canon`; fails if none has been certified.
    Canonical(&'a Canon),
}

impl Selection<'_> {
    pub fn resolve(self, family: Family) -> Result<&'static Candidate> {
        match self {
            Selection::Candidate(id) => find_candidate(family, id),
            Selection::Canonical(canon) => {
                let id = canon
                    .family_candidate(family)
                    .ok_or_else(|| Error::UnresolvedHypothesis(family.to_string()))?;
                find_candidate(family, id)
            }
        }
    }
}
