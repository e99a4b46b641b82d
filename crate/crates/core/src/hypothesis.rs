//! Certified choices among competing closed-form candidates.
//!
//! A [`Canon`] starts empty. Only the verification harness marks entries,
//! after a resolution run in which exactly one candidate survived; readers
//! asking for the canonical form of an unresolved family get
//! [`crate::Error::UnresolvedHypothesis`].

use std::collections::BTreeMap;

use crate::quadrature::Family;
use crate::zeta::{ConstantFactor, KernelKind};

#[derive(Debug, Clone, Default, PartialEq)]
pub struct Canon {
    families: BTreeMap<Family, &'static str>,
    mellin: BTreeMap<KernelKind, ConstantFactor>,
}

impl Canon {
    pub fn family_candidate(&self, family: Family) -> Option<&'static str> {
        self.families.get(&family).copied()
    }

    pub fn mellin_factor(&self, kind: KernelKind) -> Option<ConstantFactor> {
        self.mellin.get(&kind).copied()
    }

    pub(crate) fn certify_family(&mut self, family: Family, candidate: &'static str) {
        self.families.insert(family, candidate);
    }

    pub(crate) fn certify_mellin(&mut self, kind: KernelKind, factor: ConstantFactor) {
        self.mellin.insert(kind, factor);
    }

    pub fn resolved_families(&self) -> impl Iterator<Item = (Family, &'static str)> + '_ {
        self.families.iter().map(|(f, c)| (*f, *c))
    }
}
