//! Inductive freeness: memoized search, certificates, and an independent checker.

mod certificate;
mod modular;
mod search;
pub mod verify;

pub use certificate::{Certificate, CertificateFile, CertificateHeader};
pub use modular::modular_coatom_freeness;
pub use search::{FreenessSearch, PivotOrder, SearchConfig, DEFAULT_MEMO_CAP, MEMO_CAP_ENV};
pub use verify::{verify_certificate, Reject};

use crate::arrangement::Arrangement;
use crate::poly::IntPolynomial;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FreenessStatus {
    /// Coexponents padded with zeros to the ambient dimension, sorted.
    Free { coexponents: Vec<usize>, certificate: Certificate },
    NotInductivelyFree,
    /// The memo budget ran out before a decision.
    Undetermined,
}

impl FreenessStatus {
    pub fn label(&self) -> &'static str {
        match self {
            FreenessStatus::Free { .. } => "free",
            FreenessStatus::NotInductivelyFree => "not-inductively-free",
            FreenessStatus::Undetermined => "undetermined",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FreenessResult {
    pub status: FreenessStatus,
    pub poincare: IntPolynomial,
    /// Whether `Q_A(t)` is a product of factors `1 + d t` with `d >= 1` integers.
    pub splits: bool,
}

impl FreenessResult {
    pub fn is_free(&self) -> bool {
        matches!(self.status, FreenessStatus::Free { .. })
    }

    pub fn coexponents(&self) -> Option<&[usize]> {
        match &self.status {
            FreenessStatus::Free { coexponents, .. } => Some(coexponents),
            _ => None,
        }
    }

    pub fn certificate(&self) -> Option<&Certificate> {
        match &self.status {
            FreenessStatus::Free { certificate, .. } => Some(certificate),
            _ => None,
        }
    }
}

/// Decides inductive freeness with the default configuration.
pub fn inductively_free(a: &Arrangement) -> FreenessResult {
    FreenessSearch::new(SearchConfig::default()).run(a)
}

pub(crate) fn pad(mut exps: Vec<usize>, dim: usize) -> Vec<usize> {
    while exps.len() < dim {
        exps.push(0);
    }
    exps.sort_unstable();
    exps
}
