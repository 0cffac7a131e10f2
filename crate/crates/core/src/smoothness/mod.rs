//! Rational smoothness of Schubert varieties and its combinatorial and
//! arrangement-theoretic characterizations.

mod audit;
mod bp;
mod exceptional;
mod patterns;
pub mod typea;

pub use audit::{theorem_audit, AuditOptions, AuditReport, Check, CheckReport, AUDIT_GUARD};
pub use bp::{
    complete_chain_bp, find_chain_bp, is_bp, is_bp_by_maximality, is_bp_by_poincare, split, BPDecomposition,
    ChainBPTree,
};
pub use exceptional::{exceptional_element, ExceptionalElement};
pub use patterns::{contains_pattern, pattern, pattern_hits, patterns, Pattern, PatternMatcher};

use crate::arrangement::Arrangement;
use crate::inversion::inversion_arrangement;
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SmoothnessMethod {
    /// `P_w(q)` is palindromic.
    Palindromic,
    /// `w` avoids every pattern of the rational smoothness list.
    Patterns,
}

pub fn rationally_smooth(g: &WeylGroup, w: &WeylElement, method: SmoothnessMethod) -> bool {
    match method {
        SmoothnessMethod::Palindromic => g.poincare(w).is_palindromic(),
        SmoothnessMethod::Patterns => pattern_hits(g, w).is_empty(),
    }
}

/// Exponents `m_1 <= ... <= m_l` with `P_w = prod [m_i + 1]_q`, padded with
/// zeros to the rank, or `None` when `P_w` is not such a product.
pub fn exponents(g: &WeylGroup, w: &WeylElement) -> Option<Vec<usize>> {
    exponents_of(&g.poincare(w), g.rank())
}

pub(crate) fn exponents_of(p: &crate::poly::IntPolynomial, rank: usize) -> Option<Vec<usize>> {
    if !p.is_palindromic() {
        return None;
    }
    let mut m = p.q_integer_factorization()?;
    if m.len() > rank {
        return None;
    }
    m.resize(rank, 0);
    m.sort_unstable();
    Some(m)
}

/// HLSS condition via `|nbc(J(w))| = |[e, w]|`.
pub fn hlss(g: &WeylGroup, w: &WeylElement) -> bool {
    hlss_counts(g, w).0 == g.bruhat_interval(w).len() as i64
}

/// `(|nbc(J(w))|, J(w))`.
fn hlss_counts(g: &WeylGroup, w: &WeylElement) -> (i64, Arrangement) {
    let a = inversion_arrangement(g, w);
    (a.poincare_polynomial().eval(1), a)
}

/// HLSS condition via `al(u, w) = l'(u w^{-1})` for every `u <= w`.
pub fn hlss_by_distance(g: &WeylGroup, w: &WeylElement) -> bool {
    let winv = g.inverse(w);
    g.bruhat_graph_distances(w)
        .iter()
        .all(|(u, &d)| d == g.absolute_length(&g.mul(u, &winv)))
}
