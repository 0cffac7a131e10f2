//! Per-element summary combining every test in the crate.

use serde::Serialize;

use crate::freeness::{FreenessSearch, FreenessStatus};
use crate::inversion::inversion_arrangement;
use crate::smoothness::{complete_chain_bp, exponents, pattern_hits};
use crate::weyl::{WeylElement, WeylGroup};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ChainStep {
    pub side: String,
    /// 1-based generators.
    pub j: Vec<usize>,
    /// 1-based reduced words.
    pub u: Vec<usize>,
    pub v: Vec<usize>,
    pub v_length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ElementReport {
    pub system: String,
    /// 1-based reduced word.
    pub word: Vec<usize>,
    pub length: usize,
    pub left_descents: Vec<usize>,
    pub right_descents: Vec<usize>,
    pub support: Vec<usize>,
    pub interval_size: u64,
    /// Coefficients of `P_w(q)`, constant term first.
    pub poincare: Vec<i64>,
    pub palindromic: bool,
    pub exponents: Option<Vec<usize>>,
    pub hlss: bool,
    pub nbc_count: i64,
    /// Coefficients of `Q_{J(w)}(t)`.
    pub arrangement_poincare: Vec<i64>,
    /// `d_i` with `Q = prod (1 + d_i t)`, when it splits.
    pub arrangement_factorization: Option<Vec<usize>>,
    pub freeness: String,
    pub coexponents: Option<Vec<usize>>,
    pub supersolvable: bool,
    pub chain_bp: Option<Vec<ChainStep>>,
    pub patterns: Vec<String>,
}

fn one_based(v: Vec<usize>) -> Vec<usize> {
    v.into_iter().map(|s| s + 1).collect()
}

impl ElementReport {
    pub fn new(system: &str, g: &WeylGroup, w: &WeylElement, search: &FreenessSearch) -> Self {
        let p = g.poincare(w);
        let interval_size = p.eval(1) as u64;
        let a = inversion_arrangement(g, w);
        let fr = search.run(&a);
        let coexponents = match &fr.status {
            FreenessStatus::Free { coexponents, .. } => Some(coexponents.clone()),
            _ => None,
        };
        let chain_bp = complete_chain_bp(g, w).map(|t| {
            t.steps()
                .into_iter()
                .map(|d| ChainStep {
                    side: d.side.to_string(),
                    j: one_based(d.j.clone()),
                    u: one_based(g.reduced_word(&d.u)),
                    v: one_based(g.reduced_word(&d.v)),
                    v_length: g.length(&d.v),
                })
                .collect()
        });
        let nbc_count = fr.poincare.eval(1);
        ElementReport {
            system: system.to_string(),
            word: one_based(g.reduced_word(w)),
            length: g.length(w),
            left_descents: one_based(g.left_descents(w)),
            right_descents: one_based(g.right_descents(w)),
            support: one_based(g.support(w)),
            interval_size,
            palindromic: p.is_palindromic(),
            poincare: p.coeffs().to_vec(),
            exponents: exponents(g, w),
            hlss: nbc_count == interval_size as i64,
            nbc_count,
            arrangement_factorization: fr.poincare.linear_factor_roots(),
            arrangement_poincare: fr.poincare.coeffs().to_vec(),
            freeness: fr.status.label().to_string(),
            coexponents,
            supersolvable: a.is_supersolvable(),
            chain_bp,
            patterns: pattern_hits(g, w).into_iter().map(String::from).collect(),
        }
    }

    /// JSON with keys sorted at every level.
    pub fn to_canonical_json(&self) -> String {
        let v = serde_json::to_value(self).expect("report serializes");
        serde_json::to_string(&v).expect("value serializes")
    }
}
