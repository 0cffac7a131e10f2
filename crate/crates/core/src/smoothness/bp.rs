use std::collections::HashMap;

use crate::poly::IntPolynomial;
use crate::weyl::{Side, WeylElement, WeylGroup};

/// A parabolic decomposition `w = u v` (left) or `w = v u` (right) with
/// `u in W_J` and `v` a minimal coset representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BPDecomposition {
    pub side: Side,
    /// 0-based generators, ascending.
    pub j: Vec<usize>,
    pub u: WeylElement,
    pub v: WeylElement,
    /// `[e, v]` restricted to minimal representatives is a chain.
    pub is_chain: bool,
    /// `^J P_v` (left) or `P^J_v` (right).
    pub coset_poincare: IntPolynomial,
}

/// Parabolic decomposition of `w` with respect to `j` on the given side,
/// whether or not it is BP.
pub fn split(g: &WeylGroup, w: &WeylElement, j: &[usize], side: Side) -> crate::Result<BPDecomposition> {
    let mut j = j.to_vec();
    j.sort_unstable();
    j.dedup();
    let (u, v) = g.parabolic_decomposition(w, &j, side)?;
    let coset_poincare = g.coset_poincare(&v, &j, side)?;
    let is_chain = coset_poincare == IntPolynomial::q_integer(g.length(&v) + 1);
    Ok(BPDecomposition { side, j, u, v, is_chain, coset_poincare })
}

/// Descent-set criterion: `S(v) cap J` lies in `D_R(u)` (left) or `D_L(u)` (right).
pub fn is_bp(g: &WeylGroup, w: &WeylElement, j: &[usize], side: Side) -> bool {
    let Ok((u, v)) = g.parabolic_decomposition(w, j, side) else {
        return false;
    };
    bp_criterion(g, &u, &v, j, side)
}

fn bp_criterion(g: &WeylGroup, u: &WeylElement, v: &WeylElement, j: &[usize], side: Side) -> bool {
    g.support(v).into_iter().filter(|s| j.contains(s)).all(|s| match side {
        Side::Left => g.is_right_descent(u, s),
        Side::Right => g.is_left_descent(u, s),
    })
}

/// `u` is the unique maximal element of `[e, w] cap W_J`.
pub fn is_bp_by_maximality(g: &WeylGroup, w: &WeylElement, j: &[usize], side: Side) -> bool {
    let Ok((u, _)) = g.parabolic_decomposition(w, j, side) else {
        return false;
    };
    g.bruhat_interval(w)
        .iter()
        .filter(|x| g.support(x).iter().all(|s| j.contains(s)))
        .all(|x| g.bruhat_leq(x, &u))
}

/// `P_w = P_u * ^J P_v`.
pub fn is_bp_by_poincare(g: &WeylGroup, w: &WeylElement, j: &[usize], side: Side) -> bool {
    let Ok(d) = split(g, w, j, side) else {
        return false;
    };
    g.poincare(w) == g.poincare(&d.u).mul(&d.coset_poincare)
}

/// Subsets of `s` by decreasing size, ties in lexicographic order.
fn subsets_by_size(s: &[usize]) -> Vec<Vec<usize>> {
    let n = s.len();
    let mut out: Vec<Vec<usize>> = (0u32..1 << n)
        .map(|m| (0..n).filter(|&i| m >> i & 1 == 1).map(|i| s[i]).collect())
        .collect();
    out.sort_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    out
}

/// Every chain BP decomposition of `w` with `v != e`, left side first, then
/// `J` by decreasing size and lexicographically. Only `J subset S(w)` is
/// searched, which loses nothing.
fn chain_bps<'a>(g: &'a WeylGroup, w: &WeylElement) -> impl Iterator<Item = BPDecomposition> + 'a {
    let support = g.support(w);
    let subsets = subsets_by_size(&support);
    let w = w.clone();
    [Side::Left, Side::Right].into_iter().flat_map(move |side| {
        let w = w.clone();
        let support_len = support.len();
        subsets.clone().into_iter().filter_map(move |j| {
            if j.len() == support_len {
                return None;
            }
            let (u, v) = g.parabolic_decomposition(&w, &j, side).ok()?;
            if !bp_criterion(g, &u, &v, &j, side) {
                return None;
            }
            let d = split(g, &w, &j, side).ok()?;
            d.is_chain.then_some(d)
        })
    })
}

pub fn find_chain_bp(g: &WeylGroup, w: &WeylElement) -> Option<BPDecomposition> {
    chain_bps(g, w).next()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ChainBPTree {
    Leaf,
    Node { decomposition: BPDecomposition, inner: Box<ChainBPTree> },
}

impl ChainBPTree {
    /// Decompositions from the root down.
    pub fn steps(&self) -> Vec<&BPDecomposition> {
        let mut out = Vec::new();
        let mut cur = self;
        while let ChainBPTree::Node { decomposition, inner } = cur {
            out.push(decomposition);
            cur = inner;
        }
        out
    }

    /// `{l(v)}` over the nodes, padded with zeros to `rank`, sorted.
    pub fn exponents(&self, g: &WeylGroup) -> Vec<usize> {
        let mut m: Vec<usize> = self.steps().iter().map(|d| g.length(&d.v)).collect();
        m.resize(m.len().max(g.rank()), 0);
        m.sort_unstable();
        m
    }
}

/// A complete chain BP decomposition, searching every chain BP at each level.
pub fn complete_chain_bp(g: &WeylGroup, w: &WeylElement) -> Option<ChainBPTree> {
    let mut memo = HashMap::new();
    complete_rec(g, w, &mut memo)
}

fn complete_rec(g: &WeylGroup, w: &WeylElement, memo: &mut HashMap<WeylElement, Option<ChainBPTree>>) -> Option<ChainBPTree> {
    if g.is_identity(w) {
        return Some(ChainBPTree::Leaf);
    }
    if let Some(t) = memo.get(w) {
        return t.clone();
    }
    let mut found = None;
    for d in chain_bps(g, w) {
        if let Some(inner) = complete_rec(g, &d.u, memo) {
            found = Some(ChainBPTree::Node { decomposition: d, inner: Box::new(inner) });
            break;
        }
    }
    memo.insert(w.clone(), found.clone());
    found
}
