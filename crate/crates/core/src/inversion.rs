//! Inversion sets, convex orders, flattening and inversion arrangements.

use std::collections::HashMap;

use crate::arrangement::Arrangement;
use crate::error::{Error, Result};
use crate::linalg;
use crate::rootsys::{Root, RootSystem, Subsystem};
use crate::weyl::{WeylElement, WeylGroup};

/// `I(w)` ordered by `beta_i = s_1 ... s_{i-1} alpha_{s_i}` for a reduced word.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedInversionSet {
    /// Positive root indices in convex order.
    pub roots: Vec<usize>,
    pub owner: WeylElement,
    /// The reduced word (0-based) inducing the order.
    pub source_word: Vec<usize>,
}

impl OrderedInversionSet {
    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root_vectors(&self, rs: &RootSystem) -> Vec<Root> {
        self.roots.iter().map(|&i| rs.root(i).clone()).collect()
    }

    /// Root indices sorted ascending.
    pub fn sorted(&self) -> Vec<usize> {
        let mut v = self.roots.clone();
        v.sort_unstable();
        v
    }
}

/// Inversion set ordered by the canonical reduced word of `w`.
pub fn inversion_set(g: &WeylGroup, w: &WeylElement) -> OrderedInversionSet {
    let word = g.reduced_word(w);
    ordered_by_word(g, &word)
}

/// Inversion set ordered by the given word; a non-reduced word is replaced by
/// the canonical reduced word of its product.
pub fn inversion_set_for_word(g: &WeylGroup, word: &[usize]) -> Result<OrderedInversionSet> {
    let w = g.from_word(word)?;
    if g.length(&w) == word.len() {
        Ok(ordered_by_word(g, word))
    } else {
        Ok(inversion_set(g, &w))
    }
}

fn ordered_by_word(g: &WeylGroup, word: &[usize]) -> OrderedInversionSet {
    let mut prefix = g.identity();
    let mut roots = Vec::with_capacity(word.len());
    for &s in word {
        roots.push(prefix.apply(s));
        prefix = g.mul_generator_right(&prefix, s);
    }
    debug_assert!(roots.iter().all(|&r| g.root_system().is_positive_index(r)));
    OrderedInversionSet { roots, owner: prefix, source_word: word.to_vec() }
}

fn is_closed(rs: &RootSystem, member: &[bool]) -> bool {
    let n = rs.num_positive();
    for a in 0..n {
        if !member[a] {
            continue;
        }
        for b in a + 1..n {
            if member[b] {
                if let Some(c) = rs.sum_index(a, b) {
                    if !member[c] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Convex and coconvex as a subset of the positive roots.
pub fn is_biconvex(rs: &RootSystem, set: &[usize]) -> bool {
    let n = rs.num_positive();
    let mut member = vec![false; n];
    for &i in set {
        if i >= n {
            return false;
        }
        member[i] = true;
    }
    let complement: Vec<bool> = member.iter().map(|&m| !m).collect();
    is_closed(rs, &member) && is_closed(rs, &complement)
}

/// The unique `w` with `I(w) = set`.
pub fn element_from_biconvex(g: &WeylGroup, set: &[usize]) -> Result<WeylElement> {
    let rs = g.root_system();
    if !is_biconvex(rs, set) {
        return Err(Error::NotBiconvex);
    }
    let mut cur: Vec<usize> = set.to_vec();
    let mut word = Vec::new();
    while !cur.is_empty() {
        let s = *cur
            .iter()
            .filter(|&&i| i < rs.rank())
            .min()
            .ok_or(Error::NotBiconvex)?;
        let t = rs.reflection_table(s);
        cur = cur.iter().filter(|&&i| i != s).map(|&i| t[i] as usize).collect();
        word.push(s);
    }
    let w = g.from_word(&word)?;
    let mut want = set.to_vec();
    want.sort_unstable();
    want.dedup();
    if g.inversion_indices(&w) != want {
        return Err(Error::NotBiconvex);
    }
    Ok(w)
}

/// Both convex-order conditions on an ordered biconvex set of positive roots:
/// `alpha < beta` with `alpha + beta` in the set forces `alpha < alpha + beta < beta`;
/// `alpha` in, `beta` out, `alpha - beta` in forces `alpha - beta < alpha`.
pub fn is_convex_order(rs: &RootSystem, order: &[usize]) -> bool {
    let n = rs.num_positive();
    let mut pos: HashMap<usize, usize> = HashMap::new();
    for (k, &r) in order.iter().enumerate() {
        if r >= n || pos.insert(r, k).is_some() {
            return false;
        }
    }
    if !is_biconvex(rs, order) {
        return false;
    }
    for (a, &x) in order.iter().enumerate() {
        for &y in &order[a + 1..] {
            if let Some(c) = rs.sum_index(x, y) {
                if let Some(&pc) = pos.get(&c) {
                    if !(a < pc && pc < pos[&y]) {
                        return false;
                    }
                }
            }
        }
    }
    for (a, &x) in order.iter().enumerate() {
        for y in 0..n {
            if pos.contains_key(&y) {
                continue;
            }
            if let Some(d) = rs.sum_index(x, rs.negate_index(y)) {
                if let Some(&pd) = pos.get(&d) {
                    if pd >= a {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// `phi({beta_{i_1}, ..., beta_{i_k}}) = t_{beta_{i_1}} ... t_{beta_{i_k}} w`,
/// where the subset is given by positions in the convex order.
pub fn phi(g: &WeylGroup, inv: &OrderedInversionSet, positions: &[usize]) -> WeylElement {
    let mut p = positions.to_vec();
    p.sort_unstable();
    p.dedup();
    let mut x = inv.owner.clone();
    for &k in p.iter().rev() {
        x = g.mul_reflection_left(inv.roots[k], &x);
    }
    x
}

/// `fl_U(w)` as an element of a separately built Weyl group of type `R_U`.
#[derive(Clone, Debug)]
pub struct Flattening {
    pub subsystem: Subsystem,
    pub group: WeylGroup,
    pub element: WeylElement,
    /// Ambient root index of each root of `group` (positive and negative).
    pub embedding: Vec<usize>,
}

impl Flattening {
    /// Ambient indices of `I(fl_U(w))`.
    pub fn ambient_inversions(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self
            .group
            .inversion_indices(&self.element)
            .into_iter()
            .map(|a| self.embedding[a])
            .collect();
        v.sort_unstable();
        v
    }
}

/// Builds the abstract group of a subsystem and the embedding of its roots.
pub fn embed_subsystem(rs: &RootSystem, sub: &Subsystem) -> (WeylGroup, Vec<usize>) {
    let group = WeylGroup::from_type(sub.cartan_type.clone());
    let embedding = embedding_into(rs, sub, &group);
    (group, embedding)
}

/// Ambient root index of each root of `group`, which must have the type of `sub`.
pub fn embedding_into(rs: &RootSystem, sub: &Subsystem, group: &WeylGroup) -> Vec<usize> {
    let ars = group.root_system();
    (0..ars.num_roots())
        .map(|a| {
            let c = ars.root(a).coords();
            let mut v = vec![0i64; rs.rank()];
            for (node, &ci) in c.iter().enumerate() {
                if ci != 0 {
                    for (k, x) in rs.root(sub.simple[node]).coords().iter().enumerate() {
                        v[k] += ci * x;
                    }
                }
            }
            rs.index_of(&v).expect("subsystem root lies in the ambient system")
        })
        .collect()
}

pub fn flatten(g: &WeylGroup, w: &WeylElement, basis: &[Root]) -> Result<Flattening> {
    let sub = g.root_system().subsystem(basis)?;
    Ok(flatten_subsystem(g, w, &sub))
}

pub fn flatten_subsystem(g: &WeylGroup, w: &WeylElement, sub: &Subsystem) -> Flattening {
    let (group, embedding) = embed_subsystem(g.root_system(), sub);
    let element = flatten_into(g, w, sub, &group, &embedding);
    Flattening { subsystem: sub.clone(), group, element, embedding }
}

/// `fl_U(w)` in a caller-supplied group of the right type, with `embedding`
/// from [`embedding_into`].
pub fn flatten_into(g: &WeylGroup, w: &WeylElement, sub: &Subsystem, group: &WeylGroup, embedding: &[usize]) -> WeylElement {
    let back: HashMap<usize, usize> = embedding.iter().enumerate().map(|(a, &b)| (b, a)).collect();
    let inv = g.inversion_indices(w);
    let set: Vec<usize> = sub
        .positive
        .iter()
        .filter(|p| inv.binary_search(p).is_ok())
        .map(|p| back[p])
        .collect();
    element_from_biconvex(group, &set).expect("intersection with a subspace is biconvex")
}

/// `J(w)`: one hyperplane per inversion, with the root coordinates as normal.
pub fn inversion_arrangement(g: &WeylGroup, w: &WeylElement) -> Arrangement {
    let rs = g.root_system();
    let normals = g
        .inversion_indices(w)
        .into_iter()
        .map(|i| rs.root(i).coords().to_vec())
        .collect();
    Arrangement::new(rs.rank(), normals).expect("roots are valid normals")
}

/// `(span I(w), center)`: the span is `V_{S(w)}` with the simple roots of the
/// support as basis; the center is its orthogonal complement under the form.
pub fn inversion_span_center(g: &WeylGroup, w: &WeylElement) -> (Vec<Vec<i64>>, Vec<Vec<i64>>) {
    let rs = g.root_system();
    let n = rs.rank();
    let span: Vec<Vec<i64>> = g
        .support(w)
        .into_iter()
        .map(|s| {
            let mut e = vec![0; n];
            e[s] = 1;
            e
        })
        .collect();
    let rows: Vec<Vec<i64>> = g
        .inversion_indices(w)
        .into_iter()
        .map(|i| {
            (0..n)
                .map(|j| {
                    let mut e = vec![0; n];
                    e[j] = 1;
                    rs.inner_product_scaled_coords(rs.root(i).coords(), &e)
                })
                .collect()
        })
        .collect();
    (span, linalg::nullspace(n, &rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(g: &WeylGroup, one_based: &[usize]) -> WeylElement {
        let word: Vec<usize> = one_based.iter().map(|s| s - 1).collect();
        g.from_word(&word).unwrap()
    }

    fn coords(rs: &RootSystem, set: &[usize]) -> Vec<Vec<i64>> {
        let mut v: Vec<Vec<i64>> = set.iter().map(|&i| rs.root(i).coords().to_vec()).collect();
        v.sort();
        v
    }

    #[test]
    fn inversion_set_examples() {
        let g = WeylGroup::from_label("A3").unwrap();
        let rs = g.root_system();
        assert!(inversion_set(&g, &g.identity()).is_empty());
        let x = w(&g, &[2, 3, 2, 1]);
        let inv = inversion_set(&g, &x);
        assert_eq!(
            coords(rs, &inv.roots),
            vec![vec![0, 0, 1], vec![0, 1, 0], vec![0, 1, 1], vec![1, 1, 1]]
        );
        assert_eq!(inv.sorted(), g.inversion_indices(&x));
        assert_eq!(inversion_set(&g, &g.longest()).len(), 6);
    }

    #[test]
    fn biconvexity() {
        let a2 = WeylGroup::from_label("A2").unwrap();
        let rs = a2.root_system();
        let sum = rs.index_of(&[1, 1]).unwrap();
        assert!(!is_biconvex(rs, &[sum]));
        assert!(is_biconvex(rs, &[]));
        assert!(is_biconvex(rs, &[0, 1, 2]));
        assert!(!is_biconvex(rs, &[0, 1]));
        assert!(matches!(element_from_biconvex(&a2, &[sum]), Err(Error::NotBiconvex)));
    }

    #[test]
    fn element_from_inversions() {
        let g = WeylGroup::from_label("A3").unwrap();
        let rs = g.root_system();
        assert!(g.is_identity(&element_from_biconvex(&g, &[]).unwrap()));
        let set: Vec<usize> = [[0, 1, 0], [0, 0, 1], [0, 1, 1], [1, 1, 1]]
            .iter()
            .map(|c| rs.index_of(c).unwrap())
            .collect();
        assert_eq!(element_from_biconvex(&g, &set).unwrap(), w(&g, &[2, 3, 2, 1]));
        let b3 = WeylGroup::from_label("B3").unwrap();
        for x in b3.elements() {
            let inv = inversion_set(&b3, &x);
            assert!(is_biconvex(b3.root_system(), &inv.roots));
            assert_eq!(element_from_biconvex(&b3, &inv.roots).unwrap(), x);
        }
    }

    #[test]
    fn convex_orders() {
        let a2 = WeylGroup::from_label("A2").unwrap();
        let rs = a2.root_system();
        let inv = inversion_set(&a2, &a2.longest());
        assert!(is_convex_order(rs, &inv.roots));
        // (a1, a2, a1+a2): the sum is not between its summands.
        let sum = rs.index_of(&[1, 1]).unwrap();
        assert!(!is_convex_order(rs, &[0, 1, sum]));
        assert!(is_convex_order(rs, &[0]));
        // Reversing a reduced-word order gives the order of the reversed word,
        // which is again convex.
        let mut rev = inv.roots.clone();
        rev.reverse();
        assert!(is_convex_order(rs, &rev));
        // Bullet two: I(s1 s2) = {a1, a1+a2}; a1+a2 - a2 = a1 must come first.
        let x = inversion_set(&a2, &w(&a2, &[1, 2]));
        assert!(is_convex_order(rs, &x.roots));
        let mut bad = x.roots.clone();
        bad.reverse();
        assert!(!is_convex_order(rs, &bad));
    }

    #[test]
    fn phi_examples() {
        let a1 = WeylGroup::from_label("A1").unwrap();
        let s = a1.generator(0).unwrap();
        let inv = inversion_set(&a1, &s);
        assert_eq!(phi(&a1, &inv, &[]), s);
        assert!(a1.is_identity(&phi(&a1, &inv, &[0])));
        let g = WeylGroup::from_label("A3").unwrap();
        for x in g.elements() {
            let inv = inversion_set(&g, &x);
            let mut image = std::collections::HashSet::new();
            for m in 0u32..1 << inv.len() {
                let pos: Vec<usize> = (0..inv.len()).filter(|i| m >> i & 1 == 1).collect();
                image.insert(phi(&g, &inv, &pos));
            }
            let interval: std::collections::HashSet<_> = g.bruhat_interval(&x).into_iter().collect();
            assert_eq!(image, interval);
        }
    }

    #[test]
    fn flatten_examples() {
        let g = WeylGroup::from_label("B3").unwrap();
        let rs = g.root_system();
        let all: Vec<Root> = (0..3).map(|i| rs.root(i).clone()).collect();
        for x in g.elements() {
            let f = flatten(&g, &x, &all).unwrap();
            assert_eq!(f.ambient_inversions(), g.inversion_indices(&x));
            assert_eq!(g.length(&x), f.group.length(&f.element));
            // U = V_J gives the parabolic factor u of w = u v.
            let j = [1usize, 2];
            let basis: Vec<Root> = j.iter().map(|&s| rs.root(s).clone()).collect();
            let f = flatten(&g, &x, &basis).unwrap();
            let (u, _) = g.parabolic_decomposition(&x, &j, crate::weyl::Side::Left).unwrap();
            assert_eq!(f.ambient_inversions(), g.inversion_indices(&u));
        }
    }

    #[test]
    fn inversion_arrangements() {
        let g = WeylGroup::from_label("A3").unwrap();
        assert!(inversion_arrangement(&g, &g.identity()).is_empty());
        let x = w(&g, &[2, 3, 2, 1]);
        assert_eq!(inversion_arrangement(&g, &x).len(), 4);
        let a = inversion_arrangement(&g, &x);
        let b = inversion_arrangement(&g, &g.inverse(&x));
        assert_eq!(a.poincare_polynomial(), b.poincare_polynomial());
    }

    #[test]
    fn span_and_center() {
        let g = WeylGroup::from_label("B3").unwrap();
        let (span, center) = inversion_span_center(&g, &g.identity());
        assert!(span.is_empty());
        assert_eq!(center.len(), 3);
        let (span, center) = inversion_span_center(&g, &g.longest());
        assert_eq!(span.len(), 3);
        assert!(center.is_empty());
        for x in g.elements() {
            let a = inversion_arrangement(&g, &x);
            assert_eq!(a.rank(), g.support(&x).len());
            let (span, center) = inversion_span_center(&g, &x);
            assert_eq!(span.len() + center.len(), 3);
            for c in &center {
                for s in &span {
                    assert_eq!(g.root_system().inner_product_scaled_coords(c, s), 0);
                }
            }
        }
    }
}
