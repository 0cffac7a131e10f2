//! Central hyperplane arrangements with integer normals.
//!
//! A hyperplane is stored by a primitive integer normal `h` whose first
//! nonzero entry is positive; it is the kernel of `x -> h . x` on `Q^dim`.
//! Hyperplane subsets are `u128` bitsets over the sorted normal list.

use std::collections::{BTreeSet, HashMap};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Span};
use crate::poly::IntPolynomial;

pub const MAX_HYPERPLANES: usize = 128;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "RawArrangement")]
pub struct Arrangement {
    dim: usize,
    normals: Vec<Vec<i64>>,
}

#[derive(Deserialize)]
struct RawArrangement {
    dim: usize,
    normals: Vec<Vec<i64>>,
}

impl TryFrom<RawArrangement> for Arrangement {
    type Error = Error;

    fn try_from(r: RawArrangement) -> Result<Self> {
        Arrangement::new(r.dim, r.normals)
    }
}

/// A flat, given by the hyperplanes containing it.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Flat {
    /// Bitset of hyperplane indices `H` with `X subset H`; closed.
    pub hyperplanes: u128,
    /// Codimension of `X`.
    pub rank: usize,
    /// Integer basis of `X` from the reduced row echelon form of its normals.
    pub basis: Vec<Vec<i64>>,
}

impl Flat {
    pub fn members(&self) -> Vec<usize> {
        bits(self.hyperplanes).collect()
    }

    pub fn contains_hyperplane(&self, i: usize) -> bool {
        self.hyperplanes >> i & 1 == 1
    }
}

/// Indices of set bits, ascending.
pub fn bits(mut m: u128) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            None
        } else {
            let i = m.trailing_zeros() as usize;
            m &= m - 1;
            Some(i)
        }
    })
}

fn top_bit(m: u128) -> Option<usize> {
    (m != 0).then(|| 127 - m.leading_zeros() as usize)
}

fn full_mask(n: usize) -> u128 {
    if n == 128 {
        u128::MAX
    } else {
        (1u128 << n) - 1
    }
}

/// Matroid operations on an ordered list of normals; the list order is the
/// order used for broken circuits.
struct Ordered<'a> {
    dim: usize,
    normals: &'a [Vec<i64>],
}

impl Ordered<'_> {
    fn span(&self, set: u128) -> Span {
        Span::from_rows(self.dim, bits(set).map(|i| self.normals[i].as_slice()))
    }

    fn closure(&self, set: u128) -> u128 {
        let span = self.span(set);
        self.closure_of_span(&span, set)
    }

    fn closure_of_span(&self, span: &Span, known: u128) -> u128 {
        let mut out = known;
        for i in 0..self.normals.len() {
            if out >> i & 1 == 0 && span.contains(&self.normals[i]) {
                out |= 1 << i;
            }
        }
        out
    }

    fn rank(&self, set: u128) -> usize {
        self.span(set).rank()
    }

    /// Generating function of NBC sets extending a flat `f` whose NBC prefix
    /// ends at `max f`.
    fn poincare_rec(&self, f: u128, memo: &mut HashMap<u128, IntPolynomial>) -> IntPolynomial {
        if let Some(p) = memo.get(&f) {
            return p.clone();
        }
        let n = self.normals.len();
        let start = top_bit(f).map_or(0, |t| t + 1);
        let base = self.span(f);
        let mut sum = IntPolynomial::zero();
        for c in start..n {
            let mut sp = base.clone();
            if !sp.insert(&self.normals[c]) {
                continue;
            }
            // c must be the largest element of cl(f + c).
            if (c + 1..n).any(|h| sp.contains(&self.normals[h])) {
                continue;
            }
            let mut cl = f | 1 << c;
            for h in 0..c {
                if cl >> h & 1 == 0 && sp.contains(&self.normals[h]) {
                    cl |= 1 << h;
                }
            }
            sum = sum.add(&self.poincare_rec(cl, memo));
        }
        let p = IntPolynomial::one().add(&sum.shift(1));
        memo.insert(f, p.clone());
        p
    }

    fn poincare(&self) -> IntPolynomial {
        let mut memo = HashMap::new();
        self.poincare_rec(0, &mut memo)
    }

    fn nbc_lists(&self) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        let mut cur = Vec::new();
        self.nbc_dfs(0, &mut cur, &mut out);
        out
    }

    fn nbc_dfs(&self, f: u128, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        out.push(cur.clone());
        let n = self.normals.len();
        let start = cur.last().map_or(0, |&t| t + 1);
        let base = self.span(f);
        for c in start..n {
            let mut sp = base.clone();
            if !sp.insert(&self.normals[c]) {
                continue;
            }
            if (c + 1..n).any(|h| sp.contains(&self.normals[h])) {
                continue;
            }
            let cl = self.closure_of_span(&sp, f | 1 << c);
            cur.push(c);
            self.nbc_dfs(cl, cur, out);
            cur.pop();
        }
    }
}

impl Arrangement {
    /// Normalizes, sorts and deduplicates the given normals.
    pub fn new(dim: usize, normals: Vec<Vec<i64>>) -> Result<Self> {
        let mut set = BTreeSet::new();
        for n in normals {
            if n.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, got: n.len() });
            }
            if n.iter().all(|&x| x == 0) {
                return Err(Error::ZeroNormal);
            }
            set.insert(linalg::normalize(&n));
        }
        if set.len() > MAX_HYPERPLANES {
            return Err(Error::TooManyHyperplanes(set.len()));
        }
        Ok(Arrangement { dim, normals: set.into_iter().collect() })
    }

    pub fn empty(dim: usize) -> Self {
        Arrangement { dim, normals: Vec::new() }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn normals(&self) -> &[Vec<i64>] {
        &self.normals
    }

    pub fn len(&self) -> usize {
        self.normals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.normals.is_empty()
    }

    fn ordered(&self) -> Ordered<'_> {
        Ordered { dim: self.dim, normals: &self.normals }
    }

    pub fn all(&self) -> u128 {
        full_mask(self.len())
    }

    pub fn index_of(&self, h: &[i64]) -> Option<usize> {
        if h.len() != self.dim || h.iter().all(|&x| x == 0) {
            return None;
        }
        self.normals.binary_search(&linalg::normalize(h)).ok()
    }

    pub fn rank(&self) -> usize {
        self.ordered().rank(self.all())
    }

    pub fn matroid_rank(&self, subset: &[usize]) -> usize {
        let rows: Vec<Vec<i64>> = subset.iter().map(|&i| self.normals[i].clone()).collect();
        linalg::rank(self.dim, &rows)
    }

    pub fn mask_rank(&self, mask: u128) -> usize {
        self.ordered().rank(mask)
    }

    pub fn closure(&self, mask: u128) -> u128 {
        self.ordered().closure(mask)
    }

    /// Basis of the center `cap H`.
    pub fn center(&self) -> Vec<Vec<i64>> {
        linalg::nullspace(self.dim, &self.normals)
    }

    pub fn deletion(&self, h: &[i64]) -> Result<Arrangement> {
        let i = self
            .index_of(h)
            .ok_or_else(|| Error::HyperplaneNotInArrangement(h.to_vec()))?;
        Ok(self.delete_index(i))
    }

    pub fn delete_index(&self, i: usize) -> Arrangement {
        let mut normals = self.normals.clone();
        normals.remove(i);
        Arrangement { dim: self.dim, normals }
    }

    /// Restriction `A^H` in coordinates of the basis `e_j - (h_j / h_p) e_p`
    /// (`j != p`) of `H`, where `p` is the first nonzero position of `h`.
    pub fn restriction(&self, h: &[i64]) -> Result<Arrangement> {
        let i = self
            .index_of(h)
            .ok_or_else(|| Error::HyperplaneNotInArrangement(h.to_vec()))?;
        Ok(self.restrict_index(i))
    }

    pub fn restrict_index(&self, i: usize) -> Arrangement {
        let h = &self.normals[i];
        let p = h.iter().position(|&x| x != 0).expect("nonzero normal");
        let mut set = BTreeSet::new();
        for (k, b) in self.normals.iter().enumerate() {
            if k == i {
                continue;
            }
            let v: Vec<i64> = (0..self.dim)
                .filter(|&j| j != p)
                .map(|j| h[p] * b[j] - b[p] * h[j])
                .collect();
            if v.iter().any(|&x| x != 0) {
                set.insert(linalg::normalize(&v));
            }
        }
        Arrangement { dim: self.dim - 1, normals: set.into_iter().collect() }
    }

    /// `A_X`: hyperplanes containing the flat.
    pub fn localization(&self, x: &Flat) -> Result<Arrangement> {
        self.check_flat(x)?;
        Ok(self.sub_arrangement(x.hyperplanes))
    }

    pub fn sub_arrangement(&self, mask: u128) -> Arrangement {
        Arrangement {
            dim: self.dim,
            normals: bits(mask).map(|i| self.normals[i].clone()).collect(),
        }
    }

    /// `A / center`, in coordinates given by the pivot columns of the reduced
    /// row echelon form of the normal matrix.
    pub fn quotient_by_center(&self) -> Arrangement {
        let pivots = linalg::pivot_columns(self.dim, &self.normals);
        if pivots.len() == self.dim {
            return self.clone();
        }
        let mut set = BTreeSet::new();
        for n in &self.normals {
            let v: Vec<i64> = pivots.iter().map(|&p| n[p]).collect();
            set.insert(linalg::normalize(&v));
        }
        Arrangement { dim: pivots.len(), normals: set.into_iter().collect() }
    }

    /// Image of a normal of this arrangement in the coordinates of [`Self::quotient_by_center`].
    pub fn quotient_image(&self, h: &[i64]) -> Vec<i64> {
        let pivots = linalg::pivot_columns(self.dim, &self.normals);
        linalg::normalize(&pivots.iter().map(|&p| h[p]).collect::<Vec<_>>())
    }

    /// Key used for memoization: the quotient by the center.
    pub fn canonical(&self) -> Arrangement {
        self.quotient_by_center()
    }

    fn check_flat(&self, x: &Flat) -> Result<()> {
        if x.hyperplanes & !self.all() != 0 || self.closure(x.hyperplanes) != x.hyperplanes {
            return Err(Error::NotAFlat);
        }
        Ok(())
    }

    /// Closure of a set of hyperplanes.
    pub fn flat(&self, hyperplanes: &[usize]) -> Flat {
        let mask = hyperplanes.iter().fold(0u128, |m, &i| m | 1 << i);
        self.flat_of_mask(mask)
    }

    pub fn flat_of_mask(&self, mask: u128) -> Flat {
        let cl = self.closure(mask);
        self.make_flat(cl)
    }

    fn make_flat(&self, closed: u128) -> Flat {
        let rows: Vec<Vec<i64>> = bits(closed).map(|i| self.normals[i].clone()).collect();
        let rank = linalg::rank(self.dim, &rows);
        let basis = linalg::nullspace(self.dim, &rows);
        Flat { hyperplanes: closed, rank, basis }
    }

    /// The flat equal to the subspace spanned by `basis`, if it is one.
    pub fn flat_from_subspace(&self, basis: &[Vec<i64>]) -> Result<Flat> {
        for b in basis {
            if b.len() != self.dim {
                return Err(Error::DimensionMismatch { expected: self.dim, got: b.len() });
            }
        }
        let mut mask = 0u128;
        for (i, n) in self.normals.iter().enumerate() {
            if basis.iter().all(|b| n.iter().zip(b).map(|(x, y)| x * y).sum::<i64>() == 0) {
                mask |= 1 << i;
            }
        }
        let f = self.make_flat(mask);
        if self.dim - f.rank != linalg::rank(self.dim, basis) {
            return Err(Error::NotAFlat);
        }
        Ok(f)
    }

    /// Flats of rank `k` contained in the sub-arrangement `mask`, as closed submasks.
    fn flats_of_rank_in(&self, mask: u128, k: usize) -> Vec<u128> {
        let ord = self.ordered();
        let mut level: BTreeSet<u128> = BTreeSet::from([0u128]);
        for _ in 0..k {
            let mut next = BTreeSet::new();
            for &f in &level {
                for h in bits(mask & !f) {
                    next.insert(ord.closure(f | 1 << h) & mask);
                }
            }
            level = next;
        }
        level.into_iter().collect()
    }

    /// Flats of rank `rank(A) - 1`, ordered by hyperplane bitset.
    pub fn coatoms(&self) -> Vec<Flat> {
        let r = self.rank();
        if r == 0 {
            return Vec::new();
        }
        self.flats_of_rank_in(self.all(), r - 1)
            .into_iter()
            .map(|m| self.make_flat(m))
            .collect()
    }

    /// Every pair of hyperplanes outside `X` has a third hyperplane of `A_X` in its span.
    pub fn is_modular_coatom(&self, x: &Flat) -> Result<bool> {
        self.check_flat(x)?;
        let r = self.rank();
        if r == 0 || x.rank + 1 != r {
            return Err(Error::NotACoatom);
        }
        Ok(self.modular_in(self.all(), x.hyperplanes))
    }

    fn modular_in(&self, mask: u128, x: u128) -> bool {
        let ord = self.ordered();
        let outside: Vec<usize> = bits(mask & !x).collect();
        for (a, &h1) in outside.iter().enumerate() {
            for &h2 in &outside[a + 1..] {
                let span = ord.span(1 << h1 | 1 << h2);
                if !bits(x).any(|h3| span.contains(&self.normals[h3])) {
                    return false;
                }
            }
        }
        true
    }

    /// A chain of modular flats of ranks `r-1, r-2, ..., 1` if the arrangement
    /// is supersolvable; each flat is modular in the localization at the previous one.
    pub fn supersolvable_chain(&self) -> Option<Vec<Flat>> {
        let mut memo = HashMap::new();
        self.ss_rec(self.all(), &mut memo)
            .map(|chain| chain.into_iter().map(|m| self.make_flat(m)).collect())
    }

    pub fn is_supersolvable(&self) -> bool {
        self.supersolvable_chain().is_some()
    }

    fn ss_rec(&self, mask: u128, memo: &mut HashMap<u128, Option<Vec<u128>>>) -> Option<Vec<u128>> {
        if let Some(r) = memo.get(&mask) {
            return r.clone();
        }
        let r = self.mask_rank(mask);
        let result = if r <= 2 {
            let mut chain = Vec::new();
            if r == 2 {
                let h = mask.trailing_zeros() as usize;
                chain.push(self.closure(1 << h) & mask);
            }
            Some(chain)
        } else {
            let mut found = None;
            for x in self.flats_of_rank_in(mask, r - 1) {
                if self.modular_in(mask, x) {
                    if let Some(rest) = self.ss_rec(x, memo) {
                        let mut chain = vec![x];
                        chain.extend(rest);
                        found = Some(chain);
                        break;
                    }
                }
            }
            found
        };
        memo.insert(mask, result.clone());
        result
    }

    /// NBC sets with respect to the order `order` (a permutation of hyperplane
    /// indices, smallest first). Each set is listed in increasing order.
    pub fn nbc_sets(&self, order: &[usize]) -> Vec<Vec<usize>> {
        let permuted: Vec<Vec<i64>> = order.iter().map(|&i| self.normals[i].clone()).collect();
        let ord = Ordered { dim: self.dim, normals: &permuted };
        ord.nbc_lists()
            .into_iter()
            .map(|b| b.into_iter().map(|p| order[p]).collect())
            .collect()
    }

    /// NBC counts by size for the given order.
    pub fn nbc_counts(&self, order: &[usize]) -> IntPolynomial {
        let permuted: Vec<Vec<i64>> = order.iter().map(|&i| self.normals[i].clone()).collect();
        Ordered { dim: self.dim, normals: &permuted }.poincare()
    }

    /// `Q_A(t)`: coefficient of `t^i` is the number of NBC sets of size `i`
    /// under the sorted order of normals.
    pub fn poincare_polynomial(&self) -> IntPolynomial {
        self.ordered().poincare()
    }

    /// `chi_A(t) = t^dim Q_A(-1/t)`.
    pub fn characteristic_polynomial(&self) -> IntPolynomial {
        self.poincare_polynomial().char_transform(self.dim)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_rational::BigRational;
    use num_traits::Zero;
    use rand::seq::SliceRandom;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn arr(dim: usize, n: &[&[i64]]) -> Arrangement {
        Arrangement::new(dim, n.iter().map(|v| v.to_vec()).collect()).unwrap()
    }

    fn a2() -> Arrangement {
        arr(2, &[&[1, 0], &[0, 1], &[1, 1]])
    }

    fn a3_coxeter() -> Arrangement {
        arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 0], &[0, 1, 1], &[1, 1, 1]])
    }

    #[test]
    fn canonical_normals() {
        let a = arr(2, &[&[-2, 0], &[1, 1], &[2, 2]]);
        assert_eq!(a.normals(), &[vec![1, 0], vec![1, 1]]);
        assert!(Arrangement::new(2, vec![vec![0, 0]]).is_err());
        assert!(Arrangement::new(2, vec![vec![1]]).is_err());
    }

    #[test]
    fn deletion_and_reinsertion() {
        let a = a3_coxeter();
        for h in a.normals() {
            let d = a.deletion(h).unwrap();
            let mut n = d.normals().to_vec();
            n.push(h.clone());
            assert_eq!(Arrangement::new(3, n).unwrap(), a);
        }
        assert!(a.deletion(&[1, -1, 0]).is_err());
    }

    #[test]
    fn restriction_of_a2() {
        let a = a2();
        for h in a.normals() {
            let r = a.restriction(h).unwrap();
            assert_eq!(r.dim(), 1);
            assert_eq!(r.len(), 1);
        }
    }

    /// Oracle for restriction: intersect each other hyperplane with H directly
    /// in a rational basis of H and compare the resulting normal directions.
    #[test]
    fn restriction_matches_direct_basis_computation() {
        let a = a3_coxeter();
        for h in a.normals() {
            let r = a.restriction(h).unwrap();
            let basis = linalg::nullspace(3, &[h.clone()]);
            let mut set = BTreeSet::new();
            for b in a.normals() {
                let v: Vec<i64> = basis.iter().map(|x| x.iter().zip(b).map(|(p, q)| p * q).sum()).collect();
                if v.iter().any(|&c| c != 0) {
                    set.insert(linalg::normalize(&v));
                }
            }
            assert_eq!(r.len(), set.len());
            assert_eq!(r.poincare_polynomial(), Arrangement::new(2, set.into_iter().collect()).unwrap().poincare_polynomial());
        }
    }

    fn minor_rank(rows: &[Vec<i64>], dim: usize) -> usize {
        // Largest k with a nonzero k x k minor, over rational Gaussian elimination per minor.
        fn det(m: Vec<Vec<BigRational>>) -> BigRational {
            let n = m.len();
            let mut m = m;
            let mut d = BigRational::from_integer(1.into());
            for c in 0..n {
                let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
                    return BigRational::zero();
                };
                if p != c {
                    m.swap(p, c);
                    d = -d;
                }
                d = d * m[c][c].clone();
                for r in c + 1..n {
                    let f = m[r][c].clone() / m[c][c].clone();
                    for k in c..n {
                        let t = f.clone() * m[c][k].clone();
                        m[r][k] = m[r][k].clone() - t;
                    }
                }
            }
            d
        }
        fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
            if k == 0 {
                return vec![vec![]];
            }
            if n < k {
                return vec![];
            }
            let mut out = subsets(n - 1, k);
            for mut s in subsets(n - 1, k - 1) {
                s.push(n - 1);
                out.push(s);
            }
            out
        }
        for k in (1..=rows.len().min(dim)).rev() {
            for rs in subsets(rows.len(), k) {
                for cs in subsets(dim, k) {
                    let m: Vec<Vec<BigRational>> = rs
                        .iter()
                        .map(|&r| cs.iter().map(|&c| BigRational::from_integer(rows[r][c].into())).collect())
                        .collect();
                    if !det(m).is_zero() {
                        return k;
                    }
                }
            }
        }
        0
    }

    #[test]
    fn matroid_rank_agrees_with_minors() {
        let a = a2();
        assert_eq!(a.matroid_rank(&[]), 0);
        assert_eq!(a.matroid_rank(&[0, 1, 2]), 2);
        let b = a3_coxeter();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..40 {
            let subset: Vec<usize> = (0..b.len()).filter(|_| rng.gen_bool(0.5)).collect();
            let rows: Vec<Vec<i64>> = subset.iter().map(|&i| b.normals()[i].clone()).collect();
            assert_eq!(b.matroid_rank(&subset), minor_rank(&rows, 3));
        }
    }

    /// Brute-force NBC test straight from the definition: B is NBC iff it is
    /// independent and contains no circuit minus its largest element.
    fn brute_nbc_count(a: &Arrangement, order: &[usize]) -> Vec<usize> {
        let n = a.len();
        let pos: Vec<usize> = {
            let mut p = vec![0; n];
            for (k, &i) in order.iter().enumerate() {
                p[i] = k;
            }
            p
        };
        let rank = |s: &[usize]| a.matroid_rank(s);
        let mut circuits: Vec<Vec<usize>> = Vec::new();
        for m in 1u32..1 << n {
            let s: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            if rank(&s) == s.len() - 1 && s.iter().all(|&x| {
                let t: Vec<usize> = s.iter().copied().filter(|&y| y != x).collect();
                rank(&t) == t.len()
            }) {
                circuits.push(s);
            }
        }
        let broken: Vec<Vec<usize>> = circuits
            .iter()
            .map(|c| {
                let mx = *c.iter().max_by_key(|&&i| pos[i]).unwrap();
                c.iter().copied().filter(|&i| i != mx).collect()
            })
            .collect();
        let mut counts = vec![0usize; n + 1];
        for m in 0u32..1 << n {
            let s: Vec<usize> = (0..n).filter(|i| m >> i & 1 == 1).collect();
            if rank(&s) != s.len() {
                continue;
            }
            if broken.iter().any(|b| b.iter().all(|x| s.contains(x))) {
                continue;
            }
            counts[s.len()] += 1;
        }
        while counts.last() == Some(&0) {
            counts.pop();
        }
        counts
    }

    #[test]
    fn nbc_enumeration_matches_definition() {
        let a = a3_coxeter();
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for _ in 0..5 {
            let mut order: Vec<usize> = (0..a.len()).collect();
            order.shuffle(&mut rng);
            let expect = brute_nbc_count(&a, &order);
            let lists = a.nbc_sets(&order);
            let mut got = vec![0usize; expect.len()];
            for l in &lists {
                got[l.len()] += 1;
            }
            assert_eq!(got, expect);
            let poly: Vec<i64> = expect.iter().map(|&x| x as i64).collect();
            assert_eq!(a.nbc_counts(&order).coeffs(), poly.as_slice());
        }
    }

    #[test]
    fn poincare_examples() {
        assert_eq!(Arrangement::empty(3).poincare_polynomial(), IntPolynomial::one());
        assert_eq!(Arrangement::empty(2).nbc_sets(&[]), vec![Vec::<usize>::new()]);
        assert_eq!(a3_coxeter().poincare_polynomial(), IntPolynomial::from_coexponents(&[1, 2, 3]));
        assert_eq!(a2().characteristic_polynomial().coeffs(), &[2, -3, 1]);
        assert_eq!(Arrangement::empty(3).characteristic_polynomial().coeffs(), &[0, 0, 0, 1]);
    }

    fn point_count(a: &Arrangement, p: i64) -> i64 {
        let l = a.dim() as u32;
        let mut count = 0;
        for code in 0..p.pow(l) {
            let mut x = vec![0i64; a.dim()];
            let mut c = code;
            for xi in x.iter_mut() {
                *xi = c % p;
                c /= p;
            }
            if a
                .normals()
                .iter()
                .all(|h| h.iter().zip(&x).map(|(u, v)| u * v).sum::<i64>().rem_euclid(p) != 0)
            {
                count += 1;
            }
        }
        count
    }

    #[test]
    fn characteristic_polynomial_counts_points_over_finite_fields() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..30 {
            let dim = rng.gen_range(1..=3);
            let n = rng.gen_range(0..=5);
            let normals: Vec<Vec<i64>> = (0..n)
                .map(|_| loop {
                    let v: Vec<i64> = (0..dim).map(|_| rng.gen_range(-2..=2)).collect();
                    if v.iter().any(|&x| x != 0) {
                        break v;
                    }
                })
                .collect();
            let a = Arrangement::new(dim, normals).unwrap();
            let chi = a.characteristic_polynomial();
            for p in [31, 37] {
                assert_eq!(chi.eval(p), point_count(&a, p), "{a:?}");
            }
        }
    }

    #[test]
    fn coatoms_of_small_arrangements() {
        let one = arr(3, &[&[1, 0, 0]]);
        let c = one.coatoms();
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].rank, 0);
        assert_eq!(c[0].basis.len(), 3);
        assert_eq!(a2().coatoms().len(), 3);
        assert_eq!(a3_coxeter().coatoms().len(), 7);
    }

    #[test]
    fn modular_coatoms() {
        let two = arr(2, &[&[1, 0], &[0, 1]]);
        for x in two.coatoms() {
            assert!(two.is_modular_coatom(&x).unwrap());
        }
        let generic = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        for x in generic.coatoms() {
            assert!(!generic.is_modular_coatom(&x).unwrap());
        }
        let a = a3_coxeter();
        let x = a.flat(&[0]);
        assert!(matches!(a.is_modular_coatom(&x), Err(Error::NotACoatom)));
        let bogus = Flat { hyperplanes: 0b11, rank: 2, basis: vec![] };
        assert!(matches!(a.is_modular_coatom(&bogus), Err(Error::NotAFlat)));
    }

    #[test]
    fn supersolvability() {
        assert!(a2().is_supersolvable());
        let chain = a3_coxeter().supersolvable_chain().unwrap();
        assert_eq!(chain.iter().map(|f| f.rank).collect::<Vec<_>>(), vec![2, 1]);
        let generic = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert!(!generic.is_supersolvable());
    }

    #[test]
    fn quotient_by_center_drops_coordinates() {
        let a = arr(3, &[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        let q = a.quotient_by_center();
        assert_eq!(q.dim(), 2);
        assert_eq!(q.poincare_polynomial(), a.poincare_polynomial());
        assert_eq!(a.center(), vec![vec![0, 0, 1]]);
    }

    #[test]
    fn flats_from_subspaces() {
        let a = a3_coxeter();
        let f = a.flat_from_subspace(&[vec![0, 0, 1]]).unwrap();
        assert_eq!(f.rank, 2);
        assert!(a.flat_from_subspace(&[vec![1, 2, 3]]).is_err());
    }

    #[test]
    fn json_round_trip() {
        let a = a3_coxeter();
        let s = serde_json::to_string(&a).unwrap();
        assert!(s.starts_with("{\"dim\":3,\"normals\":"));
        let b: Arrangement = serde_json::from_str(&s).unwrap();
        assert_eq!(a, b);
        assert!(serde_json::from_str::<Arrangement>("{\"dim\":2,\"normals\":[[0,0]]}").is_err());
    }
}
