//! Weyl group elements as permutations of the root set.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet, VecDeque};
use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::linalg;
use crate::poly::IntPolynomial;
use crate::rootsys::{CartanType, Family, Root, RootSystem};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Left,
    Right,
}

impl fmt::Display for Side {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Side::Left => write!(f, "left"),
            Side::Right => write!(f, "right"),
        }
    }
}

/// A group element, stored as its action on root indices.
///
/// Equality, hashing and ordering use only the images of the simple roots
/// (the signature), which determine the element.
#[derive(Clone, Debug)]
pub struct WeylElement {
    perm: Box<[u16]>,
    rank: usize,
}

impl WeylElement {
    /// The signature: root indices of `w(alpha_s)` for each generator `s`.
    pub fn signature_indices(&self) -> &[u16] {
        &self.perm[..self.rank]
    }

    /// `w(roots[i])` as a root index.
    pub fn apply(&self, i: usize) -> usize {
        self.perm[i] as usize
    }

    pub fn rank(&self) -> usize {
        self.rank
    }
}

impl PartialEq for WeylElement {
    fn eq(&self, other: &Self) -> bool {
        self.signature_indices() == other.signature_indices()
    }
}

impl Eq for WeylElement {}

impl Hash for WeylElement {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.signature_indices().hash(state);
    }
}

impl PartialOrd for WeylElement {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for WeylElement {
    fn cmp(&self, other: &Self) -> Ordering {
        self.signature_indices().cmp(other.signature_indices())
    }
}

/// Formats a 0-based word with 1-based generator labels, e.g. `s2s3s2s1`.
pub fn format_word(word: &[usize]) -> String {
    if word.is_empty() {
        return "e".to_string();
    }
    word.iter().map(|s| format!("s{}", s + 1)).collect()
}

/// Parses `s2s3s2s1`, `2 3 2 1`, `2,3,2,1` or `[2,3,2,1]` into a 0-based word.
pub fn parse_word(s: &str) -> Option<Vec<usize>> {
    let t = s.trim().trim_start_matches('[').trim_end_matches(']').trim();
    if t.is_empty() || t == "e" {
        return Some(Vec::new());
    }
    let parts: Vec<&str> = if t.contains('s') {
        t.split('s').filter(|p| !p.is_empty()).collect()
    } else {
        t.split(|c: char| c == ',' || c.is_whitespace()).filter(|p| !p.is_empty()).collect()
    };
    parts
        .iter()
        .map(|p| p.trim().parse::<usize>().ok().filter(|&x| x >= 1).map(|x| x - 1))
        .collect()
}

/// Finite Weyl group acting on the roots of a [`RootSystem`].
#[derive(Clone, Debug)]
pub struct WeylGroup {
    rs: Arc<RootSystem>,
}

impl WeylGroup {
    pub fn new(rs: RootSystem) -> Self {
        WeylGroup { rs: Arc::new(rs) }
    }

    pub fn from_type(t: CartanType) -> Self {
        Self::new(RootSystem::new(t))
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(RootSystem::from_label(label)?))
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn shared_root_system(&self) -> Arc<RootSystem> {
        Arc::clone(&self.rs)
    }

    pub fn rank(&self) -> usize {
        self.rs.rank()
    }

    fn n_pos(&self) -> usize {
        self.rs.num_positive()
    }

    /// Order of the group.
    pub fn order(&self) -> u64 {
        fn fact(n: u64) -> u64 {
            (1..=n).product()
        }
        self.rs
            .cartan_type()
            .components()
            .iter()
            .map(|&(f, n)| {
                let n64 = n as u64;
                match f {
                    Family::A => fact(n64 + 1),
                    Family::B | Family::C => (1u64 << n) * fact(n64),
                    Family::D => (1u64 << (n - 1)) * fact(n64),
                    Family::E => match n {
                        6 => 51_840,
                        7 => 2_903_040,
                        _ => 696_729_600,
                    },
                    Family::F => 1152,
                    Family::G => 12,
                }
            })
            .product()
    }

    pub fn identity(&self) -> WeylElement {
        let perm: Vec<u16> = (0..self.rs.num_roots() as u16).collect();
        WeylElement { perm: perm.into_boxed_slice(), rank: self.rank() }
    }

    fn check_gen(&self, s: usize) -> Result<()> {
        if s >= self.rank() {
            return Err(Error::GeneratorOutOfRange { index: s, rank: self.rank() });
        }
        Ok(())
    }

    /// Simple reflection `s_i` (0-based).
    pub fn generator(&self, s: usize) -> Result<WeylElement> {
        self.check_gen(s)?;
        Ok(self.reflection(s))
    }

    /// Reflection `t_beta` in the root with index `beta`.
    pub fn reflection(&self, beta: usize) -> WeylElement {
        let table = self.rs.reflection_table(beta);
        WeylElement { perm: table.to_vec().into_boxed_slice(), rank: self.rank() }
    }

    pub fn reflection_in(&self, beta: &Root) -> Result<WeylElement> {
        Ok(self.reflection(self.rs.index_of_root(beta)?))
    }

    /// Product of a 0-based word; the word need not be reduced.
    pub fn from_word(&self, word: &[usize]) -> Result<WeylElement> {
        let mut w = self.identity();
        for &s in word {
            self.check_gen(s)?;
            w = self.mul_generator_right(&w, s);
        }
        Ok(w)
    }

    /// `a * b`, acting as `a(b(beta))`.
    pub fn mul(&self, a: &WeylElement, b: &WeylElement) -> WeylElement {
        let perm: Vec<u16> = b.perm.iter().map(|&i| a.perm[i as usize]).collect();
        WeylElement { perm: perm.into_boxed_slice(), rank: a.rank }
    }

    pub fn mul_generator_left(&self, s: usize, w: &WeylElement) -> WeylElement {
        let t = self.rs.reflection_table(s);
        let perm: Vec<u16> = w.perm.iter().map(|&i| t[i as usize]).collect();
        WeylElement { perm: perm.into_boxed_slice(), rank: w.rank }
    }

    pub fn mul_generator_right(&self, w: &WeylElement, s: usize) -> WeylElement {
        let t = self.rs.reflection_table(s);
        let perm: Vec<u16> = t.iter().map(|&i| w.perm[i as usize]).collect();
        WeylElement { perm: perm.into_boxed_slice(), rank: w.rank }
    }

    /// `t_beta * w` for a root index `beta`.
    pub fn mul_reflection_left(&self, beta: usize, w: &WeylElement) -> WeylElement {
        let t = self.rs.reflection_table(beta);
        let perm: Vec<u16> = w.perm.iter().map(|&i| t[i as usize]).collect();
        WeylElement { perm: perm.into_boxed_slice(), rank: w.rank }
    }

    pub fn inverse(&self, w: &WeylElement) -> WeylElement {
        let mut perm = vec![0u16; w.perm.len()];
        for (i, &j) in w.perm.iter().enumerate() {
            perm[j as usize] = i as u16;
        }
        WeylElement { perm: perm.into_boxed_slice(), rank: w.rank }
    }

    pub fn is_identity(&self, w: &WeylElement) -> bool {
        w.signature_indices().iter().enumerate().all(|(i, &j)| i == j as usize)
    }

    /// `w(beta)`.
    pub fn act(&self, w: &WeylElement, beta: &Root) -> Result<Root> {
        let i = self.rs.index_of_root(beta)?;
        Ok(self.rs.root(w.apply(i)).clone())
    }

    /// Images of the simple roots.
    pub fn signature(&self, w: &WeylElement) -> Vec<Root> {
        w.signature_indices().iter().map(|&i| self.rs.root(i as usize).clone()).collect()
    }

    /// Rebuilds an element from its signature.
    pub fn from_signature(&self, sig: &[Root]) -> Result<WeylElement> {
        if sig.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: sig.len() });
        }
        let target: Vec<usize> = sig.iter().map(|r| self.rs.index_of_root(r)).collect::<Result<_>>()?;
        // Walk down by right descents: if y(alpha_s) < 0 then l(ys) < l(y).
        let mut inv_word = Vec::new();
        let mut cur: Vec<usize> = target.clone();
        loop {
            let n = self.n_pos();
            let d = (0..self.rank()).find(|&s| cur[s] >= n);
            match d {
                None => break,
                Some(s) => {
                    let t = self.rs.reflection_table(s);
                    let img: Vec<usize> = (0..self.rank())
                        .map(|j| {
                            let sj = t[j] as usize;
                            self.image_linear(&cur, sj)
                        })
                        .collect();
                    cur = img;
                    inv_word.push(s);
                    if inv_word.len() > self.n_pos() {
                        return Err(Error::NotARoot(sig[0].coords().to_vec()));
                    }
                }
            }
        }
        if cur.iter().enumerate().any(|(i, &c)| i != c) {
            return Err(Error::NotARoot(sig[0].coords().to_vec()));
        }
        let mut x = self.identity();
        for &s in inv_word.iter().rev() {
            x = self.mul_generator_right(&x, s);
        }
        if x.signature_indices().iter().map(|&i| i as usize).ne(target.iter().copied()) {
            return Err(Error::NotARoot(sig[0].coords().to_vec()));
        }
        Ok(x)
    }

    /// Image of root `r` under the linear map sending `alpha_j` to root `img[j]`.
    fn image_linear(&self, img: &[usize], r: usize) -> usize {
        let n = self.rank();
        let c = self.rs.root(r).coords();
        let mut v = vec![0i64; n];
        for j in 0..n {
            if c[j] != 0 {
                let col = self.rs.root(img[j]).coords();
                for k in 0..n {
                    v[k] += c[j] * col[k];
                }
            }
        }
        self.rs.index_of(&v).unwrap_or(usize::MAX)
    }

    pub fn length(&self, w: &WeylElement) -> usize {
        let n = self.n_pos() as u16;
        w.perm[..n as usize].iter().filter(|&&j| j >= n).count()
    }

    /// Right descents `{s : l(ws) < l(w)} = {s : w(alpha_s) < 0}`.
    pub fn right_descents(&self, w: &WeylElement) -> Vec<usize> {
        let n = self.n_pos() as u16;
        (0..self.rank()).filter(|&s| w.perm[s] >= n).collect()
    }

    /// Left descents `{s : l(sw) < l(w)} = {s : alpha_s in I(w)}`.
    pub fn left_descents(&self, w: &WeylElement) -> Vec<usize> {
        let n = self.n_pos();
        let mut out: Vec<usize> = w.perm[..n]
            .iter()
            .filter_map(|&j| {
                let j = j as usize;
                (j >= n && j - n < self.rank()).then(|| j - n)
            })
            .collect();
        out.sort_unstable();
        out
    }

    pub fn descents(&self, w: &WeylElement, side: Side) -> Vec<usize> {
        match side {
            Side::Left => self.left_descents(w),
            Side::Right => self.right_descents(w),
        }
    }

    pub fn is_left_descent(&self, w: &WeylElement, s: usize) -> bool {
        let n = self.n_pos();
        w.perm[..n].iter().any(|&j| j as usize == s + n)
    }

    pub fn is_right_descent(&self, w: &WeylElement, s: usize) -> bool {
        w.perm[s] as usize >= self.n_pos()
    }

    /// Positive root indices of `I(w) = {alpha > 0 : w^{-1} alpha < 0}`, ascending.
    pub fn inversion_indices(&self, w: &WeylElement) -> Vec<usize> {
        let n = self.n_pos();
        let mut out: Vec<usize> = w.perm[..n]
            .iter()
            .filter_map(|&j| {
                let j = j as usize;
                (j >= n).then(|| j - n)
            })
            .collect();
        out.sort_unstable();
        out
    }

    /// Generators appearing in a reduced word, i.e. the support of `I(w)`.
    pub fn support(&self, w: &WeylElement) -> Vec<usize> {
        let mut seen = vec![false; self.rank()];
        for i in self.inversion_indices(w) {
            for (s, &c) in self.rs.root(i).coords().iter().enumerate() {
                if c != 0 {
                    seen[s] = true;
                }
            }
        }
        (0..self.rank()).filter(|&s| seen[s]).collect()
    }

    /// Canonical reduced word: repeatedly strip the smallest left descent.
    pub fn reduced_word(&self, w: &WeylElement) -> Vec<usize> {
        // Left descents of w are right descents of w^{-1}; stripping s on the
        // left of w is multiplying w^{-1} by s on the right.
        let mut inv = self.inverse(w);
        let mut word = Vec::new();
        while let Some(s) = (0..self.rank()).find(|&s| self.is_right_descent(&inv, s)) {
            word.push(s);
            inv = self.mul_generator_right(&inv, s);
        }
        word
    }

    pub fn format(&self, w: &WeylElement) -> String {
        format_word(&self.reduced_word(w))
    }

    /// Bruhat order by the descent recursion.
    pub fn bruhat_leq(&self, u: &WeylElement, w: &WeylElement) -> bool {
        let mut u = u.clone();
        let mut w = w.clone();
        loop {
            if self.is_identity(&u) {
                return true;
            }
            let lu = self.length(&u);
            let lw = self.length(&w);
            if lu > lw || (lu == lw && u != w) {
                return false;
            }
            if lu == lw {
                return true;
            }
            let s = self.left_descents(&w)[0];
            if self.is_left_descent(&u, s) {
                u = self.mul_generator_left(s, &u);
            }
            w = self.mul_generator_left(s, &w);
        }
    }

    /// Lower interval `[e, w]` by downward reflection closure, sorted by
    /// length and then by signature.
    pub fn bruhat_interval(&self, w: &WeylElement) -> Vec<WeylElement> {
        let mut seen: HashSet<WeylElement> = HashSet::new();
        let mut stack = vec![w.clone()];
        seen.insert(w.clone());
        while let Some(x) = stack.pop() {
            for b in self.inversion_indices(&x) {
                let y = self.mul_reflection_left(b, &x);
                if !seen.contains(&y) {
                    seen.insert(y.clone());
                    stack.push(y);
                }
            }
        }
        let mut out: Vec<(usize, WeylElement)> = seen.into_iter().map(|x| (self.length(&x), x)).collect();
        out.sort();
        out.into_iter().map(|p| p.1).collect()
    }

    /// `P_w(q) = sum_{x <= w} q^{l(x)}`.
    pub fn poincare(&self, w: &WeylElement) -> IntPolynomial {
        self.poincare_of(&self.bruhat_interval(w))
    }

    fn poincare_of(&self, elems: &[WeylElement]) -> IntPolynomial {
        let mut c = Vec::new();
        for x in elems {
            let l = self.length(x);
            if c.len() <= l {
                c.resize(l + 1, 0);
            }
            c[l] += 1;
        }
        IntPolynomial::new(c)
    }

    /// Whether `x` is a minimal coset representative: `x in ^J W` (left) or `W^J` (right).
    pub fn is_minimal_representative(&self, x: &WeylElement, j: &[usize], side: Side) -> bool {
        match side {
            Side::Left => j.iter().all(|&s| !self.is_left_descent(x, s)),
            Side::Right => j.iter().all(|&s| !self.is_right_descent(x, s)),
        }
    }

    /// `^J P_v` (left) or `P^J_v` (right): sum over `[e,v]` cap minimal representatives.
    pub fn coset_poincare(&self, v: &WeylElement, j: &[usize], side: Side) -> Result<IntPolynomial> {
        for &s in j {
            self.check_gen(s)?;
        }
        if !self.is_minimal_representative(v, j, side) {
            return Err(Error::NotMinimalRepresentative);
        }
        let elems: Vec<WeylElement> = self
            .bruhat_interval(v)
            .into_iter()
            .filter(|x| self.is_minimal_representative(x, j, side))
            .collect();
        Ok(self.poincare_of(&elems))
    }

    /// Left: `w = u v` with `u in W_J`, `v in ^J W`. Right: `w = v u` with `v in W^J`, `u in W_J`.
    /// Returns `(u, v)` in both cases.
    pub fn parabolic_decomposition(&self, w: &WeylElement, j: &[usize], side: Side) -> Result<(WeylElement, WeylElement)> {
        for &s in j {
            self.check_gen(s)?;
        }
        let mut u_word = Vec::new();
        let mut v = w.clone();
        loop {
            let d = match side {
                Side::Left => j.iter().copied().filter(|&s| self.is_left_descent(&v, s)).min(),
                Side::Right => j.iter().copied().filter(|&s| self.is_right_descent(&v, s)).min(),
            };
            let Some(s) = d else { break };
            v = match side {
                Side::Left => self.mul_generator_left(s, &v),
                Side::Right => self.mul_generator_right(&v, s),
            };
            u_word.push(s);
        }
        let u = match side {
            Side::Left => self.from_word(&u_word)?,
            Side::Right => {
                u_word.reverse();
                self.from_word(&u_word)?
            }
        };
        Ok((u, v))
    }

    /// Maximal element of the parabolic subgroup `W_J`.
    pub fn longest_element(&self, j: &[usize]) -> Result<WeylElement> {
        for &s in j {
            self.check_gen(s)?;
        }
        let mut x = self.identity();
        while let Some(&s) = j.iter().find(|&&s| !self.is_right_descent(&x, s)) {
            x = self.mul_generator_right(&x, s);
        }
        Ok(x)
    }

    pub fn longest(&self) -> WeylElement {
        let all: Vec<usize> = (0..self.rank()).collect();
        self.longest_element(&all).expect("generators in range")
    }

    /// Matrix of `w` in the simple-root basis; column `j` is `w(alpha_j)`.
    pub fn matrix(&self, w: &WeylElement) -> Vec<Vec<i64>> {
        let n = self.rank();
        let cols: Vec<&[i64]> = w.signature_indices().iter().map(|&i| self.rs.root(i as usize).coords()).collect();
        (0..n).map(|r| (0..n).map(|c| cols[c][r]).collect()).collect()
    }

    /// `l'(w) = rank(M_w - I)`.
    pub fn absolute_length(&self, w: &WeylElement) -> usize {
        let mut m = self.matrix(w);
        for (i, row) in m.iter_mut().enumerate() {
            row[i] -= 1;
        }
        linalg::rank(self.rank(), &m)
    }

    /// Distances `al(u, w)` for every `u` in `[e, w]`, by breadth-first search
    /// downward from `w` along reflections that decrease length.
    pub fn bruhat_graph_distances(&self, w: &WeylElement) -> HashMap<WeylElement, usize> {
        let mut dist: HashMap<WeylElement, usize> = HashMap::new();
        dist.insert(w.clone(), 0);
        let mut queue = VecDeque::from([w.clone()]);
        while let Some(x) = queue.pop_front() {
            let d = dist[&x];
            for b in self.inversion_indices(&x) {
                let y = self.mul_reflection_left(b, &x);
                if !dist.contains_key(&y) {
                    dist.insert(y.clone(), d + 1);
                    queue.push_back(y);
                }
            }
        }
        dist
    }

    /// `al(u, w)`, or `None` when `u` is not below `w`.
    pub fn bruhat_graph_distance(&self, u: &WeylElement, w: &WeylElement) -> Option<usize> {
        if !self.bruhat_leq(u, w) {
            return None;
        }
        self.bruhat_graph_distances(w).get(u).copied()
    }

    /// Minimal representatives of `W_big / W_small` (no right descent in
    /// `small`), by upward search in the left weak order.
    pub fn quotient_representatives(&self, big: &[usize], small: &[usize]) -> Result<Vec<WeylElement>> {
        for &s in big.iter().chain(small) {
            self.check_gen(s)?;
        }
        let mut seen: HashSet<WeylElement> = HashSet::from([self.identity()]);
        let mut queue = VecDeque::from([self.identity()]);
        let mut out = Vec::new();
        while let Some(x) = queue.pop_front() {
            for &s in big {
                if self.is_left_descent(&x, s) {
                    continue;
                }
                let y = self.mul_generator_left(s, &x);
                if self.is_minimal_representative(&y, small, Side::Right) && seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
            out.push(x);
        }
        Ok(out)
    }

    /// Length generating function of `W_J`, which is `P` of its longest
    /// element. Computed as a product over the quotients along the chain of
    /// prefixes of `J`, so `W_J` itself is never listed.
    pub fn parabolic_poincare(&self, j: &[usize]) -> Result<IntPolynomial> {
        let mut p = IntPolynomial::one();
        for k in 1..=j.len() {
            let reps = self.quotient_representatives(&j[..k], &j[..k - 1])?;
            p = p.mul(&self.poincare_of(&reps));
        }
        Ok(p)
    }

    /// Every element of the group, sorted by length then signature.
    pub fn elements(&self) -> Vec<WeylElement> {
        self.bruhat_interval(&self.longest())
    }

    /// Elements of the parabolic subgroup `W_J`.
    pub fn parabolic_subgroup(&self, j: &[usize]) -> Result<Vec<WeylElement>> {
        Ok(self.bruhat_interval(&self.longest_element(j)?))
    }
}
