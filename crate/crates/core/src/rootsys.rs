//! Crystallographic root systems of finite type with exact integer coordinates.
//!
//! Roots are stored in the basis of simple roots. Node numbering follows these
//! Dynkin diagrams (1-based labels, as used on the command line):
//!
//! ```text
//! A_n:  1 - 2 - ... - n
//! B_n:  1 - 2 - ... - (n-1) => n     (node n short)
//! C_n:  1 - 2 - ... - (n-1) <= n     (node n long)
//! D_n:  1 - 2 - 4 - 5 - ... - n, with 3 attached to 2
//! E_n:  2 - 3 - 4 - 5 - ... - n, with 1 attached to 4
//! F_4:  1 - 2 => 3 - 4               (nodes 1, 2 long)
//! G_2:  1 <= 2                       (node 1 short)
//! ```

use std::collections::{HashMap, HashSet};
use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::{self, Span};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Family {
    fn letter(self) -> char {
        match self {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
            Family::E => 'E',
            Family::F => 'F',
            Family::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Family> {
        Some(match c {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            'E' => Family::E,
            'F' => Family::F,
            'G' => Family::G,
            _ => return None,
        })
    }

    pub fn valid_rank(self, n: usize) -> bool {
        match self {
            Family::A => n >= 1,
            Family::B | Family::C => n >= 2,
            Family::D => n >= 4,
            Family::E => (6..=8).contains(&n),
            Family::F => n == 4,
            Family::G => n == 2,
        }
    }
}

/// A product of irreducible finite types; nodes are numbered consecutively
/// through the components in the listed order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct CartanType {
    components: Vec<(Family, usize)>,
}

impl CartanType {
    pub fn new(components: Vec<(Family, usize)>) -> Result<Self> {
        for &(f, n) in &components {
            if !f.valid_rank(n) {
                return Err(Error::InvalidType(format!("{}{}", f.letter(), n)));
            }
        }
        Ok(CartanType { components })
    }

    pub fn irreducible(family: Family, rank: usize) -> Result<Self> {
        Self::new(vec![(family, rank)])
    }

    pub fn empty() -> Self {
        CartanType { components: Vec::new() }
    }

    pub fn components(&self) -> &[(Family, usize)] {
        &self.components
    }

    pub fn rank(&self) -> usize {
        self.components.iter().map(|c| c.1).sum()
    }

    pub fn is_irreducible_of(&self, family: Family) -> bool {
        self.components.len() == 1 && self.components[0].0 == family
    }
}

impl fmt::Display for CartanType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.components.is_empty() {
            return write!(f, "empty");
        }
        let parts: Vec<String> = self
            .components
            .iter()
            .map(|(fam, n)| format!("{}{}", fam.letter(), n))
            .collect();
        write!(f, "{}", parts.join("x"))
    }
}

impl FromStr for CartanType {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() || s == "empty" {
            return Ok(CartanType::empty());
        }
        let mut comps = Vec::new();
        for part in s.split('x') {
            let mut chars = part.chars();
            let fam = chars
                .next()
                .and_then(|c| Family::from_letter(c.to_ascii_uppercase()))
                .ok_or_else(|| Error::InvalidType(s.to_string()))?;
            let n: usize = chars
                .as_str()
                .parse()
                .map_err(|_| Error::InvalidType(s.to_string()))?;
            comps.push((fam, n));
        }
        CartanType::new(comps).map_err(|_| Error::InvalidType(s.to_string()))
    }
}

type Q = Ratio<i64>;

fn q(n: i64, d: i64) -> Q {
    Ratio::new(n, d)
}

/// Gram matrix `(alpha_i, alpha_j)` of one irreducible component, long roots of norm 2.
fn standard_gram(family: Family, n: usize) -> Vec<Vec<Q>> {
    let mut g = vec![vec![q(0, 1); n]; n];
    let edge = |g: &mut Vec<Vec<Q>>, i: usize, j: usize, v: Q| {
        g[i][j] = v;
        g[j][i] = v;
    };
    match family {
        Family::A => {
            for i in 0..n {
                g[i][i] = q(2, 1);
            }
            for i in 1..n {
                edge(&mut g, i - 1, i, q(-1, 1));
            }
        }
        Family::B => {
            for i in 0..n {
                g[i][i] = q(2, 1);
            }
            g[n - 1][n - 1] = q(1, 1);
            for i in 1..n {
                edge(&mut g, i - 1, i, q(-1, 1));
            }
        }
        Family::C => {
            for i in 0..n {
                g[i][i] = q(1, 1);
            }
            g[n - 1][n - 1] = q(2, 1);
            for i in 1..n - 1 {
                edge(&mut g, i - 1, i, q(-1, 2));
            }
            edge(&mut g, n - 2, n - 1, q(-1, 1));
        }
        Family::D => {
            for i in 0..n {
                g[i][i] = q(2, 1);
            }
            edge(&mut g, 0, 1, q(-1, 1));
            edge(&mut g, 2, 1, q(-1, 1));
            edge(&mut g, 1, 3, q(-1, 1));
            for i in 4..n {
                edge(&mut g, i - 1, i, q(-1, 1));
            }
        }
        Family::E => {
            for i in 0..n {
                g[i][i] = q(2, 1);
            }
            for &(a, b) in &[(0, 3), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7)] {
                if a < n && b < n {
                    edge(&mut g, a, b, q(-1, 1));
                }
            }
        }
        Family::F => {
            g[0][0] = q(2, 1);
            g[1][1] = q(2, 1);
            g[2][2] = q(1, 1);
            g[3][3] = q(1, 1);
            edge(&mut g, 0, 1, q(-1, 1));
            edge(&mut g, 1, 2, q(-1, 1));
            edge(&mut g, 2, 3, q(-1, 2));
        }
        Family::G => {
            g[0][0] = q(2, 3);
            g[1][1] = q(2, 1);
            edge(&mut g, 0, 1, q(-1, 1));
        }
    }
    g
}

fn block_gram(t: &CartanType) -> Vec<Vec<Q>> {
    let n = t.rank();
    let mut g = vec![vec![q(0, 1); n]; n];
    let mut off = 0;
    for &(f, k) in t.components() {
        let b = standard_gram(f, k);
        for i in 0..k {
            for j in 0..k {
                g[off + i][off + j] = b[i][j];
            }
        }
        off += k;
    }
    g
}

/// Standard Cartan matrix `a_ij = 2 (alpha_i, alpha_j) / (alpha_i, alpha_i)` of a type.
pub fn standard_cartan(t: &CartanType) -> Vec<Vec<i64>> {
    cartan_from_gram(&block_gram(t))
}

fn cartan_from_gram(g: &[Vec<Q>]) -> Vec<Vec<i64>> {
    let n = g.len();
    (0..n)
        .map(|i| {
            (0..n)
                .map(|j| {
                    let v = q(2, 1) * g[i][j] / g[i][i];
                    assert!(v.is_integer(), "non-integral Cartan entry");
                    v.to_integer()
                })
                .collect()
        })
        .collect()
}

/// Cartan matrix together with its symmetrizer `d_i = (alpha_i, alpha_i) / 2`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CartanDatum {
    pub cartan_type: CartanType,
    pub cartan_matrix: Vec<Vec<i64>>,
    pub symmetrizer: Vec<Ratio<i64>>,
}

impl CartanDatum {
    pub fn new(cartan_type: CartanType) -> Self {
        let g = block_gram(&cartan_type);
        let cartan_matrix = cartan_from_gram(&g);
        let symmetrizer = (0..g.len()).map(|i| g[i][i] / q(2, 1)).collect();
        CartanDatum { cartan_type, cartan_matrix, symmetrizer }
    }

    pub fn rank(&self) -> usize {
        self.cartan_matrix.len()
    }

    /// Symmetrized matrix `D A`, i.e. the Gram matrix of the simple roots.
    pub fn gram(&self) -> Vec<Vec<Ratio<i64>>> {
        let n = self.rank();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| self.symmetrizer[i] * Ratio::from_integer(self.cartan_matrix[i][j]))
                    .collect()
            })
            .collect()
    }

    /// Checks the Cartan matrix shape and that `D A` is symmetric positive definite.
    pub fn validate(&self) -> Result<()> {
        let n = self.rank();
        for i in 0..n {
            if self.cartan_matrix[i].len() != n {
                return Err(Error::InvalidDatum("Cartan matrix is not square".into()));
            }
            if self.cartan_matrix[i][i] != 2 {
                return Err(Error::InvalidDatum("diagonal entry different from 2".into()));
            }
            for j in 0..n {
                if i != j && self.cartan_matrix[i][j] > 0 {
                    return Err(Error::InvalidDatum("positive off-diagonal entry".into()));
                }
            }
            if self.symmetrizer[i] <= Ratio::from_integer(0) {
                return Err(Error::InvalidDatum("non-positive symmetrizer".into()));
            }
        }
        let g = self.gram();
        for i in 0..n {
            for j in 0..n {
                if g[i][j] != g[j][i] {
                    return Err(Error::InvalidDatum("D A is not symmetric".into()));
                }
            }
        }
        // Sylvester's criterion; scale to integers first.
        let den = g
            .iter()
            .flatten()
            .fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
        let gi: Vec<Vec<i64>> = g
            .iter()
            .map(|r| r.iter().map(|x| (x * den).to_integer()).collect())
            .collect();
        for k in 1..=n {
            let minor: Vec<Vec<i64>> = gi[..k].iter().map(|r| r[..k].to_vec()).collect();
            if linalg::determinant(&minor) <= 0.into() {
                return Err(Error::InvalidDatum("D A is not positive definite".into()));
            }
        }
        Ok(())
    }
}

/// A root in the simple-root basis: all coordinates `>= 0` or all `<= 0`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Root(Vec<i64>);

impl Root {
    /// Wraps a coordinate vector; mixed-sign vectors are rejected.
    pub fn new(coords: Vec<i64>) -> Result<Self> {
        let pos = coords.iter().all(|&c| c >= 0);
        let neg = coords.iter().all(|&c| c <= 0);
        if !(pos || neg) || coords.iter().all(|&c| c == 0) {
            return Err(Error::NotARoot(coords));
        }
        Ok(Root(coords))
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn neg(&self) -> Root {
        Root(self.0.iter().map(|&c| -c).collect())
    }
}

/// A root system generated from a Cartan datum, with reflection tables.
///
/// Root indices: `0..N` are the positive roots sorted by height (ties broken
/// by descending coordinates, so simple roots come first in node order) and
/// `N + i` is the negative of root `i`.
#[derive(Debug)]
pub struct RootSystem {
    datum: CartanDatum,
    gram_int: Vec<Vec<i64>>,
    roots: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    n_pos: usize,
    /// `reflections[b][g]` = index of `t_b(g)` for positive root `b`.
    reflections: Vec<Vec<u16>>,
    /// `sums[i][j]` = index of root `i + j` when it is a root.
    sums: HashMap<(usize, usize), usize>,
}

fn dot_gram(g: &[Vec<i64>], x: &[i64], y: &[i64]) -> i64 {
    let mut s = 0;
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            s += xi * g[i][j] * yj;
        }
    }
    s
}

impl RootSystem {
    /// Builds all roots by closing the simple roots under simple reflections.
    pub fn new(cartan_type: CartanType) -> Self {
        let datum = CartanDatum::new(cartan_type);
        Self::from_datum(datum).expect("standard types are valid")
    }

    pub fn from_label(label: &str) -> Result<Self> {
        Ok(Self::new(label.parse()?))
    }

    pub fn from_datum(datum: CartanDatum) -> Result<Self> {
        datum.validate()?;
        let n = datum.rank();
        let g = datum.gram();
        let den = g
            .iter()
            .flatten()
            .fold(1i64, |l, x| num_integer::lcm(l, *x.denom()));
        let gram_int: Vec<Vec<i64>> = g
            .iter()
            .map(|r| r.iter().map(|x| (x * den).to_integer()).collect())
            .collect();

        let positives = positive_roots(&datum.cartan_matrix);
        let n_pos = positives.len();
        let mut roots: Vec<Root> = positives.into_iter().map(Root).collect();
        let negs: Vec<Root> = roots.iter().map(|r| r.neg()).collect();
        roots.extend(negs);
        let index: HashMap<Vec<i64>, usize> = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.0.clone(), i))
            .collect();

        let mut sys = RootSystem {
            datum,
            gram_int,
            roots,
            index,
            n_pos,
            reflections: Vec::new(),
            sums: HashMap::new(),
        };
        let mut tables = Vec::with_capacity(n_pos);
        for b in 0..n_pos {
            let row: Vec<u16> = (0..2 * n_pos)
                .map(|gi| {
                    let img = sys.reflect_coords(b, gi);
                    *sys.index.get(&img).expect("root system closed under reflections") as u16
                })
                .collect();
            tables.push(row);
        }
        sys.reflections = tables;
        let mut sums = HashMap::new();
        for i in 0..2 * n_pos {
            for j in 0..2 * n_pos {
                let s: Vec<i64> = sys.roots[i].0.iter().zip(&sys.roots[j].0).map(|(a, b)| a + b).collect();
                if let Some(&k) = sys.index.get(&s) {
                    sums.insert((i, j), k);
                }
            }
        }
        sys.sums = sums;
        debug_assert!(n == 0 || sys.roots[..n].iter().enumerate().all(|(i, r)| r.0[i] == 1 && r.height() == 1));
        Ok(sys)
    }

    fn reflect_coords(&self, b: usize, g: usize) -> Vec<i64> {
        let beta = &self.roots[b].0;
        let gamma = &self.roots[g].0;
        let num = 2 * dot_gram(&self.gram_int, gamma, beta);
        let den = dot_gram(&self.gram_int, beta, beta);
        assert_eq!(num % den, 0, "non-integral reflection coefficient");
        let c = num / den;
        gamma.iter().zip(beta).map(|(x, y)| x - c * y).collect()
    }

    pub fn datum(&self) -> &CartanDatum {
        &self.datum
    }

    pub fn cartan_type(&self) -> &CartanType {
        &self.datum.cartan_type
    }

    pub fn rank(&self) -> usize {
        self.datum.rank()
    }

    /// Number of positive roots.
    pub fn num_positive(&self) -> usize {
        self.n_pos
    }

    pub fn num_roots(&self) -> usize {
        2 * self.n_pos
    }

    pub fn root(&self, i: usize) -> &Root {
        &self.roots[i]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.roots[..self.n_pos]
    }

    pub fn index_of(&self, coords: &[i64]) -> Option<usize> {
        self.index.get(coords).copied()
    }

    pub fn index_of_root(&self, r: &Root) -> Result<usize> {
        if r.0.len() != self.rank() {
            return Err(Error::DimensionMismatch { expected: self.rank(), got: r.0.len() });
        }
        self.index_of(&r.0).ok_or_else(|| Error::NotARoot(r.0.clone()))
    }

    pub fn is_positive_index(&self, i: usize) -> bool {
        i < self.n_pos
    }

    pub fn negate_index(&self, i: usize) -> usize {
        if i < self.n_pos {
            i + self.n_pos
        } else {
            i - self.n_pos
        }
    }

    /// Index of the positive root among `+-i`.
    pub fn positive_part(&self, i: usize) -> usize {
        if i < self.n_pos {
            i
        } else {
            i - self.n_pos
        }
    }

    /// Index of `roots[i] + roots[j]` if that sum is a root.
    pub fn sum_index(&self, i: usize, j: usize) -> Option<usize> {
        self.sums.get(&(i, j)).copied()
    }

    /// Reflection table of the positive root with index `b`.
    pub fn reflection_table(&self, b: usize) -> &[u16] {
        &self.reflections[self.positive_part(b)]
    }

    /// `(a, b)` through the symmetrized Cartan form.
    pub fn inner_product(&self, a: &Root, b: &Root) -> Result<Ratio<i64>> {
        let n = self.rank();
        for v in [a, b] {
            if v.0.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: v.0.len() });
            }
        }
        let g = self.datum.gram();
        let mut s = Ratio::from_integer(0);
        for i in 0..n {
            for j in 0..n {
                s += Ratio::from_integer(a.0[i] * b.0[j]) * g[i][j];
            }
        }
        Ok(s)
    }

    /// Integer-scaled inner product of two index-addressed roots.
    pub fn inner_product_scaled(&self, a: usize, b: usize) -> i64 {
        dot_gram(&self.gram_int, &self.roots[a].0, &self.roots[b].0)
    }

    /// Integer-scaled inner product of arbitrary coordinate vectors.
    pub fn inner_product_scaled_coords(&self, a: &[i64], b: &[i64]) -> i64 {
        dot_gram(&self.gram_int, a, b)
    }

    /// `s_alpha(beta) = beta - 2 (beta, alpha) / (alpha, alpha) alpha`.
    pub fn reflect(&self, alpha: &Root, beta: &Root) -> Result<Root> {
        let a = self.index_of_root(alpha)?;
        let b = self.index_of_root(beta)?;
        let img = self.reflect_coords(self.positive_part(a), b);
        match self.index_of(&img) {
            Some(i) => Ok(self.roots[i].clone()),
            None => Err(Error::NotARoot(img)),
        }
    }

    /// Coroot `alpha^v = 2 alpha / (alpha, alpha)` in the basis of simple coroots.
    pub fn coroot_coords(&self, i: usize) -> Vec<i64> {
        let a = &self.roots[i].0;
        let norm = self.inner_product_scaled(i, i);
        (0..self.rank())
            .map(|s| {
                let ns = self.gram_int[s][s];
                assert_eq!(a[s] * ns % norm, 0);
                a[s] * ns / norm
            })
            .collect()
    }

    /// Root subsystem `R_U = R cap span(basis)` and its classification.
    pub fn subsystem(&self, basis: &[Root]) -> Result<Subsystem> {
        for b in basis {
            if b.0.len() != self.rank() {
                return Err(Error::DimensionMismatch { expected: self.rank(), got: b.0.len() });
            }
        }
        let span = Span::from_rows(self.rank(), basis.iter().map(|r| r.coords()));
        let positive: Vec<usize> = (0..self.n_pos)
            .filter(|&i| span.contains(&self.roots[i].0))
            .collect();
        Ok(self.subsystem_from_positive(positive))
    }

    /// Subsystem whose positive roots are the given (closed) set of positive root indices.
    pub fn subsystem_from_positive(&self, positive: Vec<usize>) -> Subsystem {
        let set: HashSet<usize> = positive.iter().copied().collect();
        let mut simple: Vec<usize> = Vec::new();
        'outer: for &g in &positive {
            for &a in &positive {
                let coords: Vec<i64> = self.roots[g].0.iter().zip(&self.roots[a].0).map(|(x, y)| x - y).collect();
                if let Some(b) = self.index_of(&coords) {
                    if set.contains(&b) {
                        continue 'outer;
                    }
                }
            }
            simple.push(g);
        }
        let cartan: Vec<Vec<i64>> = simple
            .iter()
            .map(|&i| {
                simple
                    .iter()
                    .map(|&j| 2 * self.inner_product_scaled(i, j) / self.inner_product_scaled(i, i))
                    .collect()
            })
            .collect();
        let (cartan_type, node_of) = classify_cartan(&cartan);
        let mut ordered = vec![0usize; simple.len()];
        for (k, &s) in simple.iter().enumerate() {
            ordered[node_of[k]] = s;
        }
        Subsystem { positive, simple: ordered, cartan_type }
    }
}

fn positive_roots(cartan: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let n = cartan.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut queue: Vec<Vec<i64>> = Vec::new();
    for i in 0..n {
        let mut e = vec![0; n];
        e[i] = 1;
        seen.insert(e.clone());
        queue.push(e);
    }
    let mut head = 0;
    while head < queue.len() {
        let beta = queue[head].clone();
        head += 1;
        for i in 0..n {
            let mut is_simple_i = true;
            for (j, &b) in beta.iter().enumerate() {
                if (j == i && b != 1) || (j != i && b != 0) {
                    is_simple_i = false;
                }
            }
            if is_simple_i {
                continue;
            }
            let c: i64 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
            let mut img = beta.clone();
            img[i] -= c;
            if img.iter().all(|&x| x >= 0) && seen.insert(img.clone()) {
                queue.push(img);
            }
        }
    }
    queue.sort_by(|a, b| {
        let ha: i64 = a.iter().sum();
        let hb: i64 = b.iter().sum();
        ha.cmp(&hb).then_with(|| b.cmp(a))
    });
    queue
}

/// `R_U` with its simple system `Delta_U` listed in the node order of `cartan_type`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subsystem {
    /// Ambient indices of `R_U^+`, ascending.
    pub positive: Vec<usize>,
    /// Ambient index of the simple root at each node of `cartan_type`.
    pub simple: Vec<usize>,
    pub cartan_type: CartanType,
}

/// All bijections `sigma` with `m[i][j] == s[sigma(i)][sigma(j)]`.
pub fn cartan_isomorphisms(m: &[Vec<i64>], s: &[Vec<i64>], first_only: bool) -> Vec<Vec<usize>> {
    let n = m.len();
    if s.len() != n {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut sigma = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn go(
        i: usize,
        m: &[Vec<i64>],
        s: &[Vec<i64>],
        sigma: &mut Vec<usize>,
        used: &mut Vec<bool>,
        out: &mut Vec<Vec<usize>>,
        first_only: bool,
    ) -> bool {
        let n = m.len();
        if i == n {
            out.push(sigma.clone());
            return first_only;
        }
        for c in 0..n {
            if used[c] || s[c][c] != m[i][i] {
                continue;
            }
            if (0..i).all(|j| m[i][j] == s[c][sigma[j]] && m[j][i] == s[sigma[j]][c]) {
                sigma[i] = c;
                used[c] = true;
                if go(i + 1, m, s, sigma, used, out, first_only) {
                    return true;
                }
                used[c] = false;
                sigma[i] = usize::MAX;
            }
        }
        false
    }
    go(0, m, s, &mut sigma, &mut used, &mut out, first_only);
    out
}

/// Diagram automorphisms of a standard type, as node permutations.
pub fn diagram_automorphisms(t: &CartanType) -> Vec<Vec<usize>> {
    let c = standard_cartan(t);
    cartan_isomorphisms(&c, &c, false)
}

/// Classifies a Cartan matrix up to simultaneous permutation. Returns the type
/// and, for each input node, its node index in the standard numbering.
pub fn classify_cartan(cartan: &[Vec<i64>]) -> (CartanType, Vec<usize>) {
    let n = cartan.len();
    let mut comp = vec![usize::MAX; n];
    let mut comps: Vec<Vec<usize>> = Vec::new();
    for start in 0..n {
        if comp[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut members = vec![start];
        comp[start] = id;
        let mut k = 0;
        while k < members.len() {
            let i = members[k];
            k += 1;
            for j in 0..n {
                if comp[j] == usize::MAX && cartan[i][j] != 0 {
                    comp[j] = id;
                    members.push(j);
                }
            }
        }
        members.sort_unstable();
        comps.push(members);
    }
    let mut typed: Vec<((Family, usize), Vec<usize>, Vec<usize>)> = Vec::new();
    for members in comps {
        let k = members.len();
        let sub: Vec<Vec<i64>> = members
            .iter()
            .map(|&i| members.iter().map(|&j| cartan[i][j]).collect())
            .collect();
        let mut found = None;
        for fam in [Family::A, Family::B, Family::C, Family::D, Family::E, Family::F, Family::G] {
            // C2 is reported as B2.
            if !fam.valid_rank(k) || (fam == Family::C && k == 2) {
                continue;
            }
            let t = CartanType { components: vec![(fam, k)] };
            let std = standard_cartan(&t);
            if let Some(sigma) = cartan_isomorphisms(&sub, &std, true).into_iter().next() {
                found = Some(((fam, k), sigma));
                break;
            }
        }
        let (ft, sigma) = found.expect("Cartan matrix of a finite root system");
        typed.push((ft, members, sigma));
    }
    typed.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1[0].cmp(&b.1[0])));
    let mut node_of = vec![0usize; n];
    let mut off = 0;
    let mut components = Vec::new();
    for (ft, members, sigma) in typed {
        for (pos, &i) in members.iter().enumerate() {
            node_of[i] = off + sigma[pos];
        }
        off += ft.1;
        components.push(ft);
    }
    (CartanType { components }, node_of)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent closure oracle: repeatedly apply all reflections in all roots
    /// (including negatives) to the simple roots until nothing new appears.
    fn closure_count(label: &str) -> usize {
        let datum = CartanDatum::new(label.parse().unwrap());
        let g = datum.gram();
        let n = datum.rank();
        let ip = |x: &[i64], y: &[i64]| {
            let mut s = Ratio::from_integer(0);
            for i in 0..n {
                for j in 0..n {
                    s += Ratio::from_integer(x[i] * y[j]) * g[i][j];
                }
            }
            s
        };
        let mut set: HashSet<Vec<i64>> = HashSet::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            set.insert(e);
        }
        loop {
            let cur: Vec<Vec<i64>> = set.iter().cloned().collect();
            let before = set.len();
            for a in &cur {
                for b in &cur {
                    let c = Ratio::from_integer(2) * ip(b, a) / ip(a, a);
                    assert!(c.is_integer());
                    let c = c.to_integer();
                    let img: Vec<i64> = b.iter().zip(a).map(|(x, y)| x - c * y).collect();
                    set.insert(img);
                }
            }
            if set.len() == before {
                break;
            }
        }
        set.iter().filter(|r| r.iter().all(|&x| x >= 0)).count()
    }

    #[test]
    fn positive_root_counts_match_closure_oracle() {
        for (label, expected) in [("A1", 1), ("A3", 6), ("B3", 9), ("E6", 36)] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(rs.num_positive(), expected, "{label}");
            assert_eq!(closure_count(label), expected, "{label}");
        }
        for label in ["C3", "D4", "F4", "G2", "B2", "A4", "D5", "E7"] {
            let rs = RootSystem::from_label(label).unwrap();
            assert_eq!(rs.num_positive(), closure_count(label), "{label}");
        }
    }

    #[test]
    fn invalid_types_rejected() {
        for bad in ["E5", "E9", "D3", "F3", "G3", "B1", "A0", "X2", "A"] {
            assert!(bad.parse::<CartanType>().is_err(), "{bad}");
        }
    }

    #[test]
    fn inner_products() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let a1 = a2.root(0).clone();
        let a2r = a2.root(1).clone();
        assert_eq!(a2.inner_product(&a1, &a1).unwrap(), Ratio::from_integer(2));
        assert_eq!(a2.inner_product(&a1, &a2r).unwrap(), Ratio::from_integer(-1));
        let a3 = RootSystem::from_label("A3").unwrap();
        assert_eq!(a3.inner_product(a3.root(0), a3.root(2)).unwrap(), Ratio::from_integer(0));
    }

    #[test]
    fn reflections() {
        let a2 = RootSystem::from_label("A2").unwrap();
        let a1 = a2.root(0).clone();
        let b = a2.root(1).clone();
        assert_eq!(a2.reflect(&a1, &a1).unwrap(), a1.neg());
        assert_eq!(a2.reflect(&a1, &b).unwrap().coords(), &[1, 1]);
        let a3 = RootSystem::from_label("A3").unwrap();
        assert_eq!(a3.reflect(a3.root(0), a3.root(2)).unwrap(), *a3.root(2));
    }

    #[test]
    fn closure_under_reflection_all_types() {
        for label in ["A3", "B3", "C3", "D4", "G2", "F4"] {
            let rs = RootSystem::from_label(label).unwrap();
            for a in 0..rs.num_roots() {
                for b in 0..rs.num_roots() {
                    assert!(rs.reflect(rs.root(a), rs.root(b)).is_ok());
                }
            }
        }
    }

    #[test]
    fn mixed_sign_vectors_are_not_roots() {
        assert!(Root::new(vec![1, -1]).is_err());
        assert!(Root::new(vec![0, 0]).is_err());
        let a3 = RootSystem::from_label("A3").unwrap();
        assert!(a3.index_of_root(&Root::new(vec![1, 0, 1]).unwrap()).is_err());
    }

    #[test]
    fn membership_agrees_with_linear_search() {
        let rs = RootSystem::from_label("B3").unwrap();
        for a in 0..3i64 {
            for b in 0..3i64 {
                for c in 0..3i64 {
                    let v = vec![a, b, c];
                    let linear = rs.positive_roots().iter().any(|r| r.coords() == v.as_slice());
                    assert_eq!(rs.index_of(&v).is_some_and(|i| i < rs.num_positive()), linear);
                }
            }
        }
    }

    #[test]
    fn subsystems_classify() {
        let b3 = RootSystem::from_label("B3").unwrap();
        let all: Vec<Root> = (0..3).map(|i| b3.root(i).clone()).collect();
        assert_eq!(b3.subsystem(&all).unwrap().cartan_type.to_string(), "B3");
        let sub = b3.subsystem(&all[1..]).unwrap();
        assert_eq!(sub.cartan_type.to_string(), "B2");
        let sub = b3.subsystem(&all[..1]).unwrap();
        assert_eq!(sub.cartan_type.to_string(), "A1");
        assert_eq!(b3.subsystem(&[]).unwrap().cartan_type, CartanType::empty());
        // Long roots of B3 form D3 = A3.
        let c3 = RootSystem::from_label("C3").unwrap();
        let all: Vec<Root> = (0..3).map(|i| c3.root(i).clone()).collect();
        assert_eq!(c3.subsystem(&all).unwrap().cartan_type.to_string(), "C3");
    }

    #[test]
    fn classification_up_to_permutation() {
        let d4 = standard_cartan(&"D4".parse().unwrap());
        let perm = [3, 0, 2, 1];
        let permuted: Vec<Vec<i64>> = (0..4)
            .map(|i| (0..4).map(|j| d4[perm[i]][perm[j]]).collect())
            .collect();
        let (t, _) = classify_cartan(&permuted);
        assert_eq!(t.to_string(), "D4");
        assert_eq!(diagram_automorphisms(&"D4".parse().unwrap()).len(), 6);
        assert_eq!(diagram_automorphisms(&"B3".parse().unwrap()).len(), 1);
        assert_eq!(diagram_automorphisms(&"A3".parse().unwrap()).len(), 2);
    }

    #[test]
    fn b_and_c_are_dual() {
        let b3 = RootSystem::from_label("B3").unwrap();
        let c3 = RootSystem::from_label("C3").unwrap();
        let mut dual: Vec<Vec<i64>> = (0..b3.num_positive()).map(|i| b3.coroot_coords(i)).collect();
        let mut croots: Vec<Vec<i64>> = c3.positive_roots().iter().map(|r| r.coords().to_vec()).collect();
        dual.sort();
        croots.sort();
        assert_eq!(dual, croots);
    }

    #[test]
    fn cartan_datum_is_valid() {
        for label in ["A3", "B4", "C4", "D6", "E8", "F4", "G2"] {
            CartanDatum::new(label.parse().unwrap()).validate().unwrap();
        }
        let mut bad = CartanDatum::new("A2".parse().unwrap());
        bad.cartan_matrix[0][1] = 1;
        assert!(bad.validate().is_err());
    }
}
