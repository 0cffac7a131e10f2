//! Exact linear algebra over the integers.
//!
//! Everything here is fraction-free: rows are kept primitive (content 1) and
//! elimination uses cross-multiplication followed by a gcd reduction. The fast
//! path runs on `i128` with checked arithmetic and transparently switches to
//! arbitrary precision when a product would overflow.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{CheckedMul, CheckedSub, One, Signed, ToPrimitive, Zero};

/// Integer types the eliminator can run on.
pub trait ExactInt:
    Clone + Integer + Signed + CheckedMul + CheckedSub + std::fmt::Debug + From<i64>
{
}

impl ExactInt for i128 {}
impl ExactInt for BigInt {}

/// Incremental row echelon basis of a subspace of `T^dim`.
///
/// Every stored row has zeros at the pivot columns of all rows inserted before
/// it, so a vector can be reduced by walking the rows in insertion order.
#[derive(Clone, Debug)]
pub struct Echelon<T: ExactInt> {
    dim: usize,
    rows: Vec<(usize, Vec<T>)>,
}

fn make_primitive<T: ExactInt>(v: &mut [T]) {
    let mut g = T::zero();
    for x in v.iter() {
        g = g.gcd(x);
        if g.is_one() {
            return;
        }
    }
    if g.is_zero() || g.is_one() {
        return;
    }
    for x in v.iter_mut() {
        *x = x.div_floor(&g);
    }
}

impl<T: ExactInt> Echelon<T> {
    pub fn new(dim: usize) -> Self {
        Echelon { dim, rows: Vec::new() }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn pivots(&self) -> Vec<usize> {
        let mut p: Vec<usize> = self.rows.iter().map(|(p, _)| *p).collect();
        p.sort_unstable();
        p
    }

    /// Reduces `v` against the stored rows. `None` signals overflow.
    fn reduce(&self, mut v: Vec<T>) -> Option<Vec<T>> {
        for (p, row) in &self.rows {
            if v[*p].is_zero() {
                continue;
            }
            let g = row[*p].gcd(&v[*p]);
            let a = row[*p].div_floor(&g);
            let b = v[*p].div_floor(&g);
            for (x, r) in v.iter_mut().zip(row.iter()) {
                let lhs = a.checked_mul(x)?;
                let rhs = b.checked_mul(r)?;
                *x = lhs.checked_sub(&rhs)?;
            }
            make_primitive(&mut v);
        }
        Some(v)
    }

    /// Inserts `v`; returns `Some(true)` if it was independent of the current rows.
    pub fn insert(&mut self, v: Vec<T>) -> Option<bool> {
        debug_assert_eq!(v.len(), self.dim);
        let mut r = self.reduce(v)?;
        match r.iter().position(|x| !x.is_zero()) {
            None => Some(false),
            Some(p) => {
                if r[p].is_negative() {
                    for x in r.iter_mut() {
                        *x = -x.clone();
                    }
                }
                self.rows.push((p, r));
                Some(true)
            }
        }
    }

    pub fn contains(&self, v: Vec<T>) -> Option<bool> {
        Some(self.reduce(v)?.iter().all(|x| x.is_zero()))
    }
}

/// Span of integer vectors, upgrading from `i128` to `BigInt` on overflow.
#[derive(Clone, Debug)]
pub enum Span {
    Small(Echelon<i128>),
    Big(Echelon<BigInt>),
}

fn to_big(e: &Echelon<i128>) -> Echelon<BigInt> {
    Echelon {
        dim: e.dim,
        rows: e
            .rows
            .iter()
            .map(|(p, r)| (*p, r.iter().map(|&x| BigInt::from(x)).collect()))
            .collect(),
    }
}

impl Span {
    pub fn new(dim: usize) -> Self {
        Span::Small(Echelon::new(dim))
    }

    pub fn from_rows<'a, I: IntoIterator<Item = &'a [i64]>>(dim: usize, rows: I) -> Self {
        let mut s = Span::new(dim);
        for r in rows {
            s.insert(r);
        }
        s
    }

    pub fn rank(&self) -> usize {
        match self {
            Span::Small(e) => e.rank(),
            Span::Big(e) => e.rank(),
        }
    }

    pub fn dim(&self) -> usize {
        match self {
            Span::Small(e) => e.dim(),
            Span::Big(e) => e.dim(),
        }
    }

    /// Pivot columns of the reduced row echelon form of the spanned space.
    pub fn pivots(&self) -> Vec<usize> {
        match self {
            Span::Small(e) => e.pivots(),
            Span::Big(e) => e.pivots(),
        }
    }

    fn upgrade(&mut self) {
        if let Span::Small(e) = self {
            *self = Span::Big(to_big(e));
        }
    }

    /// Adds `v` to the span; returns whether the rank grew.
    pub fn insert(&mut self, v: &[i64]) -> bool {
        if let Span::Small(e) = self {
            if let Some(r) = e.insert(v.iter().map(|&x| x as i128).collect()) {
                return r;
            }
            self.upgrade();
        }
        match self {
            Span::Big(e) => e
                .insert(v.iter().map(|&x| BigInt::from(x)).collect())
                .expect("bigint arithmetic does not overflow"),
            Span::Small(_) => unreachable!(),
        }
    }

    pub fn contains(&self, v: &[i64]) -> bool {
        match self {
            Span::Small(e) => match e.contains(v.iter().map(|&x| x as i128).collect()) {
                Some(r) => r,
                None => to_big(e)
                    .contains(v.iter().map(|&x| BigInt::from(x)).collect())
                    .expect("bigint arithmetic does not overflow"),
            },
            Span::Big(e) => e
                .contains(v.iter().map(|&x| BigInt::from(x)).collect())
                .expect("bigint arithmetic does not overflow"),
        }
    }
}

/// Rank over the rationals of a list of integer vectors of length `dim`.
pub fn rank(dim: usize, rows: &[Vec<i64>]) -> usize {
    Span::from_rows(dim, rows.iter().map(|r| r.as_slice())).rank()
}

/// Divides a vector by the gcd of its entries. Zero vectors are returned unchanged.
pub fn primitive(v: &[i64]) -> Vec<i64> {
    let g = v.iter().fold(0i64, |g, &x| g.gcd(&x));
    if g <= 1 {
        return v.to_vec();
    }
    v.iter().map(|&x| x / g).collect()
}

/// Primitive vector whose first nonzero entry is positive.
pub fn normalize(v: &[i64]) -> Vec<i64> {
    let mut p = primitive(v);
    if let Some(first) = p.iter().find(|&&x| x != 0) {
        if *first < 0 {
            for x in p.iter_mut() {
                *x = -*x;
            }
        }
    }
    p
}

/// Reduced row echelon form over the rationals; returns the nonzero rows and pivot columns.
pub fn rref(dim: usize, rows: &[Vec<i64>]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&x| BigRational::from_integer(x.into())).collect())
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..dim {
        let Some(sel) = (row..m.len()).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..m.len() {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..dim {
                    let d = &f * &m[row][j];
                    m[i][j] = &m[i][j] - d;
                }
            }
        }
        pivots.push(col);
        row += 1;
        if row == m.len() {
            break;
        }
    }
    m.truncate(row);
    (m, pivots)
}

/// Pivot columns of the reduced row echelon form of `rows`, i.e. the columns
/// at which the rank of the leading column block increases.
pub fn pivot_columns(dim: usize, rows: &[Vec<i64>]) -> Vec<usize> {
    pivot_columns_i128(dim, rows).unwrap_or_else(|| rref(dim, rows).1)
}

fn pivot_columns_i128(dim: usize, rows: &[Vec<i64>]) -> Option<Vec<usize>> {
    let mut m: Vec<Vec<i128>> = rows.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
    let mut pivots = Vec::new();
    let mut top = 0;
    for col in 0..dim {
        if top == m.len() {
            break;
        }
        let Some(sel) = (top..m.len()).find(|&i| m[i][col] != 0) else {
            continue;
        };
        m.swap(top, sel);
        let p = m[top][col];
        for i in top + 1..m.len() {
            let f = m[i][col];
            if f == 0 {
                continue;
            }
            let mut g = 0i128;
            for j in col..dim {
                let v = m[i][j].checked_mul(p)?.checked_sub(m[top][j].checked_mul(f)?)?;
                m[i][j] = v;
                g = g.gcd(&v);
            }
            if g > 1 {
                for j in col..dim {
                    m[i][j] /= g;
                }
            }
        }
        pivots.push(col);
        top += 1;
    }
    Some(pivots)
}

/// Basis of the null space `{x : r . x = 0 for all rows r}`, in RREF-derived
/// form and scaled to primitive integer vectors.
pub fn nullspace(dim: usize, rows: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let (m, pivots) = rref(dim, rows);
    let free: Vec<usize> = (0..dim).filter(|c| !pivots.contains(c)).collect();
    let mut basis = Vec::with_capacity(free.len());
    for &f in &free {
        let mut v = vec![BigRational::zero(); dim];
        v[f] = BigRational::one();
        for (r, &p) in m.iter().zip(pivots.iter()) {
            v[p] = -r[f].clone();
        }
        basis.push(rational_to_primitive(&v));
    }
    basis
}

/// Scales a rational vector to a primitive integer vector with the same direction.
pub fn rational_to_primitive(v: &[BigRational]) -> Vec<i64> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &l).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    ints.iter()
        .map(|x| {
            let y = if g.is_zero() { x.clone() } else { x / &g };
            y.to_i64().expect("primitive vector fits in i64")
        })
        .collect()
}

/// Solves `v = sum c_i basis_i` exactly; `None` if `v` is not in the span.
pub fn coordinates(basis: &[Vec<i64>], v: &[i64]) -> Option<Vec<BigRational>> {
    let k = basis.len();
    let n = v.len();
    // Augmented system: n equations in k unknowns.
    let mut m: Vec<Vec<BigRational>> = (0..n)
        .map(|i| {
            let mut row: Vec<BigRational> = basis
                .iter()
                .map(|b| BigRational::from_integer(b[i].into()))
                .collect();
            row.push(BigRational::from_integer(v[i].into()));
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..k {
        let Some(sel) = (row..n).find(|&i| !m[i][col].is_zero()) else {
            continue;
        };
        m.swap(row, sel);
        let inv = m[row][col].recip();
        for x in m[row].iter_mut() {
            *x = &*x * &inv;
        }
        for i in 0..n {
            if i != row && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in 0..=k {
                    let d = &f * &m[row][j];
                    m[i][j] = &m[i][j] - d;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    if (row..n).any(|i| !m[i][k].is_zero()) {
        return None;
    }
    if pivots.len() < k {
        // Basis was dependent; coordinates are not unique.
        return None;
    }
    let mut c = vec![BigRational::zero(); k];
    for (r, &p) in pivots.iter().enumerate() {
        c[p] = m[r][k].clone();
    }
    Some(c)
}

/// Exact determinant of a square integer matrix (Bareiss).
pub fn determinant(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .map(|r| r.iter().map(|&x| BigInt::from(x)).collect())
        .collect();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * a[n - 1][n - 1].clone()
}
