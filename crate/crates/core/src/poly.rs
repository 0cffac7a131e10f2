//! Dense integer polynomials in one variable.

use std::fmt;

use serde::{Deserialize, Serialize};

/// Integer polynomial, lowest degree first, without trailing zeros.
///
/// The zero polynomial has an empty coefficient list.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    coeffs: Vec<i64>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<i64>) -> Self {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        IntPolynomial { coeffs: vec![1] }
    }

    /// The q-integer `[m]_q = 1 + q + ... + q^(m-1)`.
    pub fn q_integer(m: usize) -> Self {
        IntPolynomial::new(vec![1; m])
    }

    /// `1 + d t`.
    pub fn linear(d: i64) -> Self {
        IntPolynomial::new(vec![1, d])
    }

    pub fn coeffs(&self) -> &[i64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, i: usize) -> i64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn eval(&self, x: i64) -> i64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| acc * x + c)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0i64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                c[i + j] += a * b;
            }
        }
        Self::new(c)
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + other.coeff(i)).collect())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - other.coeff(i)).collect())
    }

    /// Multiplication by `t^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = vec![0; k];
        c.extend_from_slice(&self.coeffs);
        Self::new(c)
    }

    /// Exact division; `None` if `divisor` does not divide `self` over the integers.
    pub fn div_exact(&self, divisor: &Self) -> Option<Self> {
        if divisor.is_zero() {
            return None;
        }
        if self.is_zero() {
            return Some(Self::zero());
        }
        if self.degree() < divisor.degree() {
            return None;
        }
        let lead = *divisor.coeffs.last().unwrap();
        let mut rem = self.coeffs.clone();
        let dd = divisor.degree();
        let mut q = vec![0i64; self.degree() - dd + 1];
        for k in (0..q.len()).rev() {
            let top = rem[k + dd];
            if top % lead != 0 {
                return None;
            }
            let f = top / lead;
            q[k] = f;
            for (j, &c) in divisor.coeffs.iter().enumerate() {
                rem[k + j] -= f * c;
            }
        }
        if rem.iter().any(|&x| x != 0) {
            return None;
        }
        Some(Self::new(q))
    }

    pub fn is_palindromic(&self) -> bool {
        self.coeffs.iter().eq(self.coeffs.iter().rev())
    }

    pub fn product<'a, I: IntoIterator<Item = &'a IntPolynomial>>(it: I) -> Self {
        it.into_iter().fold(Self::one(), |acc, p| acc.mul(p))
    }

    /// `prod_i [m_i + 1]_q`.
    pub fn from_exponents(exps: &[usize]) -> Self {
        exps.iter()
            .fold(Self::one(), |acc, &m| acc.mul(&Self::q_integer(m + 1)))
    }

    /// `prod_i (1 + d_i t)`.
    pub fn from_coexponents(coexps: &[usize]) -> Self {
        coexps
            .iter()
            .fold(Self::one(), |acc, &d| acc.mul(&Self::linear(d as i64)))
    }

    /// Multiset `{m_i}` (sorted, zeros omitted) with `self = prod [m_i + 1]_q`,
    /// or `None` if no factorization into q-integers exists.
    ///
    /// Trial division by `[d]_q`, `d = 2..=deg+1`, smallest first, never
    /// decreasing, with backtracking.
    pub fn q_integer_factorization(&self) -> Option<Vec<usize>> {
        if self.coeff(0) != 1 {
            return None;
        }
        fn go(p: &IntPolynomial, min_d: usize, acc: &mut Vec<usize>) -> bool {
            if p.degree() == 0 {
                return p.coeff(0) == 1;
            }
            for d in min_d..=p.degree() + 1 {
                if let Some(q) = p.div_exact(&IntPolynomial::q_integer(d)) {
                    acc.push(d - 1);
                    if go(&q, d, acc) {
                        return true;
                    }
                    acc.pop();
                }
            }
            false
        }
        let mut acc = Vec::new();
        if go(self, 2, &mut acc) {
            Some(acc)
        } else {
            None
        }
    }

    /// Positive integers `d_i` (sorted) with `self = prod (1 + d_i t)`, or `None`
    /// if the polynomial does not split this way.
    pub fn linear_factor_roots(&self) -> Option<Vec<usize>> {
        if self.coeff(0) != 1 {
            return None;
        }
        let mut p = self.clone();
        let mut ds = Vec::new();
        let mut d = 1i64;
        while p.degree() > 0 {
            let lead = *p.coeffs.last().unwrap();
            if lead <= 0 {
                return None;
            }
            let mut found = false;
            while d <= lead {
                if lead % d == 0 {
                    if let Some(q) = p.div_exact(&Self::linear(d)) {
                        p = q;
                        ds.push(d as usize);
                        found = true;
                        break;
                    }
                }
                d += 1;
            }
            if !found {
                return None;
            }
        }
        if p.coeff(0) != 1 {
            return None;
        }
        Some(ds)
    }

    /// `t^l * self(-1/t)`, the characteristic-polynomial transform for ambient dimension `l`.
    pub fn char_transform(&self, l: usize) -> Self {
        assert!(self.degree() <= l || self.is_zero());
        let mut c = vec![0i64; l + 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            let sign = if i % 2 == 0 { 1 } else { -1 };
            c[l - i] += sign * a;
        }
        Self::new(c)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            let sign = if c < 0 { "-" } else { "+" };
            if first {
                if c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            first = false;
            let a = c.abs();
            match i {
                0 => write!(f, "{a}")?,
                1 if a == 1 => write!(f, "q")?,
                1 => write!(f, "{a}q")?,
                _ if a == 1 => write!(f, "q^{i}")?,
                _ => write!(f, "{a}q^{i}")?,
            }
        }
        Ok(())
    }
}
