//! Stand-alone certificate checker.
//!
//! Deliberately self-contained: it does its own rational row reduction,
//! quotienting, restriction and NBC counting, and uses none of the search or
//! arrangement code paths beyond reading the input normals.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Certificate;
use crate::arrangement::Arrangement;

/// Why and where a certificate was rejected.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Reject {
    /// Path from the root, e.g. `root.del.res`.
    pub path: String,
    pub reason: String,
}

impl fmt::Display for Reject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "rejected at {}: {}", self.path, self.reason)
    }
}

type Row = Vec<BigInt>;

#[derive(Clone, Debug, PartialEq, Eq)]
struct Arr {
    dim: usize,
    normals: Vec<Row>,
}

fn primitive_positive(v: Vec<BigInt>) -> Option<Row> {
    let g = v.iter().fold(BigInt::zero(), |g, x| g.gcd(x));
    if g.is_zero() {
        return None;
    }
    let mut out: Row = v.into_iter().map(|x| x / &g).collect();
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -x.clone();
        }
    }
    Some(out)
}

fn ratio_row_to_int(v: &[BigRational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |l, x| l.lcm(x.denom()));
    v.iter().map(|x| (x * BigRational::from_integer(l.clone())).to_integer()).collect()
}

fn build(dim: usize, rows: Vec<Row>) -> Arr {
    let mut normals: Vec<Row> = rows.into_iter().filter_map(primitive_positive).collect();
    normals.sort();
    normals.dedup();
    Arr { dim, normals }
}

/// Reduced row echelon form: nonzero rows and pivot columns.
fn echelon(dim: usize, rows: &[Row]) -> (Vec<Vec<BigRational>>, Vec<usize>) {
    let mut m: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|x| BigRational::from_integer(x.clone())).collect())
        .collect();
    let mut piv = Vec::new();
    let mut top = 0;
    for c in 0..dim {
        let Some(k) = (top..m.len()).find(|&k| !m[k][c].is_zero()) else {
            continue;
        };
        m.swap(top, k);
        let lead = m[top][c].clone();
        for x in m[top].iter_mut() {
            *x = x.clone() / lead.clone();
        }
        for k in 0..m.len() {
            if k != top && !m[k][c].is_zero() {
                let f = m[k][c].clone();
                for j in 0..dim {
                    let t = f.clone() * m[top][j].clone();
                    m[k][j] = m[k][j].clone() - t;
                }
            }
        }
        piv.push(c);
        top += 1;
    }
    m.truncate(top);
    (m, piv)
}

fn rank_of(dim: usize, rows: &[Row]) -> usize {
    echelon(dim, rows).1.len()
}

/// Quotient by the center, in pivot-column coordinates.
fn essential(a: &Arr) -> Arr {
    let (_, piv) = echelon(a.dim, &a.normals);
    let rows = a.normals.iter().map(|n| piv.iter().map(|&p| n[p].clone()).collect()).collect();
    build(piv.len(), rows)
}

/// Restriction to `ker h`, using the null-space basis read off the echelon form of `h`.
fn restrict(a: &Arr, h: &Row) -> Arr {
    let (m, piv) = echelon(a.dim, std::slice::from_ref(h));
    let p = piv[0];
    let basis: Vec<Vec<BigRational>> = (0..a.dim)
        .filter(|&j| j != p)
        .map(|j| {
            let mut v = vec![BigRational::zero(); a.dim];
            v[j] = BigRational::one();
            v[p] = -m[0][j].clone();
            v
        })
        .collect();
    let rows = a
        .normals
        .iter()
        .filter(|n| *n != h)
        .map(|n| {
            let img: Vec<BigRational> = basis
                .iter()
                .map(|v| {
                    v.iter()
                        .zip(n)
                        .fold(BigRational::zero(), |s, (x, y)| s + x * BigRational::from_integer(y.clone()))
                })
                .collect();
            ratio_row_to_int(&img)
        })
        .collect();
    build(a.dim - 1, rows)
}

/// NBC counts by size, straight from the definition, for arrangements of rank <= 2.
fn small_nbc_counts(a: &Arr) -> Vec<u64> {
    let n = a.normals.len();
    let r = rank_of(a.dim, &a.normals);
    let mut counts = vec![0u64; r + 1];
    counts[0] = 1;
    let in_span = |set: &[usize], g: usize| -> bool {
        let mut rows: Vec<Row> = set.iter().map(|&i| a.normals[i].clone()).collect();
        let before = rank_of(a.dim, &rows);
        rows.push(a.normals[g].clone());
        rank_of(a.dim, &rows) == before
    };
    let is_nbc = |b: &[usize]| -> bool {
        let rows: Vec<Row> = b.iter().map(|&i| a.normals[i].clone()).collect();
        if rank_of(a.dim, &rows) != b.len() {
            return false;
        }
        (0..n).filter(|g| !b.contains(g)).all(|g| {
            let smaller: Vec<usize> = b.iter().copied().filter(|&x| x < g).collect();
            smaller.is_empty() || !in_span(&smaller, g)
        })
    };
    for i in 0..n {
        if r >= 1 && is_nbc(&[i]) {
            counts[1] += 1;
        }
        for j in i + 1..n {
            if r >= 2 && is_nbc(&[i, j]) {
                counts[2] += 1;
            }
        }
    }
    counts
}

/// Integer roots `d_i >= 1` of `sum c_i t^i = prod (1 + d_i t)` for degree <= 2.
fn small_roots(c: &[u64]) -> Option<Vec<usize>> {
    match c.len() {
        1 => Some(vec![]),
        2 => Some(vec![c[1] as usize]),
        3 => (1..=c[1]).find_map(|d| {
            let e = c[1] - d;
            (d <= e && d * e == c[2]).then(|| vec![d as usize, e as usize])
        }),
        _ => None,
    }
}

fn check(a: &Arr, cert: &Certificate, path: &mut Vec<&'static str>) -> Result<Vec<usize>, Reject> {
    let a = essential(a);
    let r = a.dim;
    let reject = |path: &Vec<&'static str>, reason: String| Reject { path: path.join("."), reason };
    match cert {
        Certificate::Leaf => {
            if r > 2 {
                return Err(reject(path, format!("leaf at effective rank {r}")));
            }
            let counts = small_nbc_counts(&a);
            small_roots(&counts).ok_or_else(|| reject(path, "Poincare polynomial does not split".into()))
        }
        Certificate::Node { pivot, del, res } => {
            if r <= 2 {
                return Err(reject(path, format!("node at effective rank {r}")));
            }
            if pivot.len() != r {
                return Err(reject(path, format!("pivot has length {}, expected {r}", pivot.len())));
            }
            let h: Row = pivot.iter().map(|&x| BigInt::from(x)).collect();
            if !a.normals.contains(&h) {
                return Err(reject(path, format!("pivot {pivot:?} is not a hyperplane here")));
            }
            let d_arr = Arr { dim: r, normals: a.normals.iter().filter(|n| **n != h).cloned().collect() };
            let r_arr = restrict(&a, &h);
            path.push("del");
            let mut d = check(&d_arr, del, path)?;
            path.pop();
            path.push("res");
            let rr = check(&r_arr, res, path)?;
            path.pop();
            while d.len() < r {
                d.push(0);
            }
            d.sort_unstable();
            let mut rest = d.clone();
            for x in &rr {
                match rest.iter().position(|y| y == x) {
                    Some(p) => {
                        rest.remove(p);
                    }
                    None => {
                        return Err(reject(
                            path,
                            format!("restriction coexponents {rr:?} are not contained in deletion coexponents {d:?}"),
                        ))
                    }
                }
            }
            if rest.len() != 1 {
                return Err(reject(path, format!("coexponent counts {d:?} / {rr:?} do not match")));
            }
            let mut out = rr;
            out.push(rest[0] + 1);
            out.sort_unstable();
            Ok(out)
        }
    }
}

/// Checks `cert` against `a`; on success returns the coexponents of `a`,
/// padded with zeros to its dimension.
pub fn verify_certificate(a: &Arrangement, cert: &Certificate) -> Result<Vec<usize>, Reject> {
    let arr = Arr {
        dim: a.dim(),
        normals: a.normals().iter().map(|n| n.iter().map(|&x| BigInt::from(x)).collect()).collect(),
    };
    let mut path = vec!["root"];
    let mut exps = check(&arr, cert, &mut path)?;
    while exps.len() < a.dim() {
        exps.push(0);
    }
    exps.sort_unstable();
    debug_assert!(exps.iter().all(|&e| e.to_u64().is_some()));
    Ok(exps)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freeness::{FreenessSearch, SearchConfig};
    use crate::inversion::inversion_arrangement;
    use crate::weyl::WeylGroup;

    #[test]
    fn accepts_search_output_on_a3() {
        let g = WeylGroup::from_label("A3").unwrap();
        for x in g.elements() {
            let a = inversion_arrangement(&g, &x);
            let r = FreenessSearch::new(SearchConfig::default()).run(&a);
            if let Some(cert) = r.certificate() {
                assert_eq!(verify_certificate(&a, cert).unwrap(), r.coexponents().unwrap());
            }
        }
    }

    #[test]
    fn rejects_bad_pivot_and_bad_shape() {
        let g = WeylGroup::from_label("A3").unwrap();
        let a = inversion_arrangement(&g, &g.longest());
        let r = FreenessSearch::new(SearchConfig::default()).run(&a);
        let cert = r.certificate().unwrap().clone();
        let Certificate::Node { del, res, .. } = cert.clone() else { panic!() };
        let bad = Certificate::Node { pivot: vec![1, -1, 0], del: del.clone(), res: res.clone() };
        let e = verify_certificate(&a, &bad).unwrap_err();
        assert_eq!(e.path, "root");
        assert!(verify_certificate(&a, &Certificate::Leaf).is_err());
        let two = Arrangement::new(2, vec![vec![1, 0], vec![0, 1]]).unwrap();
        assert_eq!(verify_certificate(&two, &Certificate::Leaf).unwrap(), vec![1, 1]);
        let node = Certificate::Node { pivot: vec![1, 0], del: Box::new(Certificate::Leaf), res: Box::new(Certificate::Leaf) };
        assert!(verify_certificate(&two, &node).is_err());
    }

    #[test]
    fn rejects_children_violating_addition() {
        // Four generic planes in rank 3: deleting (1,1,1) leaves the Boolean
        // arrangement {1,1,1} and restricting gives three lines {1,2}.
        // Both children verify on their own but 2 is not a deletion coexponent.
        let generic = Arrangement::new(3, vec![vec![1, 0, 0], vec![0, 1, 0], vec![0, 0, 1], vec![1, 1, 1]]).unwrap();
        let boolean = generic.deletion(&[1, 1, 1]).unwrap();
        let bc = FreenessSearch::new(SearchConfig::default()).run(&boolean);
        let del = bc.certificate().unwrap().clone();
        assert_eq!(verify_certificate(&boolean, &del).unwrap(), vec![1, 1, 1]);
        let cert = Certificate::Node { pivot: vec![1, 1, 1], del: Box::new(del), res: Box::new(Certificate::Leaf) };
        let e = verify_certificate(&generic, &cert).unwrap_err();
        assert_eq!(e.path, "root");
        assert!(e.reason.contains("not contained"));
    }
}
