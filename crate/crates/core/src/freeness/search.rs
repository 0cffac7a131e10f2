use std::sync::atomic::{AtomicBool, Ordering};

use dashmap::DashMap;
use rayon::prelude::*;

use super::{pad, Certificate, FreenessResult, FreenessStatus};
use crate::arrangement::Arrangement;
use crate::poly::IntPolynomial;

pub const DEFAULT_MEMO_CAP: usize = 1_000_000;
pub const MEMO_CAP_ENV: &str = "WEYLINV_MEMO_CAP";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum PivotOrder {
    /// Sorted order of the normals.
    #[default]
    Lex,
    /// Largest coordinate sum first, ties in sorted order.
    Height,
}

#[derive(Clone, Debug)]
pub struct SearchConfig {
    pub order: PivotOrder,
    pub threads: usize,
    pub memo_cap: usize,
}

impl Default for SearchConfig {
    /// Lex order, one thread, memo cap from `WEYLINV_MEMO_CAP` or 10^6.
    fn default() -> Self {
        let memo_cap = std::env::var(MEMO_CAP_ENV)
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_MEMO_CAP);
        SearchConfig { order: PivotOrder::Lex, threads: 1, memo_cap }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Outcome {
    Free,
    NotFree,
    Undetermined,
}

#[derive(Clone, Debug)]
struct Entry {
    outcome: Outcome,
    /// Coexponents of the essential arrangement (length = its dimension).
    exps: Vec<usize>,
    /// Index of the first good pivot.
    pivot: Option<usize>,
}

/// Memoized search for inductive freeness. The memo is keyed by the
/// arrangement modulo its center and can be reused across queries.
pub struct FreenessSearch {
    config: SearchConfig,
    memo: DashMap<Arrangement, Entry>,
    poincare: DashMap<Arrangement, IntPolynomial>,
    exhausted: AtomicBool,
}

impl FreenessSearch {
    pub fn new(config: SearchConfig) -> Self {
        FreenessSearch {
            config,
            memo: DashMap::new(),
            poincare: DashMap::new(),
            exhausted: AtomicBool::new(false),
        }
    }

    pub fn config(&self) -> &SearchConfig {
        &self.config
    }

    pub fn memo_len(&self) -> usize {
        self.memo.len()
    }

    pub fn run(&self, a: &Arrangement) -> FreenessResult {
        let canon = a.canonical();
        let outcome = if self.config.threads > 1 {
            let pool = rayon::ThreadPoolBuilder::new()
                .num_threads(self.config.threads)
                .build()
                .expect("thread pool");
            pool.install(|| self.solve(&canon))
        } else {
            self.solve(&canon)
        };
        let poincare = self.q(&canon);
        let splits = poincare.linear_factor_roots().is_some();
        let status = match outcome.outcome {
            Outcome::Free => FreenessStatus::Free {
                coexponents: pad(outcome.exps.clone(), a.dim()),
                certificate: self.certificate(&canon),
            },
            Outcome::NotFree => FreenessStatus::NotInductivelyFree,
            Outcome::Undetermined => FreenessStatus::Undetermined,
        };
        FreenessResult { status, poincare, splits }
    }

    fn q(&self, a: &Arrangement) -> IntPolynomial {
        if let Some(p) = self.poincare.get(a) {
            return p.clone();
        }
        let p = a.poincare_polynomial();
        self.poincare.insert(a.clone(), p.clone());
        p
    }

    fn pivot_order(&self, a: &Arrangement) -> Vec<usize> {
        let mut idx: Vec<usize> = (0..a.len()).collect();
        if self.config.order == PivotOrder::Height {
            idx.sort_by_key(|&i| (-a.normals()[i].iter().sum::<i64>(), i));
        }
        idx
    }

    /// `a` must be essential.
    fn solve(&self, a: &Arrangement) -> Entry {
        if let Some(e) = self.memo.get(a) {
            return e.clone();
        }
        if self.memo.len() >= self.config.memo_cap {
            self.exhausted.store(true, Ordering::Relaxed);
            return Entry { outcome: Outcome::Undetermined, exps: Vec::new(), pivot: None };
        }
        let r = a.dim();
        let q = self.q(a);
        let entry = match q.linear_factor_roots() {
            Some(d) if r <= 2 => Entry { outcome: Outcome::Free, exps: pad(d, r), pivot: None },
            None => Entry { outcome: Outcome::NotFree, exps: Vec::new(), pivot: None },
            Some(d) => self.search_pivots(a, pad(d, r)),
        };
        if entry.outcome != Outcome::Undetermined {
            self.memo.insert(a.clone(), entry.clone());
        }
        entry
    }

    fn search_pivots(&self, a: &Arrangement, d: Vec<usize>) -> Entry {
        let undetermined = AtomicBool::new(false);
        let good = |&i: &usize| -> bool {
            match self.try_pivot(a, i, &d) {
                Outcome::Free => true,
                Outcome::NotFree => false,
                Outcome::Undetermined => {
                    undetermined.store(true, Ordering::Relaxed);
                    false
                }
            }
        };
        let order = self.pivot_order(a);
        let found = if self.config.threads > 1 {
            order.par_iter().find_first(|i| good(i)).copied()
        } else {
            order.iter().find(|i| good(i)).copied()
        };
        match found {
            Some(i) => Entry { outcome: Outcome::Free, exps: d, pivot: Some(i) },
            None if undetermined.load(Ordering::Relaxed) => {
                Entry { outcome: Outcome::Undetermined, exps: Vec::new(), pivot: None }
            }
            None => Entry { outcome: Outcome::NotFree, exps: Vec::new(), pivot: None },
        }
    }

    /// Good-pivot test: `A^H` free with coexponents `D` minus one entry `x`,
    /// and `A \ H` free with that entry lowered to `x - 1`.
    fn try_pivot(&self, a: &Arrangement, i: usize, d: &[usize]) -> Outcome {
        let res = a.restrict_index(i).canonical();
        let qr = self.q(&res);
        let Some(rd) = qr.linear_factor_roots() else {
            return Outcome::NotFree;
        };
        let rd = pad(rd, res.dim());
        if rd.len() + 1 != d.len() {
            return Outcome::NotFree;
        }
        let mut rest = d.to_vec();
        for x in &rd {
            match rest.iter().position(|y| y == x) {
                Some(p) => {
                    rest.remove(p);
                }
                None => return Outcome::NotFree,
            }
        }
        if rest[0] == 0 {
            return Outcome::NotFree;
        }
        match self.solve(&res).outcome {
            Outcome::Free => {}
            other => return other,
        }
        let del = a.delete_index(i).canonical();
        self.solve(&del).outcome
    }

    fn certificate(&self, a: &Arrangement) -> Certificate {
        let entry = self.solve(a);
        match entry.pivot {
            None => Certificate::Leaf,
            Some(i) => Certificate::Node {
                pivot: a.normals()[i].clone(),
                del: Box::new(self.certificate(&a.delete_index(i).canonical())),
                res: Box::new(self.certificate(&a.restrict_index(i).canonical())),
            },
        }
    }
}
