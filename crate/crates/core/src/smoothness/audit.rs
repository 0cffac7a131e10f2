use rayon::prelude::*;
use serde::Serialize;

use super::{complete_chain_bp, exponents, hlss, split};
use crate::error::{Error, Result};
use crate::freeness::{FreenessSearch, SearchConfig};
use crate::inversion::inversion_arrangement;
use crate::weyl::{Side, WeylElement, WeylGroup};

/// Largest group scanned without an explicit override.
pub const AUDIT_GUARD: u64 = 100_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Check {
    /// Smooth iff inductively free with `prod (1 + d_i) = |[e, w]|`, and then
    /// coexponents equal exponents.
    Main,
    /// For every `J` and side: chain BP iff `cap J(u)` is a modular coatom.
    BpModular,
    /// Complete chain BP iff smooth and supersolvable.
    Supersolvable,
    /// Smooth implies HLSS.
    Hlss,
}

impl Check {
    pub const ALL: [Check; 4] = [Check::Main, Check::BpModular, Check::Supersolvable, Check::Hlss];

    pub fn name(self) -> &'static str {
        match self {
            Check::Main => "main",
            Check::BpModular => "bp-modular",
            Check::Supersolvable => "supersolvable",
            Check::Hlss => "hlss",
        }
    }

    pub fn from_name(s: &str) -> Option<Check> {
        Check::ALL.into_iter().find(|c| c.name() == s)
    }
}

#[derive(Clone, Debug)]
pub struct AuditOptions {
    pub checks: Vec<Check>,
    /// Scan groups larger than [`AUDIT_GUARD`].
    pub override_guard: bool,
    /// When set, the bp-modular check only visits every `n`-th subset `J`
    /// (by bitmask), and the element index shifts the start so all subsets
    /// get covered across the group.
    pub j_stride: Option<usize>,
    pub search: SearchConfig,
}

impl Default for AuditOptions {
    fn default() -> Self {
        AuditOptions { checks: Check::ALL.to_vec(), override_guard: false, j_stride: None, search: SearchConfig::default() }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub check: Check,
    /// Number of individual instances checked.
    pub checked: u64,
    /// Sorted descriptions of failures.
    pub counterexamples: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub system: String,
    pub elements: u64,
    pub checks: Vec<CheckReport>,
}

impl AuditReport {
    pub fn total_counterexamples(&self) -> usize {
        self.checks.iter().map(|c| c.counterexamples.len()).sum()
    }
}

struct ElementOutcome {
    counts: Vec<u64>,
    failures: Vec<Vec<String>>,
}

/// Exhaustive check of the main theorems over every element of `g`.
pub fn theorem_audit(g: &WeylGroup, opts: &AuditOptions) -> Result<AuditReport> {
    let size = g.order();
    if size > AUDIT_GUARD && !opts.override_guard {
        return Err(Error::GuardExceeded { size, limit: AUDIT_GUARD });
    }
    let mut checks = opts.checks.clone();
    checks.sort();
    checks.dedup();
    let search = FreenessSearch::new(opts.search.clone());
    let elements = g.elements();
    let outcomes: Vec<ElementOutcome> = elements
        .par_iter()
        .enumerate()
        .map(|(idx, w)| audit_element(g, w, idx, &checks, opts, &search))
        .collect();
    let mut reports: Vec<CheckReport> = checks
        .iter()
        .map(|&check| CheckReport { check, checked: 0, counterexamples: Vec::new() })
        .collect();
    for o in outcomes {
        for (k, r) in reports.iter_mut().enumerate() {
            r.checked += o.counts[k];
            r.counterexamples.extend(o.failures[k].iter().cloned());
        }
    }
    for r in &mut reports {
        r.counterexamples.sort();
    }
    Ok(AuditReport { system: g.root_system().cartan_type().to_string(), elements: elements.len() as u64, checks: reports })
}

fn one_based(j: &[usize]) -> Vec<usize> {
    j.iter().map(|s| s + 1).collect()
}

fn audit_element(
    g: &WeylGroup,
    w: &WeylElement,
    idx: usize,
    checks: &[Check],
    opts: &AuditOptions,
    search: &FreenessSearch,
) -> ElementOutcome {
    let name = g.format(w);
    let smooth = g.poincare(w).is_palindromic();
    let arr = inversion_arrangement(g, w);
    let mut counts = vec![0u64; checks.len()];
    let mut failures = vec![Vec::new(); checks.len()];
    for (k, &check) in checks.iter().enumerate() {
        match check {
            Check::Main => {
                counts[k] += 1;
                let fr = search.run(&arr);
                let size = g.bruhat_interval(w).len() as u64;
                let rhs = match fr.coexponents() {
                    Some(d) => d.iter().map(|&x| x as u64 + 1).product::<u64>() == size,
                    None => false,
                };
                if smooth != rhs {
                    failures[k].push(format!("{name}: smooth={smooth} free-and-count={rhs} ({})", fr.status.label()));
                } else if smooth {
                    let m = exponents(g, w);
                    if m.as_deref() != fr.coexponents() {
                        failures[k].push(format!("{name}: exponents {m:?} != coexponents {:?}", fr.coexponents()));
                    }
                }
            }
            Check::BpModular => {
                let n = g.rank();
                for mask in 0u32..1 << n {
                    if let Some(stride) = opts.j_stride {
                        if (mask as usize + idx) % stride.max(1) != 0 {
                            continue;
                        }
                    }
                    let j: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                    for side in [Side::Left, Side::Right] {
                        counts[k] += 1;
                        if let Some(msg) = bp_modular_case(g, w, &j, side) {
                            failures[k].push(format!("{name}: J={:?} {side}: {msg}", one_based(&j)));
                        }
                    }
                }
            }
            Check::Supersolvable => {
                counts[k] += 1;
                let ccbp = complete_chain_bp(g, w).is_some();
                let ss = arr.is_supersolvable();
                if ccbp != (smooth && ss) {
                    failures[k].push(format!("{name}: complete-chain-bp={ccbp} smooth={smooth} supersolvable={ss}"));
                }
            }
            Check::Hlss => {
                if smooth {
                    counts[k] += 1;
                    if !hlss(g, w) {
                        failures[k].push(format!("{name}: smooth but not HLSS"));
                    }
                }
            }
        }
    }
    ElementOutcome { counts, failures }
}

/// The right-hand statement is the left one for `w^{-1}`.
fn bp_modular_case(g: &WeylGroup, w: &WeylElement, j: &[usize], side: Side) -> Option<String> {
    let d = split(g, w, j, side).ok()?;
    let chain_bp = g.length(&d.v) >= 1 && super::is_bp(g, w, j, side) && d.is_chain;
    let (ww, uu) = match side {
        Side::Left => (w.clone(), d.u.clone()),
        Side::Right => (g.inverse(w), g.inverse(&d.u)),
    };
    let a = inversion_arrangement(g, &ww);
    let hyps: Vec<usize> = g
        .inversion_indices(&uu)
        .into_iter()
        .map(|b| a.index_of(g.root_system().root(b).coords()).expect("I(u) lies in I(w)"))
        .collect();
    let x = a.flat(&hyps);
    let modular = a.is_modular_coatom(&x).unwrap_or(false);
    (chain_bp != modular).then(|| format!("chain-bp={chain_bp} modular-coatom={modular}"))
}
