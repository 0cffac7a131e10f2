use std::collections::{HashMap, HashSet};
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::inversion::{embedding_into, flatten_into};
use crate::linalg::Span;
use crate::rootsys::diagram_automorphisms;
use crate::weyl::{WeylElement, WeylGroup};

/// A bad pattern for rational smoothness. Words are 1-based, with the node
/// labelling `1-2-3` for `A3`, `1-2=3` for `B3`/`C3` and the `D4` star
/// centred at node 2.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Pattern {
    pub id: &'static str,
    /// Systems the word is realized in; `B3` rows are matched in both `B3` and `C3`.
    pub systems: &'static [&'static str],
    pub word: &'static [usize],
}

const BC: &[&str] = &["B3", "C3"];

static PATTERNS: [Pattern; 17] = [
    Pattern { id: "A3-3412", systems: &["A3"], word: &[2, 1, 3, 2] },
    Pattern { id: "A3-4231", systems: &["A3"], word: &[1, 2, 3, 2, 1] },
    Pattern { id: "D4-s2s1s3s4s2", systems: &["D4"], word: &[2, 1, 3, 4, 2] },
    Pattern { id: "B3-r01", systems: BC, word: &[2, 1, 3, 2] },
    Pattern { id: "B3-r02", systems: BC, word: &[3, 2, 1, 3, 2] },
    Pattern { id: "B3-r03", systems: BC, word: &[2, 1, 3, 2, 3] },
    Pattern { id: "B3-r04", systems: BC, word: &[3, 2, 1, 3, 2, 3] },
    Pattern { id: "B3-r05", systems: BC, word: &[3, 2, 1, 2, 3] },
    Pattern { id: "B3-r06", systems: BC, word: &[2, 3, 2, 1, 2, 3] },
    Pattern { id: "B3-r07", systems: BC, word: &[3, 2, 1, 2, 3, 2] },
    Pattern { id: "B3-r08", systems: BC, word: &[2, 3, 2, 1, 2, 3, 2] },
    Pattern { id: "B3-r09", systems: BC, word: &[1, 2, 3, 2, 1] },
    Pattern { id: "B3-r10", systems: BC, word: &[1, 2, 3, 2, 1, 3] },
    Pattern { id: "B3-r11", systems: BC, word: &[1, 2, 3, 2, 1, 2, 3] },
    Pattern { id: "B3-r12", systems: BC, word: &[1, 2, 3, 2, 1, 3, 2] },
    Pattern { id: "B3-r13", systems: BC, word: &[1, 2, 3, 2, 1, 2, 3, 2] },
    Pattern { id: "B3-r14", systems: BC, word: &[1, 2, 3, 2, 1, 3, 2, 3] },
];

pub fn patterns() -> &'static [Pattern] {
    &PATTERNS
}

pub fn pattern(id: &str) -> Result<&'static Pattern> {
    PATTERNS.iter().find(|p| p.id == id).ok_or_else(|| Error::UnknownPattern(id.to_string()))
}

impl Pattern {
    /// The pattern element in a group of one of its systems.
    pub fn element(&self, g: &WeylGroup) -> Result<WeylElement> {
        g.from_word(&self.word.iter().map(|s| s - 1).collect::<Vec<_>>())
    }
}

struct Target {
    group: WeylGroup,
    /// Per pattern index: the pattern element under every diagram automorphism.
    variants: Vec<(usize, Vec<WeylElement>)>,
}

/// Pattern containment through flattening to root subsystems.
pub struct PatternMatcher {
    targets: HashMap<String, Target>,
}

impl Default for PatternMatcher {
    fn default() -> Self {
        Self::new()
    }
}

impl PatternMatcher {
    pub fn new() -> Self {
        let mut targets: HashMap<String, Target> = HashMap::new();
        for (pi, p) in PATTERNS.iter().enumerate() {
            for &sys in p.systems {
                let t = targets.entry(sys.to_string()).or_insert_with(|| Target {
                    group: WeylGroup::from_label(sys).expect("pattern system"),
                    variants: Vec::new(),
                });
                let autos = diagram_automorphisms(t.group.root_system().cartan_type());
                let mut vs: Vec<WeylElement> = autos
                    .iter()
                    .map(|sigma| {
                        let word: Vec<usize> = p.word.iter().map(|&s| sigma[s - 1]).collect();
                        t.group.from_word(&word).expect("pattern word")
                    })
                    .collect();
                vs.sort();
                vs.dedup();
                t.variants.push((pi, vs));
            }
        }
        PatternMatcher { targets }
    }

    /// Indices into [`patterns`] of every pattern contained in `w`, ascending.
    fn hit_indices(&self, g: &WeylGroup, w: &WeylElement) -> Vec<usize> {
        let rs = g.root_system();
        // Every pattern has full support, so its inversion set spans its
        // ambient space; a matching U is therefore spanned by roots of I(w).
        let inv = g.inversion_indices(w);
        let n = inv.len();
        let mut hits: Vec<usize> = Vec::new();
        let mut seen: HashSet<Vec<usize>> = HashSet::new();
        for k in [3usize, 4] {
            if k > rs.rank() || k > n {
                continue;
            }
            let mut combo: Vec<usize> = (0..k).collect();
            loop {
                let span = Span::from_rows(rs.rank(), combo.iter().map(|&i| rs.root(inv[i]).coords()));
                if span.rank() == k {
                    let key: Vec<usize> =
                        (0..rs.num_positive()).filter(|&i| span.contains(rs.root(i).coords())).collect();
                    if seen.insert(key.clone()) {
                        self.check_subspace(g, w, key, &mut hits);
                    }
                }
                if !next_combination(&mut combo, n) {
                    break;
                }
            }
        }
        hits.sort_unstable();
        hits.dedup();
        hits
    }

    fn check_subspace(&self, g: &WeylGroup, w: &WeylElement, positive: Vec<usize>, hits: &mut Vec<usize>) {
        let sub = g.root_system().subsystem_from_positive(positive);
        let Some(t) = self.targets.get(&sub.cartan_type.to_string()) else {
            return;
        };
        let embedding = embedding_into(g.root_system(), &sub, &t.group);
        let fl = flatten_into(g, w, &sub, &t.group, &embedding);
        for (pi, vs) in &t.variants {
            if vs.binary_search(&fl).is_ok() {
                hits.push(*pi);
            }
        }
    }

    pub fn hits(&self, g: &WeylGroup, w: &WeylElement) -> Vec<&'static str> {
        self.hit_indices(g, w).into_iter().map(|i| PATTERNS[i].id).collect()
    }

    pub fn contains(&self, g: &WeylGroup, w: &WeylElement, id: &str) -> Result<bool> {
        let p = pattern(id)?;
        Ok(self.hits(g, w).contains(&p.id))
    }
}

fn next_combination(c: &mut [usize], n: usize) -> bool {
    let k = c.len();
    let mut i = k;
    while i > 0 {
        i -= 1;
        if c[i] < n - k + i {
            c[i] += 1;
            for j in i + 1..k {
                c[j] = c[j - 1] + 1;
            }
            return true;
        }
    }
    false
}

fn matcher() -> &'static PatternMatcher {
    static M: OnceLock<PatternMatcher> = OnceLock::new();
    M.get_or_init(PatternMatcher::new)
}

/// Ids of all patterns contained in `w`, in table order.
pub fn pattern_hits(g: &WeylGroup, w: &WeylElement) -> Vec<&'static str> {
    matcher().hits(g, w)
}

pub fn contains_pattern(g: &WeylGroup, w: &WeylElement, id: &str) -> Result<bool> {
    matcher().contains(g, w, id)
}
