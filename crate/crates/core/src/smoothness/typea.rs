//! Permutation tools for type `A_n`, where `s_i` is the transposition `(i, i+1)`
//! and elements are written in one-line notation `w(1) ... w(n+1)`.

use crate::error::{Error, Result};
use crate::rootsys::Family;
use crate::weyl::{WeylElement, WeylGroup};

fn type_a_rank(g: &WeylGroup) -> Result<usize> {
    let t = g.root_system().cartan_type();
    if t.is_irreducible_of(Family::A) {
        Ok(g.rank())
    } else {
        Err(Error::NotTypeA(t.to_string()))
    }
}

/// One-line notation, values 1..=n+1.
pub fn perm_of(g: &WeylGroup, w: &WeylElement) -> Result<Vec<usize>> {
    let n = type_a_rank(g)?;
    let mut p: Vec<usize> = (1..=n + 1).collect();
    // w = s_{i_1} ... s_{i_k}; composing on the right swaps positions.
    for s in g.reduced_word(w) {
        p.swap(s, s + 1);
    }
    Ok(p)
}

fn check_perm(p: &[usize]) -> Result<()> {
    let mut seen = vec![false; p.len()];
    for &x in p {
        if x == 0 || x > p.len() || seen[x - 1] {
            return Err(Error::NotAPermutation(p.to_vec()));
        }
        seen[x - 1] = true;
    }
    Ok(())
}

/// A reduced word (0-based generators) for a permutation in one-line notation.
pub fn word_of(p: &[usize]) -> Result<Vec<usize>> {
    check_perm(p)?;
    let mut q = p.to_vec();
    let mut word = Vec::new();
    // Sorting by adjacent swaps of descents yields the word right to left.
    while let Some(i) = (0..q.len().saturating_sub(1)).find(|&i| q[i] > q[i + 1]) {
        q.swap(i, i + 1);
        word.push(i);
    }
    word.reverse();
    Ok(word)
}

pub fn element_of_perm(g: &WeylGroup, p: &[usize]) -> Result<WeylElement> {
    let n = type_a_rank(g)?;
    if p.len() != n + 1 {
        return Err(Error::DimensionMismatch { expected: n + 1, got: p.len() });
    }
    g.from_word(&word_of(p)?)
}

/// Whether some subsequence of `w` is order-isomorphic to `pattern`.
pub fn contains_perm_pattern(w: &[usize], pattern: &[usize]) -> bool {
    let k = pattern.len();
    if k > w.len() {
        return false;
    }
    let mut idx: Vec<usize> = (0..k).collect();
    loop {
        let ok = (0..k).all(|a| (a + 1..k).all(|b| (w[idx[a]] < w[idx[b]]) == (pattern[a] < pattern[b])));
        if ok {
            return true;
        }
        let mut i = k;
        loop {
            if i == 0 {
                return false;
            }
            i -= 1;
            if idx[i] < w.len() - k + i {
                idx[i] += 1;
                for j in i + 1..k {
                    idx[j] = idx[j - 1] + 1;
                }
                break;
            }
        }
    }
}

pub fn avoids_perm_pattern(w: &[usize], pattern: &[usize]) -> bool {
    !contains_perm_pattern(w, pattern)
}

/// Simple undirected graph on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Graph {
    pub n: usize,
    adj: Vec<Vec<bool>>,
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph { n, adj: vec![vec![false; n]; n] }
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a][b] = true;
        self.adj[b][a] = true;
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a][b]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| (a + 1..self.n).filter(move |&b| self.adj[a][b]).map(move |b| (a, b)))
            .collect()
    }
}

/// Edge `ij` (0-based vertices, `i < j`) iff `e_i - e_j` is an inversion.
pub fn inversion_graph(g: &WeylGroup, w: &WeylElement) -> Result<Graph> {
    let n = type_a_rank(g)?;
    let mut gr = Graph::new(n + 1);
    for b in g.inversion_indices(w) {
        let c = g.root_system().root(b).coords();
        let i = c.iter().position(|&x| x != 0).expect("nonzero root");
        let j = c.iter().rposition(|&x| x != 0).expect("nonzero root") + 1;
        gr.add_edge(i, j);
    }
    Ok(gr)
}

/// Chordality by maximum cardinality search and a perfect elimination check.
pub fn is_chordal(gr: &Graph) -> bool {
    let n = gr.n;
    let mut weight = vec![0usize; n];
    let mut numbered = vec![false; n];
    // order[k] is the vertex visited k-th; its reverse is a perfect
    // elimination ordering when the graph is chordal.
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let v = (0..n).filter(|&v| !numbered[v]).max_by_key(|&v| (weight[v], std::cmp::Reverse(v))).unwrap();
        numbered[v] = true;
        order.push(v);
        for u in 0..n {
            if !numbered[u] && gr.has_edge(u, v) {
                weight[u] += 1;
            }
        }
    }
    let mut pos = vec![0usize; n];
    for (k, &v) in order.iter().enumerate() {
        pos[v] = k;
    }
    for &v in &order {
        // Earlier-visited neighbours of v must form a clique; it suffices that
        // they are all adjacent to the latest of them.
        let earlier: Vec<usize> = (0..n).filter(|&u| gr.has_edge(u, v) && pos[u] < pos[v]).collect();
        if let Some(&p) = earlier.iter().max_by_key(|&&u| pos[u]) {
            if earlier.iter().any(|&u| u != p && !gr.has_edge(u, p)) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn a(n: usize) -> WeylGroup {
        WeylGroup::from_label(&format!("A{n}")).unwrap()
    }

    #[test]
    fn one_line_notation() {
        let g = a(3);
        let x = g.from_word(&[1, 0, 2, 1]).unwrap();
        assert_eq!(perm_of(&g, &x).unwrap(), vec![3, 4, 1, 2]);
        assert_eq!(element_of_perm(&g, &[3, 4, 1, 2]).unwrap(), x);
        assert_eq!(perm_of(&g, &g.longest()).unwrap(), vec![4, 3, 2, 1]);
        for y in g.elements() {
            let p = perm_of(&g, &y).unwrap();
            assert_eq!(element_of_perm(&g, &p).unwrap(), y);
            assert_eq!(word_of(&p).unwrap().len(), g.length(&y));
        }
        assert!(perm_of(&WeylGroup::from_label("B3").unwrap(), &g.identity()).is_err());
        assert!(word_of(&[1, 1, 2]).is_err());
    }

    #[test]
    fn pattern_containment() {
        assert!(avoids_perm_pattern(&[4, 3, 2, 1], &[3, 4, 1, 2]));
        assert!(contains_perm_pattern(&[3, 4, 1, 2], &[3, 4, 1, 2]));
        assert!(contains_perm_pattern(&[3, 5, 1, 4, 2], &[3, 4, 1, 2]));
        assert!(!contains_perm_pattern(&[1, 2], &[2, 1, 3]));
    }

    #[test]
    fn graphs() {
        let g = a(3);
        let x = element_of_perm(&g, &[3, 4, 1, 2]).unwrap();
        let gr = inversion_graph(&g, &x).unwrap();
        // 4-cycle 2-3-1-4 in 1-based labels
        assert_eq!(gr.edges(), vec![(0, 2), (0, 3), (1, 2), (1, 3)]);
        assert!(!is_chordal(&gr));
        let y = element_of_perm(&g, &[4, 2, 3, 1]).unwrap();
        let gr = inversion_graph(&g, &y).unwrap();
        assert_eq!(gr.edges().len(), 5);
        assert!(!gr.has_edge(1, 2));
        assert!(is_chordal(&gr));
    }

    #[test]
    fn chordality_against_brute_force() {
        // A graph on <= 6 vertices is chordal iff no induced cycle of length 4..=6.
        fn has_hole(gr: &Graph) -> bool {
            let n = gr.n;
            for mask in 0u32..1 << n {
                let vs: Vec<usize> = (0..n).filter(|&i| mask >> i & 1 == 1).collect();
                if vs.len() < 4 {
                    continue;
                }
                let deg2 = vs.iter().all(|&v| vs.iter().filter(|&&u| gr.has_edge(u, v)).count() == 2);
                if !deg2 {
                    continue;
                }
                // connected 2-regular induced subgraph is a cycle
                let mut seen = vec![vs[0]];
                while let Some(&v) = seen.last() {
                    match vs.iter().find(|&&u| gr.has_edge(u, v) && !seen.contains(&u)) {
                        Some(&u) => seen.push(u),
                        None => break,
                    }
                }
                if seen.len() == vs.len() {
                    return true;
                }
            }
            false
        }
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(5);
        for _ in 0..300 {
            let n = rng.gen_range(1..=6);
            let mut gr = Graph::new(n);
            for i in 0..n {
                for j in i + 1..n {
                    if rng.gen_bool(0.5) {
                        gr.add_edge(i, j);
                    }
                }
            }
            assert_eq!(is_chordal(&gr), !has_hole(&gr), "{:?}", gr.edges());
        }
    }
}
