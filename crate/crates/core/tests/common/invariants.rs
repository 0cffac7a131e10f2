//! Invariant checks shared by the property tests and the acceptance harness.
//! Each check panics on the first violation.
#![allow(dead_code)]

use std::collections::HashSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use weylinv::arrangement::Arrangement;
use weylinv::freeness::{inductively_free, FreenessStatus};
use weylinv::inversion::{flatten_subsystem, inversion_arrangement, inversion_set, is_convex_order, phi};
use weylinv::poly::IntPolynomial;
use weylinv::rootsys::{Root, Subsystem};
use weylinv::smoothness::{hlss, pattern_hits};
use weylinv::weyl::{Side, WeylElement, WeylGroup};

pub fn random_element(g: &WeylGroup, rng: &mut ChaCha8Rng) -> WeylElement {
    let len = rng.gen_range(0..=g.root_system().num_positive() + 2);
    let word: Vec<usize> = (0..len).map(|_| rng.gen_range(0..g.rank())).collect();
    g.from_word(&word).unwrap()
}

/// `R_U` for `U` spanned by a random nonempty set of positive roots.
pub fn random_subsystem(g: &WeylGroup, rng: &mut ChaCha8Rng) -> Subsystem {
    let rs = g.root_system();
    let k = rng.gen_range(1..=rs.rank());
    let basis: Vec<Root> = (0..k).map(|_| rs.root(rng.gen_range(0..rs.num_positive())).clone()).collect();
    rs.subsystem(&basis).unwrap()
}

/// Arrangement indices of `I(w)` listed in the convex order of a reduced word.
fn convex_index_order(g: &WeylGroup, a: &Arrangement, w: &WeylElement) -> Vec<usize> {
    inversion_set(g, w)
        .roots
        .iter()
        .map(|&r| a.index_of(g.root_system().root(r).coords()).unwrap())
        .collect()
}

pub fn nbc_counts_do_not_depend_on_order() {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    for label in ["B3", "D4"] {
        let g = WeylGroup::from_label(label).unwrap();
        for _ in 0..50 {
            let w = random_element(&g, &mut rng);
            let a = inversion_arrangement(&g, &w);
            let q = a.poincare_polynomial();
            let sorted: Vec<usize> = (0..a.len()).collect();
            let reversed: Vec<usize> = sorted.iter().rev().copied().collect();
            let mut shuffled = sorted.clone();
            for i in (1..shuffled.len()).rev() {
                shuffled.swap(i, rng.gen_range(0..=i));
            }
            for order in [sorted, reversed, shuffled] {
                assert_eq!(a.nbc_counts(&order), q);
                assert_eq!(a.nbc_sets(&order).len() as i64, q.eval(1));
            }
        }
    }
}

pub fn whitney_deletion_restriction_on_a3() {
    let g = WeylGroup::from_label("A3").unwrap();
    for w in g.elements() {
        let a = inversion_arrangement(&g, &w);
        let q = a.poincare_polynomial();
        for i in 0..a.len() {
            let del = a.delete_index(i).poincare_polynomial();
            let res = a.restrict_index(i).poincare_polynomial();
            assert_eq!(q, del.add(&res.shift(1)), "{} hyperplane {i}", g.format(&w));
        }
    }
}

pub fn phi_is_injective_on_nbc_sets() {
    for label in ["A3", "B3"] {
        let g = WeylGroup::from_label(label).unwrap();
        for w in g.elements() {
            let a = inversion_arrangement(&g, &w);
            let inv = inversion_set(&g, &w);
            let order = convex_index_order(&g, &a, &w);
            let pos: Vec<usize> = {
                let mut p = vec![0; order.len()];
                for (k, &i) in order.iter().enumerate() {
                    p[i] = k;
                }
                p
            };
            let mut image = HashSet::new();
            for set in a.nbc_sets(&order) {
                let positions: Vec<usize> = set.iter().map(|&i| pos[i]).collect();
                let x = phi(&g, &inv, &positions);
                assert!(g.bruhat_leq(&x, &w));
                assert!(image.insert(x), "{label} {}: phi not injective", g.format(&w));
            }
            assert_eq!(image.len() == g.bruhat_interval(&w).len(), hlss(&g, &w));
        }
    }
}

pub fn flattening_is_equivariant() {
    let mut rng = ChaCha8Rng::seed_from_u64(2);
    for label in ["B3", "D4", "A4"] {
        let g = WeylGroup::from_label(label).unwrap();
        for _ in 0..40 {
            let w = random_element(&g, &mut rng);
            let sub = random_subsystem(&g, &mut rng);
            // u in W_U as a product of reflections in R_U
            let mut u = g.identity();
            for _ in 0..rng.gen_range(0..4) {
                u = g.mul(&g.reflection(sub.positive[rng.gen_range(0..sub.positive.len())]), &u);
            }
            let fw = flatten_subsystem(&g, &w, &sub);
            let fu = flatten_subsystem(&g, &u, &sub);
            let fuw = flatten_subsystem(&g, &g.mul(&u, &w), &sub);
            assert_eq!(fuw.element, fw.group.mul(&fu.element, &fw.element));
        }
    }
}

pub fn convex_orders_restrict_to_flattenings() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for label in ["B3", "D4", "A4"] {
        let g = WeylGroup::from_label(label).unwrap();
        for _ in 0..40 {
            let w = random_element(&g, &mut rng);
            let sub = random_subsystem(&g, &mut rng);
            let fl = flatten_subsystem(&g, &w, &sub);
            let back: std::collections::HashMap<usize, usize> =
                fl.embedding.iter().enumerate().map(|(a, &b)| (b, a)).collect();
            let induced: Vec<usize> = inversion_set(&g, &w)
                .roots
                .into_iter()
                .filter(|r| sub.positive.contains(r))
                .map(|r| back[&r])
                .collect();
            let mut sorted = induced.clone();
            sorted.sort_unstable();
            assert_eq!(sorted, fl.group.inversion_indices(&fl.element));
            assert!(is_convex_order(fl.group.root_system(), &induced));
        }
    }
}

pub fn flattening_is_localization_mod_center() {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for label in ["B3", "D4", "A4"] {
        let g = WeylGroup::from_label(label).unwrap();
        for _ in 0..40 {
            let w = random_element(&g, &mut rng);
            let sub = random_subsystem(&g, &mut rng);
            let fl = flatten_subsystem(&g, &w, &sub);
            let a = inversion_arrangement(&g, &w);
            let inside: Vec<usize> = g
                .inversion_indices(&w)
                .into_iter()
                .filter(|r| sub.positive.contains(r))
                .map(|r| a.index_of(g.root_system().root(r).coords()).unwrap())
                .collect();
            let x = a.flat(&inside);
            let local = a.localization(&x).unwrap();
            let flat_arr = inversion_arrangement(&fl.group, &fl.element);
            assert_eq!(local.len(), flat_arr.len());
            assert_eq!(local.poincare_polynomial(), flat_arr.poincare_polynomial());
            assert_eq!(local.canonical().len(), flat_arr.canonical().len());
            assert_eq!(local.canonical().dim(), flat_arr.canonical().dim());
        }
    }
}

pub fn b_and_c_arrangements_agree() {
    for rank in [3, 4] {
        let b = WeylGroup::from_label(&format!("B{rank}")).unwrap();
        let c = WeylGroup::from_label(&format!("C{rank}")).unwrap();
        for w in b.elements() {
            let word = b.reduced_word(&w);
            let wc = c.from_word(&word).unwrap();
            assert_eq!(c.length(&wc), word.len());
            assert_eq!(
                inversion_arrangement(&b, &w).poincare_polynomial(),
                inversion_arrangement(&c, &wc).poincare_polynomial()
            );
            assert_eq!(b.poincare(&w), c.poincare(&wc));
        }
    }
}

pub fn chain_condition_is_linear() {
    for label in ["A3", "B3"] {
        let g = WeylGroup::from_label(label).unwrap();
        let rs = g.root_system();
        for mask in 0u32..8 {
            let j: Vec<usize> = (0..3).filter(|&i| mask >> i & 1 == 1).collect();
            let in_vj = |r: usize| rs.root(r).coords().iter().enumerate().all(|(s, &c)| c == 0 || j.contains(&s));
            let rj: Vec<usize> = (0..rs.num_positive()).filter(|&r| in_vj(r)).collect();
            for v in g.elements() {
                if !g.is_minimal_representative(&v, &j, Side::Left) {
                    continue;
                }
                let chain = g.coset_poincare(&v, &j, Side::Left).unwrap() == IntPolynomial::q_integer(g.length(&v) + 1);
                let inv = g.inversion_indices(&v);
                let linear = inv.iter().enumerate().all(|(k, &a)| {
                    inv[k + 1..].iter().all(|&b| {
                        let span = weylinv::linalg::Span::from_rows(3, [rs.root(a).coords(), rs.root(b).coords()]);
                        rj.iter().any(|&r| span.contains(rs.root(r).coords()))
                    })
                });
                assert_eq!(chain, linear, "{label} J={j:?} v={}", g.format(&v));
            }
        }
    }
}

pub fn hlss_survives_flattening() {
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let g = WeylGroup::from_label("B3").unwrap();
    let mut tested = 0;
    while tested < 60 {
        let w = random_element(&g, &mut rng);
        if !hlss(&g, &w) {
            continue;
        }
        let sub = random_subsystem(&g, &mut rng);
        let fl = flatten_subsystem(&g, &w, &sub);
        assert!(hlss(&fl.group, &fl.element), "{} in {}", g.format(&w), sub.cartan_type);
        tested += 1;
    }
}

pub fn non_free_patterns_obstruct_freeness() {
    let non_free = ["A3-3412", "D4-s2s1s3s4s2", "B3-r01", "B3-r02", "B3-r03", "B3-r04", "B3-r06", "B3-r07", "B3-r08"];
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for label in ["B4", "D4"] {
        let g = WeylGroup::from_label(label).unwrap();
        let mut hosts = 0;
        for _ in 0..200 {
            let w = random_element(&g, &mut rng);
            let hits = pattern_hits(&g, &w);
            if hits.iter().any(|h| non_free.contains(h)) {
                hosts += 1;
                let r = inductively_free(&inversion_arrangement(&g, &w));
                assert_eq!(r.status, FreenessStatus::NotInductivelyFree, "{label} {}", g.format(&w));
            }
        }
        assert!(hosts > 0);
    }
}

pub fn supersolvability_survives_flattening() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for label in ["B3", "D4"] {
        let g = WeylGroup::from_label(label).unwrap();
        let mut tested = 0;
        while tested < 40 {
            let w = random_element(&g, &mut rng);
            if !inversion_arrangement(&g, &w).is_supersolvable() {
                continue;
            }
            let sub = random_subsystem(&g, &mut rng);
            let fl = flatten_subsystem(&g, &w, &sub);
            assert!(inversion_arrangement(&fl.group, &fl.element).is_supersolvable());
            tested += 1;
        }
    }
}
