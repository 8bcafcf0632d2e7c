//! Group-side values checked against brute-force computations.

mod common;

use std::collections::BTreeSet;

use common::{closure, Naive};
use fusionburnside::burnside::{BurnsideElement, BurnsideRing, MarkVector};
use fusionburnside::catalog;
use fusionburnside::permgroup::{
    class_table, enumerate_subgroups, enumerate_subgroups_with, generate_group, sylow_subgroup,
    Group, Limits,
};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p_group(name: &str) -> Group {
    catalog::lookup(name).unwrap().build().unwrap()
}

fn class_of(ring: &BurnsideRing, naive: &Naive, set: &BTreeSet<usize>) -> usize {
    let g = ring.group();
    let mut idx: Vec<usize> = set
        .iter()
        .map(|&i| {
            g.index_of(&common::to_permutation(&naive.elements[i]))
                .unwrap()
        })
        .collect();
    idx.sort_unstable();
    ring.table().class_of_elements(&idx).unwrap()
}

fn rep_set(ring: &BurnsideRing, naive: &Naive, class: usize) -> BTreeSet<usize> {
    common::perm_set(ring.group(), ring.table().representative(class).elements())
        .iter()
        .map(|p| naive.index[p])
        .collect()
}

#[test]
fn subgroup_counts_match_subset_closure() {
    for name in catalog::P_GROUPS {
        let g = p_group(name);
        let naive = Naive::from_group(&g);
        let brute = naive.subgroups_by_subsets().len();
        assert_eq!(enumerate_subgroups(&g).unwrap().len(), brute, "{}", name);
    }
    assert_eq!(
        Naive::from_group(&p_group("D8"))
            .subgroups_by_subsets()
            .len(),
        10
    );
    assert_eq!(
        Naive::from_group(&p_group("C2xC2"))
            .subgroups_by_subsets()
            .len(),
        5
    );
    assert_eq!(
        Naive::from_group(&p_group("Q8"))
            .subgroups_by_subsets()
            .len(),
        6
    );
}

#[test]
fn subgroup_counts_of_symmetric_groups_match_pair_closure() {
    let limits = Limits {
        max_enumeration_order: 120,
        ..Limits::default()
    };
    for (name, known) in [("S3", 6), ("S4", 30), ("A4", 10), ("S5", 156)] {
        let g = catalog::lookup(name).unwrap().build().unwrap();
        let brute = Naive::from_group(&g).subgroups_by_pairs();
        let ours = enumerate_subgroups_with(&g, &limits).unwrap();
        assert_eq!(ours.len(), brute.len(), "{}", name);
        assert_eq!(brute.len(), known, "{}", name);
        let ours: BTreeSet<BTreeSet<Vec<u32>>> = ours
            .iter()
            .map(|h| common::perm_set(&g, h.elements()))
            .collect();
        let naive = Naive::from_group(&g);
        let brute: BTreeSet<BTreeSet<Vec<u32>>> = brute.iter().map(|h| naive.perms(h)).collect();
        assert_eq!(ours, brute, "{}", name);
    }
}

#[test]
fn class_counts_match_pairwise_conjugacy() {
    for name in catalog::P_GROUPS {
        let g = p_group(name);
        let naive = Naive::from_group(&g);
        let all: Vec<usize> = (0..naive.order()).collect();
        let keys: BTreeSet<BTreeSet<usize>> = naive
            .subgroups_by_pairs()
            .iter()
            .map(|h| naive.class_key(h, &all))
            .collect();
        let t = class_table(&g).unwrap();
        assert_eq!(t.len(), keys.len(), "{}", name);
        for (i, c) in t.classes().iter().enumerate() {
            let rep: BTreeSet<usize> = common::perm_set(&g, c.representative.elements())
                .iter()
                .map(|p| naive.index[p])
                .collect();
            let conjugates: BTreeSet<BTreeSet<usize>> =
                all.iter().map(|&x| naive.conj_set(x, &rep)).collect();
            assert_eq!(c.members.len(), conjugates.len(), "{} class {}", name, i);
            assert_eq!(
                c.normalizer_order,
                naive.normalizer(&rep).len(),
                "{} class {}",
                name,
                i
            );
            assert_eq!(
                c.members.len() * c.normalizer_order,
                naive.order(),
                "orbit-stabilizer"
            );
        }
    }
    assert_eq!(class_table(&p_group("D8")).unwrap().len(), 8);
    assert_eq!(class_table(&p_group("Q8")).unwrap().len(), 6);
}

#[test]
fn table_of_marks_matches_coset_action() {
    let mut groups: Vec<Group> = catalog::P_GROUPS.iter().map(|n| p_group(n)).collect();
    let s5 = catalog::lookup("S5").unwrap().build().unwrap();
    let s = sylow_subgroup(&s5, 2).unwrap();
    groups.push(Group::from_subgroup(&s5, &s).unwrap());
    for g in groups {
        let ring = BurnsideRing::new(&g).unwrap();
        let naive = Naive::from_group(&g);
        for p in 0..ring.len() {
            let pset = rep_set(&ring, &naive, p);
            let cosets: BTreeSet<BTreeSet<usize>> = (0..naive.order())
                .map(|x| pset.iter().map(|&y| naive.table[x][y]).collect())
                .collect();
            assert_eq!(cosets.len() * pset.len(), naive.order());
            for q in 0..ring.len() {
                let qset = rep_set(&ring, &naive, q);
                let fixed = cosets
                    .iter()
                    .filter(|c| {
                        qset.iter().all(|&h| {
                            let moved: BTreeSet<usize> =
                                c.iter().map(|&y| naive.table[h][y]).collect();
                            &moved == *c
                        })
                    })
                    .count();
                assert_eq!(
                    ring.mark_matrix().entry(q, p),
                    fixed as i64,
                    "row {} col {}",
                    q,
                    p
                );
            }
        }
    }
}

#[test]
fn d8_reflection_set_marks() {
    // [D8/<s>] with s = (1 3): fixed by <s> on two cosets, by 1 on all four
    let g = p_group("D8");
    let ring = BurnsideRing::new(&g).unwrap();
    let s = g
        .index_of(&fusionburnside::permgroup::Permutation::parse_cycles(4, "(1 3)").unwrap())
        .unwrap();
    let c = ring.table().class_of(&g.subgroup_generated(&[s])).unwrap();
    let marks = ring.mark(&ring.transitive(c)).unwrap();
    for q in 0..ring.len() {
        let expected = if q == c {
            2
        } else if q == ring.table().trivial_class() {
            4
        } else {
            0
        };
        assert_eq!(marks.mark(q), expected, "at {}", ring.label(q));
    }
}

/// `Ψ_P(ξ) = Σ_{s̄ ∈ N_S P / P} ξ_{<s>P} mod |W_S P|`, evaluated directly.
fn psi_oracle(ring: &BurnsideRing, naive: &Naive, xi: &[i64]) -> Vec<i64> {
    (0..ring.len())
        .map(|p| {
            let pset = rep_set(ring, naive, p);
            let n = naive.normalizer(&pset);
            let w = (n.len() / pset.len()) as i64;
            let mut seen: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
            let mut total = 0i64;
            for &s in &n {
                let coset: BTreeSet<usize> = pset.iter().map(|&y| naive.table[s][y]).collect();
                if !seen.insert(coset) {
                    continue;
                }
                let mut gens: Vec<usize> = pset.iter().copied().collect();
                gens.push(s);
                total += xi[class_of(ring, naive, &naive.generated(&gens))];
            }
            total.rem_euclid(w)
        })
        .collect()
}

#[test]
fn psi_matches_direct_evaluation() {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for name in catalog::P_GROUPS {
        let g = p_group(name);
        let ring = BurnsideRing::new(&g).unwrap();
        let naive = Naive::from_group(&g);
        for k in 0..20 {
            let xi: Vec<i64> = if k < ring.len() {
                (0..ring.len()).map(|i| (i == k) as i64).collect()
            } else {
                (0..ring.len()).map(|_| rng.gen_range(-50..=50)).collect()
            };
            let ours = ring.psi(&MarkVector::new(xi.clone())).unwrap();
            assert_eq!(
                ours.residues(),
                psi_oracle(&ring, &naive, &xi).as_slice(),
                "{} {:?}",
                name,
                xi
            );
        }
    }
}

#[test]
fn obstruction_orders() {
    // |Obs(S)| = ∏ |W_S P| with the Weyl orders from the brute-force normalizers
    for name in catalog::P_GROUPS {
        let g = p_group(name);
        let naive = Naive::from_group(&g);
        let all: Vec<usize> = (0..naive.order()).collect();
        let reps: BTreeSet<BTreeSet<usize>> = naive
            .subgroups_by_pairs()
            .iter()
            .map(|h| naive.class_key(h, &all))
            .collect();
        let brute: i64 = reps
            .iter()
            .map(|h| (naive.normalizer(h).len() / h.len()) as i64)
            .product();
        assert_eq!(
            BurnsideRing::new(&g).unwrap().obstruction_order().unwrap(),
            brute,
            "{}",
            name
        );
    }
    assert_eq!(
        BurnsideRing::new(&p_group("D8"))
            .unwrap()
            .obstruction_order()
            .unwrap(),
        1024
    );
    assert_eq!(
        BurnsideRing::new(&p_group("C2"))
            .unwrap()
            .obstruction_order()
            .unwrap(),
        2
    );
}

#[test]
fn class_table_ignores_generator_choice() {
    let d8 = p_group("D8");
    let gens: Vec<_> = d8.generators().iter().rev().cloned().collect();
    let mut more = gens.clone();
    more.push(d8.generators()[0].compose(&d8.generators()[1]));
    for alt in [gens, more] {
        let other = generate_group(4, &alt).unwrap();
        let a = BurnsideRing::new(&d8).unwrap();
        let b = BurnsideRing::new(&other).unwrap();
        assert_eq!(a.table().labels(), b.table().labels());
        assert_eq!(a.mark_matrix(), b.mark_matrix());
    }
}

#[test]
fn sylow_orders() {
    for (name, p, order) in [
        ("S4", 2, 8),
        ("S4", 3, 3),
        ("S5", 2, 8),
        ("S5", 3, 3),
        ("S5", 5, 5),
        ("A4", 2, 4),
        ("S3", 3, 3),
        ("S3", 2, 2),
    ] {
        let g = catalog::lookup(name).unwrap().build().unwrap();
        let s = sylow_subgroup(&g, p).unwrap();
        assert_eq!(s.order(), order, "{} at {}", name, p);
        let naive = Naive::from_group(&g);
        let set: BTreeSet<Vec<u32>> = common::perm_set(&g, s.elements());
        let gens: Vec<Vec<u32>> = set.iter().cloned().collect();
        assert_eq!(closure(g.degree(), &gens), set, "closed");
        assert!(naive.order().is_multiple_of(order));
    }
}

fn ring_strategy() -> impl Strategy<Value = (usize, Vec<i64>, Vec<i64>)> {
    (0..catalog::P_GROUPS.len()).prop_flat_map(|i| {
        let n = BurnsideRing::new(&p_group(catalog::P_GROUPS[i]))
            .unwrap()
            .len();
        (
            Just(i),
            prop::collection::vec(-5i64..=5, n),
            prop::collection::vec(-5i64..=5, n),
        )
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn marks_are_a_ring_homomorphism((i, x, y) in ring_strategy()) {
        let ring = BurnsideRing::new(&p_group(catalog::P_GROUPS[i])).unwrap();
        let (x, y) = (BurnsideElement::new(x), BurnsideElement::new(y));
        let prod = ring.multiply(&x, &y).unwrap();
        let expected = ring.mark(&x).unwrap().pointwise_product(&ring.mark(&y).unwrap()).unwrap();
        prop_assert_eq!(ring.mark(&prod).unwrap(), expected);
        let sum = x.checked_add(&y).unwrap();
        let mx = ring.mark(&x).unwrap();
        let my = ring.mark(&y).unwrap();
        let ms = ring.mark(&sum).unwrap();
        for c in 0..ring.len() {
            prop_assert_eq!(ms.mark(c), mx.mark(c) + my.mark(c));
        }
    }

    #[test]
    fn orbits_roundtrip_through_marks((i, x, _y) in ring_strategy()) {
        let ring = BurnsideRing::new(&p_group(catalog::P_GROUPS[i])).unwrap();
        let x = BurnsideElement::new(x);
        prop_assert_eq!(ring.marks_to_orbits(&ring.mark(&x).unwrap()).unwrap(), x.clone());
        prop_assert!(ring.psi(&ring.mark(&x).unwrap()).unwrap().is_zero());
    }
}
