mod common;

use common::{random_poset, rng};
use polysat::construct::build_pj;
use polysat::kfamily::{delta_sequence, dk_oracle};
use polysat::poset::{enumerate_posets, isomorphic};
use polysat::{disjoint_union, Poset};
use proptest::prelude::*;

fn arb_poset(max_n: usize) -> impl Strategy<Value = Poset> {
    (1..=max_n)
        .prop_flat_map(|n| (Just(n), proptest::collection::vec(any::<bool>(), n * n)))
        .prop_map(|(n, bits)| {
            Poset::from_relation(n, |a, b| a < b && bits[a * n + b])
                .unwrap()
                .0
        })
}

proptest! {
    #[test]
    fn covers_round_trip(p in arb_poset(12)) {
        let (q, map) = Poset::from_covers(p.n(), &p.cover_relations()).unwrap();
        prop_assert!(map.iter().enumerate().all(|(i, &m)| i == m));
        prop_assert_eq!(q, p);
    }

    #[test]
    fn width_matching_agrees_with_brute_force(p in arb_poset(8)) {
        prop_assert_eq!(p.width(), p.width_brute());
        prop_assert_eq!(p.dilworth_partition().len(), p.width());
    }

    #[test]
    fn height_width_sanity(p in arb_poset(14)) {
        let (h, w) = (p.height(), p.width());
        prop_assert!(h * w >= p.n());
        prop_assert!(h.max(w) <= p.n());
        prop_assert_eq!(p.longest_chain().len(), h);
        prop_assert!(p.is_chain(p.longest_chain().elems()));
    }

    #[test]
    fn union_height_and_width(p in arb_poset(7), q in arb_poset(7)) {
        let u = disjoint_union(&p, &q).unwrap();
        prop_assert_eq!(u.n(), p.n() + q.n());
        prop_assert_eq!(u.height(), p.height().max(q.height()));
        prop_assert_eq!(u.width(), p.width() + q.width());
    }
}

#[test]
fn union_with_empty_is_an_error() {
    assert!(Poset::from_covers(0, &[]).is_err());
}

#[test]
fn pj_height_and_width() {
    assert_eq!(build_pj(2).0.height(), 4);
    assert_eq!(build_pj(4).0.height(), 6);
    assert_eq!(build_pj(4).0.width(), 4);
}

#[test]
fn p2_rank_sizes() {
    let ranks = build_pj(2).0.ranks().unwrap();
    let sizes: Vec<usize> = ranks.iter().map(Vec::len).collect();
    assert_eq!(sizes, vec![1, 2, 2, 1]);
}

#[test]
fn p2_union_chain_delta_by_oracle() {
    let u = disjoint_union(&build_pj(2).0, &Poset::chain(3)).unwrap();
    assert_eq!(u.n(), 9);
    let d: Vec<usize> = (1..=4).map(|k| dk_oracle(&u, k).unwrap()).collect();
    assert_eq!(d, vec![3, 6, 8, 9]);
    assert_eq!(delta_sequence(&u).unwrap().as_slice(), &[3, 3, 2, 1]);
}

/// The six-element example of Greene and Kleitman, read off the drawing: a
/// four-element chain a < b < c < d with e < c and b < f.
fn greene_kleitman_example() -> Poset {
    Poset::from_covers(6, &[(0, 1), (1, 2), (2, 3), (4, 2), (1, 5)])
        .unwrap()
        .0
}

#[test]
fn p2_is_the_greene_kleitman_example() {
    assert!(isomorphic(&build_pj(2).0, &greene_kleitman_example()).unwrap());
    assert!(!isomorphic(&build_pj(2).0, &Poset::chain(6)).unwrap());
}

#[test]
fn enumeration_counts() {
    let counts: Vec<usize> = (1..=6)
        .map(|n| enumerate_posets(n).unwrap().len())
        .collect();
    assert_eq!(counts, vec![1, 2, 5, 16, 63, 318]);
}

#[test]
fn enumeration_is_deterministic() {
    assert_eq!(enumerate_posets(5).unwrap(), enumerate_posets(5).unwrap());
}

#[test]
fn representatives_are_pairwise_non_isomorphic() {
    for n in 1..=5 {
        let reps = enumerate_posets(n).unwrap();
        for (i, p) in reps.iter().enumerate() {
            for q in &reps[i + 1..] {
                assert!(!isomorphic(p, q).unwrap());
            }
        }
    }
}

#[test]
fn random_posets_match_exactly_one_representative() {
    let mut rng = rng(7);
    for n in 1..=5 {
        let reps = enumerate_posets(n).unwrap();
        for _ in 0..60 {
            let p = random_poset(&mut rng, n, 0.4);
            let hits = reps.iter().filter(|q| isomorphic(&p, q).unwrap()).count();
            assert_eq!(hits, 1);
        }
    }
}
