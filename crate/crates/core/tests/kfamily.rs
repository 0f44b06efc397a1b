mod common;

use common::{all_posets, random_poset, rng};
use polysat::construct::build_pj;
use polysat::kfamily::{
    d_sequence, delta_sequence, dk, dk_oracle, is_strong_sperner, max_k_family,
};
use polysat::{disjoint_union, Error, Poset};

fn assert_nonincreasing(p: &Poset) {
    let b = delta_sequence(p).unwrap();
    let b = b.as_slice();
    assert_eq!(b.len(), p.height());
    assert!(b.windows(2).all(|w| w[0] >= w[1]), "{p:?}: {b:?}");
    assert!(b.iter().all(|&x| x > 0));
    assert_eq!(b.iter().sum::<usize>(), p.n());
    assert_eq!(b[0], p.width());
}

#[test]
fn dk_matches_oracle_on_all_small_posets() {
    for p in all_posets(6) {
        for k in 0..=p.height() + 1 {
            assert_eq!(dk(&p, k).unwrap(), dk_oracle(&p, k).unwrap(), "{p:?} k={k}");
        }
    }
}

#[test]
fn dk_matches_oracle_on_random_posets() {
    let mut rng = rng(11);
    for n in 7..=8 {
        for i in 0..150 {
            let p = random_poset(&mut rng, n, 0.15 + 0.1 * (i % 5) as f64);
            for k in 1..=p.height() {
                assert_eq!(dk(&p, k).unwrap(), dk_oracle(&p, k).unwrap(), "{p:?} k={k}");
            }
        }
    }
}

#[test]
fn max_family_is_a_k_family_of_size_dk() {
    let mut rng = rng(12);
    for _ in 0..200 {
        let p = random_poset(&mut rng, 10, 0.3);
        for k in 1..=p.height() {
            let f = max_k_family(&p, k).unwrap();
            assert_eq!(f.len(), dk(&p, k).unwrap());
            assert!(p.induced(&f).height() <= k);
        }
    }
}

#[test]
fn delta_nonincreasing_on_enumerated_posets() {
    all_posets(6).iter().for_each(assert_nonincreasing);
}

#[test]
fn delta_nonincreasing_on_random_posets() {
    let mut rng = rng(13);
    for i in 0..1000 {
        let n = 1 + i % 12;
        let p = random_poset(&mut rng, n, 0.1 + 0.05 * (i % 10) as f64);
        assert_nonincreasing(&p);
    }
}

#[test]
fn dk_is_additive_over_disjoint_union() {
    let mut rng = rng(14);
    for _ in 0..100 {
        let p = random_poset(&mut rng, 6, 0.3);
        let q = random_poset(&mut rng, 6, 0.4);
        let u = disjoint_union(&p, &q).unwrap();
        for k in 1..=u.height() {
            assert_eq!(dk(&u, k).unwrap(), dk(&p, k).unwrap() + dk(&q, k).unwrap());
        }
    }
}

#[test]
fn d_sequence_endpoints() {
    let p = build_pj(3).0;
    let d = d_sequence(&p).unwrap();
    assert_eq!(d.get(0), 0);
    assert_eq!(d.get(1), p.width());
    assert_eq!(d.get(p.height()), p.n());
    assert_eq!(d.get(p.height() + 3), p.n());
}

#[test]
fn pj_small_values() {
    let p2 = build_pj(2).0;
    let d: Vec<usize> = (1..=4).map(|k| dk(&p2, k).unwrap()).collect();
    assert_eq!(d, vec![2, 4, 5, 6]);
    assert_eq!(dk(&build_pj(4).0, 2).unwrap(), 8);
    assert_eq!(dk_oracle(&build_pj(1).0, 2).unwrap(), 2);
}

#[test]
fn strong_sperner() {
    for j in 1..=4 {
        assert!(is_strong_sperner(&build_pj(j).0).unwrap());
    }
    assert!(is_strong_sperner(&Poset::chain(5)).unwrap());
    let v = Poset::from_covers(3, &[(0, 1), (0, 2)]).unwrap().0;
    assert!(is_strong_sperner(&v).unwrap());
}

#[test]
fn unranked_poset_is_rejected() {
    let bad = Poset::from_covers(5, &[(0, 1), (1, 2), (2, 3), (0, 4), (4, 3)])
        .unwrap()
        .0;
    assert!(bad.ranks().is_none());
    assert!(matches!(is_strong_sperner(&bad), Err(Error::NotRanked)));
}

#[test]
fn ranked_non_strong_sperner_witness_exists() {
    let witness = polysat::poset::enumerate_posets(6)
        .unwrap()
        .into_iter()
        .find(|p| p.ranks().is_some() && !is_strong_sperner(p).unwrap())
        .expect("a ranked poset on six elements that is not strongly Sperner");
    let ranks = witness.ranks().unwrap();
    let mut sizes: Vec<usize> = ranks.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let some_k_fails = (1..=witness.height())
        .any(|k| dk_oracle(&witness, k).unwrap() > sizes.iter().take(k).sum());
    assert!(some_k_fails);
}
