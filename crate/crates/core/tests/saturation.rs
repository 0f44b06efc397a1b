mod common;

use std::ops::ControlFlow;

use common::{all_posets, norm, random_poset, rng, set_partitions};
use polysat::construct::{build_pj, check_polyunsaturated_delta};
use polysat::kfamily::{delta_sequence, dk};
use polysat::poset::isomorphic;
use polysat::saturation::{
    enumerate_chain_partitions, find_saturated, for_each_chain_partition, is_k_saturated,
    is_polyunsaturated, min_joint_norm, min_norm, mk, ChainPartition,
};
use polysat::{disjoint_union, Limits, Poset};

fn limits() -> Limits {
    Limits::default()
}

fn is_chain_partition(p: &Poset, blocks: &[Vec<usize>]) -> bool {
    blocks.iter().all(|b| p.is_chain(b))
}

#[test]
fn enumeration_matches_filtered_set_partitions() {
    for p in all_posets(5) {
        let brute = set_partitions(p.n())
            .into_iter()
            .filter(|b| is_chain_partition(&p, b))
            .count();
        assert_eq!(
            enumerate_chain_partitions(&p, &limits()).unwrap().len(),
            brute
        );
    }
}

#[test]
fn norm_dominates_dk_and_counts_long_chains() {
    for p in all_posets(5) {
        for cp in enumerate_chain_partitions(&p, &limits()).unwrap() {
            for k in 1..=p.n() {
                assert!(mk(&cp, k) >= dk(&p, k).unwrap());
                let long = cp.sizes().iter().filter(|&&s| s >= k).count();
                assert_eq!(mk(&cp, k) - mk(&cp, k - 1), long);
            }
        }
    }
}

#[test]
fn min_norm_equals_dk() {
    for p in all_posets(6) {
        for k in 1..=p.height() {
            assert_eq!(min_norm(&p, k, &limits()).unwrap().0, dk(&p, k).unwrap());
        }
    }
}

#[test]
fn joint_norm_search_matches_exhaustive_minimum() {
    let mut rng = rng(21);
    for i in 0..120 {
        let n = 5 + i % 4;
        let p = random_poset(&mut rng, n, 0.25 + 0.05 * (i % 6) as f64);
        let all = enumerate_chain_partitions(&p, &limits()).unwrap();
        let h = p.height();
        for k in 1..h {
            for l in k + 1..=h {
                let brute = all.iter().map(|cp| mk(cp, k) + mk(cp, l)).min().unwrap();
                let (value, cp) = min_joint_norm(&p, k, l, &limits()).unwrap();
                assert_eq!(value, brute, "{p:?} ({k},{l})");
                assert_eq!(mk(&cp, k) + mk(&cp, l), value);
            }
        }
    }
}

#[test]
fn consecutive_pairs_are_always_jointly_saturated() {
    let mut rng = rng(22);
    let mut posets = all_posets(6);
    posets.extend((0..200).map(|i| random_poset(&mut rng, 9, 0.15 + 0.05 * (i % 8) as f64)));
    for p in posets {
        for k in 1..=p.height() {
            let cp = find_saturated(&p, &[k, k + 1], &limits())
                .unwrap()
                .unwrap_or_else(|| panic!("{p:?} k={k}"));
            assert!(is_k_saturated(&p, &cp, k).unwrap());
            assert!(is_k_saturated(&p, &cp, k + 1).unwrap());
        }
    }
}

/// If `Δd_k = Δd_{k+1}` then every k-saturated partition is also
/// (k+1)-saturated.
fn check_flat_step(p: &Poset) {
    let b = delta_sequence(p).unwrap();
    let b = b.as_slice();
    let flat: Vec<usize> = (1..b.len()).filter(|&k| b[k - 1] == b[k]).collect();
    if flat.is_empty() {
        return;
    }
    for_each_chain_partition(p, &limits(), |cp| {
        for &k in &flat {
            if is_k_saturated(p, cp, k).unwrap() {
                assert!(is_k_saturated(p, cp, k + 1).unwrap(), "{p:?} k={k}");
            }
        }
        ControlFlow::Continue(())
    })
    .unwrap();
}

#[test]
fn flat_step_forces_next_saturation() {
    all_posets(6).iter().for_each(check_flat_step);
    let mut rng = rng(23);
    for i in 0..150 {
        check_flat_step(&random_poset(
            &mut rng,
            7 + i % 2,
            0.2 + 0.05 * (i % 6) as f64,
        ));
    }
}

#[test]
fn u_shares_a_chain_with_r_in_every_saturated_partition() {
    for j in 1..=3 {
        let (p, lab) = build_pj(j);
        for cp in enumerate_chain_partitions(&p, &limits()).unwrap() {
            for k in 1..=j + 1 {
                if !is_k_saturated(&p, &cp, k).unwrap() {
                    continue;
                }
                let near: Vec<usize> = [k.checked_sub(2), (k <= j).then(|| k - 1)]
                    .into_iter()
                    .flatten()
                    .map(|i| lab.r[i])
                    .collect();
                assert!(
                    near.iter().any(|&r| cp.same_chain(lab.u, r)),
                    "j={j} k={k} {cp:?}"
                );
            }
        }
    }
}

#[test]
fn polyunsaturated_small_posets_have_admissible_deltas() {
    let mut found_p2 = 0;
    for p in all_posets(6) {
        let report = is_polyunsaturated(&p, &limits()).unwrap();
        let c = p.height();
        if !report.polyunsaturated || c < 4 {
            continue;
        }
        check_polyunsaturated_delta(&delta_sequence(&p).unwrap()).unwrap();
        assert!(isomorphic(&p, &build_pj(2).0).unwrap());
        found_p2 += 1;
    }
    assert_eq!(found_p2, 1);
}

#[test]
fn pj_pairs() {
    let p2 = build_pj(2).0;
    assert!(find_saturated(&p2, &[1, 3], &limits()).unwrap().is_none());
    let p4 = build_pj(4).0;
    assert!(find_saturated(&p4, &[2, 3], &limits()).unwrap().is_some());
    assert!(find_saturated(&p4, &[2, 4], &limits()).unwrap().is_none());
}

#[test]
fn p2_union_chain_is_not_jointly_13_saturated() {
    let u = disjoint_union(&build_pj(2).0, &Poset::chain(3)).unwrap();
    let (d1, d3) = (dk(&u, 1).unwrap(), dk(&u, 3).unwrap());
    let brute = enumerate_chain_partitions(&u, &limits())
        .unwrap()
        .iter()
        .map(|cp| mk(cp, 1) + mk(cp, 3))
        .min()
        .unwrap();
    assert!(brute > d1 + d3);
    assert_eq!(min_joint_norm(&u, 1, 3, &limits()).unwrap().0, brute);
}

#[test]
fn chain_plus_antichain_is_not_polyunsaturated() {
    let u = disjoint_union(&Poset::chain(4), &Poset::antichain(4)).unwrap();
    let report = is_polyunsaturated(&u, &limits()).unwrap();
    assert!(!report.polyunsaturated);
}

#[test]
fn brute_force_blocks_give_same_norms() {
    let p = build_pj(2).0;
    let best = set_partitions(p.n())
        .into_iter()
        .filter(|b| is_chain_partition(&p, b))
        .map(|b| norm(&b, 1) + norm(&b, 3))
        .min()
        .unwrap();
    assert_eq!(best, 8);
    let cp = ChainPartition::new(&p, vec![vec![0, 1, 2], vec![3, 4, 5]]).unwrap();
    assert_eq!(cp.mk(2), 4);
}

#[test]
fn size_limit_is_enforced() {
    let p = Poset::antichain(20);
    assert!(min_norm(&p, 1, &limits()).is_err());
    assert!(min_norm(&p, 1, &Limits::unbounded_time(20)).is_ok());
}
