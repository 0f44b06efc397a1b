#![allow(dead_code)]

use polysat::graphdual::Realizer;
use polysat::Poset;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A random order on `n` elements: each pair below the diagonal of a random
/// labelling is related with probability `density`, then closed.
pub fn random_poset(rng: &mut impl Rng, n: usize, density: f64) -> Poset {
    let mut perm: Vec<usize> = (0..n).collect();
    perm.shuffle(rng);
    let mut rel = vec![vec![false; n]; n];
    for i in 0..n {
        for j in i + 1..n {
            rel[perm[i]][perm[j]] = rng.gen_bool(density);
        }
    }
    Poset::from_relation(n, |a, b| rel[a][b]).unwrap().0
}

/// A random two-dimensional order given by two random permutations.
pub fn random_dim2(rng: &mut impl Rng, n: usize) -> (Poset, Realizer) {
    let mut ext1: Vec<usize> = (0..n).collect();
    let mut ext2: Vec<usize> = (0..n).collect();
    ext1.shuffle(rng);
    ext2.shuffle(rng);
    let mut pos1 = vec![0; n];
    let mut pos2 = vec![0; n];
    for i in 0..n {
        pos1[ext1[i]] = i;
        pos2[ext2[i]] = i;
    }
    let (p, map) = Poset::from_relation(n, |a, b| pos1[a] < pos1[b] && pos2[a] < pos2[b]).unwrap();
    let r = Realizer { ext1, ext2 }.relabel(&map);
    (p, r)
}

/// Every set partition of `0..n`, as lists of sorted blocks.
pub fn set_partitions(n: usize) -> Vec<Vec<Vec<usize>>> {
    fn go(x: usize, n: usize, blocks: &mut Vec<Vec<usize>>, out: &mut Vec<Vec<Vec<usize>>>) {
        if x == n {
            out.push(blocks.clone());
            return;
        }
        for b in 0..blocks.len() {
            blocks[b].push(x);
            go(x + 1, n, blocks, out);
            blocks[b].pop();
        }
        blocks.push(vec![x]);
        go(x + 1, n, blocks, out);
        blocks.pop();
    }
    let mut out = Vec::new();
    go(0, n, &mut Vec::new(), &mut out);
    out
}

pub fn norm(blocks: &[Vec<usize>], k: usize) -> usize {
    blocks.iter().map(|b| b.len().min(k)).sum()
}

/// All posets with up to `max_n` elements, one per isomorphism class.
pub fn all_posets(max_n: usize) -> Vec<Poset> {
    (1..=max_n)
        .flat_map(|n| polysat::poset::enumerate_posets(n).unwrap())
        .collect()
}

/// Every admissible difference sequence of length `c` with sum at most
/// `max_sum`: positive, nonincreasing, interior entries strictly decreasing.
pub fn admissible_sequences(c: usize, max_sum: usize) -> Vec<Vec<usize>> {
    fn go(c: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        let i = cur.len();
        if i == c {
            out.push(cur.clone());
            return;
        }
        let cap = match i {
            0 => left,
            _ if i >= 2 && i < c - 1 => cur[i - 1] - 1,
            _ => cur[i - 1],
        };
        for x in 1..=cap.min(left) {
            cur.push(x);
            go(c, left - x, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(c, max_sum, &mut Vec::new(), &mut out);
    out
}
