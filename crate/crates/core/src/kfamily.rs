//! Maximum k-families.
//!
//! `d_k(P)` is the largest size of a union of `k` antichains. A subset is
//! such a union exactly when it contains no chain of `k + 1` elements
//! (Mirsky), which is what [`dk`] searches for. [`dk_oracle`] maximises over
//! unions of antichains directly and exists to check it.

use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bitset::bits;
use crate::{Error, Poset, Result};

pub const ORACLE_LIMIT: usize = 10;

/// Size of a largest k-family.
pub fn dk(p: &Poset, k: usize) -> Result<usize> {
    Ok(max_k_family(p, k)?.len())
}

/// A largest k-family, as a sorted list of elements.
pub fn max_k_family(p: &Poset, k: usize) -> Result<Vec<usize>> {
    let n = p.n();
    if n > 64 {
        return Err(Error::SizeLimitExceeded {
            what: "k-family search",
            n,
            limit: 64,
        });
    }
    if k == 0 {
        return Ok(vec![]);
    }
    if k >= p.height() {
        return Ok((0..n).collect());
    }
    let mut search = FamilySearch {
        down: (0..n).map(|x| p.down_mask(x)).collect(),
        k,
        len: vec![0; n],
        best: 0,
        best_mask: 0,
    };
    search.go(0, 0, 0);
    Ok(bits(search.best_mask).collect())
}

struct FamilySearch {
    down: Vec<u64>,
    k: usize,
    /// longest chain inside the kept set ending at each kept element
    len: Vec<usize>,
    best: usize,
    best_mask: u64,
}

impl FamilySearch {
    fn go(&mut self, i: usize, kept: u64, count: usize) {
        let n = self.down.len();
        if count + (n - i) <= self.best {
            return;
        }
        if i == n {
            self.best = count;
            self.best_mask = kept;
            return;
        }
        let below = bits(self.down[i] & kept)
            .map(|x| self.len[x])
            .max()
            .unwrap_or(0);
        if below < self.k {
            self.len[i] = below + 1;
            self.go(i + 1, kept | 1 << i, count + 1);
        }
        self.go(i + 1, kept, count);
    }
}

/// `d_k` by brute force over unions of `k` antichains. Limited to 10 elements.
pub fn dk_oracle(p: &Poset, k: usize) -> Result<usize> {
    let n = p.n();
    if n > ORACLE_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "k-family oracle",
            n,
            limit: ORACLE_LIMIT,
        });
    }
    let mut antichains = Vec::new();
    collect_antichains(p, 0, 0, &mut antichains);
    let mut unions: HashSet<u64> = HashSet::from([0]);
    for _ in 0..k {
        let next: HashSet<u64> = unions
            .iter()
            .flat_map(|&u| antichains.iter().map(move |&a| u | a))
            .collect();
        if next.len() == unions.len() && next == unions {
            break;
        }
        unions = next;
    }
    Ok(unions
        .iter()
        .map(|u| u.count_ones() as usize)
        .max()
        .unwrap_or(0))
}

fn collect_antichains(p: &Poset, next: usize, chosen: u64, out: &mut Vec<u64>) {
    out.push(chosen);
    for y in next..p.n() {
        let clash = (p.up_mask(y) | p.down_mask(y)) & chosen;
        if clash == 0 {
            collect_antichains(p, y + 1, chosen | 1 << y, out);
        }
    }
}

/// The sequence `d_1, …, d_c` with `c` the height.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DSequence(Vec<usize>);

impl DSequence {
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `d_k`, with `d_0 = 0` and `d_k = n` beyond the height.
    pub fn get(&self, k: usize) -> usize {
        match k {
            0 => 0,
            k if k <= self.0.len() => self.0[k - 1],
            _ => self.0.last().copied().unwrap_or(0),
        }
    }

    pub fn delta(&self) -> DeltaSequence {
        let b = self
            .0
            .iter()
            .scan(0, |prev, &d| {
                let step = d - *prev;
                *prev = d;
                Some(step)
            })
            .collect();
        DeltaSequence(b)
    }
}

/// A nonincreasing sequence of positive integers, `Δb_1 = b_1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct DeltaSequence(Vec<usize>);

impl DeltaSequence {
    pub fn new(b: Vec<usize>) -> Result<Self> {
        if b.is_empty() {
            return Err(Error::InvalidDelta("sequence is empty".into()));
        }
        if b.contains(&0) {
            return Err(Error::InvalidDelta(format!("{b:?} has a zero entry")));
        }
        if b.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidDelta(format!("{b:?} is not nonincreasing")));
        }
        Ok(DeltaSequence(b))
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn sum(&self) -> usize {
        self.0.iter().sum()
    }

    /// Partial sums, i.e. the `d` sequence this is the difference of.
    pub fn cumulative(&self) -> Vec<usize> {
        self.0
            .iter()
            .scan(0, |acc, &b| {
                *acc += b;
                Some(*acc)
            })
            .collect()
    }
}

impl TryFrom<Vec<usize>> for DeltaSequence {
    type Error = Error;
    fn try_from(b: Vec<usize>) -> Result<Self> {
        DeltaSequence::new(b)
    }
}

impl From<DeltaSequence> for Vec<usize> {
    fn from(b: DeltaSequence) -> Self {
        b.0
    }
}

impl FromStr for DeltaSequence {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let b = s
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<usize>()
                    .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
            })
            .collect::<Result<Vec<_>>>()?;
        DeltaSequence::new(b)
    }
}

impl fmt::Display for DeltaSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(usize::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

pub fn d_sequence(p: &Poset) -> Result<DSequence> {
    let c = p.height();
    let d = (1..=c)
        .into_par_iter()
        .map(|k| dk(p, k))
        .collect::<Result<Vec<_>>>()?;
    let seq = DSequence(d);
    let delta = seq.delta();
    assert!(
        delta.0.iter().all(|&b| b > 0) && delta.0.windows(2).all(|w| w[0] >= w[1]),
        "difference sequence {:?} is not nonincreasing and positive",
        delta.0
    );
    Ok(seq)
}

pub fn delta_sequence(p: &Poset) -> Result<DeltaSequence> {
    Ok(d_sequence(p)?.delta())
}

/// Whether, for every `k`, the `k` largest ranks together form a maximum k-family.
pub fn is_strong_sperner(p: &Poset) -> Result<bool> {
    let ranks = p.ranks().ok_or(Error::NotRanked)?;
    let mut sizes: Vec<usize> = ranks.iter().map(Vec::len).collect();
    sizes.sort_unstable_by(|a, b| b.cmp(a));
    let d = d_sequence(p)?;
    let mut acc = 0;
    for (i, s) in sizes.iter().enumerate() {
        acc += s;
        if acc != d.get(i + 1) {
            return Ok(false);
        }
    }
    Ok(true)
}
