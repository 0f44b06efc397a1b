//! Polyunsaturated posets with prescribed parameters.
//!
//! `P_1` is the chain `u < s1 < r1`. `P_j` adds to `P_{j-1}` a chain `Q_j` of
//! `j + 1` elements whose top two are `s_j < r_j` (the rest form `T_j`) and
//! the single cover `s_{j-1} < s_j`. `P_j` has width `j`, height `j + 2`,
//! `binom(j + 2, 2)` elements and difference sequence `(j, j, j-1, …, 2, 1, 1)`.
//!
//! [`from_delta`] realizes any admissible difference sequence by peeling
//! chains off the sequence until it sits at its lower bound, where it is the
//! difference sequence of some `P_j`.

use serde::Serialize;

use crate::graphdual::{pj_realizer, Realizer};
use crate::kfamily::DeltaSequence;
use crate::saturation::ChainPartition;
use crate::{disjoint_union, Chain, Error, Poset, Result};

/// Named elements of `P_j`. Vectors are indexed from zero: `s[0]` is `s_1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PjLabels {
    pub j: usize,
    pub u: usize,
    pub s: Vec<usize>,
    pub r: Vec<usize>,
    pub t: Vec<Vec<usize>>,
    pub q: Vec<Vec<usize>>,
}

/// Builds `P_j` with elements indexed block by block: `Q_1 = u, s1, r1`, then
/// each `Q_i` as its `T_i` (ascending), `s_i`, `r_i`.
///
/// # Panics
///
/// If `j == 0`.
pub fn build_pj(j: usize) -> (Poset, PjLabels) {
    assert!(j >= 1, "P_j is defined for j >= 1");
    let mut names = Vec::new();
    let mut covers = Vec::new();
    let mut labels = PjLabels {
        j,
        u: 0,
        s: Vec::with_capacity(j),
        r: Vec::with_capacity(j),
        t: Vec::with_capacity(j),
        q: Vec::with_capacity(j),
    };
    for i in 1..=j {
        let start = names.len();
        let t_len = if i == 1 { 1 } else { i - 1 };
        let mut block = Vec::with_capacity(t_len + 2);
        for m in 1..=t_len {
            names.push(if i == 1 {
                "u".to_string()
            } else {
                format!("t{i}.{m}")
            });
            block.push(start + m - 1);
        }
        let s = start + t_len;
        let r = s + 1;
        names.push(format!("s{i}"));
        names.push(format!("r{i}"));
        block.extend([s, r]);
        for w in block.windows(2) {
            covers.push((w[0], w[1]));
        }
        if let Some(&prev) = labels.s.last() {
            covers.push((prev, s));
        }
        labels.t.push(block[..t_len].to_vec());
        labels.s.push(s);
        labels.r.push(r);
        labels.q.push(block);
    }
    let (p, map) = Poset::from_covers(names.len(), &covers).expect("P_j is acyclic");
    debug_assert!(map.iter().enumerate().all(|(i, &m)| i == m));
    let p = p.with_names(names).expect("one name per element");
    debug_assert_eq!(p.n(), (j + 2) * (j + 1) / 2);
    (p, labels)
}

/// The chain partition `C_k` of `P_j`: the chain `{u, s_1, …, s_k, r_k}`
/// together with the nonempty remainders `Q_i ∖ C` for every `i`.
pub fn ck_partition(j: usize, k: usize) -> Result<ChainPartition> {
    if k == 0 || k > j {
        return Err(Error::BadK { k, max: j });
    }
    let (p, labels) = build_pj(j);
    let mut c = vec![labels.u];
    c.extend(&labels.s[..k]);
    c.push(labels.r[k - 1]);
    let mut chains = vec![Chain::from_sorted_unchecked(c.clone())];
    for q in &labels.q {
        let rest: Vec<usize> = q.iter().copied().filter(|x| !c.contains(x)).collect();
        if !rest.is_empty() {
            chains.push(Chain::from_sorted_unchecked(rest));
        }
    }
    let cp = ChainPartition::from_chains_unchecked(p.n(), chains);
    debug_assert!(cp.validate(&p).is_ok());
    Ok(cp)
}

fn binom2(m: usize) -> usize {
    m * m.saturating_sub(1) / 2
}

/// Checks the interior strict descent `b_2 > b_3 > … > b_{c-1}`.
pub fn check_polyunsaturated_delta(b: &DeltaSequence) -> Result<()> {
    let v = b.as_slice();
    let c = v.len();
    if c >= 4 {
        if let Some(i) = (1..c - 2).find(|&i| v[i] <= v[i + 1]) {
            return Err(Error::InvalidDelta(format!(
                "{b} needs b_{} > b_{} (interior entries must strictly decrease)",
                i + 1,
                i + 2
            )));
        }
    }
    Ok(())
}

/// A polyunsaturated poset of height `c = b.len()` and dimension at most two
/// whose difference sequence is `b`.
pub fn from_delta(b: &DeltaSequence) -> Result<Poset> {
    Ok(from_delta_with_realizer(b)?.0)
}

/// [`from_delta`] together with a realizer carried through the construction.
pub fn from_delta_with_realizer(b: &DeltaSequence) -> Result<(Poset, Realizer)> {
    check_polyunsaturated_delta(b)?;
    let c = b.len();
    if c < 3 {
        return Ok(conjugate_chains(b));
    }
    let lower = lower_bounds(c)?;
    let mut cur = b.as_slice().to_vec();
    let mut peeled = Vec::new();
    while cur.iter().sum::<usize>() > binom2(c) {
        let t = (0..c)
            .rev()
            .find(|&i| cur[i] > lower.as_slice()[i])
            .expect("sum above the lower bound");
        for x in &mut cur[..=t] {
            *x -= 1;
        }
        debug_assert!(DeltaSequence::new(cur.clone())
            .and_then(|s| check_polyunsaturated_delta(&s))
            .is_ok());
        peeled.push(t + 1);
    }
    debug_assert_eq!(cur, lower.as_slice());
    let (mut p, _) = build_pj(c - 2);
    let mut r = pj_realizer(c - 2);
    for (m, &len) in peeled.iter().rev().enumerate() {
        let (chain, chain_r) = named_chain(m + 1, len);
        p = disjoint_union(&p, &chain)?;
        r = r.disjoint_union(&chain_r);
    }
    Ok((p, r))
}

fn named_chain(m: usize, len: usize) -> (Poset, Realizer) {
    let names = (1..=len).map(|i| format!("c{m}.{i}")).collect();
    (
        Poset::chain(len)
            .with_names(names)
            .expect("one name per element"),
        Realizer::chain(len),
    )
}

/// Disjoint chains whose sizes form the partition conjugate to `b`: there
/// are `b_i` chains with at least `i` elements.
fn conjugate_chains(b: &DeltaSequence) -> (Poset, Realizer) {
    let v = b.as_slice();
    let mut acc: Option<(Poset, Realizer)> = None;
    for m in 0..v[0] {
        let len = v.iter().filter(|&&bi| bi > m).count();
        let next = named_chain(m + 1, len);
        acc = Some(match acc {
            None => next,
            Some((p, r)) => (
                disjoint_union(&p, &next.0).expect("nonempty parts"),
                r.disjoint_union(&next.1),
            ),
        });
    }
    acc.expect("b_1 >= 1")
}

fn need_c3(c: usize) -> Result<()> {
    if c < 3 {
        return Err(Error::BadParameters(format!("need c >= 3, got c = {c}")));
    }
    Ok(())
}

/// Entrywise minimum of an admissible sequence of length `c`:
/// `(c-2, c-2, c-3, …, 1, 1)`.
pub fn lower_bounds(c: usize) -> Result<DeltaSequence> {
    need_c3(c)?;
    let mut b = vec![c - 2];
    b.extend((2..c).map(|i| c - i));
    b.push(1);
    DeltaSequence::new(b)
}

/// Entrywise maximum of an admissible sequence of length `c` with `b_1 = a`:
/// `(a, a, a-1, …, a-c+3, a-c+3)`.
pub fn upper_bounds(c: usize, a: usize) -> Result<DeltaSequence> {
    need_c3(c)?;
    if a + 2 < c {
        return Err(Error::BadParameters(format!(
            "need a >= c - 2, got c = {c}, a = {a}"
        )));
    }
    let mut b = vec![a];
    b.extend((2..c).map(|i| a + 2 - i));
    b.push(a + 3 - c);
    DeltaSequence::new(b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Condition {
    #[serde(rename = "a_ge_c_minus_2")]
    AGeCMinus2,
    #[serde(rename = "n_lower")]
    NLower,
    #[serde(rename = "n_upper")]
    NUpper,
}

impl Condition {
    pub fn id(self) -> &'static str {
        match self {
            Condition::AGeCMinus2 => "a_ge_c_minus_2",
            Condition::NLower => "n_lower",
            Condition::NUpper => "n_upper",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FeasibilityVerdict {
    pub feasible: bool,
    pub failed_conditions: Vec<Condition>,
}

impl FeasibilityVerdict {
    pub(crate) fn from_failed(failed_conditions: Vec<Condition>) -> Self {
        FeasibilityVerdict {
            feasible: failed_conditions.is_empty(),
            failed_conditions,
        }
    }
}

/// Whether an `n`-element polyunsaturated poset of height `c ≥ 3` and width
/// `a` exists: `a ≥ c-2`, `n ≥ a + 1 + binom(c-1, 2)` and
/// `n ≤ ca + 1 - binom(c-1, 2)`.
pub fn feasible_nca(n: usize, c: usize, a: usize) -> Result<FeasibilityVerdict> {
    need_c3(c)?;
    if n == 0 || a == 0 {
        return Err(Error::BadParameters(format!(
            "n and a must be positive, got n = {n}, a = {a}"
        )));
    }
    let binom = binom2(c - 1);
    let mut failed = Vec::new();
    if a + 2 < c {
        failed.push(Condition::AGeCMinus2);
    }
    if n < a + 1 + binom {
        failed.push(Condition::NLower);
    }
    if n + binom > c * a + 1 {
        failed.push(Condition::NUpper);
    }
    Ok(FeasibilityVerdict::from_failed(failed))
}

/// An admissible sequence with sum `n`, length `c` and first entry `a`.
///
/// Starts from the lower bounds with `b_1 = a` and raises `b_2`, then `b_3`,
/// and so on, each up to its upper bound, until the sum reaches `n`.
pub fn sequence_for(n: usize, c: usize, a: usize) -> Result<DeltaSequence> {
    if !feasible_nca(n, c, a)?.feasible {
        return Err(Error::Infeasible { n, c, a });
    }
    let mut b = lower_bounds(c)?.as_slice().to_vec();
    b[0] = a;
    let upper = upper_bounds(c, a)?;
    let mut sum: usize = b.iter().sum();
    for (bi, &ui) in b.iter_mut().zip(upper.as_slice()).skip(1) {
        let raise = (ui - *bi).min(n - sum);
        *bi += raise;
        sum += raise;
    }
    debug_assert_eq!(sum, n);
    DeltaSequence::new(b)
}

/// The poset realizing [`sequence_for`], with its realizer.
pub fn realize_nca(n: usize, c: usize, a: usize) -> Result<(Poset, Realizer)> {
    from_delta_with_realizer(&sequence_for(n, c, a)?)
}

/// Whether a polyunsaturated poset of height `c` and width `a` exists.
pub fn feasible_ca(c: usize, a: usize) -> bool {
    c >= 1 && a >= 1 && a + 2 >= c
}

/// Whether an `n`-element polyunsaturated poset of height `c` exists.
///
/// For `c ≤ 2` every poset is polyunsaturated, so this only asks for `n ≥ c`.
pub fn feasible_nc(n: usize, c: usize) -> bool {
    if c <= 2 {
        c >= 1 && n >= c
    } else {
        n >= binom2(c)
    }
}
