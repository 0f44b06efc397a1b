use rayon::prelude::*;
use serde::Serialize;

use super::search::NormSearch;
use super::ChainPartition;
use crate::kfamily::d_sequence;
use crate::{Limits, Poset, Result};

/// Outcome of the joint `(k, l)` saturation question for one pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    /// Every chain partition has `m_k + m_l` at least `min_joint_norm > d_k + d_l`.
    NoJointPartition { min_joint_norm: usize },
    /// A partition that is both k- and l-saturated.
    Witness { partition: ChainPartition },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairVerdict {
    pub k: usize,
    pub l: usize,
    pub d_k: usize,
    pub d_l: usize,
    #[serde(flatten)]
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PolyunsatReport {
    pub height: usize,
    pub pairs: Vec<PairVerdict>,
    pub polyunsaturated: bool,
}

impl PolyunsatReport {
    pub fn pair(&self, k: usize, l: usize) -> Option<&PairVerdict> {
        self.pairs.iter().find(|v| v.k == k && v.l == l)
    }
}

/// Decides, for every pair `k < l < height` with `l ≥ k + 2`, whether some
/// chain partition is both k- and l-saturated.
///
/// Pairs are searched in parallel and reported in lexicographic order.
pub fn is_polyunsaturated(p: &Poset, limits: &Limits) -> Result<PolyunsatReport> {
    limits.check("polyunsaturation certificate", p.n())?;
    let d = d_sequence(p)?;
    let c = d.len();
    let pairs: Vec<(usize, usize)> = (1..c)
        .flat_map(|k| (k + 2..c).map(move |l| (k, l)))
        .collect();
    let clock = limits.clock();
    let pairs = pairs
        .into_par_iter()
        .map(|(k, l)| {
            let (d_k, d_l) = (d.get(k), d.get(l));
            let ks = [k, l];
            let (value, cp) = NormSearch::new(p, &ks, d_k + d_l, clock.clone()).run()?;
            let verdict = if value == d_k + d_l {
                Verdict::Witness { partition: cp }
            } else {
                Verdict::NoJointPartition {
                    min_joint_norm: value,
                }
            };
            Ok(PairVerdict {
                k,
                l,
                d_k,
                d_l,
                verdict,
            })
        })
        .collect::<Result<Vec<_>>>()?;
    let polyunsaturated = pairs
        .iter()
        .all(|v| matches!(v.verdict, Verdict::NoJointPartition { .. }));
    Ok(PolyunsatReport {
        height: c,
        pairs,
        polyunsaturated,
    })
}
