//! The comparability-graph view of a poset and the antichain-partition duals.
//!
//! Chains and antichains of a poset are the cliques and independent sets of
//! its comparability graph. A poset of dimension at most two comes with a
//! [`Realizer`]; reversing one of its two linear extensions gives the
//! conjugate poset, whose comparability graph is the complement. Proper
//! colourings of `G(P)` are then exactly chain partitions of the conjugate,
//! which is how co-polyunsaturation is certified here.

use serde::{Deserialize, Serialize};

use crate::bitset::BitSet;
use crate::construct::{build_pj, from_delta_with_realizer, Condition, FeasibilityVerdict};
use crate::kfamily::DeltaSequence;
use crate::saturation::{is_polyunsaturated, PolyunsatReport};
use crate::{Error, Limits, Poset, Result};

/// Largest graph accepted by [`alpha_k`] and [`omega_k`].
pub const GRAPH_SEARCH_LIMIT: usize = 16;

/// Largest poset for which [`find_realizer`] searches linear extensions.
pub const REALIZER_SEARCH_LIMIT: usize = 8;

#[derive(Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<BitSet>,
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n)
            .field("edges", &self.edges())
            .finish()
    }
}

impl Graph {
    pub fn empty(n: usize) -> Graph {
        Graph {
            n,
            adj: vec![BitSet::new(n); n],
        }
    }

    pub fn complete(n: usize) -> Graph {
        complement(&Graph::empty(n))
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph> {
        let mut g = Graph::empty(n);
        for &(a, b) in edges {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(Error::BadParameters(format!("loop at vertex {a}")));
            }
            g.adj[a].insert(b);
            g.adj[b].insert(a);
        }
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a].contains(b)
    }

    pub fn neighbours(&self, a: usize) -> &BitSet {
        &self.adj[a]
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .flat_map(|a| {
                self.adj[a]
                    .iter()
                    .filter(move |&b| a < b)
                    .map(move |b| (a, b))
            })
            .collect()
    }

    /// The same graph with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        let mut g = Graph::empty(self.n);
        for (a, b) in self.edges() {
            g.adj[perm[a]].insert(perm[b]);
            g.adj[perm[b]].insert(perm[a]);
        }
        g
    }
}

pub fn comparability_graph(p: &Poset) -> Graph {
    let mut g = Graph::empty(p.n());
    for x in 0..p.n() {
        for y in p.up_set(x).iter() {
            g.adj[x].insert(y);
            g.adj[y].insert(x);
        }
    }
    g
}

pub fn complement(g: &Graph) -> Graph {
    let mut h = Graph::empty(g.n);
    for a in 0..g.n {
        for b in 0..g.n {
            if a != b && !g.adj[a].contains(b) {
                h.adj[a].insert(b);
            }
        }
    }
    h
}

/// Largest union of `k` independent sets, i.e. the largest `k`-colourable
/// induced subgraph. Chromatic numbers of all vertex subsets are computed by
/// the subset recurrence, so this is exponential and limited to 16 vertices.
pub fn alpha_k(g: &Graph, k: usize) -> Result<usize> {
    let n = g.n;
    if n > GRAPH_SEARCH_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "independent-set union search",
            n,
            limit: GRAPH_SEARCH_LIMIT,
        });
    }
    let adj: Vec<u32> = (0..n)
        .map(|a| g.adj[a].iter().fold(0u32, |m, b| m | 1 << b))
        .collect();
    let size = 1usize << n;
    let mut independent = vec![false; size];
    independent[0] = true;
    for s in 1..size {
        let x = s.trailing_zeros() as usize;
        let rest = s & (s - 1);
        independent[s] = independent[rest] && adj[x] & rest as u32 == 0;
    }
    let mut chi = vec![u8::MAX; size];
    chi[0] = 0;
    let mut best = 0;
    for s in 1..size {
        let x = s & s.wrapping_neg();
        let rest = s ^ x;
        // independent sets inside s that contain its lowest vertex
        let mut t = rest;
        let mut c = u8::MAX;
        loop {
            if independent[t | x] {
                c = c.min(chi[rest & !t].saturating_add(1));
            }
            if t == 0 {
                break;
            }
            t = (t - 1) & rest;
        }
        chi[s] = c;
        if (c as usize) <= k {
            best = best.max(s.count_ones() as usize);
        }
    }
    Ok(best)
}

/// Largest union of `k` cliques.
pub fn omega_k(g: &Graph, k: usize) -> Result<usize> {
    alpha_k(&complement(g), k)
}

/// Two linear extensions whose intersection is the order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Realizer {
    pub ext1: Vec<usize>,
    pub ext2: Vec<usize>,
}

impl Realizer {
    /// Realizer of `disjoint_union(p, q)` from realizers of `p` (with `n` elements) and `q`.
    ///
    /// The second part goes after the first in `ext1` and before it in
    /// `ext2`, which makes every cross pair incomparable.
    pub fn disjoint_union(&self, other: &Realizer) -> Realizer {
        let offset = self.ext1.len();
        let shifted = |v: &[usize]| v.iter().map(|&x| x + offset).collect::<Vec<_>>();
        let mut ext1 = self.ext1.clone();
        ext1.extend(shifted(&other.ext1));
        let mut ext2 = shifted(&other.ext2);
        ext2.extend(&self.ext2);
        Realizer { ext1, ext2 }
    }

    /// A chain realized by the identity twice.
    pub fn chain(n: usize) -> Realizer {
        Realizer {
            ext1: (0..n).collect(),
            ext2: (0..n).collect(),
        }
    }

    /// Expresses the realizer in new labels, `map[old] = new`.
    pub fn relabel(&self, map: &[usize]) -> Realizer {
        Realizer {
            ext1: self.ext1.iter().map(|&x| map[x]).collect(),
            ext2: self.ext2.iter().map(|&x| map[x]).collect(),
        }
    }

    /// Parses two comma-separated permutations.
    pub fn parse(ext1: &str, ext2: &str) -> Result<Realizer> {
        let parse = |s: &str| {
            s.split(',')
                .map(|t| {
                    t.trim()
                        .parse::<usize>()
                        .map_err(|e| Error::Parse(format!("{t:?}: {e}")))
                })
                .collect::<Result<Vec<_>>>()
        };
        Ok(Realizer {
            ext1: parse(ext1)?,
            ext2: parse(ext2)?,
        })
    }
}

fn positions(ext: &[usize], n: usize) -> Option<Vec<usize>> {
    if ext.len() != n {
        return None;
    }
    let mut pos = vec![usize::MAX; n];
    for (i, &x) in ext.iter().enumerate() {
        if x >= n || pos[x] != usize::MAX {
            return None;
        }
        pos[x] = i;
    }
    Some(pos)
}

/// The realizer of `P_j` given by its two explicit linear extensions:
/// `T_1 s_1 r_1 T_2 s_2 r_2 …` and `T_j … T_1 s_1 … s_j r_j … r_1`.
pub fn pj_realizer(j: usize) -> Realizer {
    let (_, labels) = build_pj(j);
    let mut ext1 = Vec::new();
    for i in 0..j {
        ext1.extend(&labels.t[i]);
        ext1.push(labels.s[i]);
        ext1.push(labels.r[i]);
    }
    let mut ext2: Vec<usize> = labels.t.iter().rev().flatten().copied().collect();
    ext2.extend(&labels.s);
    ext2.extend(labels.r.iter().rev());
    Realizer { ext1, ext2 }
}

pub fn verify_realizer(p: &Poset, r: &Realizer) -> bool {
    let n = p.n();
    let (Some(pos1), Some(pos2)) = (positions(&r.ext1, n), positions(&r.ext2, n)) else {
        return false;
    };
    (0..n).all(|x| (0..n).all(|y| x == y || p.lt(x, y) == (pos1[x] < pos1[y] && pos2[x] < pos2[y])))
}

/// A conjugate poset together with its induced realizer.
///
/// The conjugate is indexed by position in the source realizer's `ext1`:
/// element `i` of `poset` is element `origin[i]` of the source.
#[derive(Debug, Clone)]
pub struct Conjugate {
    pub poset: Poset,
    pub realizer: Realizer,
    pub origin: Vec<usize>,
}

/// `x` below `y` iff `x` precedes `y` in `ext1` and follows it in `ext2`.
pub fn conjugate(p: &Poset, r: &Realizer) -> Result<Conjugate> {
    if !verify_realizer(p, r) {
        return Err(Error::InvalidRealizer(
            "the extensions do not intersect to the order".into(),
        ));
    }
    let n = p.n();
    let pos1 = positions(&r.ext1, n).unwrap();
    let pos2 = positions(&r.ext2, n).unwrap();
    let origin = r.ext1.clone();
    let (poset, map) = Poset::from_relation(n, |i, j| i < j && pos2[origin[j]] < pos2[origin[i]])?;
    debug_assert!(map.iter().enumerate().all(|(i, &m)| i == m));
    let poset = match p.names() {
        Some(names) => poset.with_names(origin.iter().map(|&x| names[x].clone()).collect())?,
        None => poset,
    };
    let realizer = Realizer {
        ext1: (0..n).collect(),
        ext2: r.ext2.iter().rev().map(|&x| pos1[x]).collect(),
    };
    debug_assert!(verify_realizer(&poset, &realizer));
    Ok(Conjugate {
        poset,
        realizer,
        origin,
    })
}

/// Searches the linear extensions of `p` for a two-element realizer.
///
/// For a fixed first extension the second one is forced (comparable pairs in
/// order, incomparable pairs reversed), so only the first is enumerated.
pub fn find_realizer(p: &Poset) -> Result<Option<Realizer>> {
    let n = p.n();
    if n > REALIZER_SEARCH_LIMIT {
        return Err(Error::SizeLimitExceeded {
            what: "realizer search",
            n,
            limit: REALIZER_SEARCH_LIMIT,
        });
    }
    let mut ext = Vec::with_capacity(n);
    let mut placed = vec![false; n];
    Ok(extensions(p, &mut ext, &mut placed))
}

fn extensions(p: &Poset, ext: &mut Vec<usize>, placed: &mut [bool]) -> Option<Realizer> {
    let n = p.n();
    if ext.len() == n {
        let mut pos1 = vec![0; n];
        for (i, &x) in ext.iter().enumerate() {
            pos1[x] = i;
        }
        // before2(x, y): x < y, or incomparable and y first in ext1
        let before2 = |x: usize, y: usize| p.lt(x, y) || (!p.comparable(x, y) && pos1[y] < pos1[x]);
        let mut ext2: Vec<usize> = (0..n).collect();
        ext2.sort_by_key(|&x| (0..n).filter(|&y| y != x && before2(y, x)).count());
        let consistent = ext2
            .iter()
            .enumerate()
            .all(|(i, &x)| ext2[i + 1..].iter().all(|&y| before2(x, y)));
        return consistent.then(|| Realizer {
            ext1: ext.clone(),
            ext2,
        });
    }
    for x in 0..n {
        if placed[x] || p.down_set(x).iter().any(|w| !placed[w]) {
            continue;
        }
        placed[x] = true;
        ext.push(x);
        let found = extensions(p, ext, placed);
        ext.pop();
        placed[x] = false;
        if found.is_some() {
            return found;
        }
    }
    None
}

/// Polyunsaturation of the complement of `G(p)`, certified on the conjugate.
pub fn is_co_polyunsaturated(p: &Poset, r: &Realizer, limits: &Limits) -> Result<PolyunsatReport> {
    let conj = conjugate(p, r)?;
    is_polyunsaturated(&conj.poset, limits)
}

/// A poset whose comparability graph `G` is co-polyunsaturated with
/// `Δω(G) = b`: the conjugate of the polyunsaturated realization of `b`.
pub fn from_delta_dual(b: &DeltaSequence) -> Result<Conjugate> {
    let (p, r) = from_delta_with_realizer(b)?;
    conjugate(&p, &r)
}

/// Existence of an `n`-vertex polyunsaturated graph with independence number
/// `a ≥ 3` and clique number `c` in the dual setting: the primal conditions
/// with the roles of `a` and `c` exchanged.
pub fn feasible_dual_nac(n: usize, a: usize, c: usize) -> Result<FeasibilityVerdict> {
    if a < 3 || n == 0 || c == 0 {
        return Err(Error::BadParameters(format!(
            "need a >= 3 and positive n, c; got n = {n}, a = {a}, c = {c}"
        )));
    }
    let binom = (a - 1) * (a - 2) / 2;
    let mut failed = Vec::new();
    if c + 2 < a {
        failed.push(Condition::AGeCMinus2);
    }
    if n < c + 1 + binom {
        failed.push(Condition::NLower);
    }
    if n + binom > a * c + 1 {
        failed.push(Condition::NUpper);
    }
    Ok(FeasibilityVerdict::from_failed(failed))
}
