//! Finite strict partial orders.
//!
//! A [`Poset`] stores its strict order as one up-set and one down-set bit row
//! per element. Elements are always indexed topologically: `x < y` in the
//! order implies `x < y` as indices. Every constructor relabels into such an
//! indexing and reports the relabeling, so the search code elsewhere in the
//! crate may assume that chains only ever extend to higher indices.

mod enumerate;
mod iso;

use std::borrow::Cow;
use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use crate::bitset::BitSet;
use crate::{Error, Result};

pub use enumerate::enumerate_posets;
pub use iso::{canonical_form, isomorphic, isomorphic_with_limit, CanonicalForm};

#[derive(Clone, PartialEq, Eq)]
pub struct Poset {
    n: usize,
    up: Vec<BitSet>,
    down: Vec<BitSet>,
    names: Option<Vec<String>>,
}

impl std::fmt::Debug for Poset {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Poset")
            .field("n", &self.n)
            .field("covers", &self.cover_relations())
            .finish()
    }
}

impl Poset {
    /// Builds the order generated by `covers`, closing it transitively.
    ///
    /// Returns the poset together with `map`, where `map[i]` is the internal
    /// index of input element `i`. If the input labels are already a linear
    /// extension, `map` is the identity.
    pub fn from_covers(n: usize, covers: &[(usize, usize)]) -> Result<(Poset, Vec<usize>)> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut succ = vec![Vec::new(); n];
        for &(a, b) in covers {
            for index in [a, b] {
                if index >= n {
                    return Err(Error::IndexOutOfRange { index, n });
                }
            }
            if a == b {
                return Err(Error::CycleDetected);
            }
            succ[a].push(b);
        }
        Self::close(n, succ)
    }

    /// Builds the transitive closure of an arbitrary relation given as a predicate.
    pub fn from_relation(
        n: usize,
        rel: impl Fn(usize, usize) -> bool,
    ) -> Result<(Poset, Vec<usize>)> {
        if n == 0 {
            return Err(Error::EmptyPoset);
        }
        let mut succ = vec![Vec::new(); n];
        for (x, row) in succ.iter_mut().enumerate() {
            for y in 0..n {
                if rel(x, y) {
                    if x == y {
                        return Err(Error::CycleDetected);
                    }
                    row.push(y);
                }
            }
        }
        Self::close(n, succ)
    }

    fn close(n: usize, succ: Vec<Vec<usize>>) -> Result<(Poset, Vec<usize>)> {
        // Kahn's algorithm, smallest available label first.
        let mut indeg = vec![0usize; n];
        for row in &succ {
            for &y in row {
                indeg[y] += 1;
            }
        }
        let mut heap: BinaryHeap<Reverse<usize>> =
            (0..n).filter(|&x| indeg[x] == 0).map(Reverse).collect();
        let mut map = vec![usize::MAX; n];
        let mut order = Vec::with_capacity(n);
        while let Some(Reverse(x)) = heap.pop() {
            map[x] = order.len();
            order.push(x);
            for &y in &succ[x] {
                indeg[y] -= 1;
                if indeg[y] == 0 {
                    heap.push(Reverse(y));
                }
            }
        }
        if order.len() < n {
            return Err(Error::CycleDetected);
        }

        let mut up = vec![BitSet::new(n); n];
        for new_x in (0..n).rev() {
            let old_x = order[new_x];
            let mut row = BitSet::new(n);
            for &old_y in &succ[old_x] {
                let y = map[old_y];
                row.insert(y);
                let above = up[y].clone();
                row.union_with(&above);
            }
            up[new_x] = row;
        }
        let mut down = vec![BitSet::new(n); n];
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }
        Ok((
            Poset {
                n,
                up,
                down,
                names: None,
            },
            map,
        ))
    }

    pub fn chain(n: usize) -> Poset {
        let covers: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Poset::from_covers(n, &covers).expect("chain").0
    }

    pub fn antichain(n: usize) -> Poset {
        Poset::from_covers(n, &[]).expect("antichain").0
    }

    /// Attaches per-element labels, given in internal index order.
    pub fn with_names(mut self, names: Vec<String>) -> Result<Poset> {
        if names.len() != self.n {
            return Err(Error::NameCount {
                expected: self.n,
                got: names.len(),
            });
        }
        self.names = Some(names);
        Ok(self)
    }

    pub fn without_names(mut self) -> Poset {
        self.names = None;
        self
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    /// `x` strictly below `y`.
    #[inline]
    pub fn lt(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    #[inline]
    pub fn comparable(&self, x: usize, y: usize) -> bool {
        self.lt(x, y) || self.lt(y, x)
    }

    pub fn up_set(&self, x: usize) -> &BitSet {
        &self.up[x]
    }

    pub fn down_set(&self, x: usize) -> &BitSet {
        &self.down[x]
    }

    #[inline]
    pub(crate) fn up_mask(&self, x: usize) -> u64 {
        self.up[x].as_u64()
    }

    #[inline]
    pub(crate) fn down_mask(&self, x: usize) -> u64 {
        self.down[x].as_u64()
    }

    pub fn names(&self) -> Option<&[String]> {
        self.names.as_deref()
    }

    pub fn name(&self, x: usize) -> Cow<'_, str> {
        match &self.names {
            Some(names) => Cow::Borrowed(&names[x]),
            None => Cow::Owned(x.to_string()),
        }
    }

    /// Index of the element carrying `name`, if names are present.
    pub fn find(&self, name: &str) -> Option<usize> {
        self.names.as_ref()?.iter().position(|s| s == name)
    }

    /// The transitive reduction, sorted lexicographically.
    pub fn cover_relations(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for x in 0..self.n {
            for y in self.up[x].iter() {
                if !self.up[x].intersects(&self.down[y]) {
                    out.push((x, y));
                }
            }
        }
        out
    }

    /// Cardinality of a longest chain.
    pub fn height(&self) -> usize {
        self.chain_lengths_ending().into_iter().max().unwrap_or(0)
    }

    /// For each element, the size of the longest chain having it as top.
    pub fn chain_lengths_ending(&self) -> Vec<usize> {
        let mut len = vec![1usize; self.n];
        for y in 0..self.n {
            len[y] = 1 + self.down[y].iter().map(|x| len[x]).max().unwrap_or(0);
        }
        len
    }

    /// A longest chain, bottom first.
    pub fn longest_chain(&self) -> Chain {
        let len = self.chain_lengths_ending();
        let Some(mut top) = (0..self.n).max_by_key(|&x| (len[x], Reverse(x))) else {
            return Chain { elems: vec![] };
        };
        let mut elems = vec![top];
        while len[top] > 1 {
            top = self.down[top]
                .iter()
                .find(|&x| len[x] + 1 == len[top])
                .expect("predecessor on a longest chain");
            elems.push(top);
        }
        elems.reverse();
        Chain { elems }
    }

    /// Size of a largest antichain, via maximum matching in the split graph.
    pub fn width(&self) -> usize {
        self.n - self.max_matching().iter().flatten().count()
    }

    /// A minimum chain partition (Dilworth), read off a maximum matching.
    pub fn dilworth_partition(&self) -> Vec<Chain> {
        let succ = self.max_matching();
        let mut has_pred = vec![false; self.n];
        for &y in succ.iter().flatten() {
            has_pred[y] = true;
        }
        let mut chains = Vec::new();
        for start in (0..self.n).filter(|&x| !has_pred[x]) {
            let mut elems = vec![start];
            let mut cur = start;
            while let Some(next) = succ[cur] {
                elems.push(next);
                cur = next;
            }
            chains.push(Chain { elems });
        }
        chains
    }

    /// Kuhn's augmenting paths; `result[x]` is the matched successor of `x`.
    fn max_matching(&self) -> Vec<Option<usize>> {
        let n = self.n;
        let mut left_of = vec![None; n];
        let mut right_of: Vec<Option<usize>> = vec![None; n];
        for x in 0..n {
            let mut seen = vec![false; n];
            self.augment(x, &mut seen, &mut left_of, &mut right_of);
        }
        right_of
    }

    fn augment(
        &self,
        x: usize,
        seen: &mut [bool],
        left_of: &mut [Option<usize>],
        right_of: &mut [Option<usize>],
    ) -> bool {
        for y in self.up[x].iter() {
            if seen[y] {
                continue;
            }
            seen[y] = true;
            if left_of[y].is_none_or(|x2| self.augment(x2, seen, left_of, right_of)) {
                left_of[y] = Some(x);
                right_of[x] = Some(y);
                return true;
            }
        }
        false
    }

    /// Largest antichain by exhaustive search; intended for cross-checks on small posets.
    pub fn width_brute(&self) -> usize {
        fn go(p: &Poset, next: usize, chosen: &mut Vec<usize>, best: &mut usize) {
            *best = (*best).max(chosen.len());
            for y in next..p.n {
                if chosen.iter().all(|&x| !p.comparable(x, y)) {
                    chosen.push(y);
                    go(p, y + 1, chosen, best);
                    chosen.pop();
                }
            }
        }
        let mut best = 0;
        go(self, 0, &mut Vec::new(), &mut best);
        best
    }

    pub fn is_chain(&self, elems: &[usize]) -> bool {
        elems
            .iter()
            .enumerate()
            .all(|(i, &x)| elems[i + 1..].iter().all(|&y| self.comparable(x, y)))
    }

    pub fn is_antichain(&self, elems: &[usize]) -> bool {
        elems.iter().enumerate().all(|(i, &x)| {
            elems[i + 1..]
                .iter()
                .all(|&y| x != y && !self.comparable(x, y))
        })
    }

    /// The rank classes bottom-up, or `None` if the poset is not ranked.
    ///
    /// A rank function must increase by exactly one along every cover. It is
    /// determined up to a shift on each connected component of the cover
    /// graph; each component is shifted so that its lowest rank is 0.
    pub fn ranks(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.n;
        let covers = self.cover_relations();
        let mut adj: Vec<Vec<(usize, i64)>> = vec![Vec::new(); n];
        for &(x, y) in &covers {
            adj[x].push((y, 1));
            adj[y].push((x, -1));
        }
        let mut rank: Vec<Option<i64>> = vec![None; n];
        for root in 0..n {
            if rank[root].is_some() {
                continue;
            }
            rank[root] = Some(0);
            let mut component = vec![root];
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let rx = rank[x].unwrap();
                for &(y, step) in &adj[x] {
                    match rank[y] {
                        None => {
                            rank[y] = Some(rx + step);
                            component.push(y);
                            queue.push_back(y);
                        }
                        Some(ry) if ry != rx + step => return None,
                        Some(_) => {}
                    }
                }
            }
            let low = component.iter().map(|&x| rank[x].unwrap()).min().unwrap();
            for &x in &component {
                rank[x] = Some(rank[x].unwrap() - low);
            }
        }
        let top = rank.iter().map(|r| r.unwrap()).max().unwrap_or(0) as usize;
        let mut classes = vec![Vec::new(); top + 1];
        for (x, r) in rank.iter().enumerate() {
            classes[r.unwrap() as usize].push(x);
        }
        Some(classes)
    }

    /// The induced subposet on `elems` (given in increasing index order).
    pub fn induced(&self, elems: &[usize]) -> Poset {
        let (p, _) = Poset::from_relation(elems.len(), |i, j| self.lt(elems[i], elems[j]))
            .expect("induced subposet of a poset");
        match &self.names {
            Some(names) => p
                .with_names(elems.iter().map(|&x| names[x].clone()).collect())
                .unwrap(),
            None => p,
        }
    }
}

/// `p` followed by `q`, with no relations between the parts.
///
/// Elements of `p` keep their indices; element `i` of `q` becomes `p.n() + i`.
pub fn disjoint_union(p: &Poset, q: &Poset) -> Result<Poset> {
    if p.n == 0 || q.n == 0 {
        return Err(Error::EmptyPoset);
    }
    let n = p.n + q.n;
    let mut up = Vec::with_capacity(n);
    for part in [p, q] {
        let offset = up.len();
        for x in 0..part.n {
            let mut row = BitSet::new(n);
            for y in part.up[x].iter() {
                row.insert(y + offset);
            }
            up.push(row);
        }
    }
    let mut down = vec![BitSet::new(n); n];
    for (x, row) in up.iter().enumerate() {
        for y in row.iter() {
            down[y].insert(x);
        }
    }
    let names = if p.names.is_some() || q.names.is_some() {
        let mut names: Vec<String> = (0..p.n).map(|x| p.name(x).into_owned()).collect();
        names.extend((0..q.n).map(|x| match &q.names {
            Some(qn) => qn[x].clone(),
            None => (p.n + x).to_string(),
        }));
        Some(names)
    } else {
        None
    };
    Ok(Poset { n, up, down, names })
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Chain {
    elems: Vec<usize>,
}

impl Chain {
    /// Sorts `elems` and checks pairwise comparability.
    pub fn new(p: &Poset, mut elems: Vec<usize>) -> Result<Chain> {
        elems.sort_unstable();
        if let Some(&index) = elems.iter().find(|&&x| x >= p.n()) {
            return Err(Error::IndexOutOfRange { index, n: p.n() });
        }
        if elems.windows(2).any(|w| !p.lt(w[0], w[1])) {
            return Err(Error::PartitionMismatch(format!(
                "{elems:?} is not a chain"
            )));
        }
        Ok(Chain { elems })
    }

    pub(crate) fn from_sorted_unchecked(elems: Vec<usize>) -> Chain {
        Chain { elems }
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    pub fn contains(&self, x: usize) -> bool {
        self.elems.binary_search(&x).is_ok()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Antichain {
    elems: Vec<usize>,
}

impl Antichain {
    pub fn new(p: &Poset, mut elems: Vec<usize>) -> Result<Antichain> {
        elems.sort_unstable();
        elems.dedup();
        if let Some(&index) = elems.iter().find(|&&x| x >= p.n()) {
            return Err(Error::IndexOutOfRange { index, n: p.n() });
        }
        if !p.is_antichain(&elems) {
            return Err(Error::BadParameters(format!(
                "{elems:?} is not an antichain"
            )));
        }
        Ok(Antichain { elems })
    }

    pub fn elems(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }
}
