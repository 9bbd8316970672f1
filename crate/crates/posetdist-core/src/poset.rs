//! Finite poset representation and basic order statistics.
//!
//! A poset is stored as its transitively reduced cover relation plus the
//! cached reflexive-transitive closure (one bitset row per point for each
//! direction). Points are dense indices `0..n`; labels are metadata only.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::bitset::Bitset;

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum PosetError {
    /// The input cover pairs contain a directed cycle.
    CyclicInput,
    /// A point index is outside `0..n`.
    BadIndex { index: usize, n: usize },
}

impl core::fmt::Display for PosetError {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        match self {
            PosetError::CyclicInput => write!(f, "cover pairs contain a cycle"),
            PosetError::BadIndex { index, n } => {
                write!(f, "point index {index} out of range for {n} points")
            }
        }
    }
}

/// Rank and size statistics of a poset.
///
/// `rank[x]` is the length of a longest chain having `x` as its largest
/// element. `is_ranked` is only defined when the poset has a unique minimum
/// and maximum; `None` encodes "no bounds, undefined".
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RankData {
    pub rank: Vec<usize>,
    pub is_ranked: Option<bool>,
    pub height: usize,
    pub width: usize,
}

/// A sequence of all points respecting the order relation.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearExtension {
    pub order: Vec<usize>,
}

#[derive(Clone, Debug)]
pub struct Poset {
    n: usize,
    covers: Vec<(usize, usize)>,
    up: Vec<Bitset>,
    down: Vec<Bitset>,
    up_covers: Vec<Vec<usize>>,
    down_covers: Vec<Vec<usize>>,
    rank: Vec<usize>,
    labels: Vec<Option<String>>,
}

impl PartialEq for Poset {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.covers == other.covers && self.labels == other.labels
    }
}
impl Eq for Poset {}

impl Poset {
    /// Builds a poset from cover pairs `(a, b)` meaning `b` covers `a`.
    ///
    /// Transitively redundant pairs are reduced away; the stored cover set is
    /// always the transitive reduction of the input.
    pub fn from_cover_pairs(n: usize, pairs: &[(usize, usize)]) -> Result<Self, PosetError> {
        for &(a, b) in pairs {
            if a >= n {
                return Err(PosetError::BadIndex { index: a, n });
            }
            if b >= n {
                return Err(PosetError::BadIndex { index: b, n });
            }
            if a == b {
                return Err(PosetError::CyclicInput);
            }
        }

        // Adjacency of the raw input digraph, deduplicated.
        let mut succ: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in pairs {
            if !succ[a].contains(&b) {
                succ[a].push(b);
            }
        }

        let topo = toposort(n, &succ).ok_or(PosetError::CyclicInput)?;

        // Reflexive-transitive closure, propagated in reverse topological order.
        let mut up: Vec<Bitset> = (0..n).map(|_| Bitset::new(n)).collect();
        for &x in topo.iter().rev() {
            up[x].insert(x);
            let succs = succ[x].clone();
            for s in succs {
                let row = up[s].clone();
                up[x].union_with(&row);
            }
        }
        let mut down: Vec<Bitset> = (0..n).map(|_| Bitset::new(n)).collect();
        for (x, row) in up.iter().enumerate() {
            for y in row.iter() {
                down[y].insert(x);
            }
        }

        // Transitive reduction: a cover of the closure must be an input pair,
        // so it suffices to filter the input.
        let mut covers: Vec<(usize, usize)> = Vec::new();
        for x in 0..n {
            for &y in &succ[x] {
                let mut between = up[x].intersection(&down[y]);
                between.remove(x);
                between.remove(y);
                if between.is_empty() {
                    covers.push((x, y));
                }
            }
        }
        covers.sort_unstable();
        covers.dedup();

        let mut up_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        let mut down_covers: Vec<Vec<usize>> = vec![Vec::new(); n];
        for &(a, b) in &covers {
            up_covers[a].push(b);
            down_covers[b].push(a);
        }

        // Longest-path rank over covers.
        let mut rank = vec![0usize; n];
        for &x in &topo {
            for &b in &up_covers[x] {
                if rank[b] < rank[x] + 1 {
                    rank[b] = rank[x] + 1;
                }
            }
        }

        Ok(Poset {
            n,
            covers,
            up,
            down,
            up_covers,
            down_covers,
            rank,
            labels: vec![None; n],
        })
    }

    pub fn with_labels(mut self, labels: Vec<Option<String>>) -> Self {
        assert_eq!(labels.len(), self.n);
        self.labels = labels;
        self
    }

    pub fn set_label(&mut self, i: usize, label: String) {
        self.labels[i] = Some(label);
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    pub fn labels(&self) -> &[Option<String>] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> Option<&str> {
        self.labels[i].as_deref()
    }

    /// Returns the label of a point, or its index rendered as text.
    pub fn display_label(&self, i: usize) -> String {
        match &self.labels[i] {
            Some(l) => l.clone(),
            None => alloc::format!("{i}"),
        }
    }

    /// `x ⪯ y` in the reflexive order.
    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.up[x].contains(y)
    }

    /// `x ≺ y` strictly.
    pub fn lt(&self, x: usize, y: usize) -> bool {
        x != y && self.leq(x, y)
    }

    pub fn is_comparable(&self, x: usize, y: usize) -> bool {
        self.leq(x, y) || self.leq(y, x)
    }

    /// Bitset of `{y : x ⪯ y}` (includes `x`).
    pub fn up_set(&self, x: usize) -> &Bitset {
        &self.up[x]
    }

    /// Bitset of `{y : y ⪯ x}` (includes `x`).
    pub fn down_set(&self, x: usize) -> &Bitset {
        &self.down[x]
    }

    pub fn upper_covers(&self, x: usize) -> &[usize] {
        &self.up_covers[x]
    }

    pub fn lower_covers(&self, x: usize) -> &[usize] {
        &self.down_covers[x]
    }

    pub fn minimals(&self) -> Vec<usize> {
        (0..self.n)
            .filter(|&x| self.down[x].count() == 1)
            .collect()
    }

    pub fn maximals(&self) -> Vec<usize> {
        (0..self.n).filter(|&x| self.up[x].count() == 1).collect()
    }

    /// The unique minimal element, when there is exactly one.
    pub fn bottom(&self) -> Option<usize> {
        let m = self.minimals();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    /// The unique maximal element, when there is exactly one.
    pub fn top(&self) -> Option<usize> {
        let m = self.maximals();
        if m.len() == 1 {
            Some(m[0])
        } else {
            None
        }
    }

    pub fn rank(&self, x: usize) -> usize {
        self.rank[x]
    }

    pub fn ranks(&self) -> &[usize] {
        &self.rank
    }

    /// Size of a maximum chain.
    pub fn height(&self) -> usize {
        if self.n == 0 {
            0
        } else {
            self.rank.iter().max().unwrap() + 1
        }
    }

    /// Points grouped by rank, each group in ascending index order.
    pub fn rank_levels(&self) -> Vec<Vec<usize>> {
        let mut levels = vec![Vec::new(); self.height()];
        for x in 0..self.n {
            levels[self.rank[x]].push(x);
        }
        levels
    }

    pub fn rank_data(&self) -> RankData {
        let is_ranked = match (self.bottom(), self.top()) {
            (Some(_), Some(_)) => {
                Some(self.covers.iter().all(|&(a, b)| self.rank[b] == self.rank[a] + 1))
            }
            _ => None,
        };
        RankData {
            rank: self.rank.clone(),
            is_ranked,
            height: self.height(),
            width: self.chain_partition().len(),
        }
    }

    /// Partitions the points into `width` chains (Dilworth), each listed
    /// bottom-to-top. Computed by maximum bipartite matching on the strict
    /// comparability relation.
    pub fn chain_partition(&self) -> Vec<Vec<usize>> {
        let n = self.n;
        // match_up[x]: the point directly following x on its chain.
        let mut match_up: Vec<Option<usize>> = vec![None; n];
        let mut match_down: Vec<Option<usize>> = vec![None; n];

        fn augment(
            p: &Poset,
            x: usize,
            visited: &mut [bool],
            match_up: &mut [Option<usize>],
            match_down: &mut [Option<usize>],
        ) -> bool {
            for y in p.up[x].iter() {
                if y == x || visited[y] {
                    continue;
                }
                visited[y] = true;
                if match_down[y].is_none()
                    || augment(p, match_down[y].unwrap(), visited, match_up, match_down)
                {
                    match_up[x] = Some(y);
                    match_down[y] = Some(x);
                    return true;
                }
            }
            false
        }

        for x in 0..n {
            let mut visited = vec![false; n];
            augment(self, x, &mut visited, &mut match_up, &mut match_down);
        }

        let mut chains = Vec::new();
        for (start, below) in match_down.iter().enumerate() {
            if below.is_some() {
                continue;
            }
            let mut chain = vec![start];
            let mut cur = start;
            while let Some(next) = match_up[cur] {
                chain.push(next);
                cur = next;
            }
            chains.push(chain);
        }
        chains
    }

    /// Lazily enumerates linear extensions in lexicographic order of point
    /// indices.
    pub fn linear_extensions(&self) -> LinearExtensions<'_> {
        LinearExtensions::new(self)
    }

    /// Checks that `ext` visits every point once, parents before children.
    pub fn respects_order(&self, ext: &LinearExtension) -> bool {
        if ext.order.len() != self.n {
            return false;
        }
        let mut pos = vec![usize::MAX; self.n];
        for (i, &x) in ext.order.iter().enumerate() {
            if x >= self.n || pos[x] != usize::MAX {
                return false;
            }
            pos[x] = i;
        }
        self.covers.iter().all(|&(a, b)| pos[a] < pos[b])
    }

    /// The poset with all relations reversed.
    pub fn dual(&self) -> Poset {
        let pairs: Vec<(usize, usize)> = self.covers.iter().map(|&(a, b)| (b, a)).collect();
        Poset::from_cover_pairs(self.n, &pairs)
            .expect("reversing an acyclic relation stays acyclic")
            .with_labels(self.labels.clone())
    }

    /// The subposet induced on `points`, with its own dense indices.
    /// Index `i` of the result corresponds to `points[i]`.
    pub fn induced(&self, points: &[usize]) -> Poset {
        let k = points.len();
        let mut pairs = Vec::new();
        for i in 0..k {
            for j in 0..k {
                if i != j && self.lt(points[i], points[j]) {
                    pairs.push((i, j));
                }
            }
        }
        let labels = points.iter().map(|&p| self.labels[p].clone()).collect();
        Poset::from_cover_pairs(k, &pairs)
            .expect("induced relation of a poset is acyclic")
            .with_labels(labels)
    }

    /// Connected-component id per point (Hasse diagram connectivity),
    /// numbered by smallest member.
    pub fn components(&self) -> Vec<usize> {
        let mut comp = vec![usize::MAX; self.n];
        let mut next = 0;
        for start in 0..self.n {
            if comp[start] != usize::MAX {
                continue;
            }
            let id = next;
            next += 1;
            let mut stack = vec![start];
            comp[start] = id;
            while let Some(x) = stack.pop() {
                for &other in self.up_covers[x].iter().chain(&self.down_covers[x]) {
                    if comp[other] == usize::MAX {
                        comp[other] = id;
                        stack.push(other);
                    }
                }
            }
        }
        comp
    }
}

fn toposort(n: usize, succ: &[Vec<usize>]) -> Option<Vec<usize>> {
    let mut indeg = vec![0usize; n];
    for adj in succ {
        for &b in adj {
            indeg[b] += 1;
        }
    }
    let mut queue: Vec<usize> = (0..n).filter(|&x| indeg[x] == 0).collect();
    queue.sort_unstable();
    let mut out = Vec::with_capacity(n);
    let mut head = 0;
    while head < queue.len() {
        let x = queue[head];
        head += 1;
        out.push(x);
        for &b in &succ[x] {
            indeg[b] -= 1;
            if indeg[b] == 0 {
                queue.push(b);
            }
        }
    }
    if out.len() == n {
        Some(out)
    } else {
        None
    }
}

/// Backtracking iterator over linear extensions, lexicographic by index.
pub struct LinearExtensions<'a> {
    poset: &'a Poset,
    chosen: Vec<usize>,
    used: Vec<bool>,
    pending: Vec<usize>, // unmet lower covers per point
    started: bool,
    done: bool,
}

impl<'a> LinearExtensions<'a> {
    fn new(poset: &'a Poset) -> Self {
        let n = poset.n;
        let mut pending = vec![0usize; n];
        for &(_, b) in &poset.covers {
            pending[b] += 1;
        }
        LinearExtensions {
            poset,
            chosen: Vec::with_capacity(n),
            used: vec![false; n],
            pending,
            started: false,
            done: false,
        }
    }

    fn available_after(&self, from: usize) -> Option<usize> {
        (from..self.poset.n).find(|&x| !self.used[x] && self.pending[x] == 0)
    }

    fn push(&mut self, x: usize) {
        self.chosen.push(x);
        self.used[x] = true;
        for &b in self.poset.upper_covers(x) {
            self.pending[b] -= 1;
        }
    }

    fn pop(&mut self) -> usize {
        let x = self.chosen.pop().unwrap();
        self.used[x] = false;
        for &b in self.poset.upper_covers(x) {
            self.pending[b] += 1;
        }
        x
    }

    /// Advances to the next extension. Descends with the smallest available
    /// point; on exhaustion backtracks and retries the next candidate.
    fn advance(&mut self) -> bool {
        let n = self.poset.n;
        if !self.started {
            self.started = true;
            while self.chosen.len() < n {
                let x = self.available_after(0).expect("acyclic poset always extends");
                self.push(x);
            }
            return true;
        }
        loop {
            if self.chosen.is_empty() {
                return false;
            }
            let last = self.pop();
            if let Some(next) = self.available_after(last + 1) {
                self.push(next);
                while self.chosen.len() < n {
                    let x = self.available_after(0).expect("acyclic poset always extends");
                    self.push(x);
                }
                return true;
            }
        }
    }
}

impl Iterator for LinearExtensions<'_> {
    type Item = LinearExtension;

    fn next(&mut self) -> Option<LinearExtension> {
        if self.done {
            return None;
        }
        if self.poset.n == 0 {
            // single empty extension
            self.done = true;
            if self.started {
                return None;
            }
            self.started = true;
            return Some(LinearExtension { order: Vec::new() });
        }
        if self.advance() {
            Some(LinearExtension {
                order: self.chosen.clone(),
            })
        } else {
            self.done = true;
            None
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Poset M: z=0, w=1, y=2, x=3, v=4.
    pub(crate) fn poset_m() -> Poset {
        Poset::from_cover_pairs(5, &[(0, 1), (0, 2), (2, 3), (1, 4), (3, 4)]).unwrap()
    }

    #[test]
    fn m_has_height_4() {
        let m = poset_m();
        assert_eq!(m.height(), 4);
        assert_eq!(m.rank(0), 0);
        assert_eq!(m.rank(4), 3);
    }

    #[test]
    fn singleton() {
        let p = Poset::from_cover_pairs(1, &[]).unwrap();
        assert!(p.leq(0, 0));
        assert_eq!(p.covers(), &[]);
    }

    #[test]
    fn transitive_reduction_of_three_chain() {
        let p = Poset::from_cover_pairs(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert_eq!(p.covers(), &[(0, 1), (1, 2)]);
        assert!(p.leq(0, 2));
    }

    #[test]
    fn cycle_and_index_errors() {
        assert_eq!(
            Poset::from_cover_pairs(2, &[(0, 1), (1, 0)]),
            Err(PosetError::CyclicInput)
        );
        assert_eq!(
            Poset::from_cover_pairs(2, &[(0, 2)]),
            Err(PosetError::BadIndex { index: 2, n: 2 })
        );
        assert_eq!(
            Poset::from_cover_pairs(2, &[(1, 1)]),
            Err(PosetError::CyclicInput)
        );
    }

    #[test]
    fn comparability() {
        let m = poset_m();
        assert!(!m.is_comparable(1, 2)); // w, y
        assert!(m.is_comparable(3, 3));
        let chain = Poset::from_cover_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert!(chain.is_comparable(0, 2));
    }

    #[test]
    fn rank_data_flags() {
        let m = poset_m();
        assert_eq!(m.rank_data().is_ranked, Some(false));

        let anti = Poset::from_cover_pairs(4, &[]).unwrap();
        let rd = anti.rank_data();
        assert_eq!(rd.width, 4);
        assert_eq!(rd.height, 1);
        assert_eq!(rd.is_ranked, None);
    }

    #[test]
    fn chain_partition_shapes() {
        let m = poset_m();
        let chains = m.chain_partition();
        assert_eq!(chains.len(), 2);
        let mut total: Vec<usize> = chains.concat();
        total.sort_unstable();
        assert_eq!(total, vec![0, 1, 2, 3, 4]);
        for chain in &chains {
            for w in chain.windows(2) {
                assert!(m.lt(w[0], w[1]));
            }
        }

        let chain = Poset::from_cover_pairs(5, &[(0, 1), (1, 2), (2, 3), (3, 4)]).unwrap();
        assert_eq!(chain.chain_partition().len(), 1);
        let anti = Poset::from_cover_pairs(5, &[]).unwrap();
        assert_eq!(anti.chain_partition().len(), 5);
    }

    #[test]
    fn linear_extension_counts() {
        let anti2 = Poset::from_cover_pairs(2, &[]).unwrap();
        assert_eq!(anti2.linear_extensions().count(), 2);
        let chain3 = Poset::from_cover_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(chain3.linear_extensions().count(), 1);
        // a, b, c incomparable with c ≺ d
        let q = Poset::from_cover_pairs(4, &[(2, 3)]).unwrap();
        let exts: Vec<_> = q.linear_extensions().collect();
        assert!(exts.iter().all(|e| q.respects_order(e)));
        assert_eq!(exts.len(), 12);
        // lexicographically first comes first
        assert_eq!(exts[0].order, vec![0, 1, 2, 3]);
    }

    #[test]
    fn dual_is_involution() {
        let m = poset_m();
        assert_eq!(m.dual().dual(), m);
        let chain3 = Poset::from_cover_pairs(3, &[(0, 1), (1, 2)]).unwrap();
        let d = chain3.dual();
        assert_eq!(d.covers(), &[(1, 0), (2, 1)]);
    }

    #[test]
    fn closure_is_idempotent() {
        let m = poset_m();
        for x in 0..m.n() {
            for y in 0..m.n() {
                let through = (0..m.n()).any(|z| m.leq(x, z) && m.leq(z, y));
                assert_eq!(m.leq(x, y), through && m.leq(x, y));
                if m.leq(x, y) && m.leq(y, x) {
                    assert_eq!(x, y);
                }
            }
        }
    }

    #[test]
    fn empty_poset() {
        let p = Poset::from_cover_pairs(0, &[]).unwrap();
        assert_eq!(p.height(), 0);
        assert_eq!(p.chain_partition().len(), 0);
        assert_eq!(p.linear_extensions().count(), 1);
    }
}
