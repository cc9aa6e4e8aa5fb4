//! Labeled simple graphs on `{1..n}` backed by per-vertex bitsets.
//!
//! Every query over an induced subgraph is a mask-and-scan over `u64` words,
//! which is what makes the exhaustive subset enumeration in
//! [`crate::oracle`] tractable.

use std::collections::HashMap;
use std::fmt;

use serde::{Serialize, Serializer};
use thiserror::Error;

/// Largest vertex count a [`Graph`] can hold (one `u64` word per adjacency row).
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GraphError {
    #[error("vertex count must be between 1 and {MAX_VERTICES}, got {0}")]
    BadVertexCount(usize),
    #[error("loop edge at vertex {0}")]
    Loop(i64),
    #[error("edge ({0}, {1}) references an undeclared vertex")]
    UndeclaredVertex(i64, i64),
    #[error("vertex {0} is declared more than once")]
    DuplicateVertex(i64),
    #[error("vertex {vertex} is out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} is not in the restricting set")]
    NotInSet(usize),
    #[error("cannot delete the only vertex of a graph")]
    WouldBeEmpty,
}

/// A subset of `{1..n}`; label `v` lives in bit `v - 1`.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    /// `{1..n}`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        debug_assert!((1..=MAX_VERTICES).contains(&v));
        VertexSet(1u64 << (v - 1))
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(VertexSet::EMPTY, |acc, v| acc.with(v))
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=MAX_VERTICES).contains(&v) && self.0 & (1u64 << (v - 1)) != 0
    }

    pub fn with(self, v: usize) -> Self {
        self | VertexSet::singleton(v)
    }

    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !VertexSet::singleton(v).0)
    }

    pub fn insert(&mut self, v: usize) {
        *self = self.with(v);
    }

    pub fn remove(&mut self, v: usize) {
        *self = self.without(v);
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn is_subset(self, other: VertexSet) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn intersects(self, other: VertexSet) -> bool {
        self.0 & other.0 != 0
    }

    pub fn min(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    pub fn max(self) -> Option<usize> {
        (self.0 != 0).then(|| 64 - self.0.leading_zeros() as usize)
    }

    /// Members strictly above `v`.
    pub fn above(self, v: usize) -> Self {
        if v >= 64 {
            VertexSet::EMPTY
        } else {
            VertexSet(self.0 & !((1u64 << v) - 1))
        }
    }

    /// Members strictly below `v`.
    pub fn below(self, v: usize) -> Self {
        VertexSet(self.0 & ((1u64 << (v - 1)) - 1))
    }

    /// Relabels the set as it would appear after deleting vertex `m` from the
    /// graph: `m` is dropped and every label `k > m` becomes `k - 1`.
    pub fn delete_shift(self, m: usize) -> Self {
        let low = self.below(m).0;
        let high = self.above(m).0 >> 1;
        VertexSet(low | high)
    }

    /// Inverse of [`VertexSet::delete_shift`]: labels `k >= m` become `k + 1`.
    pub fn insert_shift(self, m: usize) -> Self {
        let low = self.below(m).0;
        let high = (self.0 & !low) << 1;
        VertexSet(low | high)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl std::ops::BitOr for VertexSet {
    type Output = VertexSet;
    fn bitor(self, rhs: Self) -> Self {
        VertexSet(self.0 | rhs.0)
    }
}

impl std::ops::BitAnd for VertexSet {
    type Output = VertexSet;
    fn bitand(self, rhs: Self) -> Self {
        VertexSet(self.0 & rhs.0)
    }
}

impl std::ops::Sub for VertexSet {
    type Output = VertexSet;
    fn sub(self, rhs: Self) -> Self {
        VertexSet(self.0 & !rhs.0)
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (idx, v) in self.iter().enumerate() {
            if idx > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.iter())
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

/// Ascending iterator over the labels of a [`VertexSet`].
pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize + 1;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for VertexIter {}

/// An undirected edge `{lo, hi}` with `lo < hi`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    lo: usize,
    hi: usize,
}

impl Edge {
    /// Normalizes the endpoint order. Panics on a loop; loops are rejected
    /// with an error at every input boundary before reaching here.
    pub fn new(a: usize, b: usize) -> Self {
        assert_ne!(a, b, "loop edge at vertex {a}");
        Edge {
            lo: a.min(b),
            hi: a.max(b),
        }
    }

    pub fn lo(self) -> usize {
        self.lo
    }

    pub fn hi(self) -> usize {
        self.hi
    }

    pub fn span(self) -> usize {
        self.hi - self.lo
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{{},{}}}", self.lo, self.hi)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        [self.lo, self.hi].serialize(serializer)
    }
}

/// Simple undirected graph on the vertex set `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(GraphError::BadVertexCount(n));
        }
        Ok(Graph {
            n,
            adj: vec![VertexSet::EMPTY; n],
        })
    }

    /// Builds a graph from label pairs; duplicates are merged.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(GraphError::Loop(u as i64));
            }
            g.insert_edge(Edge::new(u, v));
        }
        Ok(g)
    }

    pub fn complete(n: usize) -> Result<Self, GraphError> {
        let mut g = Graph::new(n)?;
        for u in 1..=n {
            g.adj[u - 1] = VertexSet::full(n).without(u);
        }
        Ok(g)
    }

    pub fn path(n: usize) -> Result<Self, GraphError> {
        let edges: Vec<_> = (1..n).map(|v| (v, v + 1)).collect();
        Graph::from_edges(n, &edges)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn check_vertex(&self, v: usize) -> Result<(), GraphError> {
        if v == 0 || v > self.n {
            Err(GraphError::OutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v - 1]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v - 1].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.adj[u - 1].contains(v)
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.has_edge(e.lo, e.hi)
    }

    /// Inserts `e`; returns `false` if it was already present.
    pub fn insert_edge(&mut self, e: Edge) -> bool {
        if self.contains(e) {
            return false;
        }
        self.adj[e.lo - 1].insert(e.hi);
        self.adj[e.hi - 1].insert(e.lo);
        true
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|s| s.len()).sum::<usize>() / 2
    }

    /// Edges in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = Edge> + '_ {
        (1..=self.n).flat_map(move |u| self.adj[u - 1].above(u).iter().map(move |v| Edge { lo: u, hi: v }))
    }

    pub fn edge_vec(&self) -> Vec<Edge> {
        self.edges().collect()
    }

    /// `true` if every edge of `self` is an edge of `other` (same vertex count).
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && self.adj.iter().zip(&other.adj).all(|(a, b)| a.is_subset(*b))
    }

    /// Deletes `m` and relabels every `k > m` to `k - 1`.
    pub fn induced_delete(&self, m: usize) -> Result<Graph, GraphError> {
        self.check_vertex(m)?;
        if self.n == 1 {
            return Err(GraphError::WouldBeEmpty);
        }
        let adj = (1..=self.n)
            .filter(|&v| v != m)
            .map(|v| self.adj[v - 1].delete_shift(m))
            .collect();
        Ok(Graph { n: self.n - 1, adj })
    }

    /// Induced subgraph on `keep`, relabeled onto `1..|keep|` preserving order.
    /// The returned vector maps each new label `w` to its old label at `w - 1`.
    pub fn induced(&self, keep: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        let keep = keep & self.vertices();
        let old: Vec<usize> = keep.iter().collect();
        let mut g = Graph::new(old.len())?;
        for (wi, &u) in old.iter().enumerate() {
            for (wj, &v) in old.iter().enumerate().skip(wi + 1) {
                if self.has_edge(u, v) {
                    g.insert_edge(Edge::new(wi + 1, wj + 1));
                }
            }
        }
        Ok((g, old))
    }

    /// Applies a relabeling: `perm[v - 1]` is the new label of old vertex `v`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph {
            n: self.n,
            adj: vec![VertexSet::EMPTY; self.n],
        };
        for e in self.edges() {
            g.insert_edge(Edge::new(perm[e.lo - 1], perm[e.hi - 1]));
        }
        g
    }

    /// Connected components of the induced subgraph on `restrict`, ordered by
    /// their smallest vertex. Isolated vertices are singleton components.
    pub fn components(&self, restrict: VertexSet) -> Vec<VertexSet> {
        let mut remaining = restrict & self.vertices();
        let mut out = Vec::new();
        while let Some(start) = remaining.min() {
            let comp = self.reach(start, remaining);
            remaining = remaining - comp;
            out.push(comp);
        }
        out
    }

    pub fn component_count(&self, restrict: VertexSet) -> usize {
        let mut remaining = restrict & self.vertices();
        let mut count = 0;
        while let Some(start) = remaining.min() {
            remaining = remaining - self.reach(start, remaining);
            count += 1;
        }
        count
    }

    /// Vertices reachable from `start` inside `within` (which must contain `start`).
    fn reach(&self, start: usize, within: VertexSet) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next | self.adj[v - 1];
            }
            frontier = (next & within) - seen;
            seen = seen | frontier;
        }
        seen
    }

    pub fn is_connected(&self) -> bool {
        self.component_count(self.vertices()) == 1
    }

    /// Whether removing `i` from the induced subgraph on `restrict` strictly
    /// increases its number of connected components.
    pub fn is_cut_point(&self, restrict: VertexSet, i: usize) -> Result<bool, GraphError> {
        self.check_vertex(i)?;
        if !restrict.contains(i) {
            return Err(GraphError::NotInSet(i));
        }
        let rest = restrict.without(i);
        // i merges exactly the components of `rest` it touches into one.
        let touched = self
            .components(rest)
            .into_iter()
            .filter(|c| c.intersects(self.adj[i - 1]))
            .count();
        Ok(touched >= 2)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, [", self.n)?;
        for (idx, e) in self.edges().enumerate() {
            if idx > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{e}")?;
        }
        f.write_str("])")
    }
}

/// Bijection between external vertex identifiers and working labels `1..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Labeling {
    ids: Vec<i64>,
    index: HashMap<i64, usize>,
}

impl Labeling {
    pub fn identity(n: usize) -> Self {
        Labeling::from_ids((1..=n as i64).collect()).expect("distinct ids")
    }

    /// `ids[w - 1]` is the external identifier of working label `w`.
    pub fn from_ids(ids: Vec<i64>) -> Result<Self, GraphError> {
        let mut index = HashMap::with_capacity(ids.len());
        for (pos, &id) in ids.iter().enumerate() {
            if index.insert(id, pos + 1).is_some() {
                return Err(GraphError::DuplicateVertex(id));
            }
        }
        Ok(Labeling { ids, index })
    }

    /// Labeling of a relabeled `1..n` graph: `perm[v - 1]` is the new label of `v`.
    pub fn from_permutation(perm: &[usize]) -> Self {
        let mut ids = vec![0i64; perm.len()];
        for (old, &new) in perm.iter().enumerate() {
            ids[new - 1] = old as i64 + 1;
        }
        Labeling::from_ids(ids).expect("permutation")
    }

    pub fn len(&self) -> usize {
        self.ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ids.is_empty()
    }

    pub fn to_working(&self, id: i64) -> Option<usize> {
        self.index.get(&id).copied()
    }

    pub fn to_original(&self, label: usize) -> Option<i64> {
        label.checked_sub(1).and_then(|i| self.ids.get(i)).copied()
    }

    pub fn is_identity(&self) -> bool {
        self.ids.iter().enumerate().all(|(i, &id)| id == i as i64 + 1)
    }

    /// `(original id, working label)` pairs in working-label order.
    pub fn pairs(&self) -> impl Iterator<Item = (i64, usize)> + '_ {
        self.ids.iter().enumerate().map(|(i, &id)| (id, i + 1))
    }

    /// Permutation form for `1..n` identifiers: entry `v - 1` is the working label of `v`.
    pub fn as_permutation(&self) -> Option<Vec<usize>> {
        (1..=self.ids.len() as i64).map(|id| self.to_working(id)).collect()
    }

    /// `self` followed by `then` (`then` relabels the working labels of `self`).
    pub fn compose(&self, then: &Labeling) -> Labeling {
        let ids = (1..=then.len())
            .map(|w| {
                let mid = then.to_original(w).expect("label in range") as usize;
                self.to_original(mid).expect("label in range")
            })
            .collect();
        Labeling::from_ids(ids).expect("composition of bijections")
    }
}

impl Serialize for Labeling {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_seq(self.pairs().map(|(id, w)| [id, w as i64]))
    }
}

/// Relabels raw vertex identifiers onto `1..n` in increasing order and
/// normalizes the edge list.
pub fn normalize(raw_vertices: &[i64], raw_edges: &[(i64, i64)]) -> Result<(Graph, Labeling), GraphError> {
    let mut ids = raw_vertices.to_vec();
    ids.sort_unstable();
    let labeling = Labeling::from_ids(ids)?;
    let mut g = Graph::new(labeling.len())?;
    for &(a, b) in raw_edges {
        if a == b {
            return Err(GraphError::Loop(a));
        }
        match (labeling.to_working(a), labeling.to_working(b)) {
            (Some(u), Some(v)) => {
                g.insert_edge(Edge::new(u, v));
            }
            _ => return Err(GraphError::UndeclaredVertex(a, b)),
        }
    }
    Ok((g, labeling))
}
