//! Closedness under a labeling, the closure fixpoint, and the Cohen-Macaulay
//! augmentation `[G]`.
//!
//! A graph is closed with respect to its labeling when, for any two edges
//! `{i,j}` and `{k,l}` with `i < j` and `k < l`, a shared smaller endpoint
//! (`i = k`) forces `{j,l}` and a shared larger endpoint (`j = l`) forces
//! `{i,k}`. The augmentation then adds `{i,k+1}` whenever `{i,j+1}` (`i < j`)
//! and `{j,k+1}` (`j < k`) are edges.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{Edge, Graph, GraphError, Labeling, VertexSet};

/// Largest vertex count accepted by [`LabelingStrategy::ExhaustiveMin`].
pub const EXHAUSTIVE_MIN_MAX_VERTICES: usize = 8;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClosureError {
    #[error("graph is not closed with respect to its labeling")]
    NotClosed,
    #[error("edge {0} is already present")]
    EdgePresent(Edge),
    #[error("exhaustive-min labeling supports at most {max} vertices, got {n}")]
    TooLargeForExhaustive { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Which rule forced an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Rule {
    /// `{i,j}`, `{i,l}` forced `{j,l}`.
    CloseSharedMin,
    /// `{i,j}`, `{k,j}` forced `{i,k}`.
    CloseSharedMax,
    /// `{i,j+1}`, `{j,k+1}` forced `{i,k+1}`.
    CmCompose,
}

impl Rule {
    pub fn is_closure(self) -> bool {
        matches!(self, Rule::CloseSharedMin | Rule::CloseSharedMax)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Rule::CloseSharedMin => "CLOSE_SHARED_MIN",
            Rule::CloseSharedMax => "CLOSE_SHARED_MAX",
            Rule::CmCompose => "CM_COMPOSE",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct TraceStep {
    pub added: Edge,
    pub rule: Rule,
    pub witnesses: [Edge; 2],
}

impl TraceStep {
    fn new(added: Edge, rule: Rule, a: Edge, b: Edge) -> Self {
        let witnesses = if a <= b { [a, b] } else { [b, a] };
        TraceStep { added, rule, witnesses }
    }

    fn relabeled(self, old: &[usize]) -> TraceStep {
        let map = |e: Edge| Edge::new(old[e.lo() - 1], old[e.hi() - 1]);
        TraceStep {
            added: map(self.added),
            rule: self.rule,
            witnesses: [map(self.witnesses[0]), map(self.witnesses[1])],
        }
    }
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "add {} by {} from {}, {}",
            self.added, self.rule, self.witnesses[0], self.witnesses[1]
        )
    }
}

/// Ordered record of forced edge additions.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct ConstructionTrace {
    pub steps: Vec<TraceStep>,
}

impl ConstructionTrace {
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn added_edges(&self) -> impl Iterator<Item = Edge> + '_ {
        self.steps.iter().map(|s| s.added)
    }

    fn push(&mut self, added: Edge, rule: Rule, a: Edge, b: Edge) {
        self.steps.push(TraceStep::new(added, rule, a, b));
    }

    /// Replays the trace on `start`, checking that each added edge is new
    /// and each witness is already present. Returns the final graph.
    pub fn replay(&self, start: &Graph) -> Option<Graph> {
        let mut g = start.clone();
        for step in &self.steps {
            if !step.witnesses.iter().all(|&w| g.contains(w)) || !g.insert_edge(step.added) {
                return None;
            }
        }
        Some(g)
    }
}

/// Closedness with respect to the identity labeling.
pub fn is_closed_labeled(g: &Graph) -> bool {
    (1..=g.n()).all(|v| {
        let up = g.neighbors(v).above(v);
        let down = g.neighbors(v).below(v);
        up.iter().all(|j| up.without(j).is_subset(g.neighbors(j)))
            && down.iter().all(|k| down.without(k).is_subset(g.neighbors(k)))
    })
}

/// Proper interval ordering: every edge `{i,k}` has `{i,j}` and `{j,k}` for
/// all `i < j < k`.
///
/// Implies [`is_closed_labeled`]; the converse holds on connected graphs.
pub fn satisfies_pi_ordering(g: &Graph) -> bool {
    g.edges().all(|e| {
        let between = VertexSet::full(e.hi() - 1).above(e.lo());
        between.is_subset(g.neighbors(e.lo()) & g.neighbors(e.hi()))
    })
}

/// Whether `{i,j}` and `{j,k}` lie in `E(g) ∪ {e}` for every `i < j < k`,
/// for closed `g` and `e = {i,k}`.
///
/// This decides closedness of `g + e` when `g` satisfies the proper interval
/// ordering and `g + e` is connected. Across components it can disagree: with
/// `g = {1,3}` and `2` isolated, `e = {2,3}` passes but `g + e` is not closed.
pub fn edge_addition_keeps_closed(g: &Graph, e: Edge) -> Result<bool, ClosureError> {
    g.check_vertex(e.hi())?;
    if g.contains(e) {
        return Err(ClosureError::EdgePresent(e));
    }
    if !is_closed_labeled(g) {
        return Err(ClosureError::NotClosed);
    }
    let (i, k) = (e.lo(), e.hi());
    Ok((i + 1..k).all(|j| g.has_edge(i, j) && g.has_edge(j, k)))
}

/// Least supergraph of `g` on the same vertex set that is closed under the
/// identity labeling.
pub fn close(g: &Graph) -> (Graph, ConstructionTrace) {
    let mut h = g.clone();
    let mut trace = ConstructionTrace::default();
    let mut queue: VecDeque<Edge> = g.edges().collect();
    while let Some(e) = queue.pop_front() {
        let (a, b) = (e.lo(), e.hi());
        for x in h.neighbors(a).above(a).without(b).iter() {
            let forced = Edge::new(b, x);
            if h.insert_edge(forced) {
                trace.push(forced, Rule::CloseSharedMin, e, Edge::new(a, x));
                queue.push_back(forced);
            }
        }
        for y in h.neighbors(b).below(b).without(a).iter() {
            let forced = Edge::new(a, y);
            if h.insert_edge(forced) {
                trace.push(forced, Rule::CloseSharedMax, e, Edge::new(y, b));
                queue.push_back(forced);
            }
        }
    }
    (h, trace)
}

/// Every edge currently forced by the closure rules but missing from `g`,
/// one entry per witness pair, sorted.
pub fn pending_closure_steps(g: &Graph) -> Vec<TraceStep> {
    let mut out = Vec::new();
    for i in 1..=g.n() {
        let up: Vec<usize> = g.neighbors(i).above(i).iter().collect();
        for (x, &j) in up.iter().enumerate() {
            for &l in &up[x + 1..] {
                if !g.has_edge(j, l) {
                    out.push(TraceStep::new(
                        Edge::new(j, l),
                        Rule::CloseSharedMin,
                        Edge::new(i, j),
                        Edge::new(i, l),
                    ));
                }
            }
        }
        let down: Vec<usize> = g.neighbors(i).below(i).iter().collect();
        for (x, &k) in down.iter().enumerate() {
            for &m in &down[x + 1..] {
                if !g.has_edge(k, m) {
                    out.push(TraceStep::new(
                        Edge::new(k, m),
                        Rule::CloseSharedMax,
                        Edge::new(k, i),
                        Edge::new(m, i),
                    ));
                }
            }
        }
    }
    out.sort();
    out
}

/// Every edge `{i,k+1}` currently forced by the augmentation rule but missing.
pub fn pending_cm_steps(g: &Graph) -> Vec<TraceStep> {
    let n = g.n();
    let mut out = Vec::new();
    for i in 1..=n {
        for j in i + 1..n {
            if !g.has_edge(i, j + 1) {
                continue;
            }
            for k in j + 1..n {
                if g.has_edge(j, k + 1) && !g.has_edge(i, k + 1) {
                    out.push(TraceStep::new(
                        Edge::new(i, k + 1),
                        Rule::CmCompose,
                        Edge::new(i, j + 1),
                        Edge::new(j, k + 1),
                    ));
                }
            }
        }
    }
    out.sort();
    out
}

/// Closure computed by repeatedly applying one pending rule instance chosen
/// by `pick` (given the number of pending instances, returns an index).
///
/// Much slower than [`close`]; exists to exercise schedule independence.
pub fn close_with(g: &Graph, mut pick: impl FnMut(usize) -> usize) -> (Graph, ConstructionTrace) {
    let mut h = g.clone();
    let mut trace = ConstructionTrace::default();
    loop {
        let pending = pending_closure_steps(&h);
        if pending.is_empty() {
            return (h, trace);
        }
        let step = pending[pick(pending.len()) % pending.len()];
        h.insert_edge(step.added);
        trace.steps.push(step);
    }
}

/// Runs `f` on every connected component, relabeled onto `1..m` preserving
/// order, and reassembles the results in component order.
fn per_component<F>(g: &Graph, mut f: F) -> Result<(Graph, ConstructionTrace), ClosureError>
where
    F: FnMut(&Graph) -> Result<(Graph, ConstructionTrace), ClosureError>,
{
    let comps = g.components(g.vertices());
    if comps.len() == 1 {
        return f(g);
    }
    let mut out = g.clone();
    let mut trace = ConstructionTrace::default();
    for comp in comps {
        let (sub, old) = g.induced(comp)?;
        let (done, sub_trace) = f(&sub)?;
        for e in done.edges() {
            out.insert_edge(Edge::new(old[e.lo() - 1], old[e.hi() - 1]));
        }
        trace
            .steps
            .extend(sub_trace.steps.into_iter().map(|s| s.relabeled(&old)));
    }
    Ok((out, trace))
}

/// Adds augmentation edges until no `{i,j+1}`, `{j,k+1}` pair lacks its
/// `{i,k+1}`. Runs per connected component; `g` must be closed.
///
/// Candidates are taken shortest span first, which keeps every intermediate
/// graph closed.
pub fn cm_augment(g: &Graph) -> Result<(Graph, ConstructionTrace), ClosureError> {
    if !is_closed_labeled(g) {
        return Err(ClosureError::NotClosed);
    }
    per_component(g, |c| Ok(cm_augment_connected(c)))
}

type Candidate = Reverse<(usize, Edge, Edge, Edge)>;

fn cm_candidates(h: &Graph, e: Edge, heap: &mut BinaryHeap<Candidate>) {
    let (a, b) = (e.lo(), e.hi());
    if b < a + 2 {
        return;
    }
    // e = {i, j+1} with i = a, j = b - 1; partners {j, x} with x > b.
    for x in h.neighbors(b - 1).above(b).iter() {
        if !h.has_edge(a, x) {
            heap.push(Reverse((x - a, Edge::new(a, x), e, Edge::new(b - 1, x))));
        }
    }
    // e = {j, k+1} with j = a, k = b - 1; partners {i, a+1} with i < a.
    for i in h.neighbors(a + 1).below(a).iter() {
        if !h.has_edge(i, b) {
            heap.push(Reverse((b - i, Edge::new(i, b), Edge::new(i, a + 1), e)));
        }
    }
}

fn cm_augment_connected(g: &Graph) -> (Graph, ConstructionTrace) {
    let mut h = g.clone();
    let mut trace = ConstructionTrace::default();
    let mut heap = BinaryHeap::new();
    for e in g.edges() {
        cm_candidates(&h, e, &mut heap);
    }
    while let Some(Reverse((_, added, w1, w2))) = heap.pop() {
        if !h.insert_edge(added) {
            continue;
        }
        trace.push(added, Rule::CmCompose, w1, w2);
        debug_assert!(is_closed_labeled(&h), "augmentation step {added} broke closedness");
        cm_candidates(&h, added, &mut heap);
    }
    (h, trace)
}

/// Augmentation with an arbitrary schedule chosen by `pick`; per component,
/// like [`cm_augment`]. Intermediate graphs need not be closed.
pub fn cm_augment_with(
    g: &Graph,
    mut pick: impl FnMut(usize) -> usize,
) -> Result<(Graph, ConstructionTrace), ClosureError> {
    if !is_closed_labeled(g) {
        return Err(ClosureError::NotClosed);
    }
    per_component(g, |c| {
        let mut h = c.clone();
        let mut trace = ConstructionTrace::default();
        loop {
            let pending = pending_cm_steps(&h);
            if pending.is_empty() {
                return Ok((h, trace));
            }
            let step = pending[pick(pending.len()) % pending.len()];
            h.insert_edge(step.added);
            trace.steps.push(step);
        }
    })
}

/// How vertices are relabeled before construction.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum LabelingStrategy {
    #[default]
    Identity,
    /// Breadth-first order from vertex 1 (smallest unvisited vertex for
    /// further components), neighbors in ascending order.
    Bfs,
    /// Every permutation; keeps the result with the fewest edges, ties going
    /// to the lexicographically first permutation.
    ExhaustiveMin,
}

impl FromStr for LabelingStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "identity" => Ok(LabelingStrategy::Identity),
            "bfs" => Ok(LabelingStrategy::Bfs),
            "exhaustive-min" => Ok(LabelingStrategy::ExhaustiveMin),
            other => Err(format!("unknown labeling strategy `{other}`")),
        }
    }
}

impl fmt::Display for LabelingStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            LabelingStrategy::Identity => "identity",
            LabelingStrategy::Bfs => "bfs",
            LabelingStrategy::ExhaustiveMin => "exhaustive-min",
        })
    }
}

/// Result of [`construct`]: `[G]` in working labels.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    pub trace: ConstructionTrace,
    /// Input label -> working label.
    pub labeling: Labeling,
}

impl Construction {
    /// Number of edges added over the (relabeled) input.
    pub fn added(&self) -> usize {
        self.trace.len()
    }
}

/// Closure followed by augmentation, per connected component, under the
/// identity labeling.
pub fn construct_labeled(g: &Graph) -> (Graph, ConstructionTrace) {
    per_component(g, |c| {
        let (closed, mut trace) = close(c);
        let (done, cm_trace) = cm_augment(&closed)?;
        trace.steps.extend(cm_trace.steps);
        Ok((done, trace))
    })
    .expect("closure output is closed")
}

pub fn construct(g: &Graph, strategy: LabelingStrategy) -> Result<Construction, ClosureError> {
    let perm = strategy_permutation(g, strategy)?;
    let relabeled = g.permuted(&perm);
    let (graph, trace) = construct_labeled(&relabeled);
    Ok(Construction {
        graph,
        trace,
        labeling: Labeling::from_permutation(&perm),
    })
}

/// `perm[v - 1]` is the working label the strategy gives to `v`.
pub fn strategy_permutation(g: &Graph, strategy: LabelingStrategy) -> Result<Vec<usize>, ClosureError> {
    Ok(match strategy {
        LabelingStrategy::Identity => (1..=g.n()).collect(),
        LabelingStrategy::Bfs => bfs_permutation(g),
        LabelingStrategy::ExhaustiveMin => exhaustive_min_permutation(g)?,
    })
}

/// `perm[v - 1]` is the breadth-first visit position of `v`.
pub fn bfs_permutation(g: &Graph) -> Vec<usize> {
    let mut perm = vec![0; g.n()];
    let mut unvisited = g.vertices();
    let mut next = 1;
    while let Some(root) = unvisited.min() {
        let mut queue = VecDeque::from([root]);
        unvisited.remove(root);
        while let Some(v) = queue.pop_front() {
            perm[v - 1] = next;
            next += 1;
            for w in (g.neighbors(v) & unvisited).iter() {
                unvisited.remove(w);
                queue.push_back(w);
            }
        }
    }
    perm
}

fn exhaustive_min_permutation(g: &Graph) -> Result<Vec<usize>, ClosureError> {
    let n = g.n();
    if n > EXHAUSTIVE_MIN_MAX_VERTICES {
        return Err(ClosureError::TooLargeForExhaustive {
            n,
            max: EXHAUSTIVE_MIN_MAX_VERTICES,
        });
    }
    let mut perm: Vec<usize> = (1..=n).collect();
    let mut best = (usize::MAX, perm.clone());
    loop {
        let edges = construct_labeled(&g.permuted(&perm)).0.edge_count();
        if edges < best.0 {
            best = (edges, perm.clone());
        }
        if !next_permutation(&mut perm) {
            return Ok(best.1);
        }
    }
}

/// Advances to the next permutation in lexicographic order.
pub(crate) fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len()).rev().find(|&j| p[j] > p[i - 1]).expect("pivot successor");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}
