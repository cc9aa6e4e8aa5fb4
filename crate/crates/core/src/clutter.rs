//! Clutters (antichain hypergraphs), their associated graphs, and the
//! clutter-level construction `[C]`.
//!
//! The rules here are checked directly against clutter edges ("some edge
//! contains the pair") rather than through the associated graph, so the
//! graph engine serves as an independent cross-check.

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::closure::{ConstructionTrace, Rule, TraceStep};
use crate::graph::{Edge, Graph, VertexSet, MAX_VERTICES};
use crate::oracle::{CmStatus, Oracle, OracleError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ClutterError {
    #[error("vertex count must be between 1 and {MAX_VERTICES}, got {0}")]
    BadVertexCount(usize),
    #[error("clutter edge {0:?} has fewer than two vertices")]
    EdgeTooSmall(Vec<usize>),
    #[error("vertex {vertex} is out of range 1..={n}")]
    OutOfRange { vertex: usize, n: usize },
    #[error("vertex {0} repeated inside one edge")]
    RepeatedVertex(usize),
    #[error("edge {0} is contained in edge {1}")]
    NotAntichain(VertexSet, VertexSet),
}

/// Hypergraph on `{1..n}` whose edges (each of size at least two) form an antichain.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Clutter {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Clutter {
    /// Validates and sorts the edges; exact duplicates are merged.
    pub fn new(n: usize, edges: Vec<Vec<usize>>) -> Result<Self, ClutterError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(ClutterError::BadVertexCount(n));
        }
        let mut sets = Vec::with_capacity(edges.len());
        for e in edges {
            if e.len() < 2 {
                return Err(ClutterError::EdgeTooSmall(e));
            }
            let mut s = VertexSet::EMPTY;
            for &v in &e {
                if v == 0 || v > n {
                    return Err(ClutterError::OutOfRange { vertex: v, n });
                }
                if s.contains(v) {
                    return Err(ClutterError::RepeatedVertex(v));
                }
                s.insert(v);
            }
            sets.push(s);
        }
        Clutter::from_sets(n, sets)
    }

    pub fn from_sets(n: usize, mut edges: Vec<VertexSet>) -> Result<Self, ClutterError> {
        if n == 0 || n > MAX_VERTICES {
            return Err(ClutterError::BadVertexCount(n));
        }
        if let Some(bad) = edges.iter().find(|e| !e.is_subset(VertexSet::full(n))) {
            let vertex = VertexSet::max(*bad).unwrap_or(0);
            return Err(ClutterError::OutOfRange { vertex, n });
        }
        if let Some(small) = edges.iter().find(|e| e.len() < 2) {
            return Err(ClutterError::EdgeTooSmall(small.to_vec()));
        }
        edges.sort_by_cached_key(|e| e.to_vec());
        edges.dedup();
        for a in &edges {
            if let Some(b) = edges.iter().find(|&&b| b != *a && a.is_subset(b)) {
                return Err(ClutterError::NotAntichain(*a, *b));
            }
        }
        Ok(Clutter { n, edges })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    /// Some edge contains both `a` and `b`.
    pub fn covers(&self, a: usize, b: usize) -> bool {
        let pair = VertexSet::singleton(a).with(b);
        self.edges.iter().any(|e| pair.is_subset(*e))
    }

    /// Pairs `{i,j}` contained in some edge, sorted.
    pub fn covered_pairs(&self) -> Vec<Edge> {
        let mut out = Vec::new();
        for e in &self.edges {
            let vs = e.to_vec();
            for (a, &k) in vs.iter().enumerate() {
                for &l in &vs[a + 1..] {
                    out.push(Edge::new(k, l));
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }

    /// Graph whose edges are the pairs contained in some clutter edge.
    pub fn associated_graph(&self) -> Graph {
        let mut g = Graph::new(self.n).expect("clutter vertex count already validated");
        for e in self.covered_pairs() {
            g.insert_edge(e);
        }
        g
    }

    /// Sub-clutter on the edges inside `comp`, relabeled onto `1..|comp|`.
    fn restrict(&self, comp: VertexSet) -> (Clutter, Vec<usize>) {
        let old = comp.to_vec();
        let edges = self
            .edges
            .iter()
            .filter(|e| e.is_subset(comp))
            .map(|e| {
                e.iter()
                    .map(|v| old.binary_search(&v).expect("vertex in component") + 1)
                    .collect()
            })
            .collect();
        let sub = Clutter { n: old.len(), edges };
        (sub, old)
    }
}

impl fmt::Debug for Clutter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Clutter(n={}, {:?})", self.n, self.edges)
    }
}

/// Closedness of the associated graph under the identity labeling.
pub fn is_closed_clutter(c: &Clutter) -> bool {
    crate::closure::is_closed_labeled(&c.associated_graph())
}

/// Closedness checked on the clutter itself: pairs covered by edges that
/// share a smaller (larger) endpoint force their other endpoints to be
/// covered too.
pub fn is_closed_clutter_direct(c: &Clutter) -> bool {
    pending_closure(c).is_empty()
}

/// Whenever `{i,j+1}` (`i < j`) and `{j,k+1}` (`j < k`) are each inside
/// some edge, `{i,k+1}` is inside some edge.
pub fn satisfies_condition_d(c: &Clutter) -> bool {
    pending_cm(c).is_empty()
}

fn pending_closure(c: &Clutter) -> Vec<TraceStep> {
    let pairs = c.covered_pairs();
    let mut out = Vec::new();
    for (x, &p) in pairs.iter().enumerate() {
        for &q in &pairs[x + 1..] {
            let forced = if p.lo() == q.lo() {
                Some((p.hi(), q.hi(), Rule::CloseSharedMin))
            } else if p.hi() == q.hi() {
                Some((p.lo(), q.lo(), Rule::CloseSharedMax))
            } else {
                None
            };
            if let Some((a, b, rule)) = forced {
                if !c.covers(a, b) {
                    out.push(TraceStep {
                        added: Edge::new(a, b),
                        rule,
                        witnesses: [p, q],
                    });
                }
            }
        }
    }
    out
}

fn pending_cm(c: &Clutter) -> Vec<TraceStep> {
    let pairs = c.covered_pairs();
    let mut out = Vec::new();
    for &p in &pairs {
        // p = {i, j+1} with i < j
        let (i, j) = (p.lo(), p.hi() - 1);
        if i >= j {
            continue;
        }
        for &q in pairs.iter().filter(|q| q.lo() == j && q.hi() > j + 1) {
            let k1 = q.hi();
            if !c.covers(i, k1) {
                out.push(TraceStep {
                    added: Edge::new(i, k1),
                    rule: Rule::CmCompose,
                    witnesses: [p, q],
                });
            }
        }
    }
    out
}

/// Adds every pending step of one round as fresh two-element edges; returns
/// `false` when nothing was pending.
fn apply_round(c: &mut Clutter, mut pending: Vec<TraceStep>, trace: &mut ConstructionTrace) -> bool {
    if pending.is_empty() {
        return false;
    }
    pending.sort();
    for step in pending {
        if !c.covers(step.added.lo(), step.added.hi()) {
            c.edges
                .push(VertexSet::singleton(step.added.lo()).with(step.added.hi()));
            trace.steps.push(step);
        }
    }
    c.edges.sort_by_cached_key(|e| e.to_vec());
    true
}

fn construct_connected(c: &Clutter, augment: bool) -> (Clutter, ConstructionTrace) {
    let mut out = c.clone();
    let mut trace = ConstructionTrace::default();
    loop {
        let pending = pending_closure(&out);
        if !apply_round(&mut out, pending, &mut trace) {
            break;
        }
    }
    if augment {
        loop {
            let pending = pending_cm(&out);
            if !apply_round(&mut out, pending, &mut trace) {
                break;
            }
        }
    }
    (out, trace)
}

/// `[C]`: closure rules then the augmentation rule, applied to the clutter
/// per connected component (components relabeled onto `1..m` in order). A
/// forced pair enters as a new two-element edge only when no edge contains it.
pub fn construct_clutter(c: &Clutter) -> (Clutter, ConstructionTrace) {
    per_component(c, true)
}

/// The closure rules alone, applied the same way as in [`construct_clutter`].
pub fn close_clutter(c: &Clutter) -> (Clutter, ConstructionTrace) {
    per_component(c, false)
}

fn per_component(c: &Clutter, augment: bool) -> (Clutter, ConstructionTrace) {
    let comps = c.associated_graph().components(VertexSet::full(c.n));
    if comps.len() == 1 {
        return construct_connected(c, augment);
    }
    let mut edges = c.edges.clone();
    let mut trace = ConstructionTrace::default();
    for comp in comps {
        let (sub, old) = c.restrict(comp);
        let (_, sub_trace) = construct_connected(&sub, augment);
        let map = |e: Edge| Edge::new(old[e.lo() - 1], old[e.hi() - 1]);
        for step in sub_trace.steps {
            let added = map(step.added);
            edges.push(VertexSet::singleton(added.lo()).with(added.hi()));
            trace.steps.push(TraceStep {
                added,
                rule: step.rule,
                witnesses: [map(step.witnesses[0]), map(step.witnesses[1])],
            });
        }
    }
    let out = Clutter::from_sets(c.n, edges).expect("forced pairs keep the antichain property");
    (out, trace)
}

/// Verdicts for one connected component of a clutter.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClutterComponentStatus {
    pub vertices: VertexSet,
    pub closed: bool,
    pub unmixed: bool,
    /// Reported for closed components only.
    pub cm_status: Option<CmStatus>,
    pub condition_d: Option<bool>,
    /// The initial-ideal condition is equivalent but never computed.
    pub initial_ideal_cm: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClutterStatus {
    pub components: Vec<ClutterComponentStatus>,
}

pub fn clutter_status(c: &Clutter, oracle: &Oracle) -> Result<ClutterStatus, OracleError> {
    let g = c.associated_graph();
    let mut components = Vec::new();
    for comp in g.components(g.vertices()) {
        let (sub, _) = c.restrict(comp);
        let sub_graph = sub.associated_graph();
        let closed = is_closed_clutter_direct(&sub);
        let unmixed = oracle.is_unmixed(&sub_graph)?;
        let (cm_status, condition_d, initial) = if closed {
            (
                Some(oracle.cm_status(&sub_graph)?),
                Some(satisfies_condition_d(&sub)),
                Some("implied"),
            )
        } else {
            (None, None, None)
        };
        components.push(ClutterComponentStatus {
            vertices: comp,
            closed,
            unmixed,
            cm_status,
            condition_d,
            initial_ideal_cm: initial,
        });
    }
    Ok(ClutterStatus { components })
}
