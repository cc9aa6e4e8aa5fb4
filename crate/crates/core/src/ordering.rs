//! Search for a proper interval ordering.

use std::fmt;

use serde::Serialize;

use crate::closure::satisfies_pi_ordering;
use crate::graph::{Graph, Labeling, VertexSet};

/// Largest vertex count for which the search is allowed to certify absence.
pub const EXHAUSTIVE_MAX_VERTICES: usize = 10;

/// Default node budget for the exhaustive search.
pub const DEFAULT_BUDGET: u64 = 20_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum OrderingStatus {
    Found,
    CertifiedNone,
    Unknown,
}

impl fmt::Display for OrderingStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OrderingStatus::Found => "FOUND",
            OrderingStatus::CertifiedNone => "CERTIFIED_NONE",
            OrderingStatus::Unknown => "UNKNOWN",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OrderingResult {
    pub status: OrderingStatus,
    /// Current label -> label under which the graph is a proper interval ordering.
    pub labeling: Option<Labeling>,
}

impl OrderingResult {
    fn found(order: &[usize]) -> Self {
        OrderingResult {
            status: OrderingStatus::Found,
            labeling: Some(Labeling::from_permutation(&order_to_perm(order))),
        }
    }

    fn without(status: OrderingStatus) -> Self {
        OrderingResult { status, labeling: None }
    }

    /// `perm[v - 1]` is the new label of `v`, when found.
    pub fn permutation(&self) -> Option<Vec<usize>> {
        self.labeling.as_ref().and_then(Labeling::as_permutation)
    }
}

/// `order[p]` is the vertex placed at position `p + 1`.
fn order_to_perm(order: &[usize]) -> Vec<usize> {
    let mut perm = vec![0; order.len()];
    for (pos, &v) in order.iter().enumerate() {
        perm[v - 1] = pos + 1;
    }
    perm
}

fn is_pi_order(g: &Graph, order: &[usize]) -> bool {
    satisfies_pi_ordering(&g.permuted(&order_to_perm(order)))
}

/// Tries the identity and a multi-sweep LexBFS ordering, then (for
/// `n <= EXHAUSTIVE_MAX_VERTICES`) a complete backtracking search limited to
/// `budget` nodes.
pub fn find_pi_ordering(g: &Graph, budget: u64) -> OrderingResult {
    let identity: Vec<usize> = (1..=g.n()).collect();
    if satisfies_pi_ordering(g) {
        return OrderingResult::found(&identity);
    }
    for order in sweep_candidates(g) {
        if is_pi_order(g, &order) {
            return OrderingResult::found(&order);
        }
    }
    if g.n() > EXHAUSTIVE_MAX_VERTICES {
        return OrderingResult::without(OrderingStatus::Unknown);
    }
    let mut search = Search {
        g,
        order: Vec::with_capacity(g.n()),
        nodes: 0,
        budget,
    };
    match search.extend(g.vertices()) {
        Outcome::Found => OrderingResult::found(&search.order),
        Outcome::Exhausted => OrderingResult::without(OrderingStatus::CertifiedNone),
        Outcome::OutOfBudget => OrderingResult::without(OrderingStatus::Unknown),
    }
}

/// LexBFS, then two LexBFS+ sweeps; all three and their reversals.
fn sweep_candidates(g: &Graph) -> Vec<Vec<usize>> {
    let first = lex_bfs(g, None);
    let second = lex_bfs(g, Some(&first));
    let third = lex_bfs(g, Some(&second));
    let mut out = Vec::new();
    for order in [third, second, first] {
        let mut rev = order.clone();
        rev.reverse();
        out.push(order);
        out.push(rev);
    }
    out
}

/// Lexicographic breadth-first search. With `previous`, ties are broken in
/// favour of the vertex appearing last in `previous` (LexBFS+); otherwise the
/// smallest label wins.
fn lex_bfs(g: &Graph, previous: Option<&[usize]>) -> Vec<usize> {
    let n = g.n();
    let rank: Vec<usize> = match previous {
        Some(prev) => order_to_perm(prev),
        None => (1..=n).map(|v| n + 1 - v).collect(),
    };
    let mut labels: Vec<Vec<usize>> = vec![Vec::new(); n];
    let mut unvisited = g.vertices();
    let mut order = Vec::with_capacity(n);
    for stamp in (1..=n).rev() {
        let v = unvisited
            .iter()
            .max_by(|&a, &b| labels[a - 1].cmp(&labels[b - 1]).then(rank[a - 1].cmp(&rank[b - 1])))
            .expect("unvisited vertex");
        unvisited.remove(v);
        order.push(v);
        for w in (g.neighbors(v) & unvisited).iter() {
            labels[w - 1].push(stamp);
        }
    }
    order
}

enum Outcome {
    Found,
    Exhausted,
    OutOfBudget,
}

struct Search<'a> {
    g: &'a Graph,
    order: Vec<usize>,
    nodes: u64,
    budget: u64,
}

impl Search<'_> {
    fn extend(&mut self, remaining: VertexSet) -> Outcome {
        if remaining.is_empty() {
            return Outcome::Found;
        }
        for c in remaining.iter() {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Outcome::OutOfBudget;
            }
            let rest = remaining.without(c);
            if !self.admissible(c, rest) {
                continue;
            }
            self.order.push(c);
            match self.extend(rest) {
                Outcome::Exhausted => {
                    self.order.pop();
                }
                done => return done,
            }
        }
        Outcome::Exhausted
    }

    /// Necessary conditions for appending `c` after the placed prefix while
    /// `rest` is still to come.
    fn admissible(&self, c: usize, rest: VertexSet) -> bool {
        let nc = self.g.neighbors(c);
        for (pos, &a) in self.order.iter().enumerate() {
            let na = self.g.neighbors(a);
            if nc.contains(a) {
                // Everything strictly between a and c must see both.
                if !self.order[pos + 1..].iter().all(|&b| na.contains(b) && nc.contains(b)) {
                    return false;
                }
            }
            let later = na & rest;
            if !later.is_empty() && !(nc.contains(a) && later.is_subset(nc)) {
                return false;
            }
        }
        true
    }
}
