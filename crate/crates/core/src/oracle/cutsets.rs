//! Cut-point sets and the minimal primes they index.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

/// A vertex set `T` together with the components of the induced subgraph on
/// its complement.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CutSetRecord {
    #[serde(rename = "T")]
    pub set: VertexSet,
    pub components: Vec<VertexSet>,
    pub c: usize,
    /// `n + |T| - c(T)`.
    pub height: usize,
    pub in_cutset_family: bool,
}

impl CutSetRecord {
    pub fn describe_generators(&self) -> String {
        let mut gens: Vec<String> = Vec::new();
        for i in self.set.iter() {
            gens.push(format!("x_{i}"));
            gens.push(format!("y_{i}"));
        }
        for comp in &self.components {
            let vs = comp.to_vec();
            for (a, &k) in vs.iter().enumerate() {
                for &l in &vs[a + 1..] {
                    gens.push(format!("f_{{{k},{l}}}"));
                }
            }
        }
        if gens.is_empty() {
            "(0)".to_string()
        } else {
            format!("({})", gens.join(", "))
        }
    }
}

/// Whether each `i` in `t` is a cut point of the subgraph induced on the
/// complement of `t` together with `i`. Vacuously true for `t = ∅`.
///
/// `i` reconnects exactly the components of the complement it touches, so
/// it is a cut point iff it touches at least two of them.
pub fn has_cut_point_property(g: &Graph, t: VertexSet) -> bool {
    every_member_cuts(g, t, &g.components(g.vertices() - t))
}

fn every_member_cuts(g: &Graph, t: VertexSet, comps: &[VertexSet]) -> bool {
    t.iter().all(|i| {
        let nbrs = g.neighbors(i);
        comps.iter().filter(|c| c.intersects(nbrs)).take(2).count() == 2
    })
}

pub fn cut_set_record(g: &Graph, t: VertexSet) -> CutSetRecord {
    let comps = g.components(g.vertices() - t);
    let in_family = every_member_cuts(g, t, &comps);
    let c = comps.len();
    CutSetRecord {
        set: t,
        c,
        height: g.n() + t.len() - c,
        components: comps,
        in_cutset_family: in_family,
    }
}

/// Orders sets by size, then lexicographically by their sorted members.
pub(crate) fn set_order_key(s: VertexSet) -> (usize, Vec<usize>) {
    (s.len(), s.to_vec())
}

/// All `T` with nonempty complement that have the cut point property.
/// No cap check; see [`crate::oracle::Oracle::cut_point_sets`].
pub(crate) fn enumerate(g: &Graph) -> Vec<CutSetRecord> {
    let full = g.vertices().bits();
    let mut out = Vec::new();
    for bits in 0..full {
        let record = cut_set_record(g, VertexSet::from_bits(bits));
        if record.in_cutset_family {
            out.push(record);
        }
    }
    out.sort_by_cached_key(|r| set_order_key(r.set));
    out
}

/// A minimal prime of the binomial edge ideal, described combinatorially.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinimalPrime {
    pub record: CutSetRecord,
    /// Generators as text: `x_i, y_i` for `i` in `T` and `f_{k,l}` for each
    /// pair inside a component of the complement.
    pub generators: String,
}

impl MinimalPrime {
    pub fn height(&self) -> usize {
        self.record.height
    }
}
