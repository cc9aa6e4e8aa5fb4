//! Facets and free vertices of the clique complex.

use serde::Serialize;

use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CliqueComplexSummary {
    /// Maximal cliques, sorted lexicographically by their members.
    pub facets: Vec<VertexSet>,
    /// Vertices lying in exactly one facet.
    pub free_vertices: VertexSet,
}

impl CliqueComplexSummary {
    /// The unique facet containing `v`, if `v` is free.
    pub fn facet_of_free(&self, v: usize) -> Option<VertexSet> {
        if !self.free_vertices.contains(v) {
            return None;
        }
        self.facets.iter().copied().find(|f| f.contains(v))
    }
}

pub fn clique_summary(g: &Graph) -> CliqueComplexSummary {
    let mut facets = Vec::new();
    bron_kerbosch(g, VertexSet::EMPTY, g.vertices(), VertexSet::EMPTY, &mut facets);
    facets.sort_by_cached_key(|f| f.to_vec());
    let free_vertices = g
        .vertices()
        .iter()
        .filter(|&v| facets.iter().filter(|f| f.contains(v)).count() == 1)
        .collect();
    CliqueComplexSummary { facets, free_vertices }
}

fn bron_kerbosch(
    g: &Graph,
    clique: VertexSet,
    mut candidates: VertexSet,
    mut excluded: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    let Some(pivot) = (candidates | excluded)
        .iter()
        .max_by_key(|&u| (candidates & g.neighbors(u)).len())
    else {
        out.push(clique);
        return;
    };
    for v in (candidates - g.neighbors(pivot)).iter() {
        let nv = g.neighbors(v);
        bron_kerbosch(g, clique.with(v), candidates & nv, excluded & nv, out);
        candidates.remove(v);
        excluded.insert(v);
    }
}
