//! Single-vertex deletion audit.

use serde::Serialize;

use super::{clique_summary, CmStatus, ComponentVerdict, Oracle, OracleError};
use crate::closure::is_closed_labeled;
use crate::graph::Graph;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditEntry {
    pub vertex: usize,
    /// Closedness of `G \ v` under the inherited (shifted) labeling.
    pub deleted_graph_closed: bool,
    /// Every component of `G \ v` is unmixed.
    pub deleted_unmixed: bool,
    pub deleted_cm: CmStatus,
    pub deleted_connected: bool,
    pub v_free: bool,
    /// `v` is free and its facet minus `v` lies in no cut-point set of size other than one.
    pub facet_condition: bool,
    pub deleted_components: Vec<ComponentVerdict>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub entries: Vec<AuditEntry>,
}

impl AuditReport {
    pub fn entry(&self, v: usize) -> Option<&AuditEntry> {
        self.entries.iter().find(|e| e.vertex == v)
    }
}

pub(super) fn audit(oracle: &Oracle, g: &Graph) -> Result<AuditReport, OracleError> {
    if g.n() < 2 {
        return Err(OracleError::TooSmall);
    }
    if !g.is_connected() {
        return Err(OracleError::Disconnected);
    }
    let cut_sets = oracle.cut_point_sets(g)?;
    let cliques = clique_summary(g);
    let mut entries = Vec::with_capacity(g.n());
    for v in 1..=g.n() {
        let h = g.induced_delete(v)?;
        let comps = oracle.component_verdicts(&h)?;
        let facet = cliques.facet_of_free(v);
        let facet_condition = facet.is_some_and(|f| {
            let rest = f.without(v);
            cut_sets
                .iter()
                .filter(|r| r.set.len() != 1)
                .all(|r| !rest.is_subset(r.set))
        });
        entries.push(AuditEntry {
            vertex: v,
            deleted_graph_closed: is_closed_labeled(&h),
            deleted_unmixed: comps.iter().all(|c| c.unmixed),
            deleted_cm: CmStatus::combine(comps.iter().map(|c| c.cm_status)),
            deleted_connected: comps.len() == 1,
            v_free: facet.is_some(),
            facet_condition,
            deleted_components: comps,
        });
    }
    Ok(AuditReport { entries })
}
