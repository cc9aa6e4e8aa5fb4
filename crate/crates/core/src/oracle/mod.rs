//! Brute-force ground truth for unmixedness and Cohen-Macaulayness.
//!
//! Minimal primes of the binomial edge ideal are indexed by the vertex sets
//! with the cut point property, so everything here reduces to enumerating
//! subsets and counting components. Nothing symbolic is computed.

mod audit;
mod cliques;
mod cutsets;

use std::fmt;

use serde::Serialize;
use thiserror::Error;

use crate::closure::{is_closed_labeled, satisfies_pi_ordering};
use crate::graph::{Graph, GraphError, VertexSet};
use crate::ordering::{find_pi_ordering, OrderingStatus, DEFAULT_BUDGET};

pub use audit::{AuditEntry, AuditReport};
pub use cliques::{clique_summary, CliqueComplexSummary};
pub use cutsets::{cut_set_record, has_cut_point_property, CutSetRecord, MinimalPrime};

/// Default largest `n` for which subsets are enumerated.
pub const DEFAULT_CAP: usize = 22;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum OracleError {
    #[error("graph has {n} vertices; enumeration cap is {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("graph is disconnected; verdicts are per component")]
    Disconnected,
    #[error("operation needs at least two vertices")]
    TooSmall,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CmStatus {
    Cm,
    NotCm,
    Unknown,
}

impl CmStatus {
    /// Status of a disjoint union: CM iff every part is, not CM if any part
    /// is not.
    pub fn combine<I: IntoIterator<Item = CmStatus>>(parts: I) -> CmStatus {
        let mut all_cm = true;
        for s in parts {
            match s {
                CmStatus::NotCm => return CmStatus::NotCm,
                CmStatus::Unknown => all_cm = false,
                CmStatus::Cm => {}
            }
        }
        if all_cm {
            CmStatus::Cm
        } else {
            CmStatus::Unknown
        }
    }
}

impl fmt::Display for CmStatus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CmStatus::Cm => "CM",
            CmStatus::NotCm => "NOT_CM",
            CmStatus::Unknown => "UNKNOWN",
        })
    }
}

/// Verdicts for one connected component, computed on the component
/// relabeled onto `1..m` in increasing order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ComponentVerdict {
    pub vertices: VertexSet,
    pub closed: bool,
    pub condition_iv: bool,
    pub unmixed: bool,
    pub cm_status: CmStatus,
}

/// Whenever `{i,j+1}` (`i < j`) and `{j,k+1}` (`j < k`) are edges, so is `{i,k+1}`.
pub fn satisfies_condition_iv(g: &Graph) -> bool {
    (1..g.n()).all(|j| {
        let lows = g.neighbors(j + 1).below(j);
        let highs = g.neighbors(j).above(j + 1);
        lows.iter().all(|i| highs.is_subset(g.neighbors(i)))
    })
}

/// Subset-enumerating oracle with an explicit size cap.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Oracle {
    cap: usize,
    ordering_budget: u64,
}

impl Default for Oracle {
    fn default() -> Self {
        Oracle::new(DEFAULT_CAP)
    }
}

impl Oracle {
    pub fn new(cap: usize) -> Self {
        Oracle {
            cap: cap.min(crate::graph::MAX_VERTICES - 1),
            ordering_budget: DEFAULT_BUDGET,
        }
    }

    pub fn with_ordering_budget(mut self, budget: u64) -> Self {
        self.ordering_budget = budget;
        self
    }

    pub fn cap(&self) -> usize {
        self.cap
    }

    fn check_cap(&self, g: &Graph) -> Result<(), OracleError> {
        if g.n() > self.cap {
            Err(OracleError::CapExceeded {
                n: g.n(),
                cap: self.cap,
            })
        } else {
            Ok(())
        }
    }

    /// Every `T` with nonempty complement and the cut point property, sorted
    /// by size then lexicographically. Always contains `∅`.
    pub fn cut_point_sets(&self, g: &Graph) -> Result<Vec<CutSetRecord>, OracleError> {
        self.check_cap(g)?;
        Ok(cutsets::enumerate(g))
    }

    pub fn minimal_primes(&self, g: &Graph) -> Result<Vec<MinimalPrime>, OracleError> {
        Ok(self
            .cut_point_sets(g)?
            .into_iter()
            .map(|record| MinimalPrime {
                generators: record.describe_generators(),
                record,
            })
            .collect())
    }

    /// `c(T) = |T| + 1` for every cut-point set. Requires a connected graph.
    pub fn is_unmixed(&self, g: &Graph) -> Result<bool, OracleError> {
        if !g.is_connected() {
            return Err(OracleError::Disconnected);
        }
        let records = self.cut_point_sets(g)?;
        let by_count = records.iter().all(|r| r.c == r.set.len() + 1);
        let by_height = records.iter().all(|r| r.height == g.n() - 1);
        assert_eq!(by_count, by_height, "component-count and height routes disagree");
        Ok(by_count)
    }

    /// Whether all minimal primes have the same height. Defined for any graph.
    pub fn heights_equal(&self, g: &Graph) -> Result<bool, OracleError> {
        let primes = self.minimal_primes(g)?;
        Ok(primes.windows(2).all(|w| w[0].height() == w[1].height()))
    }

    /// Cohen-Macaulay status of a connected graph. Decided only when the
    /// graph is not unmixed or admits a proper interval ordering.
    pub fn cm_status(&self, g: &Graph) -> Result<CmStatus, OracleError> {
        let unmixed = self.is_unmixed(g)?;
        Ok(self.cm_given_unmixed(g, unmixed))
    }

    fn cm_given_unmixed(&self, g: &Graph, unmixed: bool) -> CmStatus {
        if !unmixed {
            return CmStatus::NotCm;
        }
        if is_closed_labeled(g) {
            debug_assert!(
                satisfies_condition_iv(g),
                "unmixed closed graph violates condition (iv): {g:?}"
            );
            return CmStatus::Cm;
        }
        let found = find_pi_ordering(g, self.ordering_budget);
        match (found.status, found.permutation()) {
            (OrderingStatus::Found, Some(perm)) => {
                let relabeled = g.permuted(&perm);
                debug_assert!(satisfies_pi_ordering(&relabeled));
                debug_assert!(satisfies_condition_iv(&relabeled));
                CmStatus::Cm
            }
            _ => CmStatus::Unknown,
        }
    }

    /// Verdicts for each connected component, in order of smallest vertex.
    pub fn component_verdicts(&self, g: &Graph) -> Result<Vec<ComponentVerdict>, OracleError> {
        self.check_cap(g)?;
        g.components(g.vertices())
            .into_iter()
            .map(|comp| {
                let (sub, _) = g.induced(comp)?;
                let unmixed = self.is_unmixed(&sub)?;
                Ok(ComponentVerdict {
                    vertices: comp,
                    closed: is_closed_labeled(&sub),
                    condition_iv: satisfies_condition_iv(&sub),
                    unmixed,
                    cm_status: self.cm_given_unmixed(&sub, unmixed),
                })
            })
            .collect()
    }

    pub fn audit_subgraphs(&self, g: &Graph) -> Result<AuditReport, OracleError> {
        audit::audit(self, g)
    }
}
