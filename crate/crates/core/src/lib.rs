//! Closed and Cohen-Macaulay supergraphs of graphs and clutters.
//!
//! Given any labeled graph, [`closure::construct`] adds forced edges until the
//! graph is closed and its binomial edge ideal is Cohen-Macaulay. The
//! [`oracle`] module checks such claims independently by enumerating the
//! cut-point sets that index the minimal primes.

pub mod cli;
pub mod closure;
pub mod clutter;
pub mod graph;
pub mod oracle;
pub mod ordering;

pub use closure::{
    close, cm_augment, construct, edge_addition_keeps_closed, is_closed_labeled, satisfies_pi_ordering, Construction,
    ConstructionTrace, LabelingStrategy, Rule, TraceStep,
};
pub use clutter::{close_clutter, construct_clutter, Clutter};
pub use graph::{normalize, Edge, Graph, GraphError, Labeling, VertexSet};
pub use oracle::{satisfies_condition_iv, CmStatus, Oracle, OracleError};
pub use ordering::{find_pi_ordering, OrderingResult, OrderingStatus};
