//! The run report and its two renderings.

use std::fmt::Write as _;

use serde::Serialize;

use crate::closure::{is_closed_labeled, LabelingStrategy, TraceStep};
use crate::clutter::ClutterStatus;
use crate::graph::{Graph, Labeling, VertexSet};
use crate::oracle::{satisfies_condition_iv, AuditReport, CmStatus, ComponentVerdict, Oracle, OracleError};
use crate::ordering::OrderingResult;

pub const INITIAL_IDEAL_NOTE: &str = "equivalent, not computed";

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct InputSummary {
    pub kind: &'static str,
    pub n: usize,
    pub edges: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct LabelingReport {
    pub strategy: LabelingStrategy,
    /// `[input label, working label]` pairs.
    pub map: Labeling,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct OutputSummary {
    pub kind: &'static str,
    pub n: usize,
    pub edges: Vec<VertexSet>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdicts {
    /// Closed under the working labeling.
    pub closed: bool,
    pub condition_iv: bool,
    pub connected: bool,
    /// Whole-graph verdicts; null for disconnected graphs or when not computed.
    pub unmixed: Option<bool>,
    pub cm_status: Option<CmStatus>,
    pub heights_equal: Option<bool>,
    pub components: Option<Vec<ComponentVerdict>>,
    pub initial_ideal_cm: Option<&'static str>,
}

impl Verdicts {
    /// Only the checks that need no subset enumeration.
    pub fn structural(g: &Graph) -> Self {
        let closed = is_closed_labeled(g);
        Verdicts {
            closed,
            condition_iv: satisfies_condition_iv(g),
            connected: g.is_connected(),
            unmixed: None,
            cm_status: None,
            heights_equal: None,
            components: None,
            initial_ideal_cm: closed.then_some(INITIAL_IDEAL_NOTE),
        }
    }

    pub fn full(g: &Graph, oracle: &Oracle) -> Result<Self, OracleError> {
        let mut v = Verdicts::structural(g);
        let comps = oracle.component_verdicts(g)?;
        if let [only] = comps.as_slice() {
            v.unmixed = Some(only.unmixed);
            v.cm_status = Some(only.cm_status);
        }
        v.heights_equal = Some(oracle.heights_equal(g)?);
        v.components = Some(comps);
        Ok(v)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct PrimeRow {
    #[serde(rename = "T")]
    pub set: VertexSet,
    pub c: usize,
    pub height: usize,
    pub generators: String,
}

pub fn prime_rows(g: &Graph, oracle: &Oracle) -> Result<Vec<PrimeRow>, OracleError> {
    Ok(oracle
        .minimal_primes(g)?
        .into_iter()
        .map(|p| PrimeRow {
            set: p.record.set,
            c: p.record.c,
            height: p.record.height,
            generators: p.generators,
        })
        .collect())
}

#[derive(Clone, Debug, PartialEq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Details {
    Audit(AuditReport),
    Ordering(OrderingResult),
    ClutterStatus(ClutterStatus),
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Timing {
    pub elapsed_us: u64,
}

/// Everything one command produced. Keys are always present; fields that do
/// not apply to the command are null.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct RunReport {
    pub command: String,
    pub input: InputSummary,
    pub labeling: LabelingReport,
    pub trace: Option<Vec<TraceStep>>,
    pub output: Option<OutputSummary>,
    pub verdicts: Verdicts,
    pub primes: Option<Vec<PrimeRow>>,
    pub details: Option<Details>,
    pub timing: Option<Timing>,
}

fn opt<T: ToString>(v: &Option<T>) -> String {
    v.as_ref().map_or_else(|| "-".to_string(), T::to_string)
}

fn joined<T: ToString>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let i = &self.input;
        let _ = writeln!(s, "{}: {} on {} vertices, {} edges", self.command, i.kind, i.n, i.edges);
        if !self.labeling.map.is_identity() {
            let pairs = joined(self.labeling.map.pairs().map(|(a, b)| format!("{a}->{b}")), " ");
            let _ = writeln!(s, "labeling ({}): {pairs}", self.labeling.strategy);
        }
        if let Some(trace) = &self.trace {
            let _ = writeln!(s, "trace: {} step(s)", trace.len());
            for step in trace {
                let _ = writeln!(s, "  {step}");
            }
        }
        if let Some(out) = &self.output {
            let _ = writeln!(
                s,
                "output: {} on {} vertices, {} edges",
                out.kind,
                out.n,
                out.edges.len()
            );
            let _ = writeln!(s, "  {}", joined(&out.edges, " "));
        }
        let v = &self.verdicts;
        let _ = writeln!(s, "verdicts:");
        let _ = writeln!(s, "  closed (working labels): {}", v.closed);
        let _ = writeln!(s, "  condition (iv): {}", v.condition_iv);
        let _ = writeln!(s, "  connected: {}", v.connected);
        if v.components.is_some() {
            let _ = writeln!(s, "  unmixed: {}", opt(&v.unmixed));
            let _ = writeln!(s, "  cm status: {}", opt(&v.cm_status));
            let _ = writeln!(s, "  equal prime heights: {}", opt(&v.heights_equal));
        }
        if let Some(note) = v.initial_ideal_cm {
            let _ = writeln!(s, "  initial ideal CM: {note}");
        }
        if let (false, Some(comps)) = (v.connected, &v.components) {
            for c in comps {
                let _ = writeln!(
                    s,
                    "  component {}: closed {}, unmixed {}, cm {}",
                    c.vertices, c.closed, c.unmixed, c.cm_status
                );
            }
        }
        if let Some(primes) = &self.primes {
            let _ = writeln!(s, "minimal primes: {}", primes.len());
            let width = primes.iter().map(|p| p.set.to_string().len()).max().unwrap_or(1);
            for p in primes {
                let _ = writeln!(
                    s,
                    "  T={:<width$}  c={}  height={}  {}",
                    p.set.to_string(),
                    p.c,
                    p.height,
                    p.generators
                );
            }
        }
        match &self.details {
            Some(Details::Audit(report)) => {
                let _ = writeln!(s, "vertex deletions:");
                for e in &report.entries {
                    let _ = writeln!(
                        s,
                        "  -{}: closed {}, unmixed {}, cm {}, connected {}, free {}, facet condition {}",
                        e.vertex,
                        e.deleted_graph_closed,
                        e.deleted_unmixed,
                        e.deleted_cm,
                        e.deleted_connected,
                        e.v_free,
                        e.facet_condition
                    );
                }
            }
            Some(Details::Ordering(res)) => {
                let _ = writeln!(s, "proper interval ordering: {}", res.status);
                if let Some(perm) = res.permutation() {
                    let pairs = joined(perm.iter().enumerate().map(|(v, p)| format!("{}->{p}", v + 1)), " ");
                    let _ = writeln!(s, "  {pairs}");
                }
            }
            Some(Details::ClutterStatus(status)) => {
                let _ = writeln!(s, "clutter components:");
                for c in &status.components {
                    let _ = writeln!(
                        s,
                        "  {}: closed {}, unmixed {}, cm {}, condition (d) {}",
                        c.vertices,
                        c.closed,
                        c.unmixed,
                        opt(&c.cm_status),
                        opt(&c.condition_d)
                    );
                }
            }
            None => {}
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(s, "elapsed: {} us", t.elapsed_us);
        }
        s
    }
}
