//! Browser bindings. Each export takes graph text in the CLI input format and
//! returns a JSON envelope `{"code", "report", "warnings", "error"}` where
//! `report` is the same object `macaulify <verb> --json` prints.

use macaulify::cli::{run, InputKind, Options, Verb};
use macaulify::LabelingStrategy;
use serde_json::{json, Value};
use wasm_bindgen::prelude::*;

fn envelope(verb: Verb, input: &str, labeling: LabelingStrategy) -> String {
    let opts = Options {
        json: true,
        labeling,
        ..Options::default()
    };
    let out = run(verb, InputKind::Graph, input, &opts);
    let report: Value = serde_json::from_str(&out.stdout).unwrap_or(Value::Null);
    let mut warnings = Vec::new();
    let mut error = Value::Null;
    for line in out.stderr.lines() {
        if let Some(w) = line.strip_prefix("warning: ") {
            warnings.push(w.to_string());
        } else if let Some(e) = line.strip_prefix("error: ") {
            error = Value::String(e.to_string());
        }
    }
    json!({ "code": out.code, "report": report, "warnings": warnings, "error": error }).to_string()
}

/// Closure then augmentation. `labeling` is `identity`, `bfs` or `exhaustive-min`.
#[wasm_bindgen]
pub fn construct(input: &str, labeling: &str) -> String {
    match labeling.parse::<LabelingStrategy>() {
        Ok(strategy) => envelope(Verb::Construct, input, strategy),
        Err(e) => json!({ "code": 1, "report": null, "warnings": [], "error": e.to_string() }).to_string(),
    }
}

#[wasm_bindgen]
pub fn oracle(input: &str) -> String {
    envelope(Verb::Oracle, input, LabelingStrategy::Identity)
}

#[wasm_bindgen]
pub fn audit(input: &str) -> String {
    envelope(Verb::Audit, input, LabelingStrategy::Identity)
}
