//! Text and JSON rendering of a command run.

use std::time::Instant;

use eulerpar::{Check, Error, MultiGraph, Result};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Debug, Clone, Serialize)]
pub struct Suite {
    pub name: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub notice: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
    pub checks: Vec<Check>,
}

impl Suite {
    pub fn skipped(name: &str, why: impl Into<String>) -> Self {
        Suite { name: name.into(), notice: Some(why.into()), elapsed_ms: None, checks: Vec::new() }
    }

    /// Runs `f`, timing it. Size and precondition errors become a skip
    /// notice; anything else is recorded as a failed check.
    pub fn run(name: &str, timing: bool, f: impl FnOnce() -> Result<Vec<Check>>) -> Self {
        let start = Instant::now();
        let result = f();
        let elapsed_ms = timing.then(|| start.elapsed().as_millis() as u64);
        match result {
            Ok(checks) => Suite { name: name.into(), notice: None, elapsed_ms, checks },
            Err(e @ (Error::Size { .. } | Error::Precondition(_) | Error::Domain(_))) => {
                Suite { name: name.into(), notice: Some(format!("skipped: {e}")), elapsed_ms, checks: Vec::new() }
            }
            Err(e) => Suite {
                name: name.into(),
                notice: None,
                elapsed_ms,
                checks: vec![Check::new("suite completed", "", e.to_string(), "ok".into(), false)],
            },
        }
    }

    pub fn with_notice(mut self, notice: Option<String>) -> Self {
        if notice.is_some() {
            self.notice = notice;
        }
        self
    }
}

/// What a subcommand produced.
#[derive(Debug, Default)]
pub struct Outcome {
    pub lines: Vec<String>,
    pub result: Value,
    pub suites: Vec<Suite>,
}

impl Outcome {
    pub fn passed(&self) -> bool {
        self.suites.iter().all(|s| s.checks.iter().all(|c| c.pass))
    }
}

pub fn graph_summary(g: &MultiGraph) -> Value {
    let p = g.rank_profile();
    json!({"vertices": g.vertex_count(), "edges": g.edge_count(), "k": p.k, "r": p.r, "n": p.n})
}

pub fn render_json(command: &str, graph: Option<&MultiGraph>, out: &Outcome) -> String {
    let doc = json!({
        "schema": 1,
        "command": command,
        "graph": graph.map(graph_summary),
        "result": out.result,
        "suites": out.suites,
        "pass": out.passed(),
    });
    serde_json::to_string_pretty(&doc).expect("report serialization cannot fail")
}

pub fn render_text(out: &Outcome) -> String {
    let mut s = String::new();
    for line in &out.lines {
        s.push_str(line);
        s.push('\n');
    }
    let total: usize = out.suites.iter().map(|x| x.checks.len()).sum();
    for suite in &out.suites {
        let time = suite.elapsed_ms.map(|t| format!(" ({t} ms)")).unwrap_or_default();
        s.push_str(&format!("== {}{time}\n", suite.name));
        if let Some(n) = &suite.notice {
            s.push_str(&format!("   note: {n}\n"));
        }
        for c in &suite.checks {
            s.push_str(&format!("{c}\n"));
        }
    }
    if !out.suites.is_empty() {
        let failed: usize = out.suites.iter().flat_map(|x| &x.checks).filter(|c| !c.pass).count();
        s.push_str(&format!("{total} checks, {failed} failed\n"));
    }
    s
}
