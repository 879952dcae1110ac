//! Machine- and human-readable run reports.
//!
//! The JSON schema is versioned (`"schema": 1`) and embeds verdicts and
//! polynomials in their documented shapes; timings ride along per check.
//! A failed verdict anywhere flips the exit code to 1 and its payload
//! carries the reproduction data (graph6 string, checker name).

use edge_spectra::theorems::Verdict;
use edge_spectra::IntPoly;
use serde::Serialize;

use crate::exit;

pub const SCHEMA_VERSION: u32 = 1;

/// One checker outcome with its wall-clock cost in milliseconds.
#[derive(Debug, Clone, Serialize)]
pub struct CheckRun {
    #[serde(flatten)]
    pub verdict: Verdict,
    pub ms: u64,
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub passed: usize,
    pub failed: usize,
    pub not_applicable: usize,
}

/// Graphs sharing one characteristic polynomial of N.
#[derive(Debug, Clone, Serialize)]
pub struct CospectralGroup {
    pub charpoly: IntPoly,
    pub graphs: Vec<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct RunReport {
    pub schema: u32,
    pub version: String,
    pub input: String,
    pub checks: Vec<CheckRun>,
    pub summary: Summary,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cospectral_groups: Option<Vec<CospectralGroup>>,
}

impl RunReport {
    pub fn new(input: String, checks: Vec<CheckRun>) -> Self {
        let mut summary = Summary::default();
        for run in &checks {
            if !run.verdict.applicable {
                summary.not_applicable += 1;
            } else if run.verdict.holds {
                summary.passed += 1;
            } else {
                summary.failed += 1;
            }
        }
        RunReport {
            schema: SCHEMA_VERSION,
            version: env!("CARGO_PKG_VERSION").to_string(),
            input,
            checks,
            summary,
            cospectral_groups: None,
        }
    }

    pub fn exit_code(&self) -> i32 {
        if self.summary.failed > 0 {
            exit::CHECK_FAILED
        } else {
            exit::OK
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("edgespectra {} report\n", self.version));
        out.push_str(&format!("input: {}\n", self.input));
        for run in &self.checks {
            let v = &run.verdict;
            if !v.applicable {
                out.push_str(&format!(
                    "[ n/a ] {:<18} {}: {} ({} ms)\n",
                    v.checker, v.graph6, v.reason, run.ms
                ));
            } else if v.holds {
                out.push_str(&format!(
                    "[HOLDS] {:<18} {} ({} ms)\n",
                    v.checker, v.graph6, run.ms
                ));
            } else {
                out.push_str(&format!(
                    "[FAIL ] {:<18} {} ({} ms)\n",
                    v.checker, v.graph6, run.ms
                ));
            }
        }
        if let Some(groups) = &self.cospectral_groups {
            if groups.is_empty() {
                out.push_str("cospectral groups: none\n");
            }
            for group in groups {
                out.push_str(&format!(
                    "cospectral group ({} graphs): {}  phi = {}\n",
                    group.graphs.len(),
                    group.graphs.join(" "),
                    group.charpoly
                ));
            }
        }
        out.push_str(&format!(
            "summary: {} passed, {} failed, {} not applicable\n",
            self.summary.passed, self.summary.failed, self.summary.not_applicable
        ));
        out
    }
}
