//! Structured run reports emitted by the CLI.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::result::{Counters, LcafResult, MatchRun, Witness};

/// One machine-readable record per run. Serializes to a single JSON object;
/// parsing and re-serializing is lossless for every field.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct RunRecord {
    pub algorithm: String,
    pub lcaf_length: usize,
    pub witnesses: Vec<Witness>,
    pub sigma: u32,
    pub len_a: usize,
    pub len_b: usize,
    pub counters: Counters,
    pub elapsed_ms: f64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runs: Option<Vec<MatchRun>>,
}

impl RunRecord {
    /// Build a record from an engine result, keeping at most `witness_cap`
    /// witness pairs (the full run extents, when present, stay complete).
    pub fn new(
        algorithm: &str,
        result: &LcafResult,
        sigma: u32,
        len_a: usize,
        len_b: usize,
        elapsed_ms: f64,
        witness_cap: usize,
    ) -> Self {
        RunRecord {
            algorithm: algorithm.to_string(),
            lcaf_length: result.length,
            witnesses: result.witnesses.iter().take(witness_cap).copied().collect(),
            sigma,
            len_a,
            len_b,
            counters: result.counters.clone(),
            elapsed_ms,
            runs: result.runs.clone(),
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "algorithm:   {}", self.algorithm).unwrap();
        writeln!(out, "lcaf_length: {}", self.lcaf_length).unwrap();
        writeln!(
            out,
            "sigma: {}  len_a: {}  len_b: {}",
            self.sigma, self.len_a, self.len_b
        )
        .unwrap();
        if self.witnesses.is_empty() {
            writeln!(out, "witnesses:   (none)").unwrap();
        } else {
            let pairs: Vec<String> = self
                .witnesses
                .iter()
                .map(|w| format!("(A:{}, B:{}, len {})", w.start_a, w.start_b, w.len))
                .collect();
            writeln!(out, "witnesses:   {}", pairs.join(" ")).unwrap();
        }
        if let Some(runs) = &self.runs {
            for (i, run) in runs.iter().enumerate() {
                writeln!(
                    out,
                    "run {}: len {} a_starts={:?} b_starts={:?}",
                    i, run.len, run.a_starts, run.b_starts
                )
                .unwrap();
            }
        }
        let counters: Vec<String> = self
            .counters
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect();
        writeln!(out, "counters:    {}", counters.join(" ")).unwrap();
        writeln!(out, "elapsed_ms:  {:.3}", self.elapsed_ms).unwrap();
        out
    }
}
