//! Result and instrumentation types shared by all engines.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

/// Instrumentation counters, keyed by the names in [`counter`]. Engines fill
/// the subset that applies to them.
pub type Counters = BTreeMap<String, u64>;

/// Canonical counter names.
pub mod counter {
    /// Parikh-vector order comparisons (merge steps, oracle probes, or
    /// difference-set resolutions, depending on the engine).
    pub const COMPARISONS: &str = "comparisons";
    pub const RADIX_PASSES: &str = "radix_passes";
    pub const LENGTHS_PROCESSED: &str = "lengths_processed";
    /// Peak auxiliary words allocated for any single factor length.
    pub const PEAK_AUX_WORDS: &str = "peak_aux_words";
    pub const COMPARATOR_INVOCATIONS: &str = "comparator_invocations";
    /// O(sigma) vector-and-diffset rebuilds in the batched engine.
    pub const REBUILDS: &str = "rebuilds";
    /// O(log sigma) incremental resolutions in the batched engine.
    pub const INCREMENTAL_RESOLUTIONS: &str = "incremental_resolutions";
    pub const SHADOW_MISMATCHES: &str = "shadow_mismatches";
    pub const EVENTS_RECORDED: &str = "events_recorded";
    pub const BATCHES_PROCESSED: &str = "batches_processed";
}

/// One Abelian match: factor of A at `start_a` and factor of B at `start_b`,
/// both of length `len`, with equal Parikh vectors. Positions are 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Witness {
    pub start_a: usize,
    pub start_b: usize,
    pub len: usize,
}

/// One maximal equal run from the merge intersection: every listed A start
/// pairs with every listed B start, so all matches are recoverable without
/// materializing the cross product.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatchRun {
    pub len: usize,
    pub a_starts: Vec<usize>,
    pub b_starts: Vec<usize>,
}

/// Outcome of one engine run: the LCAF length (0 when no common Abelian
/// factor exists), witness pairs at that length, optional full run extents,
/// and instrumentation counters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LcafResult {
    pub length: usize,
    pub witnesses: Vec<Witness>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub runs: Option<Vec<MatchRun>>,
    pub counters: Counters,
}

impl LcafResult {
    pub fn no_match(counters: Counters) -> Self {
        LcafResult {
            length: 0,
            witnesses: Vec::new(),
            runs: None,
            counters,
        }
    }
}
