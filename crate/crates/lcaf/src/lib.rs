//! Longest common Abelian factor (LCAF) of two byte strings.
//!
//! Two equal-length strings are an Abelian match when one is a permutation of
//! the other, i.e. when their Parikh vectors (per-symbol occurrence counts)
//! coincide. The LCAF of strings `A` and `B` is the greatest `len` such that
//! some `len`-long factor of `A` Abelian-matches some factor of `B`.
//!
//! Three engines compute it, and agree on every input:
//!
//! - [`oracle::lcaf_bruteforce`] groups factors by serialized Parikh vector;
//!   it is the ground truth the other engines are tested against.
//! - [`radix::lcaf_radix`] sorts, per factor length, all start positions with
//!   an LSD radix sort keyed on sliding per-symbol counts, then intersects the
//!   two sorted lists merge-style, materializing vectors from strided samples.
//!   Working space stays linear in the text length.
//! - [`batched::lcaf_batched`] sorts k consecutive lengths through one
//!   data-oblivious comparator network, resolving each comparison via a
//!   difference set that is patched incrementally as windows grow by one
//!   symbol, and records every cross-string equality it observes.
//!
//! All factor positions in the public API are 1-based; the remapped alphabet
//! is `1..=sigma`.

pub mod batched;
pub mod bench;
pub mod error;
pub mod network;
pub mod oracle;
pub mod parikh;
pub mod radix;
pub mod report;
pub mod result;
pub mod text;

pub use error::Error;
pub use result::{Counters, LcafResult, MatchRun, Witness};
pub use text::{remap_alphabet, Alphabet, FactorRef, RemappedText, Source, Symbol};

use std::fmt;
use std::str::FromStr;

/// Engine selector, shared by the CLI and the benchmark harness.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Algorithm {
    Oracle,
    Radix,
    Batched,
}

impl Algorithm {
    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Oracle => "oracle",
            Algorithm::Radix => "radix",
            Algorithm::Batched => "batched",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "oracle" => Ok(Algorithm::Oracle),
            "radix" => Ok(Algorithm::Radix),
            "batched" => Ok(Algorithm::Batched),
            other => Err(Error::InvalidConfig(format!("unknown algorithm: {other}"))),
        }
    }
}
