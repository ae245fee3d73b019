//! Parikh vectors, the total order on them, and difference-set tracking.
//!
//! Every engine sorts and compares factors through the single order defined
//! here: two vectors of equal window length are ordered at the smallest
//! symbol where they disagree, and the *greater* count there makes the
//! vector smaller. Only consistency and equality detection matter for
//! correctness, so the unusual direction is adopted verbatim.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::error::Error;
use crate::text::{RemappedText, Symbol};

/// Per-symbol occurrence counts of one factor window.
///
/// `counts[c-1]` is the number of occurrences of symbol `c`; the window
/// length travels with the vector so cross-length comparisons fail fast.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ParikhVector {
    counts: Vec<u32>,
    window_len: usize,
}

impl ParikhVector {
    /// All-zero vector over an alphabet of `sigma` symbols (empty window).
    pub fn zero(sigma: u32) -> Self {
        ParikhVector {
            counts: vec![0; sigma as usize],
            window_len: 0,
        }
    }

    /// Vector with the given counts; the window length is their sum.
    pub fn from_counts(counts: Vec<u32>) -> Self {
        let window_len = counts.iter().map(|&c| c as usize).sum();
        ParikhVector { counts, window_len }
    }

    /// Counts of the window `[start, start+len-1]` (1-based) of `text`.
    pub fn of(text: &RemappedText, start: usize, len: usize) -> Result<Self, Error> {
        let mut pv = Self::zero(text.sigma());
        pv.recount(text, start, len)?;
        Ok(pv)
    }

    /// Recompute in place for the window `[start, start+len-1]` of `text`.
    pub fn recount(&mut self, text: &RemappedText, start: usize, len: usize) -> Result<(), Error> {
        if start == 0 || len == 0 || start + len - 1 > text.len() {
            return Err(Error::OutOfRange {
                start,
                len,
                text_len: text.len(),
            });
        }
        self.counts.fill(0);
        for &sym in &text.symbols()[start - 1..start - 1 + len] {
            self.counts[(sym - 1) as usize] += 1;
        }
        self.window_len = len;
        Ok(())
    }

    pub fn sigma(&self) -> u32 {
        self.counts.len() as u32
    }

    /// Length of the window the counts describe.
    pub fn window_len(&self) -> usize {
        self.window_len
    }

    pub fn count(&self, symbol: Symbol) -> u32 {
        self.counts[(symbol - 1) as usize]
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    /// True iff the counts sum to the recorded window length.
    pub fn is_consistent(&self) -> bool {
        self.counts.iter().map(|&c| c as u64).sum::<u64>() == self.window_len as u64
    }

    /// Shift the window one position: drop one `out_symbol`, add one
    /// `in_symbol`. The window length is unchanged.
    pub fn slide(&mut self, out_symbol: Symbol, in_symbol: Symbol) -> Result<(), Error> {
        let out_idx = (out_symbol - 1) as usize;
        if self.counts[out_idx] == 0 {
            return Err(Error::Underflow { symbol: out_symbol });
        }
        self.counts[out_idx] -= 1;
        self.counts[(in_symbol - 1) as usize] += 1;
        Ok(())
    }

    /// Grow the window by one `in_symbol`: one counter and the length tick up.
    pub fn extend(&mut self, in_symbol: Symbol) {
        self.counts[(in_symbol - 1) as usize] += 1;
        self.window_len += 1;
    }

    /// The canonical order: `Equal` iff all counts coincide; otherwise decided
    /// at the smallest differing symbol, where the greater count is `Less`.
    pub fn compare(&self, other: &Self) -> Result<Ordering, Error> {
        if self.window_len != other.window_len {
            return Err(Error::LengthMismatch {
                left: self.window_len,
                right: other.window_len,
            });
        }
        debug_assert_eq!(self.counts.len(), other.counts.len());
        for (a, b) in self.counts.iter().zip(&other.counts) {
            if a != b {
                return Ok(if a > b {
                    Ordering::Less
                } else {
                    Ordering::Greater
                });
            }
        }
        Ok(Ordering::Equal)
    }
}

/// Ordered set of the symbols at which two tracked vectors currently differ.
///
/// Emptiness certifies Abelian equality; the minimum decides the order. Both
/// queries and point updates are O(log sigma), so a comparison can be kept
/// current across single-counter changes without rescanning all of sigma.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct DiffSet {
    coords: BTreeSet<Symbol>,
}

impl DiffSet {
    /// Collect all differing coordinates in one O(sigma) sweep.
    pub fn build(p: &ParikhVector, q: &ParikhVector) -> Self {
        debug_assert_eq!(p.sigma(), q.sigma());
        let coords = p
            .counts
            .iter()
            .zip(&q.counts)
            .enumerate()
            .filter(|(_, (a, b))| a != b)
            .map(|(i, _)| (i + 1) as Symbol)
            .collect();
        DiffSet { coords }
    }

    /// Restore the set invariant at `coord` after a counter of `p` or `q`
    /// changed there: present iff the counts now differ.
    pub fn update(&mut self, coord: Symbol, p: &ParikhVector, q: &ParikhVector) {
        if p.count(coord) == q.count(coord) {
            self.coords.remove(&coord);
        } else {
            self.coords.insert(coord);
        }
    }

    /// Resolve the order of the tracked pair: `Equal` when the set is empty,
    /// otherwise decided at the minimum coordinate. Agrees with
    /// [`ParikhVector::compare`] whenever the set is in sync with `(p, q)`.
    pub fn resolve(&self, p: &ParikhVector, q: &ParikhVector) -> Ordering {
        match self.coords.first() {
            None => Ordering::Equal,
            Some(&c) => {
                debug_assert_ne!(p.count(c), q.count(c));
                if p.count(c) > q.count(c) {
                    Ordering::Less
                } else {
                    Ordering::Greater
                }
            }
        }
    }

    pub fn is_empty(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn len(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> impl Iterator<Item = Symbol> + '_ {
        self.coords.iter().copied()
    }
}
