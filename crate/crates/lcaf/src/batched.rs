//! Batched engine: k consecutive factor lengths sorted through one
//! data-oblivious comparator network, with comparisons resolved by
//! incrementally maintained difference sets.
//!
//! All factors of both texts at one length live in a single tagged array, so
//! any cross-string equality is observed inside a comparison; a correct
//! comparison sort cannot avoid comparing equal items, which is what makes
//! the recorded events complete. Each comparator is processed across the
//! whole length range before the next comparator runs: at the batch's base
//! length the two resident vectors and their difference set are rebuilt in
//! O(sigma); at each following length, if the residents are the one-symbol
//! extensions of the previous operands (same two start positions), both
//! vectors grow by one counter and the difference set is patched with at most
//! two insertions and two removals. When swap outcomes diverge between
//! lengths the residents no longer align and the state is rebuilt; the
//! counters expose how often that happens.

use std::cmp::Ordering;
use std::collections::BTreeSet;

use crate::network::{ComparatorNetwork, NetworkKind};
use crate::parikh::{DiffSet, ParikhVector};
use crate::result::{counter, Counters, LcafResult, Witness};
use crate::text::{RemappedText, Source};

/// Engine configuration.
#[derive(Clone, Copy, Debug)]
pub struct BatchConfig {
    /// Lengths sorted per batch; any k >= 1 is accepted.
    pub k: usize,
    pub network: NetworkKind,
    /// Re-verify every difference-set resolution against a from-scratch
    /// comparison, counting mismatches.
    pub shadow_check: bool,
    /// Process every batch even after a match is found, so the counters cover
    /// the whole length range; the reported maximum is unchanged.
    pub full_sweep: bool,
}

impl BatchConfig {
    /// Default k for alphabet size `sigma`: ceil(sqrt(sigma)).
    pub fn for_sigma(sigma: u32) -> Self {
        BatchConfig {
            k: default_k(sigma),
            ..Default::default()
        }
    }
}

impl Default for BatchConfig {
    fn default() -> Self {
        BatchConfig {
            k: 1,
            network: NetworkKind::Batcher,
            shadow_check: false,
            full_sweep: false,
        }
    }
}

/// ceil(sqrt(sigma)) without going through floats.
pub fn default_k(sigma: u32) -> usize {
    let mut k = 1usize;
    while k * k < sigma as usize {
        k += 1;
    }
    k
}

/// A cross-string Abelian match observed during a batch. Positions 1-based.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct MatchEvent {
    pub start_a: usize,
    pub start_b: usize,
    pub len: usize,
}

#[derive(Clone, Copy, Debug, Default)]
pub struct BatchStats {
    /// Comparator executions, one per (comparator, length) step.
    pub comparator_invocations: u64,
    /// O(sigma) vector-and-diffset rebuilds.
    pub rebuilds: u64,
    /// O(log sigma) incremental resolutions.
    pub incremental_resolutions: u64,
    pub shadow_mismatches: u64,
}

/// One element of a per-length array: a tagged factor, or sentinel padding
/// that orders greater than every factor and equals nothing real.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Slot {
    Factor { source: Source, start: usize },
    Sentinel,
}

/// Identity of a resident factor: which text it is from and where it starts.
type SlotId = (Source, usize);

/// Events plus the final per-length arrays, for tests that inspect the sort.
#[derive(Clone, Debug)]
pub struct BatchOutcome {
    pub events: Vec<MatchEvent>,
    pub final_arrays: Vec<Vec<Slot>>,
}

fn source_text<'t>(a: &'t RemappedText, b: &'t RemappedText, source: Source) -> &'t RemappedText {
    match source {
        Source::A => a,
        Source::B => b,
    }
}

/// Sort the factors of lengths `base_len .. base_len + k - 1` through
/// `network`, recording every cross-string equality. The network must be
/// sized for the base length's combined factor count; shorter arrays at the
/// longer lengths are padded with sentinels to that uniform size.
pub fn run_batch(
    a: &RemappedText,
    b: &RemappedText,
    base_len: usize,
    k: usize,
    network: &ComparatorNetwork,
    shadow_check: bool,
    stats: &mut BatchStats,
) -> Vec<MatchEvent> {
    run_batch_detailed(a, b, base_len, k, network, shadow_check, stats).events
}

pub fn run_batch_detailed(
    a: &RemappedText,
    b: &RemappedText,
    base_len: usize,
    k: usize,
    network: &ComparatorNetwork,
    shadow_check: bool,
    stats: &mut BatchStats,
) -> BatchOutcome {
    let min_len = a.len().min(b.len());
    assert!(k >= 1 && base_len >= 1 && base_len + k - 1 <= min_len);
    let m = (a.len() - base_len + 1) + (b.len() - base_len + 1);
    assert_eq!(
        network.size(),
        m,
        "network must be sized for the base length"
    );

    let mut arrays: Vec<Vec<Slot>> = (0..k)
        .map(|t| {
            let len = base_len + t;
            let mut v = Vec::with_capacity(m);
            v.extend((1..=a.len() - len + 1).map(|start| Slot::Factor {
                source: Source::A,
                start,
            }));
            v.extend((1..=b.len() - len + 1).map(|start| Slot::Factor {
                source: Source::B,
                start,
            }));
            v.resize(m, Slot::Sentinel);
            v
        })
        .collect();

    let sigma = a.sigma();
    let mut events: BTreeSet<MatchEvent> = BTreeSet::new();
    // per-comparator scratch, reused across its k length steps
    let mut vec_p = ParikhVector::zero(sigma);
    let mut vec_q = ParikhVector::zero(sigma);
    let mut ds = DiffSet::default();

    for &(p, q) in network.comparators() {
        let (p, q) = (p as usize, q as usize);
        // operand identities and window length the scratch currently describes
        let mut held: Option<(SlotId, SlotId, usize)> = None;
        for (t, array) in arrays.iter_mut().enumerate() {
            let len = base_len + t;
            stats.comparator_invocations += 1;
            let ord = match (array[p], array[q]) {
                (Slot::Sentinel, Slot::Sentinel) => {
                    held = None;
                    Ordering::Equal
                }
                (Slot::Sentinel, Slot::Factor { .. }) => {
                    held = None;
                    Ordering::Greater
                }
                (Slot::Factor { .. }, Slot::Sentinel) => {
                    held = None;
                    Ordering::Less
                }
                (
                    Slot::Factor {
                        source: src_p,
                        start: u,
                    },
                    Slot::Factor {
                        source: src_q,
                        start: v,
                    },
                ) => {
                    let id_p = (src_p, u);
                    let id_q = (src_q, v);
                    let text_p = source_text(a, b, src_p);
                    let text_q = source_text(a, b, src_q);
                    let aligned = held == Some((id_p, id_q, len - 1));
                    let flipped = held == Some((id_q, id_p, len - 1));
                    if aligned || flipped {
                        if flipped {
                            std::mem::swap(&mut vec_p, &mut vec_q);
                        }
                        let grow_p = text_p.symbol(u + len - 1);
                        vec_p.extend(grow_p);
                        ds.update(grow_p, &vec_p, &vec_q);
                        let grow_q = text_q.symbol(v + len - 1);
                        vec_q.extend(grow_q);
                        ds.update(grow_q, &vec_p, &vec_q);
                        stats.incremental_resolutions += 1;
                    } else {
                        vec_p.recount(text_p, u, len).expect("factor in range");
                        vec_q.recount(text_q, v, len).expect("factor in range");
                        ds = DiffSet::build(&vec_p, &vec_q);
                        stats.rebuilds += 1;
                    }
                    held = Some((id_p, id_q, len));
                    let ord = ds.resolve(&vec_p, &vec_q);
                    if shadow_check {
                        let direct = ParikhVector::of(text_p, u, len)
                            .unwrap()
                            .compare(&ParikhVector::of(text_q, v, len).unwrap())
                            .unwrap();
                        if direct != ord {
                            stats.shadow_mismatches += 1;
                        }
                    }
                    if ord == Ordering::Equal && src_p != src_q {
                        let (start_a, start_b) = if src_p == Source::A { (u, v) } else { (v, u) };
                        events.insert(MatchEvent {
                            start_a,
                            start_b,
                            len,
                        });
                    }
                    ord
                }
            };
            if ord == Ordering::Greater {
                array.swap(p, q);
            }
        }
    }

    BatchOutcome {
        events: events.into_iter().collect(),
        final_arrays: arrays,
    }
}

/// LCAF via batches of k consecutive lengths, processed in descending order
/// of their length range. The first batch producing any event decides the
/// result: its maximum event length (all longer lengths were already
/// processed without a match).
pub fn lcaf_batched(a: &RemappedText, b: &RemappedText, config: &BatchConfig) -> LcafResult {
    assert!(config.k >= 1, "k must be at least 1");
    let min_len = a.len().min(b.len());
    let batch_bases: Vec<usize> = (1..=min_len).step_by(config.k).collect();

    let mut stats = BatchStats::default();
    let mut events_total = 0u64;
    let mut batches = 0u64;
    let mut found: Option<(usize, Vec<Witness>)> = None;

    for &base in batch_bases.iter().rev() {
        let count = config.k.min(min_len - base + 1);
        let m = (a.len() - base + 1) + (b.len() - base + 1);
        let network = config.network.build(m);
        let events = run_batch(a, b, base, count, &network, config.shadow_check, &mut stats);
        batches += 1;
        events_total += events.len() as u64;
        if !events.is_empty() && found.is_none() {
            let best_len = events.iter().map(|e| e.len).max().expect("non-empty");
            let witnesses = events
                .iter()
                .filter(|e| e.len == best_len)
                .map(|e| Witness {
                    start_a: e.start_a,
                    start_b: e.start_b,
                    len: e.len,
                })
                .collect();
            found = Some((best_len, witnesses));
            if !config.full_sweep {
                break;
            }
        }
    }

    let mut counters = Counters::new();
    counters.insert(
        counter::COMPARATOR_INVOCATIONS.into(),
        stats.comparator_invocations,
    );
    counters.insert(counter::REBUILDS.into(), stats.rebuilds);
    counters.insert(
        counter::INCREMENTAL_RESOLUTIONS.into(),
        stats.incremental_resolutions,
    );
    counters.insert(
        counter::COMPARISONS.into(),
        stats.rebuilds + stats.incremental_resolutions,
    );
    counters.insert(counter::SHADOW_MISMATCHES.into(), stats.shadow_mismatches);
    counters.insert(counter::EVENTS_RECORDED.into(), events_total);
    counters.insert(counter::BATCHES_PROCESSED.into(), batches);

    match found {
        Some((length, witnesses)) => LcafResult {
            length,
            witnesses,
            runs: None,
            counters,
        },
        None => LcafResult::no_match(counters),
    }
}
