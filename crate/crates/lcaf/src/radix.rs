//! Linear-space per-length engine: LSD radix sort over Parikh digits,
//! strided Parikh samples, and merge-style intersection.
//!
//! For one factor length, all start positions of a text are radix-sorted with
//! one counting pass per symbol. The pass keying on symbol `s` reads a digit
//! column that is recomputed by a sliding sweep just before the pass and
//! discarded right after it, so no sigma-by-n table ever exists. The
//! intersection then walks both sorted lists, rebuilding each needed vector
//! from the nearest stored sample in O(sigma).

use std::cmp::Ordering;

use crate::parikh::ParikhVector;
use crate::result::{counter, Counters, LcafResult, MatchRun, Witness};
use crate::text::{RemappedText, Symbol};

/// Word-level accounting of auxiliary buffers; pins the linear-space claim.
///
/// Every buffer a radix-engine function allocates is charged on creation and
/// released when dropped, one word per element; `peak_words` is the high-water
/// mark.
#[derive(Clone, Copy, Debug, Default)]
pub struct AllocTracker {
    current: usize,
    peak: usize,
}

impl AllocTracker {
    pub fn charge(&mut self, words: usize) {
        self.current += words;
        self.peak = self.peak.max(self.current);
    }

    pub fn release(&mut self, words: usize) {
        debug_assert!(self.current >= words);
        self.current = self.current.saturating_sub(words);
    }

    pub fn current_words(&self) -> usize {
        self.current
    }

    pub fn peak_words(&self) -> usize {
        self.peak
    }
}

/// Instrumentation for one radix run (or one single-length pass).
#[derive(Clone, Copy, Debug, Default)]
pub struct RadixStats {
    /// Counting-sort passes executed.
    pub passes: u64,
    /// Parikh-vector order comparisons during intersection.
    pub comparisons: u64,
    pub alloc: AllocTracker,
}

/// Start positions of all factors at one length, ascending under the Parikh
/// order; ties keep their original relative order.
#[derive(Clone, Debug)]
pub struct SortedFactorList {
    pub len: usize,
    pub starts: Vec<usize>,
}

/// Parikh vectors stored at starts `1, stride+1, 2*stride+1, ...`.
#[derive(Clone, Debug)]
pub struct SampleSet {
    pub len: usize,
    pub stride: usize,
    pub samples: Vec<(usize, ParikhVector)>,
}

/// One maximal equal run of the merged order; every A start Abelian-matches
/// every B start.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EqualRun {
    pub a_starts: Vec<usize>,
    pub b_starts: Vec<usize>,
}

/// `out[j-1]` = occurrences of `symbol` in the window of length `len`
/// starting at `j`, for all `n - len + 1` windows; one O(n) sliding sweep.
pub fn digit_column(text: &RemappedText, len: usize, symbol: Symbol) -> Vec<u32> {
    let n = text.len();
    assert!(len >= 1 && len <= n);
    let syms = text.symbols();
    let mut col = Vec::with_capacity(n - len + 1);
    let mut count: u32 = 0;
    for i in 0..n {
        if syms[i] == symbol {
            count += 1;
        }
        if i >= len && syms[i - len] == symbol {
            count -= 1;
        }
        if i + 1 >= len {
            col.push(count);
        }
    }
    col
}

/// Stable LSD radix sort of all factor starts at `len`. Pass `i` keys on
/// symbol `sigma - i + 1`, so the final pass keys on symbol 1 and the output
/// is ascending under the canonical order. Buckets are enumerated by
/// descending count value, because at each digit the greater count sorts
/// first. Auxiliary space per pass is the digit column plus a bucket table of
/// `len + 2` words, both dropped before the next pass.
pub fn radix_sort_factors(
    text: &RemappedText,
    len: usize,
    stats: &mut RadixStats,
) -> SortedFactorList {
    let windows = text.len() - len + 1;
    let sigma = text.sigma();
    let mut starts: Vec<usize> = (1..=windows).collect();
    stats.alloc.charge(windows);
    let mut scratch: Vec<usize> = vec![0; windows];
    stats.alloc.charge(windows);

    for pass in 0..sigma {
        let symbol = sigma - pass; // sigma, sigma-1, ..., 1
        let col = digit_column(text, len, symbol);
        stats.alloc.charge(windows);
        // counting sort on keys 0..=len, greater key first, stable
        let mut bucket = vec![0usize; len + 2];
        stats.alloc.charge(len + 2);
        for &s in &starts {
            bucket[col[s - 1] as usize] += 1;
        }
        let mut placed = 0;
        for key in (0..=len).rev() {
            let here = bucket[key];
            bucket[key] = placed;
            placed += here;
        }
        for &s in &starts {
            let key = col[s - 1] as usize;
            scratch[bucket[key]] = s;
            bucket[key] += 1;
        }
        std::mem::swap(&mut starts, &mut scratch);
        stats.passes += 1;
        stats.alloc.release(windows); // digit column
        stats.alloc.release(len + 2); // bucket table
    }

    stats.alloc.release(windows); // scratch; `starts` stays charged as output
    SortedFactorList { len, starts }
}

/// Parikh vectors at starts `1, stride+1, 2*stride+1, ...`, computed by one
/// incremental left-to-right sweep; each stored sample is a copy of the
/// running window vector.
pub fn build_samples(
    text: &RemappedText,
    len: usize,
    stride: usize,
    stats: &mut RadixStats,
) -> SampleSet {
    assert!(stride >= 1);
    let windows = text.len() - len + 1;
    let sigma = text.sigma() as usize;
    let mut running = ParikhVector::of(text, 1, len).expect("first window fits");
    stats.alloc.charge(sigma);
    let mut samples = Vec::new();
    let mut start = 1;
    loop {
        debug_assert!(running.is_consistent());
        samples.push((start, running.clone()));
        stats.alloc.charge(sigma + 1);
        if start + stride > windows {
            break;
        }
        for pos in start..start + stride {
            running
                .slide(text.symbol(pos), text.symbol(pos + len))
                .expect("slide within text");
        }
        start += stride;
    }
    stats.alloc.release(sigma); // running vector
    SampleSet {
        len,
        stride,
        samples,
    }
}

/// Materialize the vector at `start` from the nearest sample at or before it:
/// one O(sigma) copy plus at most `stride - 1` constant-time slides.
pub fn parikh_via_samples(samples: &SampleSet, text: &RemappedText, start: usize) -> ParikhVector {
    let mut out = ParikhVector::zero(text.sigma());
    copy_via_samples(samples, text, start, &mut out);
    out
}

fn copy_via_samples(
    samples: &SampleSet,
    text: &RemappedText,
    start: usize,
    out: &mut ParikhVector,
) {
    let idx = (start - 1) / samples.stride;
    let (sample_start, sample_vec) = &samples.samples[idx];
    out.clone_from(sample_vec);
    for pos in *sample_start..start {
        out.slide(text.symbol(pos), text.symbol(pos + samples.len))
            .expect("slide within text");
    }
}

/// Two-pointer sweep over the sorted lists. Each comparison materializes both
/// vectors through the samples and applies the canonical order; on equality
/// the maximal equal runs of both lists are collected as one [`EqualRun`] and
/// both pointers jump past them.
pub fn merge_intersect(
    sorted_a: &SortedFactorList,
    sorted_b: &SortedFactorList,
    samples_a: &SampleSet,
    samples_b: &SampleSet,
    text_a: &RemappedText,
    text_b: &RemappedText,
    stats: &mut RadixStats,
) -> Vec<EqualRun> {
    assert_eq!(sorted_a.len, sorted_b.len, "lists must share the length");
    let sigma = text_a.sigma() as usize;
    let mut va = ParikhVector::zero(text_a.sigma());
    let mut vb = ParikhVector::zero(text_a.sigma());
    let mut vnext = ParikhVector::zero(text_a.sigma());
    stats.alloc.charge(3 * sigma);

    let mut runs = Vec::new();
    let (la, lb) = (sorted_a.starts.len(), sorted_b.starts.len());
    let (mut i, mut j) = (0, 0);
    while i < la && j < lb {
        copy_via_samples(samples_a, text_a, sorted_a.starts[i], &mut va);
        copy_via_samples(samples_b, text_b, sorted_b.starts[j], &mut vb);
        stats.comparisons += 1;
        match va.compare(&vb).expect("equal window lengths") {
            Ordering::Less => i += 1,
            Ordering::Greater => j += 1,
            Ordering::Equal => {
                let mut ia = i + 1;
                while ia < la {
                    copy_via_samples(samples_a, text_a, sorted_a.starts[ia], &mut vnext);
                    stats.comparisons += 1;
                    if vnext.compare(&va).expect("equal window lengths") != Ordering::Equal {
                        break;
                    }
                    ia += 1;
                }
                let mut jb = j + 1;
                while jb < lb {
                    copy_via_samples(samples_b, text_b, sorted_b.starts[jb], &mut vnext);
                    stats.comparisons += 1;
                    if vnext.compare(&vb).expect("equal window lengths") != Ordering::Equal {
                        break;
                    }
                    jb += 1;
                }
                stats.alloc.charge((ia - i) + (jb - j));
                runs.push(EqualRun {
                    a_starts: sorted_a.starts[i..ia].to_vec(),
                    b_starts: sorted_b.starts[j..jb].to_vec(),
                });
                i = ia;
                j = jb;
            }
        }
    }
    stats.alloc.release(3 * sigma);
    runs
}

/// The full per-length pipeline: sort both texts, build samples at stride
/// sigma, intersect. Exposed so tests can probe the per-length space bound.
pub fn match_runs_at_length(
    a: &RemappedText,
    b: &RemappedText,
    len: usize,
    stats: &mut RadixStats,
) -> Vec<EqualRun> {
    let stride = a.sigma() as usize;
    let sorted_a = radix_sort_factors(a, len, stats);
    let sorted_b = radix_sort_factors(b, len, stats);
    let samples_a = build_samples(a, len, stride, stats);
    let samples_b = build_samples(b, len, stride, stats);
    merge_intersect(&sorted_a, &sorted_b, &samples_a, &samples_b, a, b, stats)
}

#[derive(Clone, Copy, Debug, Default)]
pub struct RadixOptions {
    /// Process every length even after a match is found, so the counters
    /// cover the whole range; the reported maximum is unchanged.
    pub full_sweep: bool,
    /// Populate [`LcafResult::runs`] with the full equal-run extents at the
    /// winning length.
    pub collect_runs: bool,
}

/// LCAF via the per-length radix pipeline, iterating lengths descending and
/// returning at the first length with a non-empty intersection.
pub fn lcaf_radix(a: &RemappedText, b: &RemappedText) -> LcafResult {
    lcaf_radix_opts(a, b, RadixOptions::default())
}

pub fn lcaf_radix_opts(a: &RemappedText, b: &RemappedText, opts: RadixOptions) -> LcafResult {
    let max_len = a.len().min(b.len());
    let mut passes = 0u64;
    let mut comparisons = 0u64;
    let mut peak_words = 0usize;
    let mut lengths = 0u64;
    let mut found: Option<(usize, Vec<EqualRun>)> = None;

    for len in (1..=max_len).rev() {
        lengths += 1;
        let mut stats = RadixStats::default();
        let runs = match_runs_at_length(a, b, len, &mut stats);
        passes += stats.passes;
        comparisons += stats.comparisons;
        peak_words = peak_words.max(stats.alloc.peak_words());
        if !runs.is_empty() && found.is_none() {
            found = Some((len, runs));
            if !opts.full_sweep {
                break;
            }
        }
    }

    let mut counters = Counters::new();
    counters.insert(counter::RADIX_PASSES.into(), passes);
    counters.insert(counter::COMPARISONS.into(), comparisons);
    counters.insert(counter::PEAK_AUX_WORDS.into(), peak_words as u64);
    counters.insert(counter::LENGTHS_PROCESSED.into(), lengths);

    match found {
        Some((length, equal_runs)) => {
            let witnesses = equal_runs
                .iter()
                .map(|r| Witness {
                    start_a: r.a_starts[0],
                    start_b: r.b_starts[0],
                    len: length,
                })
                .collect();
            let runs = opts.collect_runs.then(|| {
                equal_runs
                    .into_iter()
                    .map(|r| MatchRun {
                        len: length,
                        a_starts: r.a_starts,
                        b_starts: r.b_starts,
                    })
                    .collect()
            });
            LcafResult {
                length,
                witnesses,
                runs,
                counters,
            }
        }
        None => LcafResult::no_match(counters),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::lcaf_bruteforce;
    use crate::text::remap_alphabet;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    fn text_pair(a: &[u8], b: &[u8]) -> (RemappedText, RemappedText) {
        let (a, b, _) = remap_alphabet(a, b).unwrap();
        (a, b)
    }

    fn random_pair(rng: &mut ChaCha12Rng, max_n: usize, sigma: u8) -> (RemappedText, RemappedText) {
        let na = rng.gen_range(1..=max_n);
        let nb = rng.gen_range(1..=max_n);
        let raw_a: Vec<u8> = (0..na).map(|_| rng.gen_range(0..sigma)).collect();
        let raw_b: Vec<u8> = (0..nb).map(|_| rng.gen_range(0..sigma)).collect();
        let (a, b, _) = remap_alphabet(&raw_a, &raw_b).unwrap();
        (a, b)
    }

    #[test]
    fn digit_column_sliding_counts() {
        let (t, _) = text_pair(b"abab", b"abab");
        assert_eq!(digit_column(&t, 2, 1), vec![1, 1, 1]);
        let (t, _) = text_pair(b"aabb", b"aabb");
        assert_eq!(digit_column(&t, 2, 1), vec![2, 1, 0]);
        let (_, t) = text_pair(b"a", b"bbbb");
        assert_eq!(digit_column(&t, 3, 1), vec![0, 0]);
    }

    #[test]
    fn digit_column_matches_direct_recount() {
        let mut rng = ChaCha12Rng::seed_from_u64(3);
        for _ in 0..20 {
            let (a, _) = random_pair(&mut rng, 40, 4);
            let len = rng.gen_range(1..=a.len());
            for symbol in 1..=a.sigma() {
                let col = digit_column(&a, len, symbol);
                for j in 1..=a.len() - len + 1 {
                    let direct = ParikhVector::of(&a, j, len).unwrap().count(symbol);
                    assert_eq!(col[j - 1], direct);
                }
            }
        }
    }

    #[test]
    fn sort_orders_by_canonical_order() {
        let (t, _) = text_pair(b"aabb", b"aabb");
        let mut stats = RadixStats::default();
        let sorted = radix_sort_factors(&t, 2, &mut stats);
        // vectors (2,0) < (1,1) < (0,2) under the order
        assert_eq!(sorted.starts, vec![1, 2, 3]);
        assert_eq!(stats.passes, 2);
    }

    #[test]
    fn sort_is_stable_on_all_equal_keys() {
        let (t, _) = text_pair(b"abab", b"abab");
        let mut stats = RadixStats::default();
        let sorted = radix_sort_factors(&t, 2, &mut stats);
        assert_eq!(sorted.starts, vec![1, 2, 3]);
    }

    #[test]
    fn sort_single_factor() {
        let (t, _) = text_pair(b"abca", b"abca");
        let mut stats = RadixStats::default();
        let sorted = radix_sort_factors(&t, t.len(), &mut stats);
        assert_eq!(sorted.starts, vec![1]);
    }

    #[test]
    fn sort_runs_exactly_sigma_passes() {
        let mut rng = ChaCha12Rng::seed_from_u64(9);
        for sigma in [1u8, 2, 3, 5, 8] {
            let (a, _) = random_pair(&mut rng, 30, sigma);
            let len = rng.gen_range(1..=a.len());
            let mut stats = RadixStats::default();
            radix_sort_factors(&a, len, &mut stats);
            assert_eq!(stats.passes, a.sigma() as u64);
        }
    }

    #[test]
    fn sort_agrees_with_comparison_sort() {
        let mut rng = ChaCha12Rng::seed_from_u64(17);
        for _ in 0..60 {
            let (a, _) = random_pair(&mut rng, 64, 4);
            let len = rng.gen_range(1..=a.len());
            let mut stats = RadixStats::default();
            let sorted = radix_sort_factors(&a, len, &mut stats);

            let mut expected: Vec<usize> = (1..=a.len() - len + 1).collect();
            expected.sort_by(|&u, &v| {
                ParikhVector::of(&a, u, len)
                    .unwrap()
                    .compare(&ParikhVector::of(&a, v, len).unwrap())
                    .unwrap()
            });
            // orderings must agree up to tie permutation: compare the vector
            // sequences, which are invariant under reordering within ties
            let vecs = |starts: &[usize]| -> Vec<ParikhVector> {
                starts
                    .iter()
                    .map(|&s| ParikhVector::of(&a, s, len).unwrap())
                    .collect()
            };
            assert_eq!(vecs(&sorted.starts), vecs(&expected));
            // and starts must be a permutation of all windows
            let mut perm = sorted.starts.clone();
            perm.sort_unstable();
            assert_eq!(perm, (1..=a.len() - len + 1).collect::<Vec<_>>());
        }
    }

    #[test]
    fn samples_at_expected_starts() {
        let (t, _) = text_pair(b"aabb", b"aabb");
        let mut stats = RadixStats::default();
        let set = build_samples(&t, 2, 2, &mut stats);
        let starts: Vec<usize> = set.samples.iter().map(|(s, _)| *s).collect();
        assert_eq!(starts, vec![1, 3]);
        assert_eq!(set.samples[0].1.counts(), &[2, 0]);
        assert_eq!(set.samples[1].1.counts(), &[0, 2]);
    }

    #[test]
    fn stride_one_stores_every_window() {
        let (t, _) = text_pair(b"abcab", b"abcab");
        let mut stats = RadixStats::default();
        let set = build_samples(&t, 2, 1, &mut stats);
        assert_eq!(set.samples.len(), t.len() - 2 + 1);
        for (s, v) in &set.samples {
            assert_eq!(v, &ParikhVector::of(&t, *s, 2).unwrap());
        }
    }

    #[test]
    fn oversized_stride_stores_single_sample() {
        let (t, _) = text_pair(b"abcab", b"abcab");
        let mut stats = RadixStats::default();
        let set = build_samples(&t, 3, 100, &mut stats);
        assert_eq!(set.samples.len(), 1);
        assert_eq!(set.samples[0].0, 1);
    }

    #[test]
    fn via_samples_zero_and_one_slides() {
        let (t, _) = text_pair(b"aabbab", b"aabbab");
        let mut stats = RadixStats::default();
        let set = build_samples(&t, 2, 3, &mut stats);
        // start 1 is sampled: exact copy
        assert_eq!(
            parikh_via_samples(&set, &t, 1),
            ParikhVector::of(&t, 1, 2).unwrap()
        );
        // start 2 needs one slide
        assert_eq!(
            parikh_via_samples(&set, &t, 2),
            ParikhVector::of(&t, 2, 2).unwrap()
        );
    }

    #[test]
    fn via_samples_equals_direct_recount_everywhere() {
        let mut rng = ChaCha12Rng::seed_from_u64(23);
        for _ in 0..40 {
            let (a, _) = random_pair(&mut rng, 64, 5);
            let len = rng.gen_range(1..=a.len());
            let mut stats = RadixStats::default();
            let set = build_samples(&a, len, a.sigma() as usize, &mut stats);
            for start in 1..=a.len() - len + 1 {
                assert_eq!(
                    parikh_via_samples(&set, &a, start),
                    ParikhVector::of(&a, start, len).unwrap(),
                    "start {start} len {len}"
                );
            }
        }
    }

    #[test]
    fn merge_finds_the_single_crossing_pair() {
        let (a, b) = text_pair(b"aab", b"abb");
        let mut stats = RadixStats::default();
        let runs = match_runs_at_length(&a, &b, 2, &mut stats);
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].a_starts, vec![2]);
        assert_eq!(runs[0].b_starts, vec![1]);
    }

    #[test]
    fn merge_on_disjoint_alphabets_is_empty() {
        let (a, b) = text_pair(b"aaaa", b"bbbb");
        for len in 1..=4 {
            let mut stats = RadixStats::default();
            assert!(match_runs_at_length(&a, &b, len, &mut stats).is_empty());
        }
    }

    #[test]
    fn merge_identical_strings_full_length() {
        let (a, b) = text_pair(b"abcabc", b"abcabc");
        let mut stats = RadixStats::default();
        let runs = match_runs_at_length(&a, &b, 6, &mut stats);
        assert_eq!(runs.len(), 1);
        assert_eq!(runs[0].a_starts, vec![1]);
        assert_eq!(runs[0].b_starts, vec![1]);
    }

    #[test]
    fn engine_examples() {
        let (a, b) = text_pair(b"aabb", b"baba");
        assert_eq!(lcaf_radix(&a, &b).length, 4);
        let (a, b) = text_pair(b"ab", b"cd");
        assert_eq!(lcaf_radix(&a, &b).length, 0);
    }

    #[test]
    fn engine_agrees_with_oracle_on_random_inputs() {
        let mut rng = ChaCha12Rng::seed_from_u64(31);
        for _ in 0..120 {
            let (a, b) = random_pair(&mut rng, 64, 6);
            let expected = lcaf_bruteforce(&a, &b);
            let got = lcaf_radix(&a, &b);
            assert_eq!(got.length, expected.length);
            for w in &got.witnesses {
                assert_eq!(
                    ParikhVector::of(&a, w.start_a, w.len).unwrap(),
                    ParikhVector::of(&b, w.start_b, w.len).unwrap()
                );
            }
        }
    }

    #[test]
    fn per_length_allocation_stays_linear() {
        let mut rng = ChaCha12Rng::seed_from_u64(41);
        let n = 512;
        let raw_a: Vec<u8> = (0..n).map(|_| rng.gen_range(0..26)).collect();
        let raw_b: Vec<u8> = (0..n).map(|_| rng.gen_range(0..26)).collect();
        let (a, b, _) = remap_alphabet(&raw_a, &raw_b).unwrap();
        for len in [1, n / 4, n / 2, 3 * n / 4, n] {
            let mut stats = RadixStats::default();
            match_runs_at_length(&a, &b, len, &mut stats);
            assert!(
                stats.alloc.peak_words() <= 8 * (n + len),
                "len {len}: peak {} words",
                stats.alloc.peak_words()
            );
        }
    }

    #[test]
    fn full_sweep_matches_early_exit() {
        let mut rng = ChaCha12Rng::seed_from_u64(43);
        for _ in 0..20 {
            let (a, b) = random_pair(&mut rng, 32, 3);
            let quick = lcaf_radix(&a, &b);
            let full = lcaf_radix_opts(
                &a,
                &b,
                RadixOptions {
                    full_sweep: true,
                    collect_runs: false,
                },
            );
            assert_eq!(quick.length, full.length);
        }
    }
}
