//! Deterministic benchmark matrix over seeded random workloads.
//!
//! Every (n, sigma, repeat) cell gets its own string pair, derived from the
//! master seed alone, and all selected engines run on that same pair. Engines
//! run in full-sweep mode here so the counters reflect the cost of covering
//! the whole length range rather than where the maximum happens to sit.

use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha12Rng;

use crate::batched::{default_k, lcaf_batched, BatchConfig};
use crate::error::Error;
use crate::network::NetworkKind;
use crate::oracle::lcaf_bruteforce_opts;
use crate::radix::{lcaf_radix_opts, RadixOptions};
use crate::result::counter;
use crate::text::remap_alphabet;
use crate::Algorithm;

#[derive(Clone, Debug)]
pub struct BenchConfig {
    pub sizes: Vec<usize>,
    pub sigmas: Vec<u32>,
    pub algos: Vec<Algorithm>,
    pub repeats: usize,
    pub seed: u64,
    /// Batch size override for the batched engine; default ceil(sqrt(sigma)).
    pub k: Option<usize>,
    pub network: NetworkKind,
}

#[derive(Clone, Debug, PartialEq)]
pub struct BenchRow {
    pub algo: Algorithm,
    pub n: usize,
    pub sigma: u32,
    pub k: usize,
    pub comparisons: u64,
    pub comparator_invocations: u64,
    pub rebuilds: u64,
    pub elapsed_ms: f64,
    pub lcaf_length: usize,
}

pub const CSV_HEADER: &str =
    "algo,n,sigma,k,comparisons,comparator_invocations,rebuilds,elapsed_ms,lcaf_length";

fn splitmix64(state: &mut u64) -> u64 {
    *state = state.wrapping_add(0x9e37_79b9_7f4a_7c15);
    let mut z = *state;
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

fn workload_seed(seed: u64, n: usize, sigma: u32, rep: usize) -> u64 {
    let mut state = seed;
    let mut out = splitmix64(&mut state);
    state ^= n as u64;
    out ^= splitmix64(&mut state);
    state ^= (sigma as u64) << 32;
    out ^= splitmix64(&mut state);
    state ^= (rep as u64) << 16;
    out ^ splitmix64(&mut state)
}

/// The string pair for one workload cell: two uniform random byte strings of
/// length `n` over byte values `0..sigma`.
pub fn generate_pair(seed: u64, n: usize, sigma: u32, rep: usize) -> (Vec<u8>, Vec<u8>) {
    let mut rng = ChaCha12Rng::seed_from_u64(workload_seed(seed, n, sigma, rep));
    let mut draw = || (0..n).map(|_| rng.gen_range(0..sigma) as u8).collect();
    let a: Vec<u8> = draw();
    let b: Vec<u8> = draw();
    (a, b)
}

pub fn run_bench(config: &BenchConfig) -> Result<Vec<BenchRow>, Error> {
    if config.sizes.is_empty() {
        return Err(Error::InvalidConfig("size list is empty".into()));
    }
    if config.sigmas.is_empty() {
        return Err(Error::InvalidConfig("sigma list is empty".into()));
    }
    if config.algos.is_empty() {
        return Err(Error::InvalidConfig("algorithm list is empty".into()));
    }
    if config.repeats == 0 {
        return Err(Error::InvalidConfig("repeats must be at least 1".into()));
    }
    if config.sizes.contains(&0) {
        return Err(Error::InvalidConfig("sizes must be at least 1".into()));
    }
    if config.sigmas.iter().any(|&s| s == 0 || s > 256) {
        return Err(Error::InvalidConfig("sigmas must be in 1..=256".into()));
    }
    if config.k == Some(0) {
        return Err(Error::InvalidConfig("k must be at least 1".into()));
    }

    let mut rows = Vec::new();
    for &algo in &config.algos {
        for &n in &config.sizes {
            for &sigma in &config.sigmas {
                for rep in 0..config.repeats {
                    let (raw_a, raw_b) = generate_pair(config.seed, n, sigma, rep);
                    let (a, b, alphabet) =
                        remap_alphabet(&raw_a, &raw_b).expect("generated inputs are non-empty");
                    let started = Instant::now();
                    let (result, k_used) = match algo {
                        Algorithm::Oracle => (lcaf_bruteforce_opts(&a, &b, true), 0),
                        Algorithm::Radix => (
                            lcaf_radix_opts(
                                &a,
                                &b,
                                RadixOptions {
                                    full_sweep: true,
                                    collect_runs: false,
                                },
                            ),
                            0,
                        ),
                        Algorithm::Batched => {
                            let k = config.k.unwrap_or_else(|| default_k(alphabet.size()));
                            let cfg = BatchConfig {
                                k,
                                network: config.network,
                                shadow_check: false,
                                full_sweep: true,
                            };
                            (lcaf_batched(&a, &b, &cfg), k)
                        }
                    };
                    let elapsed_ms = started.elapsed().as_secs_f64() * 1e3;
                    let get = |key: &str| result.counters.get(key).copied().unwrap_or(0);
                    rows.push(BenchRow {
                        algo,
                        n,
                        sigma,
                        k: k_used,
                        comparisons: get(counter::COMPARISONS),
                        comparator_invocations: get(counter::COMPARATOR_INVOCATIONS),
                        rebuilds: get(counter::REBUILDS),
                        elapsed_ms,
                        lcaf_length: result.length,
                    });
                }
            }
        }
    }
    // deterministic emission order; equal keys keep repeat order
    rows.sort_by(|x, y| {
        (x.algo.name(), x.n, x.sigma, x.k).cmp(&(y.algo.name(), y.n, y.sigma, y.k))
    });
    Ok(rows)
}

pub fn rows_to_csv(rows: &[BenchRow]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{},{},{:.3},{}\n",
            r.algo,
            r.n,
            r.sigma,
            r.k,
            r.comparisons,
            r.comparator_invocations,
            r.rebuilds,
            r.elapsed_ms,
            r.lcaf_length
        ));
    }
    out
}
