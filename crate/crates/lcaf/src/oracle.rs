//! Brute-force reference engine, used as ground truth by the other engines'
//! tests. For each length, descending, it groups the A-factors by their exact
//! count sequence and probes the map with every B-factor.

use std::collections::HashMap;

use crate::result::{counter, Counters, LcafResult, Witness};
use crate::text::RemappedText;

/// Exact LCAF by descending-length exhaustive grouping. Returns on the first
/// (largest) length with a hit; length 0 when the strings share no symbol
/// counts at any length.
pub fn lcaf_bruteforce(a: &RemappedText, b: &RemappedText) -> LcafResult {
    lcaf_bruteforce_opts(a, b, false)
}

/// `full_sweep` keeps iterating after the first hit so the counters cover
/// every length; the reported maximum is unchanged.
pub fn lcaf_bruteforce_opts(a: &RemappedText, b: &RemappedText, full_sweep: bool) -> LcafResult {
    let sigma = a.sigma() as usize;
    let max_len = a.len().min(b.len());
    let mut probes: u64 = 0;
    let mut lengths: u64 = 0;
    let mut found: Option<(usize, Vec<Witness>)> = None;

    for len in (1..=max_len).rev() {
        lengths += 1;
        // group A-factors by their serialized Parikh vector
        let mut groups: HashMap<Vec<u32>, usize> = HashMap::new();
        let mut window = vec![0u32; sigma];
        for (i, &sym) in a.symbols().iter().enumerate() {
            window[(sym - 1) as usize] += 1;
            if i >= len {
                window[(a.symbols()[i - len] - 1) as usize] -= 1;
            }
            if i + 1 >= len {
                let start = i + 2 - len;
                groups.entry(window.clone()).or_insert(start);
            }
        }
        // probe with B-factors
        let mut witnesses = Vec::new();
        window.fill(0);
        for (i, &sym) in b.symbols().iter().enumerate() {
            window[(sym - 1) as usize] += 1;
            if i >= len {
                window[(b.symbols()[i - len] - 1) as usize] -= 1;
            }
            if i + 1 >= len {
                probes += 1;
                if let Some(&start_a) = groups.get(window.as_slice()) {
                    witnesses.push(Witness {
                        start_a,
                        start_b: i + 2 - len,
                        len,
                    });
                }
            }
        }
        if !witnesses.is_empty() && found.is_none() {
            found = Some((len, witnesses));
            if !full_sweep {
                break;
            }
        }
    }

    let mut counters = Counters::new();
    counters.insert(counter::COMPARISONS.into(), probes);
    counters.insert(counter::LENGTHS_PROCESSED.into(), lengths);
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
