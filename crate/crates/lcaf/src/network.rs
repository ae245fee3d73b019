//! Data-oblivious comparator networks: generation and execution.
//!
//! A comparator network is a fixed sequence of index pairs. Executing it
//! compares the two resident elements at each pair and swaps them iff the
//! lower-indexed one is greater, so the sequence of touched indices depends
//! only on the generator and the size, never on the key values.

use std::cmp::Ordering;
use std::fmt::Write as _;

use crate::error::Error;

/// Fixed compare-exchange schedule on `size` lanes. Indices are 0-based
/// internally; every pair `(p, q)` satisfies `p < q < size`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ComparatorNetwork {
    size: usize,
    comparators: Vec<(u32, u32)>,
}

impl ComparatorNetwork {
    pub fn size(&self) -> usize {
        self.size
    }

    pub fn comparator_count(&self) -> usize {
        self.comparators.len()
    }

    pub fn comparators(&self) -> &[(u32, u32)] {
        &self.comparators
    }

    /// Debug form: one `p q` pair per line, in execution order.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for &(p, q) in &self.comparators {
            writeln!(out, "{p} {q}").expect("string write");
        }
        out
    }
}

/// Generator selector.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum NetworkKind {
    Batcher,
    Pratt,
}

impl NetworkKind {
    pub fn build(self, size: usize) -> ComparatorNetwork {
        match self {
            NetworkKind::Batcher => batcher_network(size),
            NetworkKind::Pratt => pratt_network(size),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NetworkKind::Batcher => "batcher",
            NetworkKind::Pratt => "pratt",
        }
    }
}

impl std::str::FromStr for NetworkKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "batcher" => Ok(NetworkKind::Batcher),
            "pratt" => Ok(NetworkKind::Pratt),
            other => Err(Error::InvalidConfig(format!("unknown network: {other}"))),
        }
    }
}

fn odd_even_merge(lo: usize, n: usize, r: usize, emit: &mut impl FnMut(usize, usize)) {
    let step = r * 2;
    if step < n {
        odd_even_merge(lo, n, step, emit);
        odd_even_merge(lo + r, n, step, emit);
        let mut i = lo + r;
        while i + r < lo + n {
            emit(i, i + r);
            i += step;
        }
    } else {
        emit(lo, lo + r);
    }
}

fn odd_even_sort(lo: usize, n: usize, emit: &mut impl FnMut(usize, usize)) {
    if n > 1 {
        let half = n / 2;
        odd_even_sort(lo, half, emit);
        odd_even_sort(lo + half, half, emit);
        odd_even_merge(lo, n, 1, emit);
    }
}

/// Batcher odd-even mergesort for any `size`: the classical power-of-two
/// construction on `size.next_power_of_two()` lanes, with comparators
/// touching out-of-range lanes dropped. A missing lane behaves as a
/// plus-infinity key that such comparators would never move, so the pruned
/// network sorts all inputs of length `size`.
pub fn batcher_network(size: usize) -> ComparatorNetwork {
    let mut comparators = Vec::new();
    if size > 1 {
        let padded = size.next_power_of_two();
        odd_even_sort(0, padded, &mut |p, q| {
            if q < size {
                comparators.push((p as u32, q as u32));
            }
        });
    }
    ComparatorNetwork { size, comparators }
}

/// All gap values `2^p * 3^q < size`, descending.
fn pratt_gaps(size: usize) -> Vec<usize> {
    let mut gaps = Vec::new();
    let mut pow3 = 1usize;
    while pow3 < size {
        let mut g = pow3;
        while g < size {
            gaps.push(g);
            g *= 2;
        }
        pow3 *= 3;
    }
    gaps.sort_unstable_by(|a, b| b.cmp(a));
    gaps
}

/// Pratt-gap Shellsort as a network: for each gap `g` (all `2^p * 3^q < size`,
/// descending) one full pass of comparators `(i, i+g)`. When gap `g` is
/// reached every chain is already 2g- and 3g-sorted, which confines the
/// remaining inversions to disjoint adjacent chain pairs, so the single pass
/// leaves each g-chain sorted.
pub fn pratt_network(size: usize) -> ComparatorNetwork {
    let mut comparators = Vec::new();
    for g in pratt_gaps(size) {
        for i in 0..size - g {
            comparators.push((i as u32, (i + g) as u32));
        }
    }
    ComparatorNetwork { size, comparators }
}

/// Executes `network` over `keys`: at each comparator the two resident
/// elements are compared, the event is reported to `on_compare` as
/// `(left_index, right_index, left, right, ordering)`, and the elements are
/// swapped iff the ordering is `Greater`.
pub fn apply_network<T, C, S>(
    network: &ComparatorNetwork,
    keys: &mut [T],
    mut compare: C,
    mut on_compare: S,
) where
    C: FnMut(&T, &T) -> Ordering,
    S: FnMut(usize, usize, &T, &T, Ordering),
{
    assert_eq!(
        keys.len(),
        network.size,
        "key count must match network size"
    );
    for &(p, q) in &network.comparators {
        let (p, q) = (p as usize, q as usize);
        let ord = compare(&keys[p], &keys[q]);
        on_compare(p, q, &keys[p], &keys[q], ord);
        if ord == Ordering::Greater {
            keys.swap(p, q);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha12Rng;

    /// Zero-one principle: a network sorts all inputs iff it sorts all 2^m
    /// binary sequences.
    fn sorts_all_binary(net: &ComparatorNetwork) -> bool {
        let m = net.size();
        assert!(m <= 20, "exhaustive check only feasible for small m");
        for bits in 0..(1u32 << m) {
            let mut v: Vec<u32> = (0..m).map(|i| (bits >> i) & 1).collect();
            apply_network(net, &mut v, |a, b| a.cmp(b), |_, _, _, _, _| {});
            if v.windows(2).any(|w| w[0] > w[1]) {
                return false;
            }
        }
        true
    }

    #[test]
    fn batcher_smallest_sizes() {
        assert_eq!(batcher_network(1).comparators(), &[]);
        assert_eq!(batcher_network(2).comparators(), &[(0, 1)]);
    }

    #[test]
    fn batcher_size_four_is_the_five_comparator_network() {
        let net = batcher_network(4);
        assert_eq!(net.comparator_count(), 5);
        assert!(sorts_all_binary(&net));
    }

    #[test]
    fn pratt_smallest_sizes() {
        assert_eq!(pratt_network(1).comparators(), &[]);
        assert_eq!(pratt_network(2).comparators(), &[(0, 1)]);
    }

    #[test]
    fn pratt_gap_sequence_for_size_twelve() {
        assert_eq!(pratt_gaps(12), vec![9, 8, 6, 4, 3, 2, 1]);
    }

    #[test]
    fn pratt_size_eight_sorts_all_binary_inputs() {
        assert!(sorts_all_binary(&pratt_network(8)));
    }

    #[test]
    fn zero_one_principle_both_generators_up_to_twelve() {
        for m in 1..=12 {
            assert!(sorts_all_binary(&batcher_network(m)), "batcher m={m}");
            assert!(sorts_all_binary(&pratt_network(m)), "pratt m={m}");
        }
    }

    #[test]
    fn comparator_indices_in_range_and_ordered() {
        for m in 1..200 {
            for net in [batcher_network(m), pratt_network(m)] {
                for &(p, q) in net.comparators() {
                    assert!(p < q && (q as usize) < m);
                }
            }
        }
    }

    #[test]
    fn apply_on_sorted_input_swaps_nothing() {
        let net = batcher_network(8);
        let mut keys: Vec<u32> = (0..8).collect();
        let before = keys.clone();
        let mut swaps = 0;
        apply_network(
            &net,
            &mut keys,
            |a, b| a.cmp(b),
            |_, _, _, _, ord| {
                if ord == Ordering::Greater {
                    swaps += 1;
                }
            },
        );
        assert_eq!(keys, before);
        assert_eq!(swaps, 0);
    }

    #[test]
    fn apply_sorts_reverse_input() {
        let net = batcher_network(4);
        let mut keys = vec![3u32, 2, 1, 0];
        apply_network(&net, &mut keys, |a, b| a.cmp(b), |_, _, _, _, _| {});
        assert_eq!(keys, vec![0, 1, 2, 3]);
    }

    #[test]
    fn trace_is_independent_of_key_values() {
        let mut rng = ChaCha12Rng::seed_from_u64(5);
        for kind in [NetworkKind::Batcher, NetworkKind::Pratt] {
            let net = kind.build(16);
            let mut reference: Option<Vec<(usize, usize)>> = None;
            for _ in 0..10 {
                let mut keys: Vec<u32> = (0..16).map(|_| rng.gen_range(0..100)).collect();
                let mut trace = Vec::new();
                apply_network(
                    &net,
                    &mut keys,
                    |a, b| a.cmp(b),
                    |p, q, _, _, _| trace.push((p, q)),
                );
                match &reference {
                    None => reference = Some(trace),
                    Some(r) => assert_eq!(&trace, r),
                }
            }
        }
    }
}
