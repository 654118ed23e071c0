#![allow(dead_code)]

use pmc_core::families::{gen_family, Family};
use pmc_core::Graph;

/// The seeded random corpus: 200 graphs with `n` in 6..=9 and edge
/// probability 0.2, 0.4 or 0.6.
pub fn random_corpus() -> Vec<(Family, Graph)> {
    (0..200u64)
        .map(|seed| {
            let n = 6 + (seed % 4) as usize;
            let p = [0.2, 0.4, 0.6][(seed / 4 % 3) as usize];
            let f = Family::Random { n, p, seed };
            (f, gen_family(&f).unwrap())
        })
        .collect()
}

/// Number of entries that repeat an earlier entry.
pub fn repeats<T: Ord + Clone>(items: &[T]) -> usize {
    let mut v = items.to_vec();
    v.sort();
    v.dedup();
    items.len() - v.len()
}
