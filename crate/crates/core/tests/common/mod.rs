#![allow(dead_code)]

use compact_span::generators::{generate, Family, GeneratorSpec};
use compact_span::Graph;
use proptest::prelude::*;

/// Connected `G(n, rho)` samples.
pub fn connected_er(n: std::ops::RangeInclusive<usize>, rho: std::ops::Range<f64>) -> impl Strategy<Value = Graph> {
    (n, rho, any::<u64>()).prop_map(|(n, rho, seed)| {
        generate(&GeneratorSpec::new(Family::Er { rho }, n, seed)).expect("connected sample")
    })
}

/// Connected BA samples with attachment count 1 to 3.
pub fn connected_ba(n: std::ops::RangeInclusive<usize>) -> impl Strategy<Value = Graph> {
    (n, 1usize..=3, any::<u64>()).prop_filter_map("n must exceed attach", |(n, a, seed)| {
        (n > a).then(|| generate(&GeneratorSpec::new(Family::Ba { attach: a }, n, seed)).unwrap())
    })
}

pub fn er(n: usize, rho: f64, seed: u64) -> Graph {
    generate(&GeneratorSpec::new(Family::Er { rho }, n, seed)).unwrap()
}
