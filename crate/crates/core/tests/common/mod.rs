//! Shared helpers for the integration suites: seeded samplers so that
//! every randomized sweep is reproducible, plus the fixed instance suite
//! used by several checks.

#![allow(dead_code)]

use hypergraphic::Hypergraph;
use hypergraphic::families;
use hypergraphic::verify::all_hypergraphs_on;
use rand::{RngExt, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed for the mixed exhaustive-plus-random rank suite.
pub const RANK_SUITE_SEED: u64 = 9301;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A uniformly random hypergraph on `[n]`: every subset with at least two
/// elements is an edge independently with probability 1/2.
pub fn random_hypergraph(n: usize, rng: &mut ChaCha8Rng) -> Hypergraph {
    let mut edges: Vec<Vec<usize>> = Vec::new();
    for mask in 1u32..(1 << n) {
        if mask.count_ones() >= 2 && rng.random_bool(0.5) {
            edges.push((1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect());
        }
    }
    Hypergraph::new(n, &edges, true).expect("sampled edges are valid")
}

/// A random simplicial complex on at most five vertices, built as the
/// downward closure of a few random generating faces.
pub fn random_complex(rng: &mut ChaCha8Rng) -> Hypergraph {
    let n = rng.random_range(1..=5);
    let facet_count = rng.random_range(1..=4);
    let facets: Vec<Vec<usize>> = (0..facet_count)
        .map(|_| {
            let mask = rng.random_range(1u32..(1 << n));
            (1..=n).filter(|&v| mask & (1 << (v - 1)) != 0).collect()
        })
        .collect();
    families::simplicial_complex(n, &facets).expect("sampled facets are valid")
}

/// A uniformly random permutation of `1..=n` in one-line notation.
pub fn random_permutation(n: usize, rng: &mut ChaCha8Rng) -> Vec<usize> {
    let mut perm: Vec<usize> = (1..=n).collect();
    for i in (1..n).rev() {
        perm.swap(i, rng.random_range(0..=i));
    }
    perm
}

/// The instance suite for the rank-equality sweeps: every labeled
/// hypergraph on four vertices, then fifty seeded random ones on five.
pub fn rank_suite() -> Vec<Hypergraph> {
    let mut suite = all_hypergraphs_on(4).expect("n = 4 is within the exhaustive guard");
    let mut rng = rng(RANK_SUITE_SEED);
    for _ in 0..50 {
        suite.push(random_hypergraph(5, &mut rng));
    }
    suite
}
