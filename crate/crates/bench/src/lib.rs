//! Shared inputs for the benchmarks.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use randic_core::enumeration::{gnp, sample_min_degree};
use randic_core::Graph;

/// Seeded connected graphs of order `n` with minimum degree at least `delta`.
pub fn sample_graphs(n: usize, delta: usize, count: u64) -> Vec<Graph> {
    (0..count).map(|seed| sample_min_degree(n, delta, seed).expect("feasible sample")).collect()
}

/// Seeded `G(n, p)` graphs, connected or not.
pub fn random_graphs(n: usize, p: f64, count: usize, seed: u64) -> Vec<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count).map(|_| gnp(&mut rng, n, p)).collect()
}
