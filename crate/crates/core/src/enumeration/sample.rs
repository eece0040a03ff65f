use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Generator behind every seeded operation, recorded in report headers.
pub const RNG_ALGORITHM: &str = "ChaCha8Rng(rand_chacha 0.9, seed_from_u64)";

pub const DEFAULT_MAX_ATTEMPTS: usize = 10_000;

/// Erdős–Rényi `G(n, p)`: each pair independently, visited in graph6 order.
pub fn gnp<R: Rng + ?Sized>(rng: &mut R, n: usize, p: f64) -> Graph {
    let p = p.clamp(0.0, 1.0);
    let mut g = Graph::empty(n);
    for j in 1..n {
        for i in 0..j {
            if rng.random_bool(p) {
                g.set_edge(i, j, true);
            }
        }
    }
    g
}

/// Rejection-samples a connected graph with minimum degree at least `delta`
/// from `G(n, (delta+2)/(n-1))`.
pub fn sample_min_degree_with<R: Rng + ?Sized>(
    rng: &mut R,
    n: usize,
    delta: usize,
    max_attempts: usize,
) -> Result<Graph> {
    if delta < 1 || delta >= n {
        return Err(Error::Infeasible(format!("need 1 <= delta <= n-1, got n = {n}, delta = {delta}")));
    }
    let density = ((delta + 2) as f64 / (n - 1) as f64).min(1.0);
    for _ in 0..max_attempts {
        let g = gnp(rng, n, density);
        if g.min_degree() >= delta && g.is_connected()? {
            return Ok(g);
        }
    }
    Err(Error::RejectionCapExceeded { n, delta, attempts: max_attempts })
}

/// Seeded [`sample_min_degree_with`] using [`RNG_ALGORITHM`] and the default cap.
pub fn sample_min_degree(n: usize, delta: usize, seed: u64) -> Result<Graph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_min_degree_with(&mut rng, n, delta, DEFAULT_MAX_ATTEMPTS)
}
