//! Seeded workloads shared by the benchmarks.

use negset::corpus::{random_bounded_degree, random_connected};
use negset::SignedGraph;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Near-quartic connected graph on `n` vertices with random signs.
pub fn quartic(seed: u64, n: usize) -> SignedGraph {
    random_bounded_degree(&mut ChaCha8Rng::seed_from_u64(seed), n, 4, 1.0)
}

/// Connected graph with roughly `n * avg_degree / 2` edges.
pub fn sparse(seed: u64, n: usize, avg_degree: f64) -> SignedGraph {
    let density = (avg_degree / n as f64).min(1.0);
    random_connected(&mut ChaCha8Rng::seed_from_u64(seed), n, density)
}
