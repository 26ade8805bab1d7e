//! Test corpus: every signing of a few small graphs plus seeded random
//! graphs.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Edge, Sign, SignedGraph};

#[derive(Clone, Debug)]
pub struct CorpusGraph {
    pub name: String,
    pub graph: SignedGraph,
}

/// All `2^|E|` signings of the underlying graph of `base`, in binary order
/// of the edge list (bit `i` set means edge `i` negative).
pub fn all_signings(base: &SignedGraph) -> Vec<SignedGraph> {
    let edges: Vec<Edge> = base.edges().map(|(e, _)| e).collect();
    assert!(edges.len() < 24, "too many signings to enumerate");
    (0u32..1 << edges.len())
        .map(|mask| {
            SignedGraph::new(
                base.vertex_count(),
                edges.iter().enumerate().map(|(i, e)| (e.u(), e.v(), if mask >> i & 1 == 1 { Sign::Negative } else { Sign::Positive })),
            )
            .expect("signing of a valid graph")
        })
        .collect()
}

pub fn k4_plus_pendant() -> SignedGraph {
    let mut edges: Vec<(usize, usize, Sign)> = SignedGraph::complete(4, Sign::Positive).edges().map(|(e, s)| (e.u(), e.v(), s)).collect();
    edges.push((3, 4, Sign::Positive));
    SignedGraph::new(5, edges).expect("valid")
}

/// The 3-cube: vertices are 3-bit words, edges join words differing in one bit.
pub fn cube() -> SignedGraph {
    let edges = (0..8usize).flat_map(|v| (0..3).map(move |b| (v, v ^ (1 << b)))).filter(|(a, b)| a < b);
    SignedGraph::new(8, edges.map(|(a, b)| (a, b, Sign::Positive))).expect("valid")
}

/// Underlying graphs whose every signing is in the exhaustive corpus.
pub fn exhaustive_bases() -> Vec<(String, SignedGraph)> {
    let mut out: Vec<(String, SignedGraph)> = (3..=6).map(|n| (format!("C{n}"), SignedGraph::circle(n, Sign::Positive))).collect();
    out.push(("K4".into(), SignedGraph::complete(4, Sign::Positive)));
    out.push(("K5".into(), SignedGraph::complete(5, Sign::Positive)));
    out.push(("K4+pendant".into(), k4_plus_pendant()));
    out.push(("Q3".into(), cube()));
    out
}

fn random_sign<R: Rng>(rng: &mut R) -> Sign {
    if rng.gen_bool(0.5) {
        Sign::Negative
    } else {
        Sign::Positive
    }
}

/// Connected graph on `n` vertices: a random spanning tree plus every other
/// pair with probability `density`, signs uniform.
pub fn random_connected<R: Rng>(rng: &mut R, n: usize, density: f64) -> SignedGraph {
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.gen_range(0..v);
        edges.push((u, v));
    }
    for a in 0..n {
        for b in a + 1..n {
            if !edges.contains(&(a, b)) && !edges.contains(&(b, a)) && rng.gen_bool(density) {
                edges.push((a, b));
            }
        }
    }
    SignedGraph::new(n, edges.into_iter().map(|(a, b)| (a.min(b), a.max(b), random_sign(rng)))).expect("valid")
}

/// Connected graph on `n` vertices with maximum degree at most `max_degree`
/// (at least 2): a random spanning tree respecting the bound, then random
/// extra edges between unsaturated vertices, each kept with probability
/// `fill`. With `fill = 1` the result is close to regular.
pub fn random_bounded_degree<R: Rng>(rng: &mut R, n: usize, max_degree: usize, fill: f64) -> SignedGraph {
    assert!(max_degree >= 2);
    let mut degree = vec![0; n];
    let mut edges: Vec<(usize, usize)> = Vec::new();
    for v in 1..n {
        let open: Vec<usize> = (0..v).filter(|&u| degree[u] < max_degree).collect();
        let u = *open.choose(rng).expect("a tree always has a leaf");
        degree[u] += 1;
        degree[v] += 1;
        edges.push((u, v));
    }
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    pairs.shuffle(rng);
    for (a, b) in pairs {
        if degree[a] < max_degree && degree[b] < max_degree && !edges.contains(&(a, b)) && !edges.contains(&(b, a)) && rng.gen_bool(fill) {
            degree[a] += 1;
            degree[b] += 1;
            edges.push((a, b));
        }
    }
    SignedGraph::new(n, edges.into_iter().map(|(a, b)| (a.min(b), a.max(b), random_sign(rng)))).expect("valid")
}

/// Seeded random connected signed graphs with `3 ≤ n ≤ max_n`.
pub fn random_corpus(seed: u64, count: usize, max_n: usize) -> Vec<CorpusGraph> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..count)
        .map(|i| {
            let n = rng.gen_range(3..=max_n.max(3));
            let density = rng.gen_range(0.1..0.8);
            CorpusGraph { name: format!("random-{seed}-{i}"), graph: random_connected(&mut rng, n, density) }
        })
        .collect()
}

/// Exhaustive signings of `bases` followed by `random_count` random graphs.
pub fn corpus(bases: &[(String, SignedGraph)], seed: u64, random_count: usize, max_n: usize) -> Vec<CorpusGraph> {
    let mut out = Vec::new();
    for (name, base) in bases {
        for (i, g) in all_signings(base).into_iter().enumerate() {
            out.push(CorpusGraph { name: format!("{name}#{i}"), graph: g });
        }
    }
    out.extend(random_corpus(seed, random_count, max_n));
    out
}

/// The full default corpus.
pub fn standard_corpus(seed: u64, random_count: usize, max_n: usize) -> Vec<CorpusGraph> {
    corpus(&exhaustive_bases(), seed, random_count, max_n)
}

/// A uniformly random signing of `K_n` with exactly `negatives` negative edges.
pub fn random_complete_signing<R: Rng>(rng: &mut R, n: usize, negatives: usize) -> SignedGraph {
    let mut edges: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
    edges.shuffle(rng);
    let signed = edges.into_iter().enumerate().map(|(i, (a, b))| (a, b, if i < negatives { Sign::Negative } else { Sign::Positive }));
    SignedGraph::new(n, signed).expect("valid")
}
