//! The acyclic algorithm on instances built to reach each part of the case
//! analysis.

use std::collections::BTreeSet;

use negset::acyclic::{acyclic_negation, AcyclicNegationResult, AcyclicOutcome};
use negset::balance::{is_balanced, switching_equivalent};
use negset::corpus::random_bounded_degree;
use negset::negation::count_fully_negative_circles;
use negset::{Sign, SignedGraph};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn check(g: &SignedGraph) -> Option<AcyclicNegationResult> {
    match acyclic_negation(g).unwrap_or_else(|e| panic!("{e} on\n{}", negset::format::to_sg(g))) {
        AcyclicOutcome::Acyclic(r) => {
            assert_eq!(g.switch(&r.switching).unwrap().negative_edges(), r.negation_set);
            assert!(r.negation_set.is_forest(g));
            assert!(is_balanced(&g.negate_edges(&r.negation_set).unwrap()));
            assert_eq!(count_fully_negative_circles(&g.switch(&r.switching).unwrap(), 1), 0);
            for t in &r.trace {
                if (1..15).contains(&t.step) {
                    assert!(t.circles_after < t.circles_before, "{t:?}");
                }
            }
            Some(r)
        }
        AcyclicOutcome::MinusK5(k5) => {
            let block = g.induced_subgraph(&k5.block).graph;
            assert!(switching_equivalent(&block, &SignedGraph::complete(5, Sign::Negative)));
            None
        }
    }
}

/// Fill every vertex up to degree 4 with random positive edges.
fn complete_to_quartic(rng: &mut ChaCha8Rng, n: usize, edges: Vec<(usize, usize, Sign)>) -> Option<SignedGraph> {
    let mut deg = vec![0usize; n];
    let mut present = BTreeSet::new();
    for &(a, b, _) in &edges {
        deg[a] += 1;
        deg[b] += 1;
        present.insert((a.min(b), a.max(b)));
    }
    if deg.iter().any(|&d| d > 4) {
        return None;
    }
    let mut stubs: Vec<usize> = (0..n).flat_map(|v| std::iter::repeat_n(v, 4 - deg[v])).collect();
    if stubs.len() % 2 == 1 {
        return None;
    }
    for _ in 0..200 {
        stubs.shuffle(rng);
        let extra: Vec<(usize, usize)> = stubs.chunks(2).map(|p| (p[0].min(p[1]), p[0].max(p[1]))).collect();
        let distinct: BTreeSet<_> = extra.iter().collect();
        if extra.iter().all(|&(a, b)| a != b && !present.contains(&(a, b))) && distinct.len() == extra.len() {
            let all = edges.iter().map(|&(a, b, s)| (a.min(b), a.max(b), s)).chain(extra.into_iter().map(|(a, b)| (a, b, Sign::Positive)));
            return SignedGraph::new(n, all).ok();
        }
    }
    None
}

/// A negative `k`-circle whose vertices get positive neighbor pairs joined by
/// negative paths of `len` edges; the vertices in `shared` use one pair.
fn circle_with_joined_neighbors(rng: &mut ChaCha8Rng, k: usize, len: usize, shared: &[usize]) -> Option<SignedGraph> {
    let mut edges: Vec<(usize, usize, Sign)> = (0..k).map(|i| (i, (i + 1) % k, Sign::Negative)).collect();
    let mut groups: Vec<Vec<usize>> = Vec::new();
    if !shared.is_empty() {
        groups.push(shared.to_vec());
    }
    groups.extend((0..k).filter(|v| !shared.contains(v)).map(|v| vec![v]));
    let mut next = k;
    for group in groups {
        let path: Vec<usize> = (next..=next + len).collect();
        next += len + 1;
        for w in path.windows(2) {
            edges.push((w[0], w[1], Sign::Negative));
        }
        for v in group {
            edges.push((v, path[0], Sign::Positive));
            edges.push((v, path[len], Sign::Positive));
        }
    }
    complete_to_quartic(rng, next, edges)
}

fn steps(r: &AcyclicNegationResult) -> BTreeSet<u8> {
    r.trace.iter().map(|t| t.step).collect()
}

#[test]
fn circles_whose_neighbors_share_nothing_need_the_path_walk() {
    let mut seen = BTreeSet::new();
    for seed in 0..300 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = 3 + seed as usize % 4;
        let len = 1 + seed as usize / 4 % 4;
        if let Some(g) = circle_with_joined_neighbors(&mut rng, k, len, &[]) {
            if let Some(r) = check(&g) {
                seen.extend(steps(&r));
            }
        }
    }
    assert!(seen.contains(&14), "{seen:?}");
    assert!(!seen.contains(&0));
}

#[test]
fn circle_vertices_sharing_both_positive_neighbors() {
    let mut seen = BTreeSet::new();
    for seed in 0..600 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let k = 3 + seed as usize % 4;
        let gap = 1 + (seed as usize / 4) % (k - 1);
        let len = 1 + seed as usize / 20 % 3;
        if let Some(g) = circle_with_joined_neighbors(&mut rng, k, len, &[0, gap]) {
            if let Some(r) = check(&g) {
                seen.extend(steps(&r));
            }
        }
    }
    assert!(seen.contains(&9) && seen.contains(&13), "{seen:?}");
}

/// Random vertex-disjoint negative circles and paths on a near-quartic graph.
fn circles_and_paths(rng: &mut ChaCha8Rng, n: usize) -> SignedGraph {
    let g = random_bounded_degree(rng, n, 4, 1.0);
    let mut used = vec![false; n];
    let mut negative = BTreeSet::new();
    for _ in 0..4 * n {
        let s = rng.gen_range(0..n);
        if used[s] {
            continue;
        }
        let mut path = vec![s];
        loop {
            let at = *path.last().unwrap();
            let back = path.len().checked_sub(2).map(|i| path[i]);
            let options: Vec<usize> = g.neighbors(at).map(|(w, _)| w).filter(|&w| !used[w] && Some(w) != back).collect();
            let Some(&w) = options.choose(rng) else { break };
            if let Some(i) = path.iter().position(|&x| x == w) {
                let circle = &path[i..];
                for (j, &a) in circle.iter().enumerate() {
                    let b = circle[(j + 1) % circle.len()];
                    negative.insert((a.min(b), a.max(b)));
                }
                circle.iter().for_each(|&v| used[v] = true);
                break;
            }
            path.push(w);
        }
    }
    for _ in 0..4 * n {
        let s = rng.gen_range(0..n);
        if used[s] {
            continue;
        }
        used[s] = true;
        let mut at = s;
        for _ in 0..rng.gen_range(1..8) {
            let options: Vec<usize> = g.neighbors(at).map(|(w, _)| w).filter(|&w| !used[w]).collect();
            let Some(&w) = options.choose(rng) else { break };
            negative.insert((at.min(w), at.max(w)));
            used[w] = true;
            at = w;
        }
    }
    let signed = g.edges().map(|(e, _)| (e.u(), e.v(), if negative.contains(&(e.u(), e.v())) { Sign::Negative } else { Sign::Positive }));
    SignedGraph::new(n, signed).unwrap()
}

#[test]
fn many_disjoint_negative_circles() {
    let mut seen = BTreeSet::new();
    for seed in 0..500 {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = circles_and_paths(&mut rng, 5 + seed as usize % 40);
        if let Some(r) = check(&g) {
            seen.extend(steps(&r));
        }
    }
    assert!(seen.contains(&4) && seen.contains(&5) && seen.contains(&7), "{seen:?}");
}

#[test]
fn glued_blocks_keep_earlier_blocks_acyclic() {
    // negative octahedron on 0..6 (opposite pairs 0–5, 1–3, 2–4) with 0–1 and
    // 0–3 replaced by 1–3, so vertex 0 has degree 2; two copies glued at 0
    let octahedron = |map: &dyn Fn(usize) -> usize| -> Vec<(usize, usize, Sign)> {
        let mut edges = Vec::new();
        for a in 0..6usize {
            for b in a + 1..6 {
                let opposite = matches!((a, b), (0, 5) | (1, 3) | (2, 4));
                let removed = matches!((a, b), (0, 1) | (0, 3));
                if (!opposite && !removed) || (a, b) == (1, 3) {
                    let (x, y) = (map(a), map(b));
                    edges.push((x.min(y), x.max(y), Sign::Negative));
                }
            }
        }
        edges
    };
    let mut edges = octahedron(&|v| v);
    edges.extend(octahedron(&|v| if v == 0 { 0 } else { v + 5 }));
    let g = SignedGraph::new(11, edges).unwrap();
    assert!((0..11).all(|v| g.degree(v) == 4));
    assert_eq!(g.blocks().len(), 2);
    check(&g).expect("no K5 block");
}

#[test]
fn random_bounded_degree_graphs() {
    for seed in 0..300 {
        let mut rng = ChaCha8Rng::seed_from_u64(1_000 + seed);
        let n = rng.gen_range(2..=30);
        let fill = rng.gen_range(0.3..=1.0);
        let g = random_bounded_degree(&mut rng, n, 4, fill);
        check(&g);
    }
}
