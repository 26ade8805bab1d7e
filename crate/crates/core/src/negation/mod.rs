//! Bipartite and acyclic negation sets.
//!
//! Two disjoint negation sets exist only when both are bipartite, and a
//! bipartite negation set always has a disjoint partner. The
//! [`acyclic`] submodule builds a forest negation set for graphs whose
//! 4-core is subquartic.

pub mod acyclic;

use std::collections::VecDeque;

use crate::balance::{is_antibalanced, switching_to};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Sign, SignedGraph, VertexSet};
use crate::structure::two_coloring;

pub use acyclic::{acyclic_negation, AcyclicNegationResult, AcyclicOutcome, MinusK5Exception};

/// A negation set disjoint from `E⁻(g)`, which must be bipartite.
///
/// The stable bipartition of the negative edges is extended to all vertices
/// (vertices without negative edges join `X`, the class holding each
/// component's smallest vertex) and `g` is switched by `X`.
pub fn disjoint_partner(g: &SignedGraph) -> Result<EdgeSet> {
    let negative = g.negative_edges();
    let coloring = two_coloring(g.vertex_count(), negative.iter())
        .ok_or_else(|| Error::Precondition("negative edge set is not bipartite; no disjoint negation set exists".into()))?;
    let x: Vec<bool> = coloring.iter().map(|&c| !c).collect();
    let partner = g.switch_by_mask(&x).negative_edges();
    debug_assert!(partner.is_disjoint(&negative));
    Ok(partner)
}

/// For an antibalanced graph with a proper coloring in `1..=4` (any properly
/// 4-colored antibalanced graph, planar or not), a switching whose negative
/// edges lie in the cut between color classes `{1, 3}` and `{2, 4}`.
pub fn bipartite_negation_for_antibalanced_planar(g: &SignedGraph, coloring: &[u8]) -> Result<VertexSet> {
    if coloring.len() != g.vertex_count() {
        return Err(Error::Precondition(format!(
            "coloring has {} entries for {} vertices",
            coloring.len(),
            g.vertex_count()
        )));
    }
    if let Some(v) = (0..coloring.len()).find(|&v| !(1..=4).contains(&coloring[v])) {
        return Err(Error::Precondition(format!("vertex {v} has color {} outside 1..=4", coloring[v])));
    }
    if let Some((e, _)) = g.edges().find(|(e, _)| coloring[e.u()] == coloring[e.v()]) {
        return Err(Error::Precondition(format!("coloring is not proper at edge {e}")));
    }
    if !is_antibalanced(g) {
        return Err(Error::Precondition("graph is not antibalanced".into()));
    }

    let to_all_negative = switching_to(g, &g.all_edges())?.expect("antibalanced graph switches to all-negative");
    let upper = VertexSet::new(g, (0..g.vertex_count()).filter(|&v| coloring[v] >= 3))?;
    let composite = to_all_negative.symmetric_difference(&upper);

    let result = g.switch(&composite)?.negative_edges();
    let odd_side: Vec<bool> = coloring.iter().map(|&c| c % 2 == 1).collect();
    if !result.iter().all(|e| odd_side[e.u()] != odd_side[e.v()]) || !result.is_bipartite(g) {
        return Err(Error::InvariantViolated("negative edges escape the {1,3}|{2,4} cut".into()));
    }
    Ok(composite)
}

/// True iff `u` and `v` are joined by a path of negative edges.
pub fn fully_negative_path_exists(g: &SignedGraph, u: usize, v: usize) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok(negative_path(g, u, v).is_some())
}

/// Shortest path of negative edges from `u` to `v` (inclusive), exploring
/// neighbors in increasing order.
pub(crate) fn negative_path(g: &SignedGraph, u: usize, v: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut prev = vec![usize::MAX; n];
    prev[u] = u;
    let mut queue = VecDeque::from([u]);
    while let Some(a) = queue.pop_front() {
        if a == v {
            let mut path = vec![v];
            let mut at = v;
            while at != u {
                at = prev[at];
                path.push(at);
            }
            path.reverse();
            return Some(path);
        }
        for (b, s) in g.neighbors(a) {
            if s.is_negative() && prev[b] == usize::MAX {
                prev[b] = a;
                queue.push_back(b);
            }
        }
    }
    None
}

/// A circle of negative edges, if any. The circle passes through the
/// smallest vertex lying on any fully negative circle, is a shortest such
/// circle through it (ties: smallest sorted vertex tuple), and is listed
/// starting at that vertex towards its smaller circle neighbor.
pub fn find_fully_negative_circle(g: &SignedGraph) -> Option<Vec<usize>> {
    let neg = g.negative_subgraph();
    let start = neg.blocks().into_iter().filter(|b| b.len() >= 3).map(|b| b[0]).min()?;
    shortest_circle_through(&neg, start)
}

/// Shortest circle through `v` in `g` (signs ignored).
fn shortest_circle_through(g: &SignedGraph, v: usize) -> Option<Vec<usize>> {
    let n = g.vertex_count();
    let mut dist = vec![usize::MAX; n];
    let mut parent = vec![usize::MAX; n];
    let mut branch = vec![usize::MAX; n];
    dist[v] = 0;
    let mut queue = VecDeque::new();
    for (w, _) in g.neighbors(v) {
        dist[w] = 1;
        parent[w] = v;
        branch[w] = w;
        queue.push_back(w);
    }
    while let Some(a) = queue.pop_front() {
        for (b, _) in g.neighbors(a) {
            if dist[b] == usize::MAX {
                dist[b] = dist[a] + 1;
                parent[b] = a;
                branch[b] = branch[a];
                queue.push_back(b);
            }
        }
    }

    let path_to = |mut x: usize| {
        let mut p = Vec::new();
        while x != v {
            p.push(x);
            x = parent[x];
        }
        p.reverse();
        p
    };

    let mut best: Option<(usize, Vec<usize>, Vec<usize>)> = None;
    for (e, _) in g.edges() {
        let (a, b) = (e.u(), e.v());
        if a == v || b == v || dist[a] == usize::MAX || dist[b] == usize::MAX || branch[a] == branch[b] {
            continue;
        }
        let mut circle = vec![v];
        circle.extend(path_to(a));
        circle.extend(path_to(b).into_iter().rev());
        let mut key = circle.clone();
        key.sort_unstable();
        let len = circle.len();
        if best.as_ref().is_none_or(|(l, k, _)| (len, &key) < (*l, k)) {
            best = Some((len, key, circle));
        }
    }
    best.map(|(_, _, mut circle)| {
        if circle.len() > 2 && circle[circle.len() - 1] < circle[1] {
            circle[1..].reverse();
        }
        circle
    })
}

/// Fully negative circles of `g`, counted exactly by enumeration. Stops
/// counting at `cap`.
pub fn count_fully_negative_circles(g: &SignedGraph, cap: usize) -> usize {
    let n = g.vertex_count();
    let adj: Vec<Vec<usize>> =
        (0..n).map(|v| g.neighbors(v).filter(|(_, s)| *s == Sign::Negative).map(|(w, _)| w).collect()).collect();
    // restrict to the 2-core of the negative subgraph
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut alive = vec![true; n];
    let mut stack: Vec<usize> = (0..n).filter(|&v| deg[v] < 2).collect();
    while let Some(v) = stack.pop() {
        if !alive[v] {
            continue;
        }
        alive[v] = false;
        for &w in &adj[v] {
            if alive[w] {
                deg[w] -= 1;
                if deg[w] < 2 {
                    stack.push(w);
                }
            }
        }
    }

    // every circle is found twice, once per direction, from its smallest vertex
    let mut twice = 0usize;
    let mut on_path = vec![false; n];
    for s in 0..n {
        if !alive[s] {
            continue;
        }
        on_path[s] = true;
        let mut frames: Vec<(usize, usize, usize)> = vec![(s, 0, 1)];
        while let Some(top) = frames.last_mut() {
            let (at, len) = (top.0, top.2);
            if top.1 < adj[at].len() {
                let w = adj[at][top.1];
                top.1 += 1;
                if w == s && len >= 3 {
                    twice += 1;
                    if twice / 2 >= cap {
                        return cap;
                    }
                } else if w > s && alive[w] && !on_path[w] {
                    on_path[w] = true;
                    frames.push((w, 0, len + 1));
                }
            } else {
                on_path[at] = false;
                frames.pop();
            }
        }
    }
    twice / 2
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::balance::is_negation_set;

    fn tri_one_neg() -> SignedGraph {
        SignedGraph::new(3, [(0, 1, Sign::Negative), (0, 2, Sign::Positive), (1, 2, Sign::Positive)]).unwrap()
    }

    #[test]
    fn partner_of_a_cut_is_empty() {
        // E⁻ = cut({0}) on a triangle
        let g = SignedGraph::new(3, [(0, 1, Sign::Negative), (0, 2, Sign::Negative), (1, 2, Sign::Positive)]).unwrap();
        assert!(disjoint_partner(&g).unwrap().is_empty());
    }

    #[test]
    fn partner_of_single_negative_edge() {
        let g = tri_one_neg();
        let p = disjoint_partner(&g).unwrap();
        assert!(p.is_disjoint(&g.negative_edges()));
        assert!(is_negation_set(&g, &p).unwrap());
        assert_eq!(p, EdgeSet::new(&g, [(1, 2)]).unwrap());
    }

    #[test]
    fn no_partner_for_negative_triangle() {
        let g = SignedGraph::complete(4, Sign::Negative);
        assert!(matches!(disjoint_partner(&g), Err(Error::Precondition(_))));
    }

    #[test]
    fn antibalanced_coloring_constructions() {
        let c4 = SignedGraph::circle(4, Sign::Negative);
        let x = bipartite_negation_for_antibalanced_planar(&c4, &[1, 2, 1, 2]).unwrap();
        assert!(c4.switch(&x).unwrap().negative_edges().is_bipartite(&c4));

        let k4 = SignedGraph::complete(4, Sign::Negative);
        let x = bipartite_negation_for_antibalanced_planar(&k4, &[1, 2, 3, 4]).unwrap();
        let b = k4.switch(&x).unwrap().negative_edges();
        assert!(b.is_bipartite(&k4));
        assert!(is_negation_set(&k4, &b).unwrap());

        // all-positive C4 is antibalanced since its underlying graph is bipartite
        let p4 = SignedGraph::circle(4, Sign::Positive);
        let x = bipartite_negation_for_antibalanced_planar(&p4, &[1, 2, 1, 2]).unwrap();
        assert!(p4.switch(&x).unwrap().negative_edges().is_bipartite(&p4));
    }

    #[test]
    fn antibalanced_construction_rejects_bad_input() {
        let k4 = SignedGraph::complete(4, Sign::Negative);
        assert!(bipartite_negation_for_antibalanced_planar(&k4, &[1, 1, 3, 4]).is_err());
        assert!(bipartite_negation_for_antibalanced_planar(&k4, &[1, 2, 3, 5]).is_err());
        assert!(bipartite_negation_for_antibalanced_planar(&k4, &[1, 2, 3]).is_err());
        let c5 = SignedGraph::circle(5, Sign::Positive);
        assert!(bipartite_negation_for_antibalanced_planar(&c5, &[1, 2, 1, 2, 3]).is_err());
    }

    #[test]
    fn negative_paths() {
        let g = SignedGraph::new(
            5,
            [(0, 1, Sign::Negative), (1, 2, Sign::Negative), (2, 3, Sign::Negative), (0, 4, Sign::Positive), (3, 4, Sign::Positive)],
        )
        .unwrap();
        assert!(fully_negative_path_exists(&g, 2, 2).unwrap());
        assert!(fully_negative_path_exists(&g, 0, 3).unwrap());
        assert!(!fully_negative_path_exists(&g, 0, 4).unwrap());
        assert!(fully_negative_path_exists(&g, 0, 9).is_err());
    }

    #[test]
    fn negative_circle_search() {
        assert_eq!(find_fully_negative_circle(&tri_one_neg()), None);
        assert_eq!(find_fully_negative_circle(&SignedGraph::circle(5, Sign::Negative)), Some(vec![0, 1, 2, 3, 4]));
        let two = SignedGraph::new(
            6,
            [
                (3, 4, Sign::Negative),
                (4, 5, Sign::Negative),
                (3, 5, Sign::Negative),
                (0, 1, Sign::Negative),
                (1, 2, Sign::Negative),
                (0, 2, Sign::Negative),
                (2, 3, Sign::Positive),
            ],
        )
        .unwrap();
        assert_eq!(find_fully_negative_circle(&two), Some(vec![0, 1, 2]));
        let k5 = SignedGraph::complete(5, Sign::Negative);
        assert_eq!(find_fully_negative_circle(&k5), Some(vec![0, 1, 2]));
    }

    #[test]
    fn circle_counts() {
        assert_eq!(count_fully_negative_circles(&SignedGraph::circle(6, Sign::Negative), 100), 1);
        assert_eq!(count_fully_negative_circles(&tri_one_neg(), 100), 0);
        // K4 has 7 circles, K5 has 37
        assert_eq!(count_fully_negative_circles(&SignedGraph::complete(4, Sign::Negative), 100), 7);
        assert_eq!(count_fully_negative_circles(&SignedGraph::complete(5, Sign::Negative), 100), 37);
        assert_eq!(count_fully_negative_circles(&SignedGraph::complete(5, Sign::Negative), 10), 10);
    }
}
