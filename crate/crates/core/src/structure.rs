//! Connectivity, cores, blocks and small traversal helpers shared by the
//! algorithm modules.

use std::collections::VecDeque;

use crate::graph::{Edge, SignedGraph, Subgraph};

pub(crate) struct DisjointSets {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl DisjointSets {
    pub(crate) fn new(n: usize) -> Self {
        DisjointSets { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// Returns false when `a` and `b` were already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra == rb {
            return false;
        }
        match self.rank[ra].cmp(&self.rank[rb]) {
            std::cmp::Ordering::Less => self.parent[ra] = rb,
            std::cmp::Ordering::Greater => self.parent[rb] = ra,
            std::cmp::Ordering::Equal => {
                self.parent[rb] = ra;
                self.rank[ra] += 1;
            }
        }
        true
    }
}

/// Proper 2-coloring of the graph formed by `edges` on `n` vertices, or
/// `None` when it has an odd circle. Each component's smallest vertex gets
/// color `false`.
pub(crate) fn two_coloring<I: IntoIterator<Item = Edge>>(n: usize, edges: I) -> Option<Vec<bool>> {
    let mut adj = vec![Vec::new(); n];
    for e in edges {
        adj[e.u()].push(e.v());
        adj[e.v()].push(e.u());
    }
    let mut color: Vec<Option<bool>> = vec![None; n];
    let mut queue = VecDeque::new();
    for s in 0..n {
        if color[s].is_some() {
            continue;
        }
        color[s] = Some(false);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let cu = color[u].unwrap();
            for &w in &adj[u] {
                match color[w] {
                    None => {
                        color[w] = Some(!cu);
                        queue.push_back(w);
                    }
                    Some(cw) if cw == cu => return None,
                    Some(_) => {}
                }
            }
        }
    }
    Some(color.into_iter().map(|c| c.unwrap()).collect())
}

impl SignedGraph {
    /// Connected components, each sorted, ordered by smallest vertex.
    pub fn connected_components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for (w, _) in self.neighbors(u) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        stack.push(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.connected_components().len() <= 1
    }

    /// Repeatedly delete vertices of degree below `k`. Returns the core and
    /// the deletion batches in the order they were removed.
    pub fn k_core(&self, k: usize) -> KCore {
        let n = self.vertex_count();
        let mut deg: Vec<usize> = (0..n).map(|v| self.degree(v)).collect();
        let mut alive = vec![true; n];
        let mut peel = Vec::new();
        let mut batch: Vec<usize> = (0..n).filter(|&v| deg[v] < k).collect();
        while !batch.is_empty() {
            for &v in &batch {
                alive[v] = false;
            }
            for &v in &batch {
                for (w, _) in self.neighbors(v) {
                    if alive[w] {
                        deg[w] -= 1;
                    }
                }
            }
            let next: Vec<usize> = (0..n).filter(|&v| alive[v] && deg[v] < k).collect();
            peel.push(std::mem::replace(&mut batch, next));
        }
        let kept: Vec<usize> = (0..n).filter(|&v| alive[v]).collect();
        KCore { core: self.induced_subgraph(&kept), peel }
    }

    /// Blocks (maximal 2-connected subgraphs, bridges, and isolated vertices)
    /// as sorted vertex lists. A cut vertex appears in every block it belongs to.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut disc = vec![usize::MAX; n];
        let mut low = vec![0; n];
        let mut time = 0;
        let mut edge_stack: Vec<Edge> = Vec::new();
        let mut out = Vec::new();

        for root in 0..n {
            if disc[root] != usize::MAX {
                continue;
            }
            if self.degree(root) == 0 {
                disc[root] = time;
                time += 1;
                out.push(vec![root]);
                continue;
            }
            disc[root] = time;
            low[root] = time;
            time += 1;
            // (vertex, parent, next neighbor position)
            let mut stack: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
            while let Some(top) = stack.last_mut() {
                let (u, parent) = (top.0, top.1);
                let nbrs = self.incident(u);
                if top.2 < nbrs.len() {
                    let w = nbrs[top.2].0;
                    top.2 += 1;
                    if disc[w] == usize::MAX {
                        edge_stack.push(Edge::new(u, w));
                        disc[w] = time;
                        low[w] = time;
                        time += 1;
                        stack.push((w, u, 0));
                    } else if w != parent && disc[w] < disc[u] {
                        edge_stack.push(Edge::new(u, w));
                        low[u] = low[u].min(disc[w]);
                    }
                } else {
                    stack.pop();
                    if parent != usize::MAX {
                        low[parent] = low[parent].min(low[u]);
                        if low[u] >= disc[parent] {
                            let target = Edge::new(parent, u);
                            let mut verts = Vec::new();
                            while let Some(e) = edge_stack.pop() {
                                verts.push(e.u());
                                verts.push(e.v());
                                if e == target {
                                    break;
                                }
                            }
                            verts.sort_unstable();
                            verts.dedup();
                            out.push(verts);
                        }
                    }
                }
            }
        }
        out.sort();
        out
    }

    /// Breadth-first distances in the positive subgraph from a set of sources.
    pub fn positive_distances_from(&self, sources: &[usize]) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        for &s in sources {
            if dist[s].is_none() {
                dist[s] = Some(0);
                queue.push_back(s);
            }
        }
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for (w, s) in self.neighbors(u) {
                if s.is_positive() && dist[w].is_none() {
                    dist[w] = Some(du + 1);
                    queue.push_back(w);
                }
            }
        }
        dist
    }
}

/// Result of [`SignedGraph::k_core`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KCore {
    pub core: Subgraph,
    /// Deletion batches in removal order; each holds the vertices whose degree
    /// fell below `k` at that stage (host indices).
    pub peel: Vec<Vec<usize>>,
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn plus(n: usize, edges: &[(usize, usize)]) -> SignedGraph {
        SignedGraph::new(n, edges.iter().map(|&(a, b)| (a, b, Sign::Positive))).unwrap()
    }

    #[test]
    fn core_of_circle_is_empty() {
        let kc = SignedGraph::circle(5, Sign::Positive).k_core(4);
        assert_eq!(kc.core.graph.vertex_count(), 0);
        assert_eq!(kc.peel, vec![vec![0, 1, 2, 3, 4]]);
    }

    #[test]
    fn k5_is_its_own_4_core() {
        let kc = SignedGraph::complete(5, Sign::Negative).k_core(4);
        assert_eq!(kc.core.to_host, vec![0, 1, 2, 3, 4]);
        assert!(kc.peel.is_empty());
    }

    #[test]
    fn pendant_peels_in_one_round() {
        let g = plus(5, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]);
        let kc = g.k_core(3);
        assert_eq!(kc.core.to_host, vec![0, 1, 2, 3]);
        assert_eq!(kc.peel, vec![vec![4]]);
        assert_eq!(kc.core.graph.edge_count(), 6);
    }

    #[test]
    fn peel_batches_are_staged() {
        // path 0-1-2: first round removes the ends (degree 1 < 2), then 1
        let kc = plus(3, &[(0, 1), (1, 2)]).k_core(2);
        assert_eq!(kc.peel, vec![vec![0, 2], vec![1]]);
    }

    #[test]
    fn bowtie_has_two_blocks() {
        let g = plus(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]);
        assert_eq!(g.blocks(), vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn blocks_with_bridges_and_isolated_vertices() {
        let g = plus(6, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        assert_eq!(g.blocks(), vec![vec![0, 1, 2], vec![2, 3], vec![3, 4], vec![5]]);
        assert!(!g.is_connected());
        assert_eq!(g.connected_components(), vec![vec![0, 1, 2, 3, 4], vec![5]]);
    }

    #[test]
    fn two_coloring_finds_odd_circles() {
        let tri = [Edge::new(0, 1), Edge::new(1, 2), Edge::new(0, 2)];
        assert!(two_coloring(3, tri).is_none());
        let c = two_coloring(4, [Edge::new(0, 1), Edge::new(2, 3)]).unwrap();
        assert_eq!(c, vec![false, true, false, true]);
    }
}
