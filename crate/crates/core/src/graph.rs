//! The signed graph value type and the elementary operations on it.
//!
//! Vertices are dense indices `0..n`. A [`SignedGraph`] is immutable: switching
//! and negation build new graphs. Edge and vertex subsets remember the
//! underlying graph they were built against, so a subset of one graph cannot
//! silently be applied to another.

use std::collections::hash_map::DefaultHasher;
use std::collections::BTreeSet;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::Mul;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Positive,
    #[serde(rename = "-")]
    Negative,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Positive => Sign::Negative,
            Sign::Negative => Sign::Positive,
        }
    }

    pub fn is_negative(self) -> bool {
        self == Sign::Negative
    }

    pub fn is_positive(self) -> bool {
        self == Sign::Positive
    }

    pub fn as_char(self) -> char {
        match self {
            Sign::Positive => '+',
            Sign::Negative => '-',
        }
    }
}

impl Mul for Sign {
    type Output = Sign;

    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Positive
        } else {
            Sign::Negative
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.as_char())
    }
}

/// An unordered vertex pair, stored with the smaller endpoint first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(from = "[usize; 2]", into = "[usize; 2]")]
pub struct Edge(usize, usize);

impl Edge {
    pub fn new(a: usize, b: usize) -> Edge {
        if a <= b {
            Edge(a, b)
        } else {
            Edge(b, a)
        }
    }

    pub fn u(self) -> usize {
        self.0
    }

    pub fn v(self) -> usize {
        self.1
    }

    pub fn contains(self, x: usize) -> bool {
        self.0 == x || self.1 == x
    }

    /// The endpoint that is not `x`. `x` must be an endpoint.
    pub fn other(self, x: usize) -> usize {
        debug_assert!(self.contains(x));
        if self.0 == x {
            self.1
        } else {
            self.0
        }
    }
}

impl From<[usize; 2]> for Edge {
    fn from(p: [usize; 2]) -> Edge {
        Edge::new(p[0], p[1])
    }
}

impl From<Edge> for [usize; 2] {
    fn from(e: Edge) -> [usize; 2] {
        [e.0, e.1]
    }
}

impl From<(usize, usize)> for Edge {
    fn from(p: (usize, usize)) -> Edge {
        Edge::new(p.0, p.1)
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}-{}", self.0, self.1)
    }
}

/// Degree, positive degree and negative degree of a vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Degrees {
    pub total: usize,
    pub positive: usize,
    pub negative: usize,
}

/// A simple undirected graph with a sign on every edge.
#[derive(Clone, Debug)]
pub struct SignedGraph {
    n: usize,
    edges: Vec<Edge>,
    signs: Vec<Sign>,
    /// Per vertex: (neighbor, edge index), sorted by neighbor.
    adj: Vec<Vec<(usize, usize)>>,
    shape: u64,
}

impl PartialEq for SignedGraph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges && self.signs == other.signs
    }
}

impl Eq for SignedGraph {}

impl SignedGraph {
    /// Builds a graph on `n` vertices. Loops, duplicate edges and
    /// out-of-range endpoints are rejected.
    pub fn new<I>(n: usize, edges: I) -> Result<SignedGraph>
    where
        I: IntoIterator<Item = (usize, usize, Sign)>,
    {
        let mut list: Vec<(Edge, Sign)> = Vec::new();
        for (a, b, s) in edges {
            for x in [a, b] {
                if x >= n {
                    return Err(Error::VertexOutOfRange { vertex: x, vertex_count: n });
                }
            }
            if a == b {
                return Err(Error::Loop(a));
            }
            list.push((Edge::new(a, b), s));
        }
        list.sort();
        for w in list.windows(2) {
            if w[0].0 == w[1].0 {
                return Err(Error::DuplicateEdge(w[0].0));
            }
        }
        let (edges, signs): (Vec<Edge>, Vec<Sign>) = list.into_iter().unzip();
        Ok(Self::from_sorted_parts(n, edges, signs))
    }

    fn from_sorted_parts(n: usize, edges: Vec<Edge>, signs: Vec<Sign>) -> SignedGraph {
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.0].push((e.1, i));
            adj[e.1].push((e.0, i));
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        let mut h = DefaultHasher::new();
        n.hash(&mut h);
        edges.hash(&mut h);
        SignedGraph { n, edges, signs, adj, shape: h.finish() }
    }

    fn with_signs(&self, signs: Vec<Sign>) -> SignedGraph {
        SignedGraph {
            n: self.n,
            edges: self.edges.clone(),
            signs,
            adj: self.adj.clone(),
            shape: self.shape,
        }
    }

    /// Complete graph `K_n` with every edge carrying `sign`.
    pub fn complete(n: usize, sign: Sign) -> SignedGraph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v, sign));
            }
        }
        SignedGraph::new(n, edges).expect("complete graph is simple")
    }

    /// Circle `C_n` (`n >= 3`) on `0, 1, .., n-1` with every edge carrying `sign`.
    pub fn circle(n: usize, sign: Sign) -> SignedGraph {
        assert!(n >= 3, "a circle needs at least three vertices");
        SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, sign))).expect("circle is simple")
    }

    pub fn vertex_count(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    /// Edges in sorted order with their signs.
    pub fn edges(&self) -> impl Iterator<Item = (Edge, Sign)> + '_ {
        self.edges.iter().copied().zip(self.signs.iter().copied())
    }



    pub(crate) fn edge_index(&self, a: usize, b: usize) -> Option<usize> {
        if a >= self.n || b >= self.n {
            return None;
        }
        let list = &self.adj[a];
        list.binary_search_by_key(&b, |&(w, _)| w).ok().map(|pos| list[pos].1)
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.edge_index(a, b).is_some()
    }

    pub fn sign(&self, a: usize, b: usize) -> Option<Sign> {
        self.edge_index(a, b).map(|i| self.signs[i])
    }

    /// Neighbors of `v` in increasing order, with the sign of the joining edge.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, Sign)> + '_ {
        self.adj[v].iter().map(move |&(w, i)| (w, self.signs[i]))
    }

    pub(crate) fn incident(&self, v: usize) -> &[(usize, usize)] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn negative_degree(&self, v: usize) -> usize {
        self.adj[v].iter().filter(|&&(_, i)| self.signs[i].is_negative()).count()
    }

    pub fn positive_degree(&self, v: usize) -> usize {
        self.degree(v) - self.negative_degree(v)
    }

    pub fn degrees(&self, v: usize) -> Result<Degrees> {
        self.check_vertex(v)?;
        let negative = self.negative_degree(v);
        Ok(Degrees { total: self.degree(v), positive: self.degree(v) - negative, negative })
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, vertex_count: self.n })
        }
    }

    /// True when both graphs have the same vertex count and the same edges,
    /// ignoring signs.
    pub fn same_underlying(&self, other: &SignedGraph) -> bool {
        self.n == other.n && self.edges == other.edges
    }

    pub fn negative_edges(&self) -> EdgeSet {
        EdgeSet::from_trusted(self, self.edges().filter(|(_, s)| s.is_negative()).map(|(e, _)| e))
    }

    pub fn positive_edges(&self) -> EdgeSet {
        EdgeSet::from_trusted(self, self.edges().filter(|(_, s)| s.is_positive()).map(|(e, _)| e))
    }

    pub fn all_edges(&self) -> EdgeSet {
        EdgeSet::from_trusted(self, self.edges.iter().copied())
    }

    pub fn negative_edge_count(&self) -> usize {
        self.signs.iter().filter(|s| s.is_negative()).count()
    }

    pub fn is_all_positive(&self) -> bool {
        self.signs.iter().all(|s| s.is_positive())
    }

    /// Switch by `x`: negate every edge with exactly one end in `x`.
    pub fn switch(&self, x: &VertexSet) -> Result<SignedGraph> {
        x.check_host(self)?;
        Ok(self.switch_by_mask(&x.mask()))
    }

    /// Switching with the subset given as a membership mask of length `n`.
    pub fn switch_by_mask(&self, in_x: &[bool]) -> SignedGraph {
        debug_assert_eq!(in_x.len(), self.n);
        let signs = self
            .edges
            .iter()
            .zip(&self.signs)
            .map(|(e, &s)| if in_x[e.0] != in_x[e.1] { s.flip() } else { s })
            .collect();
        self.with_signs(signs)
    }


    /// Negate exactly the edges of `y`.
    pub fn negate_edges(&self, y: &EdgeSet) -> Result<SignedGraph> {
        y.check_host(self)?;
        let mut signs = self.signs.clone();
        for e in y.iter() {
            let i = self.edge_index(e.0, e.1).ok_or(Error::EdgeNotInHost(e))?;
            signs[i] = signs[i].flip();
        }
        Ok(self.with_signs(signs))
    }

    /// The graph with every edge negated.
    pub fn negated(&self) -> SignedGraph {
        self.with_signs(self.signs.iter().map(|s| s.flip()).collect())
    }

    /// Edges with exactly one end in `x`.
    pub fn cut(&self, x: &VertexSet) -> Result<EdgeSet> {
        x.check_host(self)?;
        Ok(self.cut_by_mask(&x.mask()))
    }

    pub(crate) fn cut_by_mask(&self, in_x: &[bool]) -> EdgeSet {
        EdgeSet::from_trusted(self, self.edges.iter().copied().filter(|e| in_x[e.0] != in_x[e.1]))
    }

    /// Edges of a vertex sequence read as a closed walk, after checking it is
    /// a circle of this graph (length at least 3, no repeated vertex).
    pub fn circle_edges(&self, cycle: &[usize]) -> Result<Vec<Edge>> {
        if cycle.len() < 3 {
            return Err(Error::NotACircle(format!("{cycle:?} has fewer than 3 vertices")));
        }
        let mut seen = BTreeSet::new();
        for &v in cycle {
            self.check_vertex(v)?;
            if !seen.insert(v) {
                return Err(Error::NotACircle(format!("vertex {v} repeats in {cycle:?}")));
            }
        }
        let k = cycle.len();
        (0..k)
            .map(|i| {
                let (a, b) = (cycle[i], cycle[(i + 1) % k]);
                if self.has_edge(a, b) {
                    Ok(Edge::new(a, b))
                } else {
                    Err(Error::NotACircle(format!("{a} and {b} are not adjacent")))
                }
            })
            .collect()
    }

    /// Product of the edge signs along a circle.
    pub fn circle_sign(&self, cycle: &[usize]) -> Result<Sign> {
        let edges = self.circle_edges(cycle)?;
        Ok(edges
            .into_iter()
            .map(|e| self.sign(e.0, e.1).expect("checked edge"))
            .fold(Sign::Positive, |acc, s| acc * s))
    }

    fn keep_sign(&self, keep: Sign) -> SignedGraph {
        let (edges, signs) = self.edges().filter(|&(_, s)| s == keep).unzip();
        Self::from_sorted_parts(self.n, edges, signs)
    }

    /// All vertices, positive edges only.
    pub fn positive_subgraph(&self) -> SignedGraph {
        self.keep_sign(Sign::Positive)
    }

    /// All vertices, negative edges only.
    pub fn negative_subgraph(&self) -> SignedGraph {
        self.keep_sign(Sign::Negative)
    }

    /// The subgraph formed by the negative edges and their endpoints.
    pub fn edge_induced_negative(&self) -> Subgraph {
        let mut used = vec![false; self.n];
        for (e, s) in self.edges() {
            if s.is_negative() {
                used[e.0] = true;
                used[e.1] = true;
            }
        }
        let vertices: Vec<usize> = (0..self.n).filter(|&v| used[v]).collect();
        let sub = self.induced_subgraph(&vertices);
        let graph = sub.graph.keep_sign(Sign::Negative);
        Subgraph { graph, to_host: sub.to_host }
    }

    /// Subgraph induced by `vertices` (any order, duplicates ignored), relabelled
    /// to `0..k` in increasing host order.
    pub fn induced_subgraph(&self, vertices: &[usize]) -> Subgraph {
        let to_host: Vec<usize> = vertices.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();
        let mut from_host = vec![usize::MAX; self.n];
        for (i, &v) in to_host.iter().enumerate() {
            from_host[v] = i;
        }
        let mut edges = Vec::new();
        let mut signs = Vec::new();
        for (e, s) in self.edges() {
            let (a, b) = (from_host[e.0], from_host[e.1]);
            if a != usize::MAX && b != usize::MAX {
                edges.push(Edge::new(a, b));
                signs.push(s);
            }
        }
        // host order is preserved by the relabelling, so edges stay sorted
        Subgraph { graph: Self::from_sorted_parts(to_host.len(), edges, signs), to_host }
    }

}

/// A graph derived from a host graph, with the map from its vertex indices
/// back to host vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgraph {
    pub graph: SignedGraph,
    pub to_host: Vec<usize>,
}

impl Subgraph {
    pub fn lift(&self, v: usize) -> usize {
        self.to_host[v]
    }

    pub fn lift_edge(&self, e: Edge) -> Edge {
        Edge::new(self.to_host[e.0], self.to_host[e.1])
    }
}

/// A set of vertices of a host graph, usually read as a switching.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexSet {
    universe: usize,
    shape: u64,
    vertices: BTreeSet<usize>,
}

impl Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.vertices)
    }
}

impl VertexSet {
    pub fn new<I: IntoIterator<Item = usize>>(host: &SignedGraph, vertices: I) -> Result<VertexSet> {
        let vertices: BTreeSet<usize> = vertices.into_iter().collect();
        if let Some(&v) = vertices.iter().find(|&&v| v >= host.n) {
            return Err(Error::VertexOutOfRange { vertex: v, vertex_count: host.n });
        }
        Ok(VertexSet { universe: host.n, shape: host.shape, vertices })
    }

    pub fn empty(host: &SignedGraph) -> VertexSet {
        VertexSet::new(host, []).expect("empty set")
    }

    pub fn all(host: &SignedGraph) -> VertexSet {
        VertexSet::new(host, 0..host.n).expect("all vertices")
    }

    pub fn from_mask(host: &SignedGraph, mask: &[bool]) -> VertexSet {
        VertexSet::new(host, mask.iter().enumerate().filter(|(_, &b)| b).map(|(v, _)| v)).expect("mask within range")
    }

    pub fn complement(&self) -> VertexSet {
        VertexSet {
            universe: self.universe,
            shape: self.shape,
            vertices: (0..self.universe).filter(|v| !self.contains(*v)).collect(),
        }
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.contains(&v)
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.vertices.iter().copied()
    }

    pub fn mask(&self) -> Vec<bool> {
        let mut m = vec![false; self.universe];
        for &v in &self.vertices {
            m[v] = true;
        }
        m
    }

    /// Composition of switchings: the symmetric difference.
    pub fn symmetric_difference(&self, other: &VertexSet) -> VertexSet {
        VertexSet {
            universe: self.universe,
            shape: self.shape,
            vertices: self.vertices.symmetric_difference(&other.vertices).copied().collect(),
        }
    }

    pub(crate) fn check_host(&self, host: &SignedGraph) -> Result<()> {
        if self.universe == host.n && self.shape == host.shape {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }
}

/// A set of edges of a host graph.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgeSet {
    shape: u64,
    edges: BTreeSet<Edge>,
}

impl Serialize for EdgeSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(&self.edges)
    }
}

impl EdgeSet {
    pub fn new<I, E>(host: &SignedGraph, edges: I) -> Result<EdgeSet>
    where
        I: IntoIterator<Item = E>,
        E: Into<Edge>,
    {
        let mut set = BTreeSet::new();
        for e in edges {
            let e = e.into();
            if !host.has_edge(e.0, e.1) {
                return Err(Error::EdgeNotInHost(e));
            }
            set.insert(e);
        }
        Ok(EdgeSet { shape: host.shape, edges: set })
    }

    pub(crate) fn from_trusted<I: IntoIterator<Item = Edge>>(host: &SignedGraph, edges: I) -> EdgeSet {
        EdgeSet { shape: host.shape, edges: edges.into_iter().collect() }
    }

    pub fn empty(host: &SignedGraph) -> EdgeSet {
        EdgeSet { shape: host.shape, edges: BTreeSet::new() }
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.contains(&e)
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    /// Sorted edge list; also the canonical key used for deduplication.
    pub fn to_vec(&self) -> Vec<Edge> {
        self.edges.iter().copied().collect()
    }

    pub fn is_disjoint(&self, other: &EdgeSet) -> bool {
        self.edges.is_disjoint(&other.edges)
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.edges.is_subset(&other.edges)
    }

    pub fn symmetric_difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet { shape: self.shape, edges: self.edges.symmetric_difference(&other.edges).copied().collect() }
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet { shape: self.shape, edges: self.edges.difference(&other.edges).copied().collect() }
    }

    /// Vertices touched by the set, sorted.
    pub fn vertices(&self) -> Vec<usize> {
        self.edges.iter().flat_map(|e| [e.0, e.1]).collect::<BTreeSet<_>>().into_iter().collect()
    }

    pub(crate) fn check_host(&self, host: &SignedGraph) -> Result<()> {
        if self.shape == host.shape {
            Ok(())
        } else {
            Err(Error::HostMismatch)
        }
    }

    /// True when the edges, read as a graph on the host's vertices, have no
    /// odd circle.
    pub fn is_bipartite(&self, host: &SignedGraph) -> bool {
        crate::structure::two_coloring(host.vertex_count(), self.iter()).is_some()
    }

    /// True when the edges contain no circle.
    pub fn is_forest(&self, host: &SignedGraph) -> bool {
        let mut dsu = crate::structure::DisjointSets::new(host.vertex_count());
        self.iter().all(|e| dsu.union(e.0, e.1))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triangle_one_negative() -> SignedGraph {
        SignedGraph::new(3, [(0, 1, Sign::Negative), (0, 2, Sign::Positive), (1, 2, Sign::Positive)]).unwrap()
    }

    #[test]
    fn switching_single_vertex_negates_its_cut() {
        let g = SignedGraph::complete(3, Sign::Positive);
        let h = g.switch(&VertexSet::new(&g, [0]).unwrap()).unwrap();
        assert_eq!(h.sign(0, 1), Some(Sign::Negative));
        assert_eq!(h.sign(0, 2), Some(Sign::Negative));
        assert_eq!(h.sign(1, 2), Some(Sign::Positive));
    }

    #[test]
    fn switching_everything_is_identity() {
        let g = triangle_one_negative();
        assert_eq!(g.switch(&VertexSet::all(&g)).unwrap(), g);
    }

    #[test]
    fn foreign_subsets_are_rejected() {
        let g = triangle_one_negative();
        let other = SignedGraph::circle(4, Sign::Positive);
        let x = VertexSet::new(&other, [3]).unwrap();
        assert_eq!(g.switch(&x), Err(Error::HostMismatch));
        let y = other.all_edges();
        assert_eq!(g.negate_edges(&y), Err(Error::HostMismatch));
        assert!(matches!(EdgeSet::new(&g, [(0, 5)]), Err(Error::EdgeNotInHost(_))));
    }

    #[test]
    fn negating_all_edges_of_positive_graph() {
        let g = SignedGraph::complete(4, Sign::Positive);
        assert_eq!(g.negate_edges(&g.all_edges()).unwrap(), SignedGraph::complete(4, Sign::Negative));
        assert_eq!(g.negate_edges(&EdgeSet::empty(&g)).unwrap(), g);
    }

    #[test]
    fn circle_signs() {
        assert_eq!(SignedGraph::complete(3, Sign::Positive).circle_sign(&[0, 1, 2]), Ok(Sign::Positive));
        assert_eq!(triangle_one_negative().circle_sign(&[2, 1, 0]), Ok(Sign::Negative));
        assert_eq!(SignedGraph::circle(4, Sign::Negative).circle_sign(&[0, 1, 2, 3]), Ok(Sign::Positive));
    }

    #[test]
    fn circle_sign_rejects_non_circles() {
        let g = SignedGraph::circle(4, Sign::Positive);
        assert!(matches!(g.circle_sign(&[0, 1, 2]), Err(Error::NotACircle(_))));
        assert!(matches!(g.circle_sign(&[0, 1, 0, 1]), Err(Error::NotACircle(_))));
        assert!(matches!(g.circle_sign(&[0, 1]), Err(Error::NotACircle(_))));
        assert!(matches!(g.circle_sign(&[0, 1, 9]), Err(Error::VertexOutOfRange { .. })));
    }

    #[test]
    fn construction_errors() {
        assert_eq!(SignedGraph::new(3, [(1, 1, Sign::Positive)]), Err(Error::Loop(1)));
        assert_eq!(
            SignedGraph::new(3, [(0, 1, Sign::Positive), (1, 0, Sign::Negative)]),
            Err(Error::DuplicateEdge(Edge::new(0, 1)))
        );
        assert_eq!(
            SignedGraph::new(2, [(0, 2, Sign::Positive)]),
            Err(Error::VertexOutOfRange { vertex: 2, vertex_count: 2 })
        );
    }

    #[test]
    fn sign_subgraphs() {
        let g = SignedGraph::complete(4, Sign::Positive);
        assert_eq!(g.negative_subgraph().edge_count(), 0);
        assert_eq!(g.negative_subgraph().vertex_count(), 4);

        let t = triangle_one_negative();
        let neg = t.edge_induced_negative();
        assert_eq!(neg.graph.vertex_count(), 2);
        assert_eq!(neg.graph.edge_count(), 1);
        assert_eq!(neg.to_host, vec![0, 1]);
        assert_eq!(t.positive_subgraph().edge_count(), 2);

        // negative 4-cycle 0-1-2-3 plus a positive pendant-free chord structure
        let g = SignedGraph::new(
            5,
            [
                (0, 1, Sign::Negative),
                (1, 2, Sign::Negative),
                (2, 3, Sign::Negative),
                (0, 3, Sign::Negative),
                (0, 4, Sign::Positive),
                (2, 4, Sign::Positive),
            ],
        )
        .unwrap();
        let neg = g.edge_induced_negative();
        assert_eq!(neg.to_host, vec![0, 1, 2, 3]);
        assert!(neg.graph.same_underlying(&SignedGraph::circle(4, Sign::Negative)));
    }

    #[test]
    fn degree_triples() {
        let g = SignedGraph::new(3, [(0, 1, Sign::Positive)]).unwrap();
        assert_eq!(g.degrees(2).unwrap(), Degrees { total: 0, positive: 0, negative: 0 });
        let k5 = SignedGraph::complete(5, Sign::Negative);
        assert_eq!(k5.degrees(3).unwrap(), Degrees { total: 4, positive: 0, negative: 4 });
        assert!(k5.degrees(5).is_err());
    }

    #[test]
    fn cuts() {
        let g = SignedGraph::complete(3, Sign::Positive);
        assert!(g.cut(&VertexSet::empty(&g)).unwrap().is_empty());
        let c = g.cut(&VertexSet::new(&g, [0]).unwrap()).unwrap();
        assert_eq!(c.to_vec(), vec![Edge::new(0, 1), Edge::new(0, 2)]);
    }

    #[test]
    fn forest_and_bipartite_edge_sets() {
        let g = SignedGraph::complete(4, Sign::Positive);
        let tri = EdgeSet::new(&g, [(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(!tri.is_bipartite(&g));
        assert!(!tri.is_forest(&g));
        let sq = EdgeSet::new(&g, [(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        assert!(sq.is_bipartite(&g));
        assert!(!sq.is_forest(&g));
        let path = EdgeSet::new(&g, [(0, 1), (1, 2)]).unwrap();
        assert!(path.is_forest(&g));
    }

    #[test]
    fn edge_serde_is_a_pair() {
        let e = Edge::new(3, 1);
        assert_eq!(serde_json::to_string(&e).unwrap(), "[1,3]");
        let back: Edge = serde_json::from_str("[4,2]").unwrap();
        assert_eq!(back, Edge::new(2, 4));
    }
}
