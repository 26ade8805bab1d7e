//! Minimal and minimum negation sets.
//!
//! A negation set is minimal exactly when deleting it leaves the graph
//! connected. Minimum and unique-minimum status have no cheap
//! characterization; the tests here are sufficient conditions backed by
//! checkable certificates.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::balance::is_negation_set;
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, SignedGraph};
use crate::structure::DisjointSets;

/// Edge-disjoint negative circles, as many as the negation set has edges.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DisjointCircleCertificate {
    pub circles: Vec<Vec<usize>>,
}

/// Two negative circles through each edge of the negation set.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TwoCirclePerEdgeCertificate {
    pub pairs: Vec<CirclePair>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CirclePair {
    pub edge: Edge,
    pub c1: Vec<usize>,
    pub c2: Vec<usize>,
}

fn require_negation_set(g: &SignedGraph, b: &EdgeSet) -> Result<()> {
    if is_negation_set(g, b)? {
        Ok(())
    } else {
        Err(Error::Precondition("edge set is not a negation set".into()))
    }
}

fn require_negative_edge_set(g: &SignedGraph, b: &EdgeSet) -> Result<()> {
    b.check_host(g)?;
    if *b == g.negative_edges() {
        Ok(())
    } else {
        Err(Error::Precondition("edge set must be the negative edge set of the graph".into()))
    }
}

pub fn is_complete(g: &SignedGraph) -> bool {
    let n = g.vertex_count();
    g.edge_count() == n * n.saturating_sub(1) / 2
}

fn require_complete(g: &SignedGraph) -> Result<()> {
    if is_complete(g) {
        Ok(())
    } else {
        Err(Error::Precondition("underlying graph is not complete".into()))
    }
}

fn certificate_circle(g: &SignedGraph, circle: &[usize]) -> Result<Vec<Edge>> {
    g.circle_edges(circle).map_err(|e| Error::MalformedCertificate(e.to_string()))
}

fn is_negative_circle(g: &SignedGraph, edges: &[Edge]) -> bool {
    edges.iter().filter(|e| g.sign(e.u(), e.v()).is_some_and(|s| s.is_negative())).count() % 2 == 1
}

/// A negation set of a connected graph is minimal iff it contains no cut,
/// i.e. the graph minus the set stays connected.
pub fn is_minimal(g: &SignedGraph, b: &EdgeSet) -> Result<bool> {
    require_negation_set(g, b)?;
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected".into()));
    }
    let mut dsu = DisjointSets::new(g.vertex_count());
    let mut parts = g.vertex_count();
    for (e, _) in g.edges() {
        if !b.contains(e) && dsu.union(e.u(), e.v()) {
            parts -= 1;
        }
    }
    Ok(parts <= 1)
}

/// Checks `|b|` pairwise edge-disjoint negative circles. Acceptance proves
/// `b` minimum; rejection proves nothing.
pub fn verify_disjoint_circle_certificate(
    g: &SignedGraph,
    b: &EdgeSet,
    cert: &DisjointCircleCertificate,
) -> Result<bool> {
    require_negation_set(g, b)?;
    let circles = cert.circles.iter().map(|c| certificate_circle(g, c)).collect::<Result<Vec<_>>>()?;
    if circles.len() != b.len() {
        return Ok(false);
    }
    let mut used = BTreeSet::new();
    for edges in &circles {
        if !is_negative_circle(g, edges) {
            return Ok(false);
        }
        for &e in edges {
            if !used.insert(e) {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Proper edge coloring with at most `max_degree + 1` colors
/// (Misra–Gries). Returns one color per input edge, in input order.
pub fn edge_coloring(n: usize, edges: &[Edge]) -> Vec<usize> {
    let mut coloring = FanColoring::new(n, edges);
    for i in 0..edges.len() {
        coloring.color_edge(i);
    }
    coloring.color.into_iter().map(|c| c.expect("every edge colored")).collect()
}

struct FanColoring<'a> {
    edges: &'a [Edge],
    /// per vertex: (neighbor, edge index)
    adj: Vec<Vec<(usize, usize)>>,
    color: Vec<Option<usize>>,
    palette: usize,
}

impl<'a> FanColoring<'a> {
    fn new(n: usize, edges: &'a [Edge]) -> Self {
        let mut adj = vec![Vec::new(); n];
        for (i, e) in edges.iter().enumerate() {
            adj[e.u()].push((e.v(), i));
            adj[e.v()].push((e.u(), i));
        }
        let max_degree = adj.iter().map(Vec::len).max().unwrap_or(0);
        FanColoring { edges, adj, color: vec![None; edges.len()], palette: max_degree + 1 }
    }

    fn edge_between(&self, a: usize, b: usize) -> usize {
        self.adj[a].iter().find(|&&(w, _)| w == b).expect("edge exists").1
    }

    fn is_free(&self, x: usize, c: usize) -> bool {
        self.adj[x].iter().all(|&(_, i)| self.color[i] != Some(c))
    }

    fn free_color(&self, x: usize) -> usize {
        (0..self.palette).find(|&c| self.is_free(x, c)).expect("degree below palette size")
    }

    fn edge_with_color(&self, x: usize, c: usize) -> Option<(usize, usize)> {
        self.adj[x].iter().copied().find(|&(_, i)| self.color[i] == Some(c))
    }

    fn color_edge(&mut self, idx: usize) {
        let (u, v) = (self.edges[idx].u(), self.edges[idx].v());

        // maximal fan of u starting at v
        let mut fan = vec![v];
        loop {
            let last = *fan.last().unwrap();
            let next = self.adj[u].iter().copied().find(|&(w, i)| {
                !fan.contains(&w) && self.color[i].is_some_and(|c| self.is_free(last, c))
            });
            match next {
                Some((w, _)) => fan.push(w),
                None => break,
            }
        }

        let c = self.free_color(u);
        let d = self.free_color(*fan.last().unwrap());

        // invert the cd-path starting at u
        if !self.is_free(u, d) {
            let mut path = Vec::new();
            let mut at = u;
            let mut want = d;
            while let Some((w, i)) = self.edge_with_color(at, want) {
                if path.contains(&i) {
                    break;
                }
                path.push(i);
                at = w;
                want = if want == d { c } else { d };
            }
            for i in path {
                self.color[i] = Some(if self.color[i] == Some(d) { c } else { d });
            }
        }

        // shortest prefix of the (still valid) fan ending where d is free
        let mut end = 0;
        for k in 0..fan.len() {
            if k > 0 {
                let i = self.edge_between(u, fan[k]);
                if !self.color[i].is_some_and(|col| self.is_free(fan[k - 1], col)) {
                    break;
                }
            }
            if self.is_free(fan[k], d) {
                end = k;
                break;
            }
        }

        for k in 0..end {
            let here = self.edge_between(u, fan[k]);
            let next = self.edge_between(u, fan[k + 1]);
            self.color[here] = self.color[next];
        }
        let last = self.edge_between(u, fan[end]);
        self.color[last] = Some(d);
    }
}

/// Tries to certify `b = E⁻(g)` minimum on a complete graph by one negative
/// triangle per edge of `b`: edges of one color class share a spare vertex
/// outside `V(b)`. Returns `None` when there are fewer spare vertices than
/// colors used.
pub fn triangle_certificate_for_complete(g: &SignedGraph, b: &EdgeSet) -> Result<Option<DisjointCircleCertificate>> {
    require_complete(g)?;
    require_negative_edge_set(g, b)?;
    let edges = b.to_vec();
    let raw = edge_coloring(g.vertex_count(), &edges);
    let distinct: Vec<usize> = raw.iter().copied().collect::<BTreeSet<_>>().into_iter().collect();

    let touched: BTreeSet<usize> = b.vertices().into_iter().collect();
    let spare: Vec<usize> = (0..g.vertex_count()).filter(|v| !touched.contains(v)).collect();
    if spare.len() < distinct.len() {
        return Ok(None);
    }
    let circles = edges
        .iter()
        .zip(&raw)
        .map(|(e, c)| {
            let slot = distinct.binary_search(c).expect("color listed");
            vec![e.u(), e.v(), spare[slot]]
        })
        .collect();
    Ok(Some(DisjointCircleCertificate { circles }))
}

/// Checks the two-circles-per-edge structure for `b = E⁻(g)`. Each pair must
/// be two negative circles through its edge that share no other edge, and the
/// unions over distinct pairs must be disjoint. Together with `b` being
/// minimum (not checked here) this proves `b` is the unique minimum.
pub fn verify_two_circle_certificate(
    g: &SignedGraph,
    b: &EdgeSet,
    cert: &TwoCirclePerEdgeCertificate,
) -> Result<bool> {
    require_negative_edge_set(g, b)?;
    let mut covered = BTreeSet::new();
    let mut used = BTreeSet::new();
    for pair in &cert.pairs {
        let c1 = certificate_circle(g, &pair.c1)?;
        let c2 = certificate_circle(g, &pair.c2)?;
        if !b.contains(pair.edge) || !covered.insert(pair.edge) {
            return Ok(false);
        }
        if !c1.contains(&pair.edge) || !c2.contains(&pair.edge) {
            return Ok(false);
        }
        if !is_negative_circle(g, &c1) || !is_negative_circle(g, &c2) {
            return Ok(false);
        }
        let s1: BTreeSet<Edge> = c1.into_iter().collect();
        let s2: BTreeSet<Edge> = c2.into_iter().collect();
        if s1.intersection(&s2).count() != 1 {
            return Ok(false);
        }
        for e in s1.union(&s2) {
            if !used.insert(*e) {
                return Ok(false);
            }
        }
    }
    Ok(covered.len() == b.len())
}

/// On `K_n` with `b = E⁻`: `|b| <= n/2 - 1` makes `b` the unique minimum.
pub fn unique_minimum_by_size(g: &SignedGraph, b: &EdgeSet) -> Result<bool> {
    require_complete(g)?;
    require_negative_edge_set(g, b)?;
    Ok(2 * b.len() + 2 <= g.vertex_count())
}
