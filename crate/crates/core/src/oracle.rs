//! Brute-force ground truth for small graphs.
//!
//! Every negation set is the negative edge set of some switching, so
//! enumerating the `2^{n−1}` switchings that leave vertex 0 alone lists them
//! all. Everything else here is derived from that list by exhaustive search.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, SignedGraph};

pub const DEFAULT_CAP: usize = 16;

/// All negation sets of a graph, sorted by size and then by edge list.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingEnumeration {
    pub sets: Vec<EdgeSet>,
}

impl SwitchingEnumeration {
    pub fn contains(&self, b: &EdgeSet) -> bool {
        self.sets.binary_search_by(|s| order_key(s).cmp(&order_key(b))).is_ok()
    }
}

fn order_key(s: &EdgeSet) -> (usize, Vec<Edge>) {
    (s.len(), s.to_vec())
}

/// Edge bitmasks: bit `i` is the `i`-th edge in sorted order.
fn masks(g: &SignedGraph) -> (u128, Vec<u128>) {
    let mut negative = 0u128;
    let mut incident = vec![0u128; g.vertex_count()];
    for (i, (e, s)) in g.edges().enumerate() {
        if s.is_negative() {
            negative |= 1 << i;
        }
        incident[e.u()] |= 1 << i;
        incident[e.v()] |= 1 << i;
    }
    (negative, incident)
}

fn check_cap(g: &SignedGraph, cap: usize) -> Result<()> {
    if g.vertex_count() > cap || g.edge_count() > 128 {
        return Err(Error::CapExceeded { vertex_count: g.vertex_count(), cap });
    }
    Ok(())
}

/// Distinct negative edge sets over all switchings, as edge bitmasks, in
/// Gray-code order.
fn negation_masks(g: &SignedGraph, cap: usize) -> Result<Vec<u128>> {
    check_cap(g, cap)?;
    let (mut current, incident) = masks(g);
    let n = g.vertex_count();
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    let steps: u64 = if n == 0 { 1 } else { 1 << (n - 1) };
    for i in 0..steps {
        if i > 0 {
            // vertex 1 + (index of the bit that changes in the Gray code)
            current ^= incident[1 + i.trailing_zeros() as usize];
        }
        if seen.insert(current) {
            out.push(current);
        }
    }
    Ok(out)
}

fn to_edge_set(g: &SignedGraph, edges: &[Edge], mask: u128) -> EdgeSet {
    EdgeSet::from_trusted(g, (0..edges.len()).filter(|&i| mask >> i & 1 == 1).map(|i| edges[i]))
}

pub fn enumerate_negation_sets(g: &SignedGraph) -> Result<SwitchingEnumeration> {
    enumerate_negation_sets_capped(g, DEFAULT_CAP)
}

pub fn enumerate_negation_sets_capped(g: &SignedGraph, cap: usize) -> Result<SwitchingEnumeration> {
    let edges: Vec<Edge> = g.edges().map(|(e, _)| e).collect();
    let mut sets: Vec<EdgeSet> = negation_masks(g, cap)?.into_iter().map(|m| to_edge_set(g, &edges, m)).collect();
    sets.sort_by_cached_key(order_key);
    Ok(SwitchingEnumeration { sets })
}

/// Minimum number of edges whose negation balances `g`.
pub fn frustration_index(g: &SignedGraph) -> Result<usize> {
    Ok(negation_masks(g, DEFAULT_CAP)?.into_iter().map(|m| m.count_ones() as usize).min().unwrap_or(0))
}

/// Every negation set of minimum size, sorted.
pub fn minimum_negation_sets(g: &SignedGraph) -> Result<Vec<EdgeSet>> {
    let all = enumerate_negation_sets(g)?.sets;
    let min = all.first().map_or(0, EdgeSet::len);
    Ok(all.into_iter().take_while(|s| s.len() == min).collect())
}

fn mask_of(g: &SignedGraph, b: &EdgeSet) -> Result<u128> {
    b.check_host(g)?;
    let mut m = 0u128;
    for (i, (e, _)) in g.edges().enumerate() {
        if b.contains(e) {
            m |= 1 << i;
        }
    }
    Ok(m)
}

fn require_negation_set(all: &[u128], b: u128) -> Result<()> {
    if all.contains(&b) {
        Ok(())
    } else {
        Err(Error::Precondition("edge set is not a negation set".into()))
    }
}

/// True iff no proper subset of `b` is a negation set, decided against the
/// full list of negation sets.
pub fn brute_is_minimal(g: &SignedGraph, b: &EdgeSet) -> Result<bool> {
    let all = negation_masks(g, DEFAULT_CAP)?;
    let bm = mask_of(g, b)?;
    require_negation_set(&all, bm)?;
    Ok(!all.iter().any(|&s| s != bm && s & !bm == 0))
}

/// True iff `b` is the one and only negation set of minimum size.
pub fn brute_is_unique_minimum(g: &SignedGraph, b: &EdgeSet) -> Result<bool> {
    let all = negation_masks(g, DEFAULT_CAP)?;
    let bm = mask_of(g, b)?;
    require_negation_set(&all, bm)?;
    let size = bm.count_ones();
    Ok(all.iter().all(|&s| s == bm || s.count_ones() > size))
}

/// Largest family of pairwise disjoint negation sets containing `b = E⁻(g)`,
/// by branch and bound over the negation sets disjoint from `b`.
pub fn brute_packing_number(g: &SignedGraph, b: &EdgeSet) -> Result<(usize, Vec<EdgeSet>)> {
    let all = negation_masks(g, DEFAULT_CAP)?;
    let bm = mask_of(g, b)?;
    if *b != g.negative_edges() {
        return Err(Error::Precondition("edge set is not the negative edge set".into()));
    }
    let mut candidates: Vec<u128> = all.into_iter().filter(|&s| s != bm && s & bm == 0).collect();
    candidates.sort_by_key(|s| (s.count_ones(), *s));

    let mut best = Vec::new();
    let mut current = Vec::new();
    extend_packing(&candidates, 0, 0, &mut current, &mut best);

    let edges: Vec<Edge> = g.edges().map(|(e, _)| e).collect();
    let mut family = vec![b.clone()];
    family.extend(best.iter().map(|&m| to_edge_set(g, &edges, m)));
    Ok((family.len(), family))
}

fn extend_packing(candidates: &[u128], from: usize, used: u128, current: &mut Vec<u128>, best: &mut Vec<u128>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    let open: Vec<usize> = (from..candidates.len()).filter(|&i| candidates[i] & used == 0).collect();
    if current.len() + open.len() <= best.len() {
        return;
    }
    // at most one empty set, and the nonempty ones need disjoint edges
    let free_edges = (!used).count_ones() as usize;
    let has_empty = open.first().is_some_and(|&i| candidates[i] == 0);
    if current.len() + free_edges.min(open.len()) + usize::from(has_empty) <= best.len() {
        return;
    }
    for (k, &i) in open.iter().enumerate() {
        if current.len() + open.len() - k <= best.len() {
            return;
        }
        current.push(candidates[i]);
        extend_packing(candidates, i + 1, used | candidates[i], current, best);
        current.pop();
    }
}
