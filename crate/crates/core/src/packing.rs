//! Packing number of the negative edge set: the size of the largest family of
//! pairwise disjoint negation sets containing it.
//!
//! When `B = E⁻` is bipartite, the answer is one more than the largest
//! positive distance between the two sides of a stable bipartition of
//! `Σ:E⁻`, extended across components. That maximum is found by scanning the
//! class graphs `Φ_k` for the first unbalanced one.

use serde::Serialize;

use crate::balance::{harary_sides, is_balanced, is_negation_set};
use crate::error::{Error, Result};
use crate::graph::{EdgeSet, Sign, SignedGraph, VertexSet};
use crate::structure::two_coloring;

/// Components of `Σ:E⁻` with their stable bipartitions. Class `2i` is
/// `V_{i1}` (holding the component's smallest vertex), class `2i + 1` is
/// `V_{i2}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NegativeComponentClasses {
    pub classes: Vec<Vec<usize>>,
}

impl NegativeComponentClasses {
    /// Number of components `m`.
    pub fn component_count(&self) -> usize {
        self.classes.len() / 2
    }

    pub fn class_count(&self) -> usize {
        self.classes.len()
    }

    /// The other class of the same component.
    pub fn mirror(class: usize) -> usize {
        class ^ 1
    }
}

pub fn negative_component_classes(g: &SignedGraph) -> Result<NegativeComponentClasses> {
    let negative = g.negative_edges();
    if negative.is_empty() {
        return Err(Error::Precondition("no negative edges: the packing problem is undefined".into()));
    }
    let coloring = two_coloring(g.vertex_count(), negative.iter())
        .ok_or_else(|| Error::Precondition("negative edge set is not bipartite".into()))?;
    let sub = g.edge_induced_negative();
    let mut classes = Vec::new();
    for comp in sub.graph.connected_components() {
        let host: Vec<usize> = comp.iter().map(|&v| sub.lift(v)).collect();
        // two_coloring puts each component's smallest vertex on side false
        let first: Vec<usize> = host.iter().copied().filter(|&v| !coloring[v]).collect();
        let second: Vec<usize> = host.iter().copied().filter(|&v| coloring[v]).collect();
        classes.push(first);
        classes.push(second);
    }
    Ok(NegativeComponentClasses { classes })
}

/// Positive distances between every pair of classes; `None` when no
/// positive path exists. The diagonal is `Some(0)`.
pub fn class_distances(g: &SignedGraph, classes: &NegativeComponentClasses) -> Vec<Vec<Option<usize>>> {
    classes
        .classes
        .iter()
        .map(|from| {
            let dist = g.positive_distances_from(from);
            classes.classes.iter().map(|to| to.iter().filter_map(|&v| dist[v]).min()).collect()
        })
        .collect()
}

/// Distinct finite distances between distinct classes, increasing:
/// `w_1 < … < w_l`.
pub fn distance_thresholds(distances: &[Vec<Option<usize>>]) -> Vec<usize> {
    let mut w: Vec<usize> = (0..distances.len())
        .flat_map(|a| (a + 1..distances.len()).filter_map(move |b| distances[a][b]))
        .collect();
    w.sort_unstable();
    w.dedup();
    w
}

/// Signed multigraph on the classes: one negative edge per component and a
/// positive edge for every class pair within the current threshold, closed
/// under swapping the classes of every component.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassGraph {
    pub class_count: usize,
    /// Unordered class pairs `(a, b)` with `a < b`, sorted.
    pub positive: Vec<(usize, usize)>,
}

impl ClassGraph {
    pub fn negative(&self) -> impl Iterator<Item = (usize, usize)> {
        (0..self.class_count / 2).map(|i| (2 * i, 2 * i + 1))
    }

    fn signed_edges(&self) -> impl Iterator<Item = (usize, usize, Sign)> + '_ {
        self.negative()
            .map(|(a, b)| (a, b, Sign::Negative))
            .chain(self.positive.iter().map(|&(a, b)| (a, b, Sign::Positive)))
    }

    pub fn is_balanced(&self) -> bool {
        harary_sides(self.class_count, self.signed_edges()).is_some()
    }

    /// Harary sides, `false` for the smallest class of every component.
    pub fn harary_sides(&self) -> Option<Vec<bool>> {
        harary_sides(self.class_count, self.signed_edges())
    }

    /// True when some component's two classes are also joined positively.
    pub fn has_negative_digon(&self) -> bool {
        self.negative().any(|pair| self.positive.binary_search(&pair).is_ok())
    }
}

/// `Φ_k` for `1 ≤ k ≤ l`.
pub fn build_phi(classes: &NegativeComponentClasses, distances: &[Vec<Option<usize>>], k: usize) -> Result<ClassGraph> {
    let w = distance_thresholds(distances);
    if k == 0 || k > w.len() {
        return Err(Error::IndexOutOfRange { index: k, max: w.len() });
    }
    Ok(phi_at(classes.class_count(), distances, w[k - 1]))
}

fn phi_at(class_count: usize, distances: &[Vec<Option<usize>>], threshold: usize) -> ClassGraph {
    let mirror = NegativeComponentClasses::mirror;
    let close = |a: usize, b: usize| distances[a][b].is_some_and(|d| d <= threshold);
    let mut positive = Vec::new();
    for a in 0..class_count {
        for b in a + 1..class_count {
            if close(a, b) || close(mirror(a), mirror(b)) {
                positive.push((a, b));
            }
        }
    }
    ClassGraph { class_count, positive }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub b1: Vec<usize>,
    pub b2: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PackingResult {
    pub packing_number: usize,
    /// `B` first, then the sets `N_0, …, N_{w_p − 1}`.
    pub family: Vec<EdgeSet>,
    /// `None` when `B` is not bipartite.
    pub realizing_bipartition: Option<Bipartition>,
    /// `w_p`, the largest positive distance between the sides of a stable
    /// bipartition; `None` when `B` is not bipartite.
    pub distance: Option<usize>,
    /// The thresholds `w_1 < … < w_l`.
    pub thresholds: Vec<usize>,
    /// Balance of `Φ_1, …, Φ_l`.
    pub phi_balanced: Vec<bool>,
}

/// Packing number of `E⁻(g)` with a witnessing family.
pub fn packing_number(g: &SignedGraph) -> Result<PackingResult> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected; run per component".into()));
    }
    if is_balanced(g) {
        return Err(Error::Precondition(
            "graph is balanced; packing negation sets there is equivalent to packing cuts".into(),
        ));
    }
    let b = g.negative_edges();
    if !b.is_bipartite(g) {
        // disjoint negation sets are both bipartite, so B packs with nothing
        return Ok(PackingResult {
            packing_number: 1,
            family: vec![b],
            realizing_bipartition: None,
            distance: None,
            thresholds: Vec::new(),
            phi_balanced: Vec::new(),
        });
    }

    let classes = negative_component_classes(g)?;
    let distances = class_distances(g, &classes);
    let w = distance_thresholds(&distances);
    let phi_balanced: Vec<bool> = w.iter().map(|&t| phi_at(classes.class_count(), &distances, t).is_balanced()).collect();
    let p = phi_balanced
        .iter()
        .position(|&bal| !bal)
        .map(|i| i + 1)
        .ok_or_else(|| Error::InvariantViolated("every class graph is balanced".into()))?;
    if phi_balanced[p - 1..].iter().any(|&bal| bal) {
        return Err(Error::InvariantViolated("class graph balance is not monotone".into()));
    }
    let wp = w[p - 1];

    let class_side: Vec<bool> = if p == 1 {
        (0..classes.class_count()).map(|c| c % 2 == 1).collect()
    } else {
        phi_at(classes.class_count(), &distances, w[p - 2]).harary_sides().expect("earlier class graphs are balanced")
    };
    let mut b1 = Vec::new();
    let mut b2 = Vec::new();
    for (c, members) in classes.classes.iter().enumerate() {
        if class_side[c] { &mut b2 } else { &mut b1 }.extend(members);
    }
    b1.sort_unstable();
    b2.sort_unstable();

    let from_b1 = g.positive_distances_from(&b1);
    if b2.iter().filter_map(|&v| from_b1[v]).min() != Some(wp) {
        return Err(Error::InvariantViolated("realizing bipartition does not attain the scanned distance".into()));
    }

    let mut family = vec![b.clone()];
    let mut previous: Option<Vec<bool>> = None;
    for i in 0..wp {
        let s: Vec<bool> = from_b1.iter().map(|d| d.is_some_and(|d| d <= i)).collect();
        if b1.iter().any(|&v| !s[v]) || b2.iter().any(|&v| s[v]) {
            return Err(Error::InvariantViolated(format!("S_{i} does not separate the bipartition")));
        }
        if let Some(prev) = &previous {
            if prev.iter().zip(&s).any(|(&a, &b)| a && !b) {
                return Err(Error::InvariantViolated("switching sets are not nested".into()));
            }
        }
        family.push(g.switch(&VertexSet::from_mask(g, &s))?.negative_edges());
        previous = Some(s);
    }
    for (i, a) in family.iter().enumerate() {
        if !is_negation_set(g, a)? {
            return Err(Error::InvariantViolated(format!("family member {i} is not a negation set")));
        }
        if family[..i].iter().any(|other| !other.is_disjoint(a)) {
            return Err(Error::InvariantViolated(format!("family member {i} meets an earlier member")));
        }
    }

    Ok(PackingResult {
        packing_number: wp + 1,
        family,
        realizing_bipartition: Some(Bipartition { b1, b2 }),
        distance: Some(wp),
        thresholds: w,
        phi_balanced,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn circle_one_negative(n: usize) -> SignedGraph {
        SignedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, if i == 0 { Sign::Negative } else { Sign::Positive }))).unwrap()
    }

    #[test]
    fn classes_of_simple_negative_sets() {
        let c = negative_component_classes(&circle_one_negative(3)).unwrap();
        assert_eq!(c.classes, vec![vec![0], vec![1]]);

        let c4 = SignedGraph::circle(4, Sign::Negative);
        assert_eq!(negative_component_classes(&c4).unwrap().classes, vec![vec![0, 2], vec![1, 3]]);

        let two = SignedGraph::new(4, [(0, 1, Sign::Negative), (1, 2, Sign::Positive), (2, 3, Sign::Negative)]).unwrap();
        assert_eq!(negative_component_classes(&two).unwrap().classes, vec![vec![0], vec![1], vec![2], vec![3]]);

        assert!(negative_component_classes(&SignedGraph::circle(4, Sign::Positive)).is_err());
        assert!(negative_component_classes(&SignedGraph::circle(3, Sign::Negative)).is_err());
    }

    #[test]
    fn distances_between_classes() {
        let g = circle_one_negative(5);
        let c = negative_component_classes(&g).unwrap();
        assert_eq!(class_distances(&g, &c)[0][1], Some(4));
        let t = circle_one_negative(3);
        let c = negative_component_classes(&t).unwrap();
        assert_eq!(class_distances(&t, &c)[0][1], Some(2));
    }

    #[test]
    fn phi_scan() {
        let g = circle_one_negative(5);
        let c = negative_component_classes(&g).unwrap();
        let d = class_distances(&g, &c);
        assert_eq!(distance_thresholds(&d), vec![4]);
        let phi = build_phi(&c, &d, 1).unwrap();
        assert!(phi.has_negative_digon());
        assert!(!phi.is_balanced());
        assert_eq!(build_phi(&c, &d, 2), Err(Error::IndexOutOfRange { index: 2, max: 1 }));
    }

    #[test]
    fn mirror_closure() {
        // two negative edges 0-1 and 3-4 on a path 1-2-3 with a long return
        let g = SignedGraph::new(
            7,
            [
                (0, 1, Sign::Negative),
                (1, 2, Sign::Positive),
                (2, 3, Sign::Positive),
                (3, 4, Sign::Negative),
                (4, 5, Sign::Positive),
                (5, 6, Sign::Positive),
                (6, 0, Sign::Positive),
            ],
        )
        .unwrap();
        let c = negative_component_classes(&g).unwrap();
        let d = class_distances(&g, &c);
        for k in 1..=distance_thresholds(&d).len() {
            let phi = build_phi(&c, &d, k).unwrap();
            for &(a, b) in &phi.positive {
                let (x, y) = (a ^ 1, b ^ 1);
                assert!(phi.positive.contains(&(x.min(y), x.max(y))));
            }
        }
    }

    #[test]
    fn circles_with_one_negative_edge() {
        let r = packing_number(&circle_one_negative(5)).unwrap();
        assert_eq!(r.packing_number, 5);
        assert!(r.family.iter().all(|s| s.len() == 1));
        let r = packing_number(&circle_one_negative(3)).unwrap();
        assert_eq!(r.packing_number, 3);
        assert_eq!(r.distance, Some(2));
    }

    #[test]
    fn nonbipartite_negative_set_packs_alone() {
        let mut edges: Vec<_> = SignedGraph::complete(4, Sign::Positive).edges().map(|(e, s)| (e.u(), e.v(), s)).collect();
        for e in &mut edges {
            if e.0 < 3 && e.1 < 3 {
                e.2 = Sign::Negative;
            }
        }
        let g = SignedGraph::new(4, edges).unwrap();
        let r = packing_number(&g).unwrap();
        assert_eq!(r.packing_number, 1);
        assert_eq!(r.family, vec![g.negative_edges()]);
    }

    #[test]
    fn balanced_and_disconnected_inputs_are_rejected() {
        assert!(matches!(packing_number(&SignedGraph::circle(4, Sign::Positive)), Err(Error::Precondition(_))));
        let g = SignedGraph::new(6, [(0, 1, Sign::Negative), (1, 2, Sign::Positive), (0, 2, Sign::Positive), (3, 4, Sign::Positive)]).unwrap();
        assert!(matches!(packing_number(&g), Err(Error::Precondition(_))));
    }
}
