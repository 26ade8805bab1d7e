//! Acyclic negation sets for graphs whose 4-core has maximum degree 4.
//!
//! The 4-core is split into blocks, each block is switched until it has no
//! fully negative circle, and the peeled vertices are added back in reverse
//! order, switching any that would close a fully negative circle.
//!
//! Every move of the main loop is tried on a copy first and kept only if the
//! number of fully negative circles drops, so the loop makes strict progress
//! by construction. Moves are generated in the order of the case analysis:
//! chords, unconnected positive neighbors, positive neighbors of the wrong
//! negative degree, one shared positive neighbor, two shared positive
//! neighbors, and finally the walk along a path joining two neighboring
//! circles.

use std::collections::{BTreeSet, VecDeque};

use serde::Serialize;

use crate::balance::{is_antibalanced, is_balanced};
use crate::error::{Error, Result};
use crate::graph::{Edge, EdgeSet, SignedGraph, VertexSet};

/// One accepted move.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceEntry {
    /// Step of the case analysis that produced the move: 0 is the initial
    /// normalization and 15 the reattachment of peeled vertices.
    pub step: u8,
    /// Host vertices switched by the move, in order.
    pub switched: Vec<usize>,
    /// Host vertices switched afterwards because they had more negative than
    /// positive edges.
    pub normalized: Vec<usize>,
    pub circles_before: usize,
    pub circles_after: usize,
    pub note: Option<String>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct AcyclicStats {
    /// Main-loop passes over all blocks.
    pub iterations: usize,
    /// Fully negative circle count at the start of every pass, block by block.
    pub circle_counts: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AcyclicNegationResult {
    pub switching: VertexSet,
    /// `E⁻(switch(g, switching))`, a forest.
    pub negation_set: EdgeSet,
    pub stats: AcyclicStats,
    pub trace: Vec<TraceEntry>,
}

/// A block of the 4-core in the switching class of `−K₅`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinusK5Exception {
    pub block: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum AcyclicOutcome {
    Acyclic(AcyclicNegationResult),
    MinusK5(MinusK5Exception),
}

/// Switching of a connected graph whose negative edges form a forest.
///
/// Fails with a precondition error for disconnected input or a 4-core of
/// maximum degree above 4, and with [`Error::BudgetExceeded`] after
/// `10·|V|·|E|` main-loop passes.
pub fn acyclic_negation(g: &SignedGraph) -> Result<AcyclicOutcome> {
    if !g.is_connected() {
        return Err(Error::Precondition("graph is not connected; run per component".into()));
    }
    let kcore = g.k_core(4);
    let core = &kcore.core.graph;
    if core.max_degree() > 4 {
        return Err(Error::Precondition(format!("4-core has maximum degree {} > 4", core.max_degree())));
    }

    let blocks = core.blocks();
    for b in &blocks {
        if b.len() == 5 {
            let sub = core.induced_subgraph(b);
            if sub.graph.edge_count() == 10 && is_antibalanced(&sub.graph) {
                return Ok(AcyclicOutcome::MinusK5(MinusK5Exception { block: b.iter().map(|&v| kcore.core.lift(v)).collect() }));
            }
        }
    }

    let budget = (10 * g.vertex_count() * g.edge_count()).max(1);
    let mut run = Run { budget, remaining: budget, stats: AcyclicStats::default(), trace: Vec::new() };

    let mut core_switch = vec![false; core.vertex_count()];
    for (bi, attach) in block_order(&blocks, core.vertex_count()) {
        let block = &blocks[bi];
        if block.len() < 3 {
            continue;
        }
        let current = core.switch_by_mask(&core_switch);
        let sub = current.induced_subgraph(block);
        let to_host: Vec<usize> = sub.to_host.iter().map(|&v| kcore.core.lift(v)).collect();
        let mut work = Work::new(&sub.graph);
        if let Some(k5) = run.reduce(&mut work, &to_host)? {
            return Ok(AcyclicOutcome::MinusK5(MinusK5Exception { block: k5 }));
        }
        // the attachment vertex keeps the state given by earlier blocks;
        // switching the rest of the block instead is the same switching here
        let mut local = work.switched;
        if let Some(a) = attach {
            let ai = sub.to_host.iter().position(|&v| v == a).expect("attachment lies in its block");
            if local[ai] {
                local.iter_mut().for_each(|s| *s = !*s);
            }
        }
        for (i, &v) in sub.to_host.iter().enumerate() {
            core_switch[v] ^= local[i];
        }
    }

    let mut switched = vec![false; g.vertex_count()];
    for (i, &s) in core_switch.iter().enumerate() {
        switched[kcore.core.lift(i)] = s;
    }
    let mut present = vec![false; g.vertex_count()];
    for &v in &kcore.core.to_host {
        present[v] = true;
    }
    for batch in kcore.peel.iter().rev() {
        for &v in batch {
            present[v] = true;
        }
        let mut flips = Vec::new();
        while let Some(&v) = batch.iter().filter(|&&v| present_negative_degree(g, &switched, &present, v) >= 2).min() {
            switched[v] = !switched[v];
            flips.push(v);
        }
        if !flips.is_empty() {
            run.trace.push(TraceEntry {
                step: 15,
                switched: flips,
                normalized: Vec::new(),
                circles_before: 0,
                circles_after: 0,
                note: None,
            });
        }
    }

    let switching = VertexSet::from_mask(g, &switched);
    let negation_set = EdgeSet::from_trusted(
        g,
        g.edges().filter(|(e, s)| s.is_negative() != (switched[e.u()] != switched[e.v()])).map(|(e, _)| e),
    );
    if negation_set != g.switch(&switching)?.negative_edges() {
        return Err(Error::InvariantViolated("negation set does not match the switching".into()));
    }
    if !negation_set.is_forest(g) {
        return Err(Error::InvariantViolated("negation set contains a circle".into()));
    }
    if !is_balanced(&g.negate_edges(&negation_set)?) {
        return Err(Error::InvariantViolated("negating the result does not balance the graph".into()));
    }
    Ok(AcyclicOutcome::Acyclic(AcyclicNegationResult { switching, negation_set, stats: run.stats, trace: run.trace }))
}

fn present_negative_degree(g: &SignedGraph, switched: &[bool], present: &[bool], v: usize) -> usize {
    g.neighbors(v).filter(|&(w, s)| present[w] && s.is_negative() != (switched[v] != switched[w])).count()
}

/// Blocks in breadth-first order over the block–cut forest, each with the
/// single vertex it shares with blocks processed before it.
fn block_order(blocks: &[Vec<usize>], n: usize) -> Vec<(usize, Option<usize>)> {
    let mut of_vertex = vec![Vec::new(); n];
    for (i, b) in blocks.iter().enumerate() {
        for &v in b {
            of_vertex[v].push(i);
        }
    }
    let mut queued = vec![false; blocks.len()];
    let mut owned = vec![false; n];
    let mut order = Vec::with_capacity(blocks.len());
    for start in 0..blocks.len() {
        if queued[start] {
            continue;
        }
        queued[start] = true;
        let mut queue = VecDeque::from([start]);
        while let Some(bi) = queue.pop_front() {
            let attach = blocks[bi].iter().copied().find(|&v| owned[v]);
            order.push((bi, attach));
            for &v in &blocks[bi] {
                owned[v] = true;
            }
            for &v in &blocks[bi] {
                for &bj in &of_vertex[v] {
                    if !queued[bj] {
                        queued[bj] = true;
                        queue.push_back(bj);
                    }
                }
            }
        }
    }
    order
}

/// Mutable signing of one block.
#[derive(Clone)]
struct Work {
    adj: Vec<Vec<(usize, usize)>>,
    neg: Vec<bool>,
    dneg: Vec<usize>,
    switched: Vec<bool>,
}

impl Work {
    fn new(g: &SignedGraph) -> Work {
        let n = g.vertex_count();
        let mut adj = vec![Vec::new(); n];
        let mut neg = Vec::new();
        let mut dneg = vec![0; n];
        for (i, (e, s)) in g.edges().enumerate() {
            adj[e.u()].push((e.v(), i));
            adj[e.v()].push((e.u(), i));
            neg.push(s.is_negative());
            if s.is_negative() {
                dneg[e.u()] += 1;
                dneg[e.v()] += 1;
            }
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        Work { adj, neg, dneg, switched: vec![false; n] }
    }

    fn n(&self) -> usize {
        self.adj.len()
    }

    fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    fn flip(&mut self, v: usize) {
        self.switched[v] = !self.switched[v];
        for &(w, e) in &self.adj[v] {
            if self.neg[e] {
                self.dneg[v] -= 1;
                self.dneg[w] -= 1;
            } else {
                self.dneg[v] += 1;
                self.dneg[w] += 1;
            }
            self.neg[e] = !self.neg[e];
        }
    }

    fn flip_all(&mut self, vs: &[usize]) {
        for &v in vs {
            self.flip(v);
        }
    }

    /// `Some(true)` for a negative edge, `Some(false)` for a positive one.
    fn edge_negative(&self, a: usize, b: usize) -> Option<bool> {
        self.adj[a].iter().find(|&&(w, _)| w == b).map(|&(_, e)| self.neg[e])
    }

    fn positive_neighbors(&self, v: usize) -> Vec<usize> {
        self.adj[v].iter().filter(|&&(_, e)| !self.neg[e]).map(|&(w, _)| w).collect()
    }

    fn negative_neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.adj[v].iter().filter(|&&(_, e)| self.neg[e]).map(|&(w, _)| w)
    }

    /// Switch, smallest first, every vertex with more negative than positive
    /// edges, starting from `seeds` and their neighbors. Never creates a fully
    /// negative circle and strictly reduces the negative edge count.
    fn normalize<I: IntoIterator<Item = usize>>(&mut self, seeds: I) -> Vec<usize> {
        let mut pending = BTreeSet::new();
        for v in seeds {
            pending.insert(v);
            pending.extend(self.adj[v].iter().map(|&(w, _)| w));
        }
        let mut flipped = Vec::new();
        while let Some(v) = pending.pop_first() {
            if 2 * self.dneg[v] > self.degree(v) {
                self.flip(v);
                flipped.push(v);
                pending.extend(self.adj[v].iter().map(|&(w, _)| w));
            }
        }
        flipped
    }

    fn normalize_all(&mut self) -> Vec<usize> {
        self.normalize(0..self.n())
    }

    /// Fully negative circles of a normalized signing (negative degree at
    /// most 2 everywhere), each listed from its smallest vertex towards the
    /// smaller neighbor, ordered by smallest vertex.
    fn circles(&self) -> Vec<Vec<usize>> {
        debug_assert!(self.dneg.iter().all(|&d| d <= 2));
        let n = self.n();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] || self.dneg[s] == 0 {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut i = 0;
            while i < comp.len() {
                let a = comp[i];
                i += 1;
                for b in self.negative_neighbors(a) {
                    if !seen[b] {
                        seen[b] = true;
                        comp.push(b);
                    }
                }
            }
            if comp.len() < 3 || comp.iter().any(|&v| self.dneg[v] != 2) {
                continue;
            }
            let mut circle = vec![s];
            let mut prev = s;
            let mut at = self.negative_neighbors(s).min().unwrap();
            while at != s {
                circle.push(at);
                let next = self.negative_neighbors(at).find(|&w| w != prev).unwrap();
                prev = at;
                at = next;
            }
            out.push(circle);
        }
        out
    }

    fn count(&self) -> usize {
        self.circles().len()
    }

    /// Shortest fully negative path from `a` to `b`.
    fn negative_path(&self, a: usize, b: usize) -> Option<Vec<usize>> {
        let mut prev = vec![usize::MAX; self.n()];
        prev[a] = a;
        let mut queue = VecDeque::from([a]);
        while let Some(x) = queue.pop_front() {
            if x == b {
                let mut path = vec![b];
                let mut at = b;
                while at != a {
                    at = prev[at];
                    path.push(at);
                }
                path.reverse();
                return Some(path);
            }
            for y in self.negative_neighbors(x) {
                if prev[y] == usize::MAX {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Shortest path from `from` to `to` whose vertices avoid `avoid`.
    fn path_avoiding(&self, from: &[usize], to: &[usize], avoid: &[bool]) -> Option<Vec<usize>> {
        let n = self.n();
        let mut target = vec![false; n];
        for &t in to {
            target[t] = true;
        }
        let mut prev = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for &f in from {
            prev[f] = f;
            queue.push_back(f);
        }
        while let Some(x) = queue.pop_front() {
            if target[x] {
                let mut path = vec![x];
                let mut at = x;
                while prev[at] != at {
                    at = prev[at];
                    path.push(at);
                }
                path.reverse();
                return Some(path);
            }
            for &(y, _) in &self.adj[x] {
                if prev[y] == usize::MAX && !avoid[y] {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        None
    }
}

/// A move proposed for one circle.
enum Candidate {
    Switch { step: u8, set: Vec<usize> },
    /// Two adjacent circle vertices `v1, v2` share the negatively adjacent
    /// positive neighbors `v3, v4`.
    Triangle { v1: usize, v2: usize, v3: usize, v4: usize },
}

/// An accepted move, already applied to `work`.
struct Improvement {
    work: Work,
    step: u8,
    switched: Vec<usize>,
    normalized: Vec<usize>,
    note: Option<String>,
}

enum Outcome {
    Improved(Improvement),
    MinusK5(Vec<usize>),
}

struct Run {
    budget: usize,
    remaining: usize,
    stats: AcyclicStats,
    trace: Vec<TraceEntry>,
}

impl Run {
    /// Switch the block until it has no fully negative circle. Returns the
    /// host vertices of a `−K₅` if one is found.
    fn reduce(&mut self, work: &mut Work, to_host: &[usize]) -> Result<Option<Vec<usize>>> {
        let lift = |vs: &[usize]| vs.iter().map(|&v| to_host[v]).collect::<Vec<_>>();
        let flipped = work.normalize_all();
        if !flipped.is_empty() {
            self.trace.push(TraceEntry {
                step: 0,
                switched: lift(&flipped),
                normalized: Vec::new(),
                circles_before: 0,
                circles_after: work.count(),
                note: None,
            });
        }
        loop {
            let circles = work.circles();
            self.stats.circle_counts.push(circles.len());
            if circles.is_empty() {
                return Ok(None);
            }
            if self.remaining == 0 {
                return Err(Error::BudgetExceeded { budget: self.budget });
            }
            self.remaining -= 1;
            self.stats.iterations += 1;

            let before = circles.len();
            let found = match find_improvement(work, &circles) {
                Some(Outcome::MinusK5(block)) => return Ok(Some(lift(&block))),
                Some(Outcome::Improved(imp)) => imp,
                None => {
                    return Err(Error::InvariantViolated(format!(
                        "no switching reduces the {before} fully negative circles of a block"
                    )))
                }
            };
            let after = found.work.count();
            debug_assert!(after < before);
            self.trace.push(TraceEntry {
                step: found.step,
                switched: lift(&found.switched),
                normalized: lift(&found.normalized),
                circles_before: before,
                circles_after: after,
                note: found.note,
            });
            *work = found.work;
        }
    }
}

fn find_improvement(work: &Work, circles: &[Vec<usize>]) -> Option<Outcome> {
    let target = circles.len();
    for c in circles {
        for cand in candidates(work, c) {
            if let Some(out) = evaluate(work, &cand, target, true) {
                return Some(out);
            }
        }
    }
    for c in circles {
        if let Some(imp) = walk_between_circles(work, c, target) {
            return Some(Outcome::Improved(imp));
        }
    }
    for c in circles {
        if let Some(imp) = local_search(work, c, target) {
            return Some(Outcome::Improved(imp));
        }
    }
    None
}

fn candidates(work: &Work, c: &[usize]) -> Vec<Candidate> {
    let k = c.len();
    let mut pos = vec![usize::MAX; work.n()];
    for (i, &v) in c.iter().enumerate() {
        pos[v] = i;
    }
    let adjacent_in_c = |a: usize, b: usize| {
        let d = pos[a].abs_diff(pos[b]);
        d == 1 || d == k - 1
    };
    let mut out = Vec::new();

    // chords
    for &v in c {
        for &(x, _) in &work.adj[v] {
            if v < x && pos[x] != usize::MAX && !adjacent_in_c(v, x) {
                out.push(Candidate::Switch { step: 4, set: vec![v, x] });
            }
        }
    }

    let positive: Vec<Vec<usize>> = c.iter().map(|&v| work.positive_neighbors(v)).collect();

    // positive neighbors not joined by a fully negative path
    for (i, &v) in c.iter().enumerate() {
        if let [x, y] = positive[i][..] {
            if work.negative_path(x, y).is_none() {
                out.push(Candidate::Switch { step: 5, set: vec![v] });
            }
        }
    }

    // positive neighbors of negative degree other than 1
    for (i, &v) in c.iter().enumerate() {
        for &x in &positive[i] {
            match work.dneg[x] {
                0 => out.push(Candidate::Switch { step: 7, set: vec![v] }),
                1 => {}
                _ => {
                    let y = work.adj[x].iter().map(|&(w, _)| w).filter(|&w| pos[w] != usize::MAX).min().unwrap();
                    out.push(Candidate::Switch { step: 7, set: vec![x, y] });
                }
            }
        }
    }

    for i in 0..k {
        for j in i + 1..k {
            let (v1, v2) = (c[i], c[j]);
            let shared: Vec<usize> = positive[i].iter().copied().filter(|x| positive[j].contains(x)).collect();
            match shared[..] {
                [v3] => {
                    if let Some(set) = one_shared_neighbor(work, v1, v2, v3) {
                        out.push(Candidate::Switch { step: 8, set });
                    }
                }
                [p, q] => match work.edge_negative(p, q) {
                    Some(true) if adjacent_in_c(v1, v2) => {
                        out.push(Candidate::Triangle { v1, v2, v3: p, v4: q });
                        out.push(Candidate::Triangle { v1, v2, v3: q, v4: p });
                    }
                    Some(true) => out.push(Candidate::Switch { step: 13, set: vec![v1, v2, p] }),
                    _ => out.push(Candidate::Switch { step: 9, set: vec![v1, v2, p, q] }),
                },
                _ => {}
            }
        }
    }
    out
}

/// `v1` and `v2` share exactly the positive neighbor `v3`: look for a vertex
/// of negative degree at least 3 on the fully negative path joining the
/// positive neighbors of `v1`, then of `v2`.
fn one_shared_neighbor(work: &Work, v1: usize, v2: usize, v3: usize) -> Option<Vec<usize>> {
    for v in [v1, v2] {
        for x in work.positive_neighbors(v) {
            if x == v3 {
                continue;
            }
            if let Some(path) = work.negative_path(v3, x) {
                if let Some(&high) = path.iter().filter(|&&u| work.dneg[u] >= 3).min() {
                    return Some(vec![v, high]);
                }
            }
        }
    }
    None
}

fn evaluate(work: &Work, cand: &Candidate, target: usize, allow_k5: bool) -> Option<Outcome> {
    match *cand {
        Candidate::Switch { step, ref set } => {
            let mut w = work.clone();
            w.flip_all(set);
            let normalized = w.normalize(set.iter().copied());
            (w.count() < target).then(|| {
                Outcome::Improved(Improvement { work: w, step, switched: set.clone(), normalized, note: None })
            })
        }
        Candidate::Triangle { v1, v2, v3, v4 } => {
            let mut w = work.clone();
            let first = vec![v1, v2, v4];
            w.flip_all(&first);
            let quad = [v1, v2, v3, v4];
            let outside: Vec<Vec<usize>> = [v1, v2, v3]
                .iter()
                .map(|&v| w.positive_neighbors(v).into_iter().filter(|x| !quad.contains(x)).collect())
                .collect();
            if let [[a], [b], [c]] = [&outside[0][..], &outside[1][..], &outside[2][..]] {
                if a == b && b == c {
                    let v5 = *a;
                    if w.edge_negative(v4, v5).is_some() {
                        let block = vec![v1, v2, v3, v4, v5];
                        return (allow_k5 && is_k5_antibalanced(&w, &block)).then(|| Outcome::MinusK5(sorted(block)));
                    }
                    let second = [v2, v3, v4, v5];
                    w.flip_all(&second);
                    let mut switched = first.clone();
                    switched.extend(second);
                    let normalized = w.normalize(switched.iter().copied());
                    if w.count() >= target {
                        return None;
                    }
                    return Some(Outcome::Improved(Improvement { work: w, step: 11, switched, normalized, note: None }));
                }
            }
            // the triangle v1 v2 v3 now shares the positive neighbor v4 pairwise
            let triangle = [v1, v2, v3];
            for (i, j) in [(0, 1), (0, 2), (1, 2)] {
                let (a, b) = (triangle[i], triangle[j]);
                let pa = w.positive_neighbors(a);
                let pb = w.positive_neighbors(b);
                let shared: Vec<usize> = pa.iter().copied().filter(|x| pb.contains(x)).collect();
                if let [s] = shared[..] {
                    if let Some(set) = one_shared_neighbor(&w, a, b, s) {
                        let mut t = w.clone();
                        t.flip_all(&set);
                        let mut switched = first.clone();
                        switched.extend(&set);
                        let normalized = t.normalize(switched.iter().copied());
                        if t.count() < target {
                            return Some(Outcome::Improved(Improvement {
                                work: t,
                                step: 12,
                                switched,
                                normalized,
                                note: Some("one shared positive neighbor on the new triangle".into()),
                            }));
                        }
                    }
                }
            }
            let normalized = w.normalize(first.iter().copied());
            (w.count() < target).then(|| {
                Outcome::Improved(Improvement {
                    work: w,
                    step: 12,
                    switched: first,
                    normalized,
                    note: Some("triangle resolved by normalization".into()),
                })
            })
        }
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn is_k5_antibalanced(work: &Work, block: &[usize]) -> bool {
    let mut edges = Vec::new();
    for (i, &a) in block.iter().enumerate() {
        for &b in &block[i + 1..] {
            match work.edge_negative(a, b) {
                Some(neg) => edges.push((Edge::new(i, block.iter().position(|&x| x == b).unwrap()), neg)),
                None => return false,
            }
        }
    }
    let k5 = SignedGraph::new(
        5,
        edges.into_iter().map(|(e, neg)| (e.u(), e.v(), if neg { crate::Sign::Negative } else { crate::Sign::Positive })),
    )
    .expect("five distinct vertices");
    is_antibalanced(&k5)
}

/// The walk along a path joining the circles through two vertices of `c`:
/// switch `v1`, then the path vertices one at a time, then `v2` with the
/// last edge of the path. Accepted as soon as a prefix, followed by
/// normalization or one of the ordinary moves, reduces the circle count.
fn walk_between_circles(work: &Work, c: &[usize], target: usize) -> Option<Improvement> {
    let n = work.n();
    let mut on_c = vec![false; n];
    for &v in c {
        on_c[v] = true;
    }
    // the fully negative path joining the positive neighbors of each vertex
    let joins: Vec<Option<Vec<usize>>> = c
        .iter()
        .map(|&v| match work.positive_neighbors(v)[..] {
            [x, y] => work.negative_path(x, y).filter(|p| p.iter().all(|&u| !on_c[u])),
            _ => None,
        })
        .collect();

    for i in 0..c.len() {
        for j in 0..c.len() {
            let (Some(q1), Some(q2)) = (&joins[i], &joins[j]) else { continue };
            if i == j || q1.iter().any(|u| q2.contains(u)) {
                continue;
            }
            let Some(path) = work.path_avoiding(q1, q2, &on_c) else { continue };
            let (v1, v2) = (c[i], c[j]);
            let m = path.len();
            let mut moves: Vec<Vec<usize>> = vec![vec![v1]];
            moves.extend(path[..m.saturating_sub(2)].iter().map(|&w| vec![w]));
            let mut last = vec![v2];
            last.extend(&path[m.saturating_sub(2)..]);
            moves.push(last);

            let mut state = work.clone();
            let mut switched = Vec::new();
            for mv in &moves {
                state.flip_all(mv);
                switched.extend(mv);
                let mut t = state.clone();
                let normalized = t.normalize(switched.iter().copied());
                if t.count() < target {
                    return Some(Improvement {
                        work: t,
                        step: 14,
                        switched,
                        normalized,
                        note: Some(format!("walk from {v1} to {v2} along {path:?}")),
                    });
                }
                for circle in t.circles() {
                    for cand in candidates(&t, &circle) {
                        if let Some(Outcome::Improved(imp)) = evaluate(&t, &cand, target, false) {
                            let mut all = switched.clone();
                            all.extend(&normalized);
                            all.extend(&imp.switched);
                            return Some(Improvement {
                                step: 14,
                                switched: all,
                                note: Some(format!("walk from {v1} to {v2} along {path:?}, finished by step {}", imp.step)),
                                ..imp
                            });
                        }
                    }
                }
            }
        }
    }
    None
}

/// Last resort: switch every set of at most three vertices within distance
/// two of `c` and keep the first that reduces the circle count.
fn local_search(work: &Work, c: &[usize], target: usize) -> Option<Improvement> {
    const POOL: usize = 40;
    let mut dist = vec![usize::MAX; work.n()];
    let mut pool = Vec::new();
    let mut queue = VecDeque::new();
    for &v in c {
        dist[v] = 0;
        queue.push_back(v);
    }
    while let Some(x) = queue.pop_front() {
        pool.push(x);
        if dist[x] == 2 {
            continue;
        }
        for &(y, _) in &work.adj[x] {
            if dist[y] == usize::MAX {
                dist[y] = dist[x] + 1;
                queue.push_back(y);
            }
        }
    }
    pool.truncate(POOL);
    pool.sort_unstable();

    let try_set = |set: Vec<usize>| {
        let mut w = work.clone();
        w.flip_all(&set);
        let normalized = w.normalize(set.iter().copied());
        (w.count() < target).then(|| Improvement {
            work: w,
            step: 14,
            switched: set,
            normalized,
            note: Some("fallback: local switching search".into()),
        })
    };
    let p = pool.len();
    let singles = (0..p).map(|a| vec![pool[a]]);
    let pairs = (0..p).flat_map(|a| (a + 1..p).map(move |b| (a, b))).map(|(a, b)| vec![pool[a], pool[b]]);
    let triples = (0..p)
        .flat_map(|a| (a + 1..p).flat_map(move |b| (b + 1..p).map(move |d| (a, b, d))))
        .map(|(a, b, d)| vec![pool[a], pool[b], pool[d]]);
    if let Some(imp) = singles.chain(pairs).chain(triples).find_map(try_set) {
        return Some(imp);
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign;

    fn expect_acyclic(g: &SignedGraph) -> AcyclicNegationResult {
        match acyclic_negation(g).unwrap() {
            AcyclicOutcome::Acyclic(r) => {
                assert!(r.negation_set.is_forest(g));
                r
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn all_positive_quartic_needs_nothing() {
        let g = SignedGraph::complete(5, Sign::Positive);
        let r = expect_acyclic(&g);
        assert!(r.negation_set.is_empty());
    }

    #[test]
    fn minus_k5_is_the_exception() {
        let g = SignedGraph::complete(5, Sign::Negative);
        assert_eq!(acyclic_negation(&g).unwrap(), AcyclicOutcome::MinusK5(MinusK5Exception { block: vec![0, 1, 2, 3, 4] }));
        // any switching of it too
        let x = VertexSet::new(&g, [1, 3]).unwrap();
        assert!(matches!(acyclic_negation(&g.switch(&x).unwrap()).unwrap(), AcyclicOutcome::MinusK5(_)));
    }

    #[test]
    fn k5_with_one_negative_edge() {
        let g = SignedGraph::new(
            5,
            SignedGraph::complete(5, Sign::Positive)
                .edges()
                .map(|(e, _)| (e.u(), e.v(), if e == Edge::new(0, 1) { Sign::Negative } else { Sign::Positive })),
        )
        .unwrap();
        expect_acyclic(&g);
    }

    #[test]
    fn negative_octahedron() {
        // K_{2,2,2}: 4-regular, not K5
        let g = SignedGraph::new(
            6,
            (0..6).flat_map(|a| (a + 1..6).filter(move |&b| b != a + 3 || a >= 3).map(move |b| (a, b, Sign::Negative))),
        )
        .unwrap();
        assert_eq!(g.max_degree(), 4);
        expect_acyclic(&g);
    }

    #[test]
    fn sub_cubic_graphs_are_handled_by_reattachment() {
        let g = SignedGraph::circle(7, Sign::Negative);
        let r = expect_acyclic(&g);
        assert!(r.trace.iter().all(|t| t.step == 15));
    }

    #[test]
    fn rejects_disconnected_and_dense_cores() {
        let two = SignedGraph::new(4, [(0, 1, Sign::Negative), (2, 3, Sign::Negative)]).unwrap();
        assert!(matches!(acyclic_negation(&two), Err(Error::Precondition(_))));
        assert!(matches!(acyclic_negation(&SignedGraph::complete(6, Sign::Negative)), Err(Error::Precondition(_))));
    }

    #[test]
    fn k5_blocks_sharing_a_vertex() {
        // the pendant path is peeled off and the K5 block is reported
        let mut edges: Vec<(usize, usize, Sign)> =
            SignedGraph::complete(5, Sign::Negative).edges().map(|(e, s)| (e.u(), e.v(), s)).collect();
        edges.push((4, 5, Sign::Negative));
        edges.push((5, 6, Sign::Positive));
        let g = SignedGraph::new(7, edges).unwrap();
        assert_eq!(acyclic_negation(&g).unwrap(), AcyclicOutcome::MinusK5(MinusK5Exception { block: vec![0, 1, 2, 3, 4] }));
    }
}
