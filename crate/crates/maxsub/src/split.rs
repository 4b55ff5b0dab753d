//! Minimal split completions through the auxiliary-graph bijection, and
//! maximal split deletions by complementation.
//!
//! A split completion induced by a stable set S fills V \ S into a clique.
//! Minimal completions correspond exactly to maximal stable sets of an
//! auxiliary graph f(G): G with every marked vertex x (redundant, or a true
//! twin duplicate) removed whenever V \ N[x] is stable. Maximal stable sets
//! are listed by a vertex-sequential enumerator with polynomial delay and
//! polynomial space.

use crate::graph::{EdgeSet, Graph, Vertex, VertexSet};
use crate::prox::{EnumerationRun, Solution};
use crate::{Error, Result};

/// A minimal split completion: the inducing stable set, the clique side,
/// the fill edges, and the completed graph's full edge set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitCompletion {
    pub stable_set: VertexSet,
    pub clique: VertexSet,
    pub fill_edges: EdgeSet,
    pub total: EdgeSet,
}

/// The auxiliary graph f(G) together with the map from its vertices back to
/// the original labels.
#[derive(Debug, Clone)]
pub struct AuxiliaryGraph {
    pub graph: Graph,
    pub survivors: Vec<Vertex>,
}

/// Marking pass of the auxiliary-graph construction: for each unmarked x in
/// ascending order, every still-unmarked neighbor y with N[x] included in
/// N[y] gets marked. Afterwards every redundant vertex is marked and each
/// class of pairwise true twins keeps at most one unmarked member.
pub fn mark_candidates(g: &Graph) -> VertexSet {
    let mut marked = VertexSet::EMPTY;
    for x in 0..g.n() {
        if marked.contains(x) {
            continue;
        }
        let nx = g.closed_nbrs(x);
        for y in g.nbrs(x).difference(marked).iter() {
            if nx.is_subset(g.closed_nbrs(y)) {
                marked.insert(y);
            }
        }
    }
    marked
}

/// Removes each marked x whose non-neighborhood is a stable set of g.
/// The test uses V \ N[x]; x has no neighbor there, so this is equivalent
/// to V \ N(x) being stable.
pub fn auxiliary_graph(g: &Graph) -> AuxiliaryGraph {
    let marked = mark_candidates(g);
    let mut keep = g.vertices();
    for x in marked.iter() {
        let outside = g.vertices().difference(g.closed_nbrs(x));
        if is_stable(g, outside) {
            keep.remove(x);
        }
    }
    let (graph, survivors) = g.induced(keep);
    AuxiliaryGraph { graph, survivors }
}

pub fn is_stable(g: &Graph, set: VertexSet) -> bool {
    set.iter().all(|v| g.nbrs(v).intersection(set).is_empty())
}

/// The split completion induced by a stable set: all non-edges inside
/// V \ s become fill edges.
pub fn completion_from_stable_set(g: &Graph, s: VertexSet) -> Result<SplitCompletion> {
    if !is_stable(g, s) {
        return Err(Error::Argument(format!("{s:?} is not a stable set")));
    }
    let clique = g.vertices().difference(s);
    let mut fill = Vec::new();
    for u in clique.iter() {
        for v in clique.iter() {
            if v > u && !g.has_edge(u, v) {
                fill.push(crate::graph::Edge::new(u, v));
            }
        }
    }
    let fill_edges = EdgeSet::from_edges(fill);
    let total = g.edges().union(&fill_edges);
    Ok(SplitCompletion { stable_set: s, clique, fill_edges, total })
}

/// All maximal independent sets of g, each exactly once, by the
/// vertex-sequential scheme: a maximal independent set of the graph induced
/// on the first k vertices spawns the maximal independent sets of the first
/// k+1 that it is the canonical parent of. The traversal tree has depth n
/// and every node has a child, which gives polynomial delay in polynomial
/// space.
pub fn enumerate_mis(g: &Graph) -> impl Iterator<Item = (VertexSet, u64)> {
    MisIter { g: g.clone(), stack: vec![(0, VertexSet::EMPTY)], pending_steps: 0 }
}

struct MisIter {
    g: Graph,
    stack: Vec<(usize, VertexSet)>,
    pending_steps: u64,
}

impl MisIter {
    /// Maximality inside the graph induced on vertices 0..level.
    fn is_maximal_at(&self, set: VertexSet, level: usize) -> bool {
        (0..level).all(|u| set.contains(u) || !self.g.nbrs(u).intersection(set).is_empty())
    }

    /// Canonical parent of a set at the previous level: greedy ascending
    /// completion of `base` within 0..level.
    fn parent_of(&self, base: VertexSet, level: usize) -> VertexSet {
        let mut p = base;
        for u in 0..level {
            if !p.contains(u) && self.g.nbrs(u).intersection(p).is_empty() {
                p.insert(u);
            }
        }
        p
    }
}

impl Iterator for MisIter {
    type Item = (VertexSet, u64);

    fn next(&mut self) -> Option<(VertexSet, u64)> {
        let n = self.g.n();
        while let Some((level, set)) = self.stack.pop() {
            self.pending_steps += 1;
            if level == n {
                let steps = self.pending_steps;
                self.pending_steps = 0;
                return Some((set, steps));
            }
            let v = level;
            if self.g.nbrs(v).intersection(set).is_empty() {
                self.stack.push((level + 1, set.with(v)));
            } else {
                // LIFO: push the branched child first so the kept set is
                // explored first
                let branched = set.difference(self.g.nbrs(v)).with(v);
                if self.is_maximal_at(branched, level + 1)
                    && self.parent_of(branched.without(v), level) == set
                {
                    self.stack.push((level + 1, branched));
                }
                self.stack.push((level + 1, set));
            }
        }
        None
    }
}

/// Streams the split completion induced by each maximal independent set of
/// the auxiliary graph; by the bijection these are exactly the minimal
/// split completions, each exactly once.
pub fn enumerate_min_split_completions(g: &Graph) -> EnumerationRun {
    let aux = auxiliary_graph(g);
    let host = g.clone();
    let iter = enumerate_mis(&aux.graph).map(move |(set_in_aux, steps)| {
        let set: VertexSet = set_in_aux.iter().map(|i| aux.survivors[i]).collect();
        let completion = completion_from_stable_set(&host, set)
            .expect("maximal independent sets of f(G) are stable in G");
        (Solution::Edges(completion.total), steps)
    });
    EnumerationRun::from_steps_iter(iter)
}

/// Maximal split deletions, as minimal split completions of the complement.
pub fn enumerate_max_split_deletions(g: &Graph) -> EnumerationRun {
    crate::prox::dual_enumerate(g, crate::recognize::GraphClass::Split, crate::prox::Mode::Deletion)
        .expect("split deletions are dualizable")
}
