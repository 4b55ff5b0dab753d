//! Canonical construction orderings and the edge orderings they induce.
//!
//! Every class except split admits an incremental construction: cographs add
//! a twin at each step, threshold graphs an isolated or universal vertex,
//! trivially perfect graphs a vertex universal to its component, and P3-free
//! graphs follow a cograph twin ordering with all false twins placed before
//! the first true twin. The canonical ordering of a member is the
//! lexicographically smallest valid construction ordering with respect to
//! ascending vertex ids. A plain greedy can dead-end (the prefix 0,2 of a
//! 2K2 on {0,1},{2,3} admits no valid extension), so each greedy step also
//! checks, by memoized search, that the remainder can still be completed.

use std::collections::HashMap;

use crate::graph::{Edge, Graph, TwinKind, Vertex, VertexSet};
use crate::recognize::{recognize, GraphClass};
use crate::{Error, Result};

/// Why a position is a valid extension of its prefix.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Witness {
    /// First position, or a class that needs no witness.
    None,
    /// Index (position in the ordering) of the smallest earlier twin.
    TwinAt(usize),
    Isolated,
    Universal,
}

/// A valid class-specific build sequence for the vertices of a solution.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConstructionOrdering {
    pub cls: GraphClass,
    pub order: Vec<Vertex>,
    pub witnesses: Vec<Witness>,
}

impl ConstructionOrdering {
    pub fn len(&self) -> usize {
        self.order.len()
    }

    pub fn is_empty(&self) -> bool {
        self.order.is_empty()
    }
}

/// Lexicographically smallest valid construction ordering of V(s).
///
/// Greedy selection with a feasibility check: at each step, take the
/// smallest unplaced vertex that validly extends the prefix and from which
/// the remaining vertices can still be completed.
pub fn canonical_vertex_ordering(s: &Graph, cls: GraphClass) -> Result<ConstructionOrdering> {
    if cls == GraphClass::Split {
        return Err(Error::Argument(
            "split graphs have no twin construction ordering".into(),
        ));
    }
    if !recognize(s, cls) {
        return Err(Error::NotInClass(cls));
    }
    let n = s.n();
    let full = VertexSet::full(n);
    let mut memo: HashMap<u64, bool> = HashMap::new();
    let mut order = Vec::with_capacity(n);
    let mut witnesses = Vec::with_capacity(n);
    let mut prefix = VertexSet::EMPTY;
    while prefix != full {
        let mut placed = false;
        for v in full.difference(prefix).iter() {
            if valid_extension(s, cls, prefix, v).is_some()
                && feasible(s, cls, prefix.with(v), full, &mut memo)
            {
                witnesses.push(witness_for(s, cls, prefix, v, &order));
                order.push(v);
                prefix.insert(v);
                placed = true;
                break;
            }
        }
        if !placed {
            // recognize() passed, so a valid ordering exists from the empty
            // prefix; the greedy never strands because of the feasibility gate
            unreachable!("no valid extension of a feasible prefix");
        }
    }
    Ok(ConstructionOrdering { cls, order, witnesses })
}

/// The edge ordering induced by the canonical vertex ordering: for each
/// position j ascending, the edges from v_j to earlier vertices, earlier
/// position first.
pub fn edge_ordering_of(s: &Graph, ordering: &ConstructionOrdering) -> Vec<Edge> {
    let mut out = Vec::with_capacity(s.edge_count());
    for j in 1..ordering.order.len() {
        let vj = ordering.order[j];
        for &vi in &ordering.order[..j] {
            if s.has_edge(vi, vj) {
                out.push(Edge::new(vi, vj));
            }
        }
    }
    out
}

/// Canonical edge ordering of the spanning subgraph `(0..host_n, s_edges)`.
pub fn canonical_edge_ordering(
    s_edges: &crate::graph::EdgeSet,
    host_n: usize,
    cls: GraphClass,
) -> Result<Vec<Edge>> {
    let host = Graph::empty(host_n);
    let s = host.spanning(s_edges);
    let ordering = canonical_vertex_ordering(&s, cls)?;
    Ok(edge_ordering_of(&s, &ordering))
}

fn feasible(
    s: &Graph,
    cls: GraphClass,
    prefix: VertexSet,
    full: VertexSet,
    memo: &mut HashMap<u64, bool>,
) -> bool {
    if prefix == full {
        return true;
    }
    if let Some(&cached) = memo.get(&prefix.bits()) {
        return cached;
    }
    let ok = full
        .difference(prefix)
        .iter()
        .any(|v| valid_extension(s, cls, prefix, v).is_some() && feasible(s, cls, prefix.with(v), full, memo));
    memo.insert(prefix.bits(), ok);
    ok
}

/// Whether v validly extends the prefix, and with what witness kind.
///
/// Validity depends only on the prefix as a set. For P3-free the phase rule
/// ("false twins first") reduces to: a vertex with prefix-neighbors must
/// join a full clique component, an isolated one is allowed only while the
/// prefix is edgeless.
fn valid_extension(s: &Graph, cls: GraphClass, prefix: VertexSet, v: Vertex) -> Option<Witness> {
    let ext = prefix.with(v);
    match cls {
        GraphClass::Cograph => {
            if prefix.is_empty() {
                return Some(Witness::None);
            }
            prefix
                .iter()
                .find(|&u| s.twin_kind(ext, u, v).unwrap() != TwinKind::NotTwins)
                .map(|_| Witness::None)
        }
        GraphClass::Threshold => {
            let d = s.nbrs(v).intersection(prefix).len();
            if d == 0 {
                Some(Witness::Isolated)
            } else if d == prefix.len() {
                Some(Witness::Universal)
            } else {
                None
            }
        }
        GraphClass::TriviallyPerfect => {
            let comp = component_of(s, ext, v);
            if comp.without(v) == s.nbrs(v).intersection(ext) {
                Some(Witness::None)
            } else {
                None
            }
        }
        GraphClass::P3Free => {
            let nb = s.nbrs(v).intersection(prefix);
            if nb.is_empty() {
                if prefix_has_edge(s, prefix) {
                    None
                } else {
                    Some(Witness::None)
                }
            } else {
                let u = nb.min().unwrap();
                let comp = component_of(s, prefix, u);
                if comp == nb {
                    Some(Witness::None)
                } else {
                    None
                }
            }
        }
        GraphClass::Split => None,
    }
}

fn witness_for(
    s: &Graph,
    cls: GraphClass,
    prefix: VertexSet,
    v: Vertex,
    order: &[Vertex],
) -> Witness {
    match cls {
        GraphClass::Cograph | GraphClass::P3Free => {
            let ext = prefix.with(v);
            order
                .iter()
                .position(|&u| s.twin_kind(ext, u, v).unwrap() != TwinKind::NotTwins)
                .map_or(Witness::None, Witness::TwinAt)
        }
        GraphClass::Threshold => valid_extension(s, cls, prefix, v).unwrap_or(Witness::None),
        _ => Witness::None,
    }
}

fn component_of(s: &Graph, within: VertexSet, v: Vertex) -> VertexSet {
    let mut comp = VertexSet::singleton(v);
    let mut frontier = comp;
    while !frontier.is_empty() {
        let mut next = VertexSet::EMPTY;
        for u in frontier.iter() {
            next = next.union(s.nbrs(u).intersection(within));
        }
        frontier = next.difference(comp);
        comp = comp.union(frontier);
    }
    comp
}

fn prefix_has_edge(s: &Graph, prefix: VertexSet) -> bool {
    prefix.iter().any(|u| !s.nbrs(u).intersection(prefix).is_empty())
}

/// Position-by-position check that an ordering satisfies its class rule;
/// used by the property tests.
pub fn is_valid_ordering(s: &Graph, cls: GraphClass, order: &[Vertex]) -> bool {
    if order.len() != s.n() {
        return false;
    }
    if cls == GraphClass::P3Free {
        return is_valid_p3free_ordering(s, order);
    }
    let mut prefix = VertexSet::EMPTY;
    for &v in order {
        if prefix.contains(v) || v >= s.n() || valid_extension(s, cls, prefix, v).is_none() {
            return false;
        }
        prefix.insert(v);
    }
    true
}

/// A twin ordering where some split point has every earlier addition
/// justifiable by a false twin and every later one by a true twin. The
/// first position counts as phase one.
fn is_valid_p3free_ordering(s: &Graph, order: &[Vertex]) -> bool {
    let mut prefix = VertexSet::EMPTY;
    let mut kinds = Vec::with_capacity(order.len());
    for (j, &v) in order.iter().enumerate() {
        if prefix.contains(v) || v >= s.n() {
            return false;
        }
        if j == 0 {
            kinds.push((true, true));
        } else {
            let ext = prefix.with(v);
            let has_false = prefix
                .iter()
                .any(|u| s.twin_kind(ext, u, v).unwrap() == TwinKind::FalseTwins);
            let has_true = prefix
                .iter()
                .any(|u| s.twin_kind(ext, u, v).unwrap() == TwinKind::TrueTwins);
            kinds.push((has_false, has_true));
        }
        prefix.insert(v);
    }
    (0..=kinds.len()).any(|m| {
        kinds[..m].iter().all(|&(f, _)| f) && kinds[m..].iter().all(|&(_, t)| t)
    })
}
