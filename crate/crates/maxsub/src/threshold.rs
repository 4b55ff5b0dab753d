//! Minimal threshold deletions by proximity search with the
//! make-x-universal neighbor function, and the sandwich-monotone greedy
//! completion. Completions come out of the complement dual.

use crate::graph::{Edge, EdgeSet, Graph, Vertex};
use crate::prox::{proximity_search, EnumerationRun, Solution};
use crate::recognize::{recognize_edges, GraphClass};
use crate::{Error, Result};

/// Greedy edge completion: repeatedly scans the remaining host edges in
/// ascending order and adds any edge whose addition keeps the graph
/// threshold, until a full scan adds nothing. Sandwich monotonicity of the
/// class makes the fixpoint a maximal threshold edge-subgraph.
pub fn complete_threshold(g: &Graph, e0: &EdgeSet) -> Result<EdgeSet> {
    if !recognize_edges(g, e0, GraphClass::Threshold) {
        return Err(Error::Argument("complete: seed is not a threshold graph".into()));
    }
    let mut cur = e0.clone();
    let host_edges = g.edges();
    loop {
        let mut added = false;
        for e in host_edges.iter() {
            if !cur.contains(e) {
                cur.insert(e);
                if recognize_edges(g, &cur, GraphClass::Threshold) {
                    added = true;
                } else {
                    cur.remove(e);
                }
            }
        }
        if !added {
            return Ok(cur);
        }
    }
}

/// Neighbor that makes x universal in the construction ordering: keep the
/// host star at x plus the solution edges between neighbors of x; all
/// non-neighbors of x come out isolated, which is the graph the validity
/// argument analyzes (the per-vertex bundle union would leak edges from a
/// neighbor of x to a non-neighbor).
pub fn neighbor_threshold(g: &Graph, s: &EdgeSet, x: Vertex) -> Result<EdgeSet> {
    if x >= g.n() {
        return Err(Error::VertexOutOfRange { v: x, n: g.n() });
    }
    let ng_x = g.nbrs(x);
    let mut tilde: Vec<Edge> = ng_x.iter().map(|v| Edge::new(x, v)).collect();
    for e in s.iter() {
        let (u, v) = e.endpoints();
        if ng_x.contains(u) && ng_x.contains(v) {
            tilde.push(e);
        }
    }
    let tilde = EdgeSet::from_edges(tilde);
    debug_assert!(recognize_edges(g, &tilde, GraphClass::Threshold));
    complete_threshold(g, &tilde)
}

/// All minimal threshold deletions, by proximity search with one neighbor
/// per vertex.
pub fn enumerate_min_threshold_deletions(g: &Graph) -> EnumerationRun {
    let host = g.clone();
    let initial = complete_threshold(&host, &EdgeSet::new()).expect("empty edge set is threshold");
    proximity_search(Solution::Edges(initial), move |sol| {
        let s = sol.edges().expect("deletion run carries edge solutions");
        (0..host.n())
            .map(|x| {
                Solution::Edges(neighbor_threshold(&host, s, x).expect("vertex in range"))
            })
            .collect()
    })
}
