//! Maximal induced sub-cographs and minimal cograph deletions by proximity
//! search, with the cograph sandwich decision underneath the deletion-side
//! `complete`.

use crate::graph::{Edge, EdgeSet, Graph, Vertex, VertexSet};
use crate::prox::{proximity_search, EnumerationRun, Solution};
use crate::recognize::{recognize, GraphClass};
use crate::{Error, Result};

/// Decides whether some cograph H satisfies E(g1) ⊆ E(H) ⊆ E(g2).
///
/// Recursive decomposition: a disconnected mandatory graph splits into a
/// union over its components; a co-disconnected allowed graph splits into a
/// join over the co-components (all cross pairs become join edges, which the
/// allowed graph permits by construction); a single vertex is trivially a
/// cograph; anything else has no sandwich.
pub fn cograph_sandwich(g1_edges: &EdgeSet, g2: &Graph) -> Result<bool> {
    let g1 = check_sandwich_instance(g1_edges, g2)?;
    Ok(sandwich_rec(&g1, g2, g2.vertices()))
}

fn check_sandwich_instance(g1_edges: &EdgeSet, g2: &Graph) -> Result<Graph> {
    for e in g1_edges.iter() {
        if !g2.contains_edge(e) {
            return Err(Error::Argument(format!(
                "sandwich: mandatory edge {e:?} is not allowed by g2"
            )));
        }
    }
    Ok(g2.spanning(g1_edges))
}

fn sandwich_rec(g1: &Graph, g2: &Graph, verts: VertexSet) -> bool {
    if verts.len() <= 1 {
        return true;
    }
    let comps = components_within(g1, verts);
    if comps.len() > 1 {
        return comps.into_iter().all(|c| sandwich_rec(g1, g2, c));
    }
    let co_comps = co_components_within(g2, verts);
    if co_comps.len() > 1 {
        return co_comps.into_iter().all(|c| sandwich_rec(g1, g2, c));
    }
    false
}

pub(crate) fn components_within(g: &Graph, verts: VertexSet) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for start in verts.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(g.nbrs(v).intersection(verts));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

fn co_components_within(g: &Graph, verts: VertexSet) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for start in verts.iter() {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut frontier = comp;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(verts.difference(g.nbrs(v)).without(v));
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Greedy vertex completion: grows x into a maximal induced sub-cograph,
/// trying candidates in ascending order.
pub fn complete_induced_cograph(g: &Graph, x: VertexSet) -> Result<VertexSet> {
    if !induced_is_cograph(g, x) {
        return Err(Error::Argument("complete: seed does not induce a cograph".into()));
    }
    let mut cur = x;
    for v in 0..g.n() {
        if !cur.contains(v) && induced_is_cograph(g, cur.with(v)) {
            cur.insert(v);
        }
    }
    Ok(cur)
}

pub(crate) fn induced_is_cograph(g: &Graph, x: VertexSet) -> bool {
    let (sub, _) = g.induced(x);
    recognize(&sub, GraphClass::Cograph)
}

/// Edge completion driven by the sandwich algorithm: grows e0 one edge at a
/// time in ascending order, keeping an edge exactly when a cograph still
/// fits between the grown set and g. Rejections are permanent (a witness
/// for a larger mandatory set is a witness for the smaller), so a single
/// pass reaches a maximal cograph edge-subgraph.
pub fn complete_cograph_deletion(g: &Graph, e0: &EdgeSet) -> Result<EdgeSet> {
    if !cograph_sandwich(e0, g)? {
        return Err(Error::Argument("complete: seed admits no cograph sandwich".into()));
    }
    let mut cur = e0.clone();
    for e in g.edges().iter() {
        if !cur.contains(e) {
            cur.insert(e);
            if !cograph_sandwich(&cur, g).expect("edges stay inside g") {
                cur.remove(e);
            }
        }
    }
    Ok(cur)
}

/// Induced-mode neighbor: drop the vertices where x's host adjacency and
/// y's solution adjacency disagree, add x, and complete. Always a maximal
/// induced sub-cograph containing x and y.
pub fn neighbor_induced(g: &Graph, s: VertexSet, x: Vertex, y: Vertex) -> Result<VertexSet> {
    if s.contains(x) || !s.contains(y) || x >= g.n() {
        return Err(Error::Argument(format!("neighbor_induced needs x ∉ s, y ∈ s; got x={x}, y={y}")));
    }
    let ns_y = g.nbrs(y).intersection(s);
    let conflict = g.nbrs(x).symmetric_difference(ns_y);
    let base = s.difference(conflict).with(x).with(y);
    complete_induced_cograph(g, base)
}

/// Deletion-mode neighbor: reshape the solution so that x and y come out as
/// twins, then complete. The per-vertex bundles follow the union
/// materialization; when the union is not completable (which a worked
/// 5-vertex instance shows can happen for some pairs), the neighbor falls
/// back to s itself, which keeps every neighbor a valid solution.
pub fn neighbor_deletion(g: &Graph, s: &EdgeSet, x: Vertex, y: Vertex) -> Result<EdgeSet> {
    if x == y || x >= g.n() || y >= g.n() {
        return Err(Error::Argument(format!("neighbor_deletion needs distinct vertices, got {x},{y}")));
    }
    let sg = g.spanning(s);
    let ns_x = sg.nbrs(x);
    let ns_y = sg.nbrs(y);
    let ng_y = g.nbrs(y);

    let mut tilde = Vec::new();
    // x keeps its solution edges toward G-neighbors of y
    let ex_targets = ns_x.intersection(ng_y);
    for w in ex_targets.iter() {
        tilde.push(Edge::new(x, w));
    }
    // y takes host edges toward solution neighbors of x
    let ey_targets = ng_y.intersection(ns_x);
    for w in ey_targets.iter() {
        tilde.push(Edge::new(y, w));
    }
    let ex_empty = ex_targets.is_empty();
    let ey_empty = ey_targets.is_empty();
    // solution neighbors of y that lose their y-edge become isolated
    let zeroed = ns_y.difference(ns_x).without(x);
    // every other vertex keeps its solution edges except those toward
    // emptied bundles
    for v in 0..g.n() {
        if v == x || v == y || zeroed.contains(v) {
            continue;
        }
        for w in sg.nbrs(v).iter() {
            if zeroed.contains(w) {
                continue;
            }
            if (w == x && ex_empty) || (w == y && ey_empty) {
                continue;
            }
            tilde.push(Edge::new(v, w));
        }
    }
    let tilde = EdgeSet::from_edges(tilde);
    if cograph_sandwich(&tilde, g)? {
        complete_cograph_deletion(g, &tilde)
    } else {
        Ok(s.clone())
    }
}

/// All maximal induced sub-cographs, by proximity search from the greedy
/// completion of the empty set.
pub fn enumerate_max_induced_subcographs(g: &Graph) -> EnumerationRun {
    let host = g.clone();
    let initial = complete_induced_cograph(&host, VertexSet::EMPTY).expect("empty set is a cograph");
    proximity_search(Solution::Vertices(initial), move |sol| {
        let s = sol.vertices().expect("induced run carries vertex solutions");
        let mut out = Vec::new();
        for x in 0..host.n() {
            if s.contains(x) {
                continue;
            }
            for y in s.iter() {
                let next = neighbor_induced(&host, s, x, y).expect("neighbor preconditions hold");
                out.push(Solution::Vertices(next));
            }
        }
        out
    })
}

/// All minimal cograph deletions, by proximity search over ordered vertex
/// pairs (the neighbor operation is not symmetric in x and y).
pub fn enumerate_min_cograph_deletions(g: &Graph) -> EnumerationRun {
    let host = g.clone();
    let initial =
        complete_cograph_deletion(&host, &EdgeSet::new()).expect("empty edge set sandwiches");
    proximity_search(Solution::Edges(initial), move |sol| {
        let s = sol.edges().expect("deletion run carries edge solutions");
        let mut out = Vec::new();
        for x in 0..host.n() {
            for y in 0..host.n() {
                if x == y {
                    continue;
                }
                let next = neighbor_deletion(&host, s, x, y).expect("vertices in range");
                out.push(Solution::Edges(next));
            }
        }
        out
    })
}
