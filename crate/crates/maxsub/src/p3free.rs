//! The unique minimal P3-free completion, the P3-free sandwich test, and
//! proximity-search enumeration of minimal P3-free deletions.
//!
//! P3-free graphs are disjoint unions of cliques, so completing is forced:
//! every connected component becomes a clique.

use crate::graph::{Edge, EdgeSet, Graph, Vertex, VertexSet};
use crate::prox::{proximity_search, EnumerationRun, Solution};
use crate::{Error, Result};

/// Edge set of the unique minimal P3-free completion: each component of g
/// turned into a clique. Superset of E(g).
pub fn unique_p3free_completion(g: &Graph) -> EdgeSet {
    let mut edges = Vec::new();
    for comp in g.connected_components(None) {
        for u in comp.iter() {
            for v in comp.iter() {
                if v > u {
                    edges.push(Edge::new(u, v));
                }
            }
        }
    }
    EdgeSet::from_edges(edges)
}

/// Streams the single minimal P3-free completion.
pub fn enumerate_min_p3free_completions(g: &Graph) -> EnumerationRun {
    EnumerationRun::single(Solution::Edges(unique_p3free_completion(g)))
}

/// True iff some P3-free graph fits between (V, g1_edges) and g2, which
/// holds exactly when every component of the mandatory graph induces a
/// clique in g2 (the unique minimal completion must fit).
pub fn p3_sandwich(g1_edges: &EdgeSet, g2: &Graph) -> Result<bool> {
    for e in g1_edges.iter() {
        if !g2.contains_edge(e) {
            return Err(Error::Argument(format!(
                "sandwich: mandatory edge {e:?} is not allowed by g2"
            )));
        }
    }
    for comp in g2.connected_components(Some(g1_edges)) {
        for u in comp.iter() {
            for v in comp.iter() {
                if v > u && !g2.has_edge(u, v) {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Sandwich-gated edge completion, ascending; rejections are permanent, so
/// one pass yields a maximal P3-free edge-subgraph containing e0.
pub fn complete_p3free_deletion(g: &Graph, e0: &EdgeSet) -> Result<EdgeSet> {
    if !p3_sandwich(e0, g)? {
        return Err(Error::Argument("complete: seed admits no P3-free sandwich".into()));
    }
    let mut cur = e0.clone();
    for e in g.edges().iter() {
        if !cur.contains(e) {
            cur.insert(e);
            if !p3_sandwich(&cur, g).expect("edges stay inside g") {
                cur.remove(e);
            }
        }
    }
    Ok(cur)
}

/// Deletion-mode neighbor: pull x and y into one clique. Requires
/// xy ∈ E(g) \ s. The bundles regroup the old cliques of x and y:
/// the part of x's clique seen by y joins the new clique, the rest of each
/// old clique stays together, everything else is untouched.
pub fn neighbor_p3(g: &Graph, s: &EdgeSet, x: Vertex, y: Vertex) -> Result<EdgeSet> {
    if x == y || x >= g.n() || y >= g.n() {
        return Err(Error::Argument(format!("neighbor_p3 needs distinct vertices, got {x},{y}")));
    }
    let e = Edge::new(x, y);
    if !g.contains_edge(e) || s.contains(e) {
        return Err(Error::Argument(format!("neighbor_p3 needs xy in E(g) \\ s, got {e:?}")));
    }
    let sg = g.spanning(s);
    let ns_x = sg.nbrs(x);
    let ns_y = sg.nbrs(y);
    let ng_y = g.nbrs(y);

    let mut tilde = vec![e];
    // x keeps its solution edges toward G-neighbors of y; y adopts the
    // reachable part of x's clique
    let joint = ns_x.intersection(ng_y);
    for w in joint.iter() {
        tilde.push(Edge::new(x, w));
        tilde.push(Edge::new(y, w));
    }
    // y's old clique keeps its edges minus y
    for u in ns_y.iter() {
        for v in ns_y.iter() {
            if v > u {
                tilde.push(Edge::new(u, v));
            }
        }
    }
    // the joint part forms a clique with y; the unseen part of x's old
    // clique keeps its own edges
    for u in joint.iter() {
        for v in joint.iter() {
            if v > u {
                tilde.push(Edge::new(u, v));
            }
        }
    }
    let rest_x = ns_x.difference(ng_y);
    for u in rest_x.iter() {
        for v in rest_x.iter() {
            if v > u {
                tilde.push(Edge::new(u, v));
            }
        }
    }
    // every vertex outside the two touched cliques keeps all its edges
    let touched = ns_x.union(ns_y).with(x).with(y);
    for u in 0..g.n() {
        if touched.contains(u) {
            continue;
        }
        for w in sg.nbrs(u).iter() {
            if w > u {
                tilde.push(Edge::new(u, w));
            }
        }
    }
    let tilde = EdgeSet::from_edges(tilde);
    debug_assert!(p3_sandwich(&tilde, g).unwrap(), "bundles form disjoint cliques inside g");
    complete_p3free_deletion(g, &tilde)
}

/// All minimal P3-free deletions, by proximity search with neighbors over
/// every non-solution host edge in both orientations.
pub fn enumerate_min_p3free_deletions(g: &Graph) -> EnumerationRun {
    let host = g.clone();
    let initial =
        complete_p3free_deletion(&host, &EdgeSet::new()).expect("empty edge set sandwiches");
    proximity_search(Solution::Edges(initial), move |sol| {
        let s = sol.edges().expect("deletion run carries edge solutions");
        let mut out = Vec::new();
        for e in host.edges().iter() {
            if s.contains(e) {
                continue;
            }
            let (u, v) = e.endpoints();
            for (x, y) in [(u, v), (v, u)] {
                let next = neighbor_p3(&host, s, x, y).expect("edge is in E(g) \\ s");
                out.push(Solution::Edges(next));
            }
        }
        out
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::tests::random_graph;
    use crate::recognize::{recognize, GraphClass};

    #[test]
    fn unique_completion_examples() {
        let p3 = Graph::path(3);
        assert_eq!(unique_p3free_completion(&p3), Graph::complete(3).edges());
        let two_k2 = Graph::new(4, &[(0, 1), (2, 3)]).unwrap();
        assert_eq!(unique_p3free_completion(&two_k2), two_k2.edges());
        let p4 = Graph::path(4);
        assert_eq!(unique_p3free_completion(&p4), Graph::complete(4).edges());
    }

    #[test]
    fn unique_completion_is_p3free_and_minimal() {
        for seed in 0..80u64 {
            let g = random_graph(6, seed);
            let comp = unique_p3free_completion(&g);
            assert!(g.edges().is_subset(&comp));
            assert!(recognize(&g.spanning(&comp), GraphClass::P3Free));
            for e in comp.difference(&g.edges()).iter() {
                let mut smaller = comp.clone();
                smaller.remove(e);
                assert!(
                    !recognize(&g.spanning(&smaller), GraphClass::P3Free),
                    "removable fill {e:?} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn sandwich_examples() {
        let p3 = Graph::path(3);
        assert!(!p3_sandwich(&p3.edges(), &p3).unwrap());
        assert!(p3_sandwich(&EdgeSet::from_pairs(&[(0, 1)]), &p3).unwrap());
        assert!(p3_sandwich(&EdgeSet::new(), &p3).unwrap());
        assert!(p3_sandwich(&EdgeSet::from_pairs(&[(0, 2)]), &p3).is_err());
    }

    #[test]
    fn sandwich_matches_brute_force() {
        for seed in 0..80u64 {
            let g2 = random_graph(5, seed);
            let all: Vec<Edge> = g2.edges().iter().collect();
            for mask in 0u64..1 << all.len().min(10) {
                let g1: EdgeSet = all
                    .iter()
                    .enumerate()
                    .filter(|(i, _)| mask >> i & 1 == 1)
                    .map(|(_, e)| *e)
                    .collect();
                let brute = {
                    let optional: Vec<Edge> = g2.edges().difference(&g1).iter().collect();
                    (0u64..1 << optional.len()).any(|m| {
                        let mut edges = g1.clone();
                        for (i, e) in optional.iter().enumerate() {
                            if m >> i & 1 == 1 {
                                edges.insert(*e);
                            }
                        }
                        recognize(&g2.spanning(&edges), GraphClass::P3Free)
                    })
                };
                assert_eq!(p3_sandwich(&g1, &g2).unwrap(), brute, "g1={g1:?} g2={g2:?}");
            }
        }
    }

    #[test]
    fn neighbor_examples() {
        let p5 = Graph::path(5);
        let s = EdgeSet::from_pairs(&[(1, 2), (3, 4)]);
        assert_eq!(
            neighbor_p3(&p5, &s, 0, 1).unwrap(),
            EdgeSet::from_pairs(&[(0, 1), (3, 4)])
        );
        let p3 = Graph::path(3);
        let s = EdgeSet::from_pairs(&[(0, 1)]);
        assert_eq!(neighbor_p3(&p3, &s, 2, 1).unwrap(), EdgeSet::from_pairs(&[(1, 2)]));
        // xy already in s violates the precondition
        assert!(neighbor_p3(&p3, &s, 0, 1).is_err());
    }

    #[test]
    fn enumerate_deletion_counts() {
        let p5 = Graph::path(5);
        let got: std::collections::HashSet<EdgeSet> = enumerate_min_p3free_deletions(&p5)
            .map(|s| s.edges().unwrap().clone())
            .collect();
        let expect: std::collections::HashSet<EdgeSet> = [
            EdgeSet::from_pairs(&[(0, 1), (2, 3)]),
            EdgeSet::from_pairs(&[(0, 1), (3, 4)]),
            EdgeSet::from_pairs(&[(1, 2), (3, 4)]),
        ]
        .into_iter()
        .collect();
        assert_eq!(got, expect);

        let k3 = Graph::complete(3);
        let sols: Vec<Solution> = enumerate_min_p3free_deletions(&k3).collect();
        assert_eq!(sols.len(), 1);
        assert_eq!(sols[0].edges().unwrap(), &k3.edges());

        let p3 = Graph::path(3);
        assert_eq!(enumerate_min_p3free_deletions(&p3).count(), 2);
    }
}
