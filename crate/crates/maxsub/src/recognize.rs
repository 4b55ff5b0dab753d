//! Class membership tests and cotree construction.
//!
//! Each class is recognized through its forbidden induced patterns:
//! split = (C4, 2K2, C5)-free, cograph = P4-free, P3-free, threshold =
//! (P4, C4, 2K2)-free, trivially perfect = (P4, C4)-free. Cotrees are built
//! by the complement-components recursion.

use crate::graph::{EdgeSet, Graph, Pattern, Vertex, VertexSet};

/// The five hereditary classes handled by the enumerators.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GraphClass {
    Split,
    Cograph,
    P3Free,
    Threshold,
    TriviallyPerfect,
}

impl GraphClass {
    pub const ALL: [GraphClass; 5] = [
        GraphClass::Split,
        GraphClass::Cograph,
        GraphClass::P3Free,
        GraphClass::Threshold,
        GraphClass::TriviallyPerfect,
    ];

    /// Forbidden induced subgraphs characterizing the class.
    pub fn forbidden_patterns(self) -> &'static [Pattern] {
        match self {
            GraphClass::Split => &[Pattern::C4, Pattern::TwoK2, Pattern::C5],
            GraphClass::Cograph => &[Pattern::P4],
            GraphClass::P3Free => &[Pattern::P3],
            GraphClass::Threshold => &[Pattern::P4, Pattern::C4, Pattern::TwoK2],
            GraphClass::TriviallyPerfect => &[Pattern::P4, Pattern::C4],
        }
    }

    /// Whether the complement of a member is again a member.
    pub fn self_complementary(self) -> bool {
        matches!(self, GraphClass::Split | GraphClass::Cograph | GraphClass::Threshold)
    }

    pub fn name(self) -> &'static str {
        match self {
            GraphClass::Split => "split",
            GraphClass::Cograph => "cograph",
            GraphClass::P3Free => "p3free",
            GraphClass::Threshold => "threshold",
            GraphClass::TriviallyPerfect => "tp",
        }
    }
}

impl std::fmt::Display for GraphClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for GraphClass {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "split" => Ok(GraphClass::Split),
            "cograph" => Ok(GraphClass::Cograph),
            "p3free" => Ok(GraphClass::P3Free),
            "threshold" => Ok(GraphClass::Threshold),
            "tp" => Ok(GraphClass::TriviallyPerfect),
            other => Err(format!("unknown class '{other}' (expected split|cograph|p3free|threshold|tp)")),
        }
    }
}

/// True iff `g` has no induced occurrence of the class's forbidden patterns.
pub fn recognize(g: &Graph, cls: GraphClass) -> bool {
    cls.forbidden_patterns().iter().all(|&p| !g.has_forbidden(p))
}

/// Membership of the spanning subgraph `(V(g), edges)`.
pub fn recognize_edges(g: &Graph, edges: &EdgeSet, cls: GraphClass) -> bool {
    let sub = g.spanning(edges);
    recognize(&sub, cls)
}

/// Union/join decomposition tree realizing a cograph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Cotree {
    Leaf(Vertex),
    /// Disjoint union of the children (parallel node).
    Union(Vec<Cotree>),
    /// Join of the children: all cross edges present (series node).
    Join(Vec<Cotree>),
}

impl Cotree {
    pub fn leaves(&self) -> VertexSet {
        match self {
            Cotree::Leaf(v) => VertexSet::singleton(*v),
            Cotree::Union(cs) | Cotree::Join(cs) => cs
                .iter()
                .fold(VertexSet::EMPTY, |acc, c| acc.union(c.leaves())),
        }
    }

    /// Expands the tree back into a graph on `n` vertices.
    pub fn realize(&self, n: usize) -> Graph {
        let mut edges = Vec::new();
        self.collect_edges(&mut edges);
        Graph::new(n, &edges).expect("cotree leaves within bounds")
    }

    fn collect_edges(&self, out: &mut Vec<(Vertex, Vertex)>) {
        match self {
            Cotree::Leaf(_) => {}
            Cotree::Union(cs) => {
                for c in cs {
                    c.collect_edges(out);
                }
            }
            Cotree::Join(cs) => {
                for c in cs {
                    c.collect_edges(out);
                }
                for i in 0..cs.len() {
                    for j in i + 1..cs.len() {
                        for u in cs[i].leaves().iter() {
                            for v in cs[j].leaves().iter() {
                                out.push((u, v));
                            }
                        }
                    }
                }
            }
        }
    }

    /// No two adjacent internal nodes share a tag, and internal nodes have
    /// at least two children.
    pub fn is_normalized(&self) -> bool {
        fn ok(t: &Cotree, parent_union: Option<bool>) -> bool {
            match t {
                Cotree::Leaf(_) => true,
                Cotree::Union(cs) => {
                    cs.len() >= 2
                        && parent_union != Some(true)
                        && cs.iter().all(|c| ok(c, Some(true)))
                }
                Cotree::Join(cs) => {
                    cs.len() >= 2
                        && parent_union != Some(false)
                        && cs.iter().all(|c| ok(c, Some(false)))
                }
            }
        }
        ok(self, None)
    }
}

/// Normalized cotree of `g` when `g` is a cograph, None otherwise.
///
/// Recursive construction: a disconnected graph is a union over components,
/// a graph with disconnected complement is a join over co-components, and
/// anything else on more than one vertex is not a cograph.
pub fn build_cotree(g: &Graph) -> Option<Cotree> {
    build_cotree_on(g, g.vertices().to_vec())
}

fn build_cotree_on(g: &Graph, verts: Vec<Vertex>) -> Option<Cotree> {
    if verts.is_empty() {
        return None;
    }
    if verts.len() == 1 {
        return Some(Cotree::Leaf(verts[0]));
    }
    let set: VertexSet = verts.iter().copied().collect();
    let (sub, labels) = g.induced(set);
    let comps = sub.connected_components(None);
    if comps.len() > 1 {
        let children = comps
            .into_iter()
            .map(|c| build_cotree_on(g, c.iter().map(|i| labels[i]).collect()))
            .collect::<Option<Vec<_>>>()?;
        // children are single vertices or joins, never unions
        return Some(Cotree::Union(children));
    }
    let co_comps = sub.complement().connected_components(None);
    if co_comps.len() > 1 {
        let children = co_comps
            .into_iter()
            .map(|c| build_cotree_on(g, c.iter().map(|i| labels[i]).collect()))
            .collect::<Option<Vec<_>>>()?;
        return Some(Cotree::Join(children));
    }
    None
}
