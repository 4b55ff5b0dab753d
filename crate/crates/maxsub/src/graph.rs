//! Immutable simple graphs over a fixed vertex set 0..n-1, with the
//! neighborhood, complement, induced-subgraph, twin, component and
//! forbidden-pattern queries the enumerators are built on.
//!
//! Adjacency is stored as one 64-bit mask per vertex, so edge tests and
//! neighborhood intersections are single word operations. All values are
//! immutable after construction and safe to share across threads.

use crate::{Error, Result};

pub type Vertex = usize;

/// Hard cap on the vertex count; every row is a single machine word.
pub const MAX_VERTICES: usize = 64;

/// Set of vertices of a graph on at most [`MAX_VERTICES`] vertices.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn singleton(v: Vertex) -> Self {
        VertexSet(1u64 << v)
    }

    /// All vertices 0..n-1.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 64 {
            VertexSet(!0)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn contains(self, v: Vertex) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    pub fn insert(&mut self, v: Vertex) {
        self.0 |= 1u64 << v;
    }

    pub fn remove(&mut self, v: Vertex) {
        self.0 &= !(1u64 << v);
    }

    pub fn with(self, v: Vertex) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    pub fn without(self, v: Vertex) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn symmetric_difference(self, other: Self) -> Self {
        VertexSet(self.0 ^ other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn min(self) -> Option<Vertex> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    pub fn iter(self) -> impl Iterator<Item = Vertex> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                None
            } else {
                let v = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(v)
            }
        })
    }

    pub fn to_vec(self) -> Vec<Vertex> {
        self.iter().collect()
    }
}

impl FromIterator<Vertex> for VertexSet {
    fn from_iter<I: IntoIterator<Item = Vertex>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Unordered pair of distinct vertices, stored as (min, max).
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    u: Vertex,
    v: Vertex,
}

impl Edge {
    /// Normalizing constructor. Panics on a self-loop; loops are rejected
    /// with a proper error at graph construction and parse time.
    pub fn new(a: Vertex, b: Vertex) -> Edge {
        assert!(a != b, "self-loop {a}-{b}");
        if a < b {
            Edge { u: a, v: b }
        } else {
            Edge { u: b, v: a }
        }
    }

    pub fn u(self) -> Vertex {
        self.u
    }

    pub fn v(self) -> Vertex {
        self.v
    }

    pub fn endpoints(self) -> (Vertex, Vertex) {
        (self.u, self.v)
    }

    pub fn touches(self, w: Vertex) -> bool {
        self.u == w || self.v == w
    }

    /// The endpoint different from `w`; panics if `w` is not an endpoint.
    pub fn other(self, w: Vertex) -> Vertex {
        if self.u == w {
            self.v
        } else {
            assert_eq!(self.v, w);
            self.u
        }
    }
}

impl std::fmt::Debug for Edge {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}-{}", self.u, self.v)
    }
}

/// Set of edges, kept sorted and deduplicated.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct EdgeSet {
    edges: Vec<Edge>,
}

impl EdgeSet {
    pub fn new() -> EdgeSet {
        EdgeSet::default()
    }

    pub fn from_edges(edges: impl IntoIterator<Item = Edge>) -> EdgeSet {
        let mut v: Vec<Edge> = edges.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        EdgeSet { edges: v }
    }

    pub fn from_pairs(pairs: &[(Vertex, Vertex)]) -> EdgeSet {
        EdgeSet::from_edges(pairs.iter().map(|&(a, b)| Edge::new(a, b)))
    }

    pub fn contains(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn insert(&mut self, e: Edge) -> bool {
        match self.edges.binary_search(&e) {
            Ok(_) => false,
            Err(pos) => {
                self.edges.insert(pos, e);
                true
            }
        }
    }

    pub fn remove(&mut self, e: Edge) -> bool {
        match self.edges.binary_search(&e) {
            Ok(pos) => {
                self.edges.remove(pos);
                true
            }
            Err(_) => false,
        }
    }

    pub fn union(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::from_edges(self.iter().chain(other.iter()))
    }

    pub fn difference(&self, other: &EdgeSet) -> EdgeSet {
        EdgeSet::from_edges(self.iter().filter(|e| !other.contains(*e)))
    }

    pub fn is_subset(&self, other: &EdgeSet) -> bool {
        self.iter().all(|e| other.contains(e))
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = Edge> + '_ {
        self.edges.iter().copied()
    }

    pub fn as_slice(&self) -> &[Edge] {
        &self.edges
    }

    /// Largest endpoint appearing in the set, or None when empty.
    pub fn max_vertex(&self) -> Option<Vertex> {
        self.edges.iter().map(|e| e.v).max()
    }
}

impl FromIterator<Edge> for EdgeSet {
    fn from_iter<I: IntoIterator<Item = Edge>>(iter: I) -> Self {
        EdgeSet::from_edges(iter)
    }
}

impl std::fmt::Debug for EdgeSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.edges.iter()).finish()
    }
}

/// Outcome of a twin test inside an induced subgraph.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TwinKind {
    TrueTwins,
    FalseTwins,
    NotTwins,
}

/// The forbidden induced patterns used by the class recognizers.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    P3,
    P4,
    C4,
    TwoK2,
    C5,
    K2PlusK1,
}

impl Pattern {
    pub fn size(self) -> usize {
        match self {
            Pattern::P3 | Pattern::K2PlusK1 => 3,
            Pattern::P4 | Pattern::C4 | Pattern::TwoK2 => 4,
            Pattern::C5 => 5,
        }
    }
}

/// Immutable simple graph with bitset adjacency rows.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<VertexSet>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge list. Duplicate and
    /// reversed duplicate edges collapse; out-of-range endpoints and
    /// self-loops are errors.
    pub fn new(n: usize, edges: &[(Vertex, Vertex)]) -> Result<Graph> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices { n, max: MAX_VERTICES });
        }
        let mut adj = vec![VertexSet::EMPTY; n];
        for &(a, b) in edges {
            if a >= n {
                return Err(Error::VertexOutOfRange { v: a, n });
            }
            if b >= n {
                return Err(Error::VertexOutOfRange { v: b, n });
            }
            if a == b {
                return Err(Error::SelfLoop { v: a });
            }
            adj[a].insert(b);
            adj[b].insert(a);
        }
        Ok(Graph { n, adj })
    }

    pub fn empty(n: usize) -> Graph {
        Graph::new(n, &[]).expect("empty graph within bounds")
    }

    pub fn complete(n: usize) -> Graph {
        let full = VertexSet::full(n);
        let adj = (0..n).map(|v| full.without(v)).collect();
        Graph { n, adj }
    }

    /// Spanning subgraph of `self` (same vertices, the given edges).
    pub fn spanning(&self, edges: &EdgeSet) -> Graph {
        let mut adj = vec![VertexSet::EMPTY; self.n];
        for e in edges.iter() {
            adj[e.u()].insert(e.v());
            adj[e.v()].insert(e.u());
        }
        Graph { n: self.n, adj }
    }

    /// Path 0-1-...-(n-1).
    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        Graph::new(n, &edges).expect("path within bounds")
    }

    /// Cycle 0-1-...-(n-1)-0.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3);
        let mut edges: Vec<_> = (1..n).map(|v| (v - 1, v)).collect();
        edges.push((n - 1, 0));
        Graph::new(n, &edges).expect("cycle within bounds")
    }

    /// k disjoint triangles on 3k vertices.
    pub fn disjoint_triangles(k: usize) -> Graph {
        let mut edges = Vec::with_capacity(3 * k);
        for i in 0..k {
            let b = 3 * i;
            edges.extend_from_slice(&[(b, b + 1), (b + 1, b + 2), (b, b + 2)]);
        }
        Graph::new(3 * k, &edges).expect("triangles within bounds")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        u < self.n && v < self.n && self.adj[u].contains(v)
    }

    pub fn contains_edge(&self, e: Edge) -> bool {
        self.has_edge(e.u(), e.v())
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.adj[v].len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    pub fn edges(&self) -> EdgeSet {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in self.adj[u].iter() {
                if v > u {
                    edges.push(Edge::new(u, v));
                }
            }
        }
        EdgeSet { edges }
    }

    /// All non-adjacent pairs.
    pub fn non_edges(&self) -> EdgeSet {
        let mut edges = Vec::new();
        for u in 0..self.n {
            for v in u + 1..self.n {
                if !self.adj[u].contains(v) {
                    edges.push(Edge::new(u, v));
                }
            }
        }
        EdgeSet { edges }
    }

    /// N(v), or N[v] when `closed`.
    pub fn neighborhood(&self, v: Vertex, closed: bool) -> Result<VertexSet> {
        if v >= self.n {
            return Err(Error::VertexOutOfRange { v, n: self.n });
        }
        Ok(if closed { self.adj[v].with(v) } else { self.adj[v] })
    }

    /// N(v) without the range check; row access for internal callers.
    pub fn nbrs(&self, v: Vertex) -> VertexSet {
        self.adj[v]
    }

    pub fn closed_nbrs(&self, v: Vertex) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn complement(&self) -> Graph {
        let full = VertexSet::full(self.n);
        let adj = (0..self.n)
            .map(|v| full.difference(self.adj[v]).without(v))
            .collect();
        Graph { n: self.n, adj }
    }

    /// Induced subgraph on `x`, plus the map from new ids to original labels
    /// (ascending, so relabeling is order-preserving).
    pub fn induced(&self, x: VertexSet) -> (Graph, Vec<Vertex>) {
        let labels: Vec<Vertex> = x.iter().filter(|&v| v < self.n).collect();
        let mut g = Graph::empty(labels.len());
        for (i, &u) in labels.iter().enumerate() {
            for (j, &v) in labels.iter().enumerate().skip(i + 1) {
                if self.adj[u].contains(v) {
                    g.adj[i].insert(j);
                    g.adj[j].insert(i);
                }
            }
        }
        (g, labels)
    }

    /// Twin test for u, v inside g[restriction].
    pub fn twin_kind(&self, restriction: VertexSet, u: Vertex, v: Vertex) -> Result<TwinKind> {
        if u == v {
            return Err(Error::Argument(format!("twin_kind needs distinct vertices, got {u} twice")));
        }
        if !restriction.contains(u) || !restriction.contains(v) {
            return Err(Error::Argument(format!(
                "twin_kind: {u} and {v} must both lie in the restriction"
            )));
        }
        let pair = VertexSet::singleton(u).with(v);
        let nu = self.adj[u].intersection(restriction).difference(pair);
        let nv = self.adj[v].intersection(restriction).difference(pair);
        Ok(if nu != nv {
            TwinKind::NotTwins
        } else if self.adj[u].contains(v) {
            TwinKind::TrueTwins
        } else {
            TwinKind::FalseTwins
        })
    }

    /// Components of the graph, or of the spanning subgraph `(V, edges)`
    /// when an edge restriction is given. Isolated vertices are singleton
    /// components; the list is sorted by smallest member.
    pub fn connected_components(&self, edge_restriction: Option<&EdgeSet>) -> Vec<VertexSet> {
        let rows: Vec<VertexSet> = match edge_restriction {
            None => self.adj.clone(),
            Some(es) => {
                let mut rows = vec![VertexSet::EMPTY; self.n];
                for e in es.iter() {
                    rows[e.u()].insert(e.v());
                    rows[e.v()].insert(e.u());
                }
                rows
            }
        };
        components_of_rows(self.n, &rows)
    }

    /// First induced occurrence of `pattern`, as a vertex tuple in pattern
    /// order, searching the graph itself or the spanning subgraph
    /// `(V, subgraph_edges)`. The search is exhaustive over vertex subsets
    /// of the pattern's size, ascending, so the answer is deterministic.
    pub fn find_forbidden(
        &self,
        subgraph_edges: Option<&EdgeSet>,
        pattern: Pattern,
    ) -> Option<Vec<Vertex>> {
        match subgraph_edges {
            None => find_pattern(self.n, &self.adj, pattern),
            Some(es) => {
                let sub = self.spanning(es);
                find_pattern(sub.n, &sub.adj, pattern)
            }
        }
    }

    pub fn has_forbidden(&self, pattern: Pattern) -> bool {
        find_pattern_exists(self.n, &self.adj, pattern)
    }
}

impl std::fmt::Debug for Graph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Graph(n={}, {:?})", self.n, self.edges())
    }
}

fn components_of_rows(n: usize, rows: &[VertexSet]) -> Vec<VertexSet> {
    let mut seen = VertexSet::EMPTY;
    let mut out = Vec::new();
    for start in 0..n {
        if seen.contains(start) {
            continue;
        }
        let mut comp = VertexSet::singleton(start);
        let mut frontier = VertexSet::singleton(start);
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier.iter() {
                next = next.union(rows[v]);
            }
            frontier = next.difference(comp);
            comp = comp.union(frontier);
        }
        seen = seen.union(comp);
        out.push(comp);
    }
    out
}

/// Walks k-subsets of 0..n in lexicographic order, testing each for the
/// pattern shape. Small patterns and desk-scale n keep this cheap.
fn for_each_subset<const K: usize>(
    n: usize,
    mut f: impl FnMut(&[Vertex; K]) -> Option<Vec<Vertex>>,
) -> Option<Vec<Vertex>> {
    if n < K {
        return None;
    }
    let mut idx = [0usize; K];
    for (i, x) in idx.iter_mut().enumerate() {
        *x = i;
    }
    loop {
        if let Some(hit) = f(&idx) {
            return Some(hit);
        }
        // next combination
        let mut i = K;
        loop {
            if i == 0 {
                return None;
            }
            i -= 1;
            if idx[i] != i + n - K {
                break;
            }
            if i == 0 {
                return None;
            }
        }
        idx[i] += 1;
        for j in i + 1..K {
            idx[j] = idx[j - 1] + 1;
        }
    }
}

fn find_pattern(n: usize, rows: &[VertexSet], pattern: Pattern) -> Option<Vec<Vertex>> {
    let deg_in = |v: Vertex, set: VertexSet| rows[v].intersection(set).len();
    match pattern {
        Pattern::P3 => for_each_subset::<3>(n, |s| {
            let set: VertexSet = s.iter().copied().collect();
            let degs = [deg_in(s[0], set), deg_in(s[1], set), deg_in(s[2], set)];
            if degs.iter().sum::<usize>() != 4 {
                return None;
            }
            let center = s[degs.iter().position(|&d| d == 2)?];
            let ends: Vec<_> = s.iter().copied().filter(|&v| v != center).collect();
            Some(vec![ends[0], center, ends[1]])
        }),
        Pattern::K2PlusK1 => for_each_subset::<3>(n, |s| {
            let set: VertexSet = s.iter().copied().collect();
            let degs = [deg_in(s[0], set), deg_in(s[1], set), deg_in(s[2], set)];
            if degs.iter().sum::<usize>() != 2 {
                return None;
            }
            let iso = s[degs.iter().position(|&d| d == 0)?];
            let ends: Vec<_> = s.iter().copied().filter(|&v| v != iso).collect();
            Some(vec![ends[0], ends[1], iso])
        }),
        Pattern::P4 => for_each_subset::<4>(n, |s| {
            let set: VertexSet = s.iter().copied().collect();
            let degs: Vec<usize> = s.iter().map(|&v| deg_in(v, set)).collect();
            // 3 edges with degree sequence 1,2,2,1 is a path or a triangle
            // plus pendant; the latter has a degree-3 vertex, so checking the
            // multiset {1,1,2,2} suffices.
            if degs.iter().sum::<usize>() != 6 || degs.contains(&3) || degs.contains(&0) {
                return None;
            }
            let mut ends = s.iter().copied().filter(|&v| deg_in(v, set) == 1);
            let a = ends.next()?;
            let d = ends.next()?;
            let b = rows[a].intersection(set).min()?;
            let c = rows[d].intersection(set).min()?;
            if !rows[b].contains(c) {
                return None; // disconnected: K2 + K2 shaped, not a path
            }
            Some(vec![a, b, c, d])
        }),
        Pattern::C4 => for_each_subset::<4>(n, |s| {
            let set: VertexSet = s.iter().copied().collect();
            if s.iter().any(|&v| deg_in(v, set) != 2) {
                return None;
            }
            // 2-regular on 4 vertices is exactly a 4-cycle
            let a = s[0];
            let mut nb = rows[a].intersection(set).iter();
            let b = nb.next()?;
            let d = nb.next()?;
            let c = set.difference(rows[a]).without(a).min()?;
            Some(vec![a, b, c, d])
        }),
        Pattern::TwoK2 => for_each_subset::<4>(n, |s| {
            let set: VertexSet = s.iter().copied().collect();
            if s.iter().any(|&v| deg_in(v, set) != 1) {
                return None;
            }
            let a = s[0];
            let b = rows[a].intersection(set).min()?;
            let rest: Vec<_> = set.without(a).without(b).iter().collect();
            Some(vec![a, b, rest[0], rest[1]])
        }),
        Pattern::C5 => for_each_subset::<5>(n, |s| {
            let set: VertexSet = s.iter().copied().collect();
            if s.iter().any(|&v| deg_in(v, set) != 2) {
                return None;
            }
            // 2-regular on 5 vertices is exactly a 5-cycle
            let a = s[0];
            let mut tuple = vec![a];
            let mut prev = a;
            let mut cur = rows[a].intersection(set).min()?;
            while cur != a {
                tuple.push(cur);
                let next = rows[cur].intersection(set).without(prev).min()?;
                prev = cur;
                cur = next;
            }
            Some(tuple)
        }),
    }
}

fn find_pattern_exists(n: usize, rows: &[VertexSet], pattern: Pattern) -> bool {
    find_pattern(n, rows, pattern).is_some()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn neighborhood_open_and_closed() {
        let p4 = Graph::path(4);
        assert_eq!(p4.neighborhood(1, false).unwrap().to_vec(), vec![0, 2]);
        assert_eq!(p4.neighborhood(0, true).unwrap().to_vec(), vec![0, 1]);
        let k3 = Graph::complete(3);
        assert_eq!(k3.neighborhood(2, true).unwrap().to_vec(), vec![0, 1, 2]);
        assert!(matches!(
            p4.neighborhood(9, false),
            Err(Error::VertexOutOfRange { v: 9, n: 4 })
        ));
    }

    #[test]
    fn complement_small_cases() {
        let k3 = Graph::complete(3);
        assert_eq!(k3.complement().edge_count(), 0);
        let c4 = Graph::cycle(4);
        let co = c4.complement();
        assert_eq!(co.edges(), EdgeSet::from_pairs(&[(0, 2), (1, 3)]));
    }

    #[test]
    fn complement_is_involution() {
        for seed in 0..50u64 {
            let g = random_graph(6, seed);
            assert_eq!(g.complement().complement(), g);
        }
    }

    #[test]
    fn induced_subgraphs() {
        let p4 = Graph::path(4);
        let (g, map) = p4.induced([0usize, 1, 2].into_iter().collect());
        assert_eq!(map, vec![0, 1, 2]);
        assert_eq!(g.edges(), EdgeSet::from_pairs(&[(0, 1), (1, 2)]));
        let (g, _) = p4.induced([0usize, 3].into_iter().collect());
        assert_eq!(g.edge_count(), 0);
        let c4 = Graph::cycle(4);
        let (g, _) = c4.induced([0usize, 1, 2].into_iter().collect());
        assert_eq!(g.edges(), EdgeSet::from_pairs(&[(0, 1), (1, 2)]));
        let (full, _) = p4.induced(p4.vertices());
        assert_eq!(full, p4);
    }

    #[test]
    fn twin_kinds() {
        let k2 = Graph::complete(2);
        assert_eq!(k2.twin_kind(k2.vertices(), 0, 1).unwrap(), TwinKind::TrueTwins);
        let e2 = Graph::empty(2);
        assert_eq!(e2.twin_kind(e2.vertices(), 0, 1).unwrap(), TwinKind::FalseTwins);
        let p4 = Graph::path(4);
        assert_eq!(p4.twin_kind(p4.vertices(), 0, 3).unwrap(), TwinKind::NotTwins);
        assert!(p4.twin_kind(p4.vertices(), 2, 2).is_err());
    }

    #[test]
    fn twin_kind_is_symmetric() {
        for seed in 0..30u64 {
            let g = random_graph(6, seed);
            let full = g.vertices();
            for u in 0..6 {
                for v in u + 1..6 {
                    assert_eq!(g.twin_kind(full, u, v).unwrap(), g.twin_kind(full, v, u).unwrap());
                }
            }
        }
    }

    #[test]
    fn forbidden_patterns() {
        let p4 = Graph::path(4);
        assert_eq!(p4.find_forbidden(None, Pattern::P4), Some(vec![0, 1, 2, 3]));
        let c4 = Graph::cycle(4);
        assert_eq!(c4.find_forbidden(None, Pattern::P4), None);
        let c5 = Graph::cycle(5);
        let tuple = c5.find_forbidden(None, Pattern::C5).unwrap();
        assert_eq!(tuple.len(), 5);
        for i in 0..5 {
            assert!(c5.has_edge(tuple[i], tuple[(i + 1) % 5]));
        }
        assert!(Graph::disjoint_triangles(2).find_forbidden(None, Pattern::TwoK2).is_some());
        assert_eq!(
            Graph::path(3).find_forbidden(None, Pattern::P3),
            Some(vec![0, 1, 2])
        );
        let k2k1 = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(
            k2k1.find_forbidden(None, Pattern::K2PlusK1),
            Some(vec![0, 1, 2])
        );
    }

    /// Naive reference: test every injective assignment of pattern vertices.
    fn naive_has_pattern(g: &Graph, pattern: Pattern) -> bool {
        let n = g.n();
        let k = pattern.size();
        let shape_edges: Vec<(usize, usize)> = match pattern {
            Pattern::P3 => vec![(0, 1), (1, 2)],
            Pattern::P4 => vec![(0, 1), (1, 2), (2, 3)],
            Pattern::C4 => vec![(0, 1), (1, 2), (2, 3), (3, 0)],
            Pattern::TwoK2 => vec![(0, 1), (2, 3)],
            Pattern::C5 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
            Pattern::K2PlusK1 => vec![(0, 1)],
        };
        let mut perm = vec![0usize; k];
        fn rec(
            g: &Graph,
            k: usize,
            shape: &[(usize, usize)],
            perm: &mut Vec<usize>,
            used: &mut Vec<bool>,
            depth: usize,
        ) -> bool {
            if depth == k {
                return shape
                    .iter()
                    .all(|&(i, j)| g.has_edge(perm[i], perm[j]))
                    && (0..k).all(|i| {
                        (i + 1..k).all(|j| {
                            shape.contains(&(i, j))
                                || shape.contains(&(j, i))
                                || !g.has_edge(perm[i], perm[j])
                        })
                    });
            }
            for v in 0..g.n() {
                if !used[v] {
                    used[v] = true;
                    perm[depth] = v;
                    if rec(g, k, shape, perm, used, depth + 1) {
                        used[v] = false;
                        return true;
                    }
                    used[v] = false;
                }
            }
            false
        }
        let mut used = vec![false; n];
        rec(g, k, &shape_edges, &mut perm, &mut used, 0)
    }

    #[test]
    fn pattern_search_matches_naive_scan() {
        let patterns = [
            Pattern::P3,
            Pattern::P4,
            Pattern::C4,
            Pattern::TwoK2,
            Pattern::C5,
            Pattern::K2PlusK1,
        ];
        for seed in 0..120u64 {
            let g = random_graph(6, seed);
            for &p in &patterns {
                assert_eq!(
                    g.find_forbidden(None, p).is_some(),
                    naive_has_pattern(&g, p),
                    "pattern {p:?} on {g:?}"
                );
            }
        }
    }

    #[test]
    fn found_tuple_is_induced_occurrence() {
        for seed in 0..60u64 {
            let g = random_graph(7, seed);
            for &p in &[Pattern::P4, Pattern::C4, Pattern::TwoK2, Pattern::C5] {
                if let Some(t) = g.find_forbidden(None, p) {
                    let shape: Vec<(usize, usize)> = match p {
                        Pattern::P4 => vec![(0, 1), (1, 2), (2, 3)],
                        Pattern::C4 => vec![(0, 1), (1, 2), (2, 3), (3, 0)],
                        Pattern::TwoK2 => vec![(0, 1), (2, 3)],
                        Pattern::C5 => vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)],
                        _ => unreachable!(),
                    };
                    for i in 0..t.len() {
                        for j in i + 1..t.len() {
                            let expected = shape.contains(&(i, j)) || shape.contains(&(j, i));
                            assert_eq!(g.has_edge(t[i], t[j]), expected, "{p:?} {t:?} on {g:?}");
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn components_with_and_without_restriction() {
        let two_k3 = Graph::disjoint_triangles(2);
        let comps = two_k3.connected_components(None);
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1, 2]);
        assert_eq!(comps[1].to_vec(), vec![3, 4, 5]);

        let p4 = Graph::path(4);
        let restr = EdgeSet::from_pairs(&[(0, 1), (2, 3)]);
        let comps = p4.connected_components(Some(&restr));
        assert_eq!(comps.len(), 2);
        assert_eq!(comps[0].to_vec(), vec![0, 1]);

        let e3 = Graph::empty(3);
        assert_eq!(e3.connected_components(None).len(), 3);
    }

    #[test]
    fn construction_errors() {
        assert!(matches!(Graph::new(2, &[(0, 0)]), Err(Error::SelfLoop { v: 0 })));
        assert!(matches!(
            Graph::new(2, &[(0, 5)]),
            Err(Error::VertexOutOfRange { v: 5, n: 2 })
        ));
        assert!(Graph::new(65, &[]).is_err());
    }

    pub(crate) fn random_graph(n: usize, seed: u64) -> Graph {
        // xorshift-based deterministic generator, enough for test coverage
        let mut state = seed.wrapping_mul(0x9E3779B97F4A7C15).wrapping_add(1);
        let mut next = move || {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            state
        };
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if next() % 100 < 45 {
                    edges.push((u, v));
                }
            }
        }
        Graph::new(n, &edges).unwrap()
    }
}
