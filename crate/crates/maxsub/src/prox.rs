//! Generic proximity-search driver: visited-set bookkeeping, depth-parity
//! output scheduling, delay statistics, and the proximity measure shared by
//! all class enumerators. Also hosts complement-based dualization for the
//! self-complementary classes.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use crate::graph::{Edge, EdgeSet, Graph, Vertex, VertexSet};
use crate::order::{canonical_vertex_ordering, edge_ordering_of};
use crate::recognize::GraphClass;
use crate::{Error, Result};

/// Which family of objects is being enumerated.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Induced,
    Deletion,
    Completion,
}

impl Mode {
    pub fn name(self) -> &'static str {
        match self {
            Mode::Induced => "induced",
            Mode::Deletion => "deletion",
            Mode::Completion => "completion",
        }
    }
}

impl std::fmt::Display for Mode {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

impl std::str::FromStr for Mode {
    type Err = String;
    fn from_str(s: &str) -> std::result::Result<Self, String> {
        match s {
            "induced" => Ok(Mode::Induced),
            "deletion" => Ok(Mode::Deletion),
            "completion" => Ok(Mode::Completion),
            other => Err(format!("unknown mode '{other}' (expected induced|deletion|completion)")),
        }
    }
}

/// One enumerated object: a vertex subset in induced mode, an edge set over
/// the host's vertices in deletion and completion modes. The payload is
/// stored sorted, so it doubles as the canonical key.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub enum Solution {
    Vertices(VertexSet),
    Edges(EdgeSet),
}

impl Solution {
    pub fn vertices(&self) -> Option<VertexSet> {
        match self {
            Solution::Vertices(v) => Some(*v),
            Solution::Edges(_) => None,
        }
    }

    pub fn edges(&self) -> Option<&EdgeSet> {
        match self {
            Solution::Vertices(_) => None,
            Solution::Edges(e) => Some(e),
        }
    }

    pub fn len(&self) -> usize {
        match self {
            Solution::Vertices(v) => v.len(),
            Solution::Edges(e) => e.len(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }
}

impl Ord for Solution {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        match (self, other) {
            (Solution::Vertices(a), Solution::Vertices(b)) => a.to_vec().cmp(&b.to_vec()),
            (Solution::Edges(a), Solution::Edges(b)) => a.as_slice().cmp(b.as_slice()),
            (Solution::Vertices(_), Solution::Edges(_)) => std::cmp::Ordering::Less,
            (Solution::Edges(_), Solution::Vertices(_)) => std::cmp::Ordering::Greater,
        }
    }
}

impl PartialOrd for Solution {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Canonical ordering of a target solution, against which proximity is
/// measured.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SolutionOrdering {
    Vertices(Vec<Vertex>),
    Edges(Vec<Edge>),
}

/// Length of the longest prefix of the target's canonical ordering entirely
/// contained in `s`'s payload. Asymmetric; `proximity(s, t, ord(t)) = |t|`
/// forces `s = t` for maximal solutions.
pub fn proximity(s: &Solution, ordering: &SolutionOrdering) -> Result<usize> {
    match (s, ordering) {
        (Solution::Vertices(set), SolutionOrdering::Vertices(ord)) => {
            Ok(ord.iter().take_while(|&&v| set.contains(v)).count())
        }
        (Solution::Edges(set), SolutionOrdering::Edges(ord)) => {
            Ok(ord.iter().take_while(|&&e| set.contains(e)).count())
        }
        _ => Err(Error::Argument("proximity: solution and ordering kinds differ".into())),
    }
}

/// Canonical ordering of a target solution for the given class.
///
/// Induced targets are ordered by the twin construction ordering of the
/// induced subgraph (relabeling is ascending, so lexicographic comparisons
/// carry over); deletion targets by the canonical edge ordering of the
/// spanning subgraph on all host vertices.
pub fn solution_ordering(g: &Graph, target: &Solution, cls: GraphClass) -> Result<SolutionOrdering> {
    match target {
        Solution::Vertices(set) => {
            let (sub, labels) = g.induced(*set);
            let ord = canonical_vertex_ordering(&sub, cls)?;
            Ok(SolutionOrdering::Vertices(
                ord.order.into_iter().map(|i| labels[i]).collect(),
            ))
        }
        Solution::Edges(es) => {
            let s = g.spanning(es);
            let ord = canonical_vertex_ordering(&s, cls)?;
            Ok(SolutionOrdering::Edges(edge_ordering_of(&s, &ord)))
        }
    }
}

/// Counters exposed by a run: emissions, abstract steps (one neighbor
/// evaluation, or one extension step of the split enumerator), and
/// wall-clock delay between consecutive emissions.
#[derive(Debug, Clone, Default)]
pub struct RunStats {
    pub emitted: usize,
    pub steps: u64,
    pub max_steps_between_emits: u64,
    pub max_delay: Duration,
    pub total_delay: Duration,
    steps_at_last_emit: u64,
}

impl RunStats {
    pub fn mean_delay(&self) -> Duration {
        if self.emitted == 0 {
            Duration::ZERO
        } else {
            self.total_delay / self.emitted as u32
        }
    }

    fn note_emit(&mut self, delay: Duration) {
        self.emitted += 1;
        self.max_delay = self.max_delay.max(delay);
        self.total_delay += delay;
        let between = self.steps - self.steps_at_last_emit;
        self.max_steps_between_emits = self.max_steps_between_emits.max(between);
        self.steps_at_last_emit = self.steps;
    }

    fn note_drained(&mut self) {
        let tail = self.steps - self.steps_at_last_emit;
        self.max_steps_between_emits = self.max_steps_between_emits.max(tail);
        self.steps_at_last_emit = self.steps;
    }
}

struct Frame {
    sol: Solution,
    depth: usize,
    children: Vec<Solution>,
    next: usize,
}

enum Backend {
    /// Depth-first traversal of the implicit solution digraph (Algorithm 2
    /// style: emit on entry at even depth, on exit at odd depth).
    Prox {
        neigh: Box<dyn FnMut(&Solution) -> Vec<Solution>>,
        stack: Vec<Frame>,
        visited: HashSet<Solution>,
        started: bool,
        initial: Option<Solution>,
    },
    /// Any stream that reports (solution, steps spent since the previous
    /// item); used by the split pipeline and the single-solution cases.
    Stream(Box<dyn Iterator<Item = (Solution, u64)>>),
    /// Another run with every emitted solution rewritten, stats passed
    /// through; used by dualization.
    Mapped {
        inner: Box<EnumerationRun>,
        f: Box<dyn FnMut(Solution) -> Solution>,
    },
}

/// Streaming handle over the solutions of one enumeration, with delay and
/// step statistics. A run is single-threaded; emitted solutions are plain
/// values and can be handed to other threads.
pub struct EnumerationRun {
    backend: Backend,
    stats: RunStats,
    last_emit: Instant,
}

impl EnumerationRun {
    pub fn stats(&self) -> &RunStats {
        match &self.backend {
            Backend::Mapped { inner, .. } => inner.stats(),
            _ => &self.stats,
        }
    }

    fn from_backend(backend: Backend) -> EnumerationRun {
        EnumerationRun { backend, stats: RunStats::default(), last_emit: Instant::now() }
    }

    /// Run yielding exactly one solution.
    pub fn single(sol: Solution) -> EnumerationRun {
        EnumerationRun::from_backend(Backend::Stream(Box::new(std::iter::once((sol, 1)))))
    }

    pub fn from_steps_iter(
        iter: impl Iterator<Item = (Solution, u64)> + 'static,
    ) -> EnumerationRun {
        EnumerationRun::from_backend(Backend::Stream(Box::new(iter)))
    }

    fn advance(&mut self) -> Option<Solution> {
        match &mut self.backend {
            Backend::Stream(iter) => {
                let (sol, steps) = iter.next()?;
                self.stats.steps += steps;
                Some(sol)
            }
            Backend::Mapped { inner, f } => inner.next().map(f),
            Backend::Prox { neigh, stack, visited, started, initial } => {
                if !*started {
                    *started = true;
                    let root = initial.take().expect("initial solution present");
                    visited.insert(root.clone());
                    let children = expand(neigh, &root, &mut self.stats);
                    stack.push(Frame { sol: root.clone(), depth: 0, children, next: 0 });
                    return Some(root); // depth 0 is even: emit on entry
                }
                loop {
                    let top = stack.last_mut()?;
                    if top.next < top.children.len() {
                        let child = top.children[top.next].clone();
                        top.next += 1;
                        let depth = top.depth + 1;
                        if visited.insert(child.clone()) {
                            let children = expand(neigh, &child, &mut self.stats);
                            stack.push(Frame { sol: child.clone(), depth, children, next: 0 });
                            if depth % 2 == 0 {
                                return Some(child);
                            }
                        }
                    } else {
                        let frame = stack.pop().expect("frame present");
                        if frame.depth % 2 == 1 {
                            return Some(frame.sol);
                        }
                    }
                }
            }
        }
    }
}

fn expand(
    neigh: &mut Box<dyn FnMut(&Solution) -> Vec<Solution>>,
    sol: &Solution,
    stats: &mut RunStats,
) -> Vec<Solution> {
    let mut children = neigh(sol);
    stats.steps += children.len() as u64;
    children.sort();
    children.dedup();
    children
}

impl Iterator for EnumerationRun {
    type Item = Solution;

    fn next(&mut self) -> Option<Solution> {
        match self.advance() {
            Some(sol) => {
                let now = Instant::now();
                let delay = now.duration_since(self.last_emit);
                self.last_emit = now;
                if let Backend::Mapped { .. } = self.backend {
                    // inner already accounted for this emission
                } else {
                    self.stats.note_emit(delay);
                }
                Some(sol)
            }
            None => {
                if !matches!(self.backend, Backend::Mapped { .. }) {
                    self.stats.note_drained();
                }
                None
            }
        }
    }
}

/// Depth-first proximity search from an initial solution.
///
/// `neighbors` must return only valid maximal solutions. A solution is
/// emitted before its children when its depth is even and after them when
/// odd, which is what bounds the delay; every solution reachable from the
/// initial one is emitted exactly once. Neighbors are visited in ascending
/// canonical-key order. Recursion is an explicit stack, so deep solution
/// graphs cannot overflow.
pub fn proximity_search(
    initial: Solution,
    neighbors: impl FnMut(&Solution) -> Vec<Solution> + 'static,
) -> EnumerationRun {
    EnumerationRun::from_backend(Backend::Prox {
        neigh: Box::new(neighbors),
        stack: Vec::new(),
        visited: HashSet::new(),
        started: false,
        initial: Some(initial),
    })
}

/// Enumerates by complementation: runs the direct enumerator on the
/// complement graph and re-complements every emitted edge set against the
/// complete graph on V. Valid exactly for the self-complementary classes.
///
/// Supported pairs: split deletions (via split completions of the
/// complement), cograph and threshold completions (via deletions of the
/// complement).
pub fn dual_enumerate(g: &Graph, cls: GraphClass, mode: Mode) -> Result<EnumerationRun> {
    let co = g.complement();
    let n = g.n();
    let inner = match (cls, mode) {
        (GraphClass::Split, Mode::Deletion) => crate::split::enumerate_min_split_completions(&co),
        (GraphClass::Cograph, Mode::Completion) => {
            crate::cograph::enumerate_min_cograph_deletions(&co)
        }
        (GraphClass::Threshold, Mode::Completion) => {
            crate::threshold::enumerate_min_threshold_deletions(&co)
        }
        _ => return Err(Error::Unsupported { cls, mode }),
    };
    let all = Graph::complete(n).edges();
    Ok(EnumerationRun::from_backend(Backend::Mapped {
        inner: Box::new(inner),
        f: Box::new(move |sol| match sol {
            Solution::Edges(es) => Solution::Edges(all.difference(&es)),
            v @ Solution::Vertices(_) => v,
        }),
    }))
}
