//! Enumeration of maximal subgraphs and minimal completions in hereditary
//! graph classes.
//!
//! Given an arbitrary input graph, the crate lists all inclusion-wise maximal
//! subgraphs (induced or edge-subgraphs) and minimal edge-supergraphs that
//! belong to one of five classes: split, cograph, P3-free, threshold and
//! trivially perfect. Minimal split completions go through a bijection with
//! the maximal independent sets of an auxiliary graph; the other enumerators
//! run a proximity-search traversal of the solution graph. A brute-force
//! oracle validates every enumerator on small instances.

pub mod cograph;
pub mod graph;
pub mod oracle;
pub mod order;
pub mod p3free;
pub mod prox;
pub mod recognize;
pub mod split;
pub mod threshold;
pub mod tp;

pub use graph::{Edge, EdgeSet, Graph, Pattern, TwinKind, Vertex, VertexSet};
pub use prox::{dual_enumerate, proximity_search, EnumerationRun, Mode, RunStats, Solution};
pub use recognize::{recognize, Cotree, GraphClass};

/// Errors shared by every module.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("vertex {v} out of range for a graph on {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v}")]
    SelfLoop { v: usize },
    #[error("graph too large: {n} vertices exceeds the supported maximum of {max}")]
    TooManyVertices { n: usize, max: usize },
    #[error("invalid argument: {0}")]
    Argument(String),
    #[error("graph is not a {0} graph")]
    NotInClass(GraphClass),
    #[error("unsupported combination: class {cls}, mode {mode}")]
    Unsupported { cls: GraphClass, mode: Mode },
    #[error("oracle capacity exceeded: {0}")]
    Capacity(String),
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;

/// Dispatches to the enumerator for a supported (class, mode) pair.
///
/// Supported pairs: split completion/deletion, cograph induced/deletion/
/// completion, p3free deletion/completion, threshold deletion/completion,
/// tp deletion. Everything else is a capability error.
pub fn enumerate(g: &Graph, cls: GraphClass, mode: Mode) -> Result<EnumerationRun> {
    use GraphClass::*;
    use Mode::*;
    match (cls, mode) {
        (Split, Completion) => Ok(split::enumerate_min_split_completions(g)),
        (Split, Deletion) => dual_enumerate(g, cls, mode),
        (Cograph, Induced) => Ok(cograph::enumerate_max_induced_subcographs(g)),
        (Cograph, Deletion) => Ok(cograph::enumerate_min_cograph_deletions(g)),
        (Cograph, Completion) => dual_enumerate(g, cls, mode),
        (P3Free, Deletion) => Ok(p3free::enumerate_min_p3free_deletions(g)),
        (P3Free, Completion) => Ok(p3free::enumerate_min_p3free_completions(g)),
        (Threshold, Deletion) => Ok(threshold::enumerate_min_threshold_deletions(g)),
        (Threshold, Completion) => dual_enumerate(g, cls, mode),
        (TriviallyPerfect, Deletion) => Ok(tp::enumerate_min_tp_deletions(g)),
        _ => Err(Error::Unsupported { cls, mode }),
    }
}
