//! Directed and undirected graph representations with the traversals,
//! closures, quotients and recognizers every solver builds on.

mod closure;
mod digraph;
mod quotient;
mod recognize;
mod structure;
mod undirected;

pub use closure::{restricted_closure, transitive_closure};
pub use digraph::Digraph;
pub use quotient::{similarity_quotient, QuotientInfo};
pub use recognize::{recognize_base, BaseShape};
pub use structure::{
    is_acyclic, partite_sets, structure_report, two_coloring, weak_components, Acyclicity,
    Bipartition, StructureReport,
};
pub use undirected::UndirectedGraph;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("duplicate vertex label `{0}`")]
    DuplicateVertex(String),
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),
    #[error("vertex index {0} out of range")]
    VertexOutOfRange(usize),
    #[error("loop at vertex `{0}`")]
    Loop(String),
    #[error("digraph has a directed cycle through {}", .0.join(" -> "))]
    CyclicInput(Vec<String>),
    #[error("vertex `{0}` is isolated")]
    IsolatedVertex(String),
    #[error("not semicomplete multipartite: `{0}`~`{1}` and `{1}`~`{2}` are non-adjacent but `{0}`,`{2}` are adjacent")]
    NotMultipartite(String, String, String),
    #[error("expected {expected} classes, found {found}")]
    ClassCountMismatch { expected: usize, found: usize },
    #[error("class for vertex `{0}` is empty")]
    EmptyClass(String),
}
