//! Minimum and maximum cost homomorphisms to semicomplete multipartite
//! digraphs: classification, polynomial solvers for the tractable targets,
//! exact oracles and hardness reductions.

pub mod classify;
pub mod flow;
pub mod gadgets;
pub mod graph;
pub mod instance;
pub mod oracle;
pub mod poly;
pub mod random;

pub use classify::{classify, Classification, HardCase, PolyTag};
pub use graph::{Digraph, GraphError, UndirectedGraph};
pub use instance::{CostMatrix, HomInstance, InstanceError, Objective, Outcome, Solution};
pub use oracle::{ExactConfig, OracleError};
pub use poly::{solve_poly, SolveError};
