//! Network flow with lower bounds and the maximum-weight antichain engine
//! built on it.

mod antichain;
mod network;

pub use antichain::{max_weight_antichain, Antichain, Poset};
pub use network::{max_flow, min_flow, FlowArc, FlowNetwork, MaxFlow, MinFlow, INF};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FlowError {
    #[error("no flow satisfies the lower bounds")]
    InfeasibleLowerBounds,
    #[error("arc {from}->{to} has a non-zero lower bound")]
    NonZeroLowerBound { from: usize, to: usize },
    #[error("invalid network: {0}")]
    InvalidNetwork(String),
    #[error("flow value is unbounded")]
    Unbounded,
    #[error("element {0} has a negative weight")]
    NegativeWeight(usize),
    #[error("order is not transitively closed: missing {0} < {1}")]
    NotTransitivelyClosed(usize, usize),
    #[error("order relation has a cycle through element {0}")]
    CyclicOrder(usize),
}
