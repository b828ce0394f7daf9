//! Exact solvers: the homomorphic product with a branch-and-bound maximum
//! weight independent set, and an arc-consistency backtracking search. Both
//! return the lexicographically least optimal colouring, so they agree
//! exactly on every instance.

mod backtrack;
mod enumerate;
mod mwis;
mod product;

pub use backtrack::solve_backtracking;
pub use enumerate::enumerate_homomorphisms;
pub use mwis::{mwis_exact, Mwis};
pub use product::{homomorphic_product, solve_via_product, ProductGraph};

use std::sync::atomic::{AtomicBool, Ordering};
use std::sync::Arc;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum OracleError {
    #[error("instance size {size} exceeds the exact-solver limit {limit}")]
    SizeLimitExceeded { size: usize, limit: usize },
    #[error("search cancelled")]
    Cancelled,
}

/// Cooperative cancellation flag shared between a caller and a running search.
#[derive(Debug, Clone, Default)]
pub struct CancelToken(Arc<AtomicBool>);

impl CancelToken {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn cancel(&self) {
        self.0.store(true, Ordering::Relaxed);
    }

    pub fn is_cancelled(&self) -> bool {
        self.0.load(Ordering::Relaxed)
    }
}

pub const DEFAULT_LIMIT: usize = 40;

#[derive(Debug, Clone)]
pub struct ExactConfig {
    /// Maximum `|V(D)| * |V(H)|` (product nodes) the exact solvers accept.
    pub limit: usize,
    pub cancel: Option<CancelToken>,
}

impl Default for ExactConfig {
    fn default() -> Self {
        ExactConfig {
            limit: DEFAULT_LIMIT,
            cancel: None,
        }
    }
}

impl ExactConfig {
    pub fn with_limit(limit: usize) -> Self {
        ExactConfig {
            limit,
            ..Self::default()
        }
    }

    pub(crate) fn check_size(&self, size: usize) -> Result<(), OracleError> {
        if size > self.limit {
            Err(OracleError::SizeLimitExceeded {
                size,
                limit: self.limit,
            })
        } else {
            Ok(())
        }
    }

    pub(crate) fn check_cancel(&self) -> Result<(), OracleError> {
        match &self.cancel {
            Some(t) if t.is_cancelled() => Err(OracleError::Cancelled),
            _ => Ok(()),
        }
    }
}
