//! Polynomial-time solvers for the tractable targets: transitive
//! tournaments, `TT_k^-`, directed cycles, acyclic bipartite tournaments and
//! extensions of all of these.
//!
//! Every public solver returns the lexicographically least optimal
//! colouring, which is also what the exact oracles return.

mod bt;
mod canonical;
mod cycle;
mod lift;
mod ttk;
mod ttk_minus;

pub use bt::{elimination_order, is_acyclic_bipartite_tournament, solve_acyclic_bt};
pub use cycle::solve_cycle;
pub use lift::{base_instance, lift_extension};
pub use ttk::{solve_ttk, ProductPoset};
pub use ttk_minus::solve_ttk_minus;

use thiserror::Error;

use crate::classify::{classify, Classification, PolyTag};
use crate::instance::{HomInstance, Solution};
use canonical::canonical;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SolveError {
    #[error("classification does not describe this target")]
    MisroutedInstance,
    #[error("class map is not a quotient of the target")]
    ClassMapInvalid,
    #[error("target is not an acyclic bipartite tournament")]
    NotBipartiteTarget,
}

pub const NO_ARCS_TAG: &str = "no_arcs";

/// Dispatches a polynomial classification of `inst.h()` to its solver,
/// going through the quotient base.
pub fn solve_poly(inst: &HomInstance, cls: &Classification) -> Result<Solution, SolveError> {
    let Classification::Polynomial { tag, quotient } = cls else {
        return Err(SolveError::MisroutedInstance);
    };
    if classify(inst.h()) != *cls {
        return Err(SolveError::MisroutedInstance);
    }
    let lifted = |name: &'static str, base: &dyn Fn(&HomInstance) -> Solution| {
        canonical(inst, name, |i| {
            lift_extension(i, quotient, base).expect("classification matched the target")
        })
    };
    Ok(match tag {
        PolyTag::Tt(order) => lifted(ttk::TAG, &|b| ttk::tt_core(b, order, ttk::TAG)),
        PolyTag::TtMinus(order) => lifted(ttk_minus::TAG, &|b| ttk_minus::raw(b, order)),
        PolyTag::Cycle(order) => lifted(cycle::TAG, &|b| cycle::raw(b, order)),
        PolyTag::AcyclicBt => solve_acyclic_bt(inst)?,
        PolyTag::NoArcs => solve_no_arcs(inst),
    })
}

/// Arcless target: feasible iff `D` is arcless, then every vertex takes its
/// best colour independently.
pub fn solve_no_arcs(inst: &HomInstance) -> Solution {
    if inst.d().arc_count() > 0 {
        return Solution::infeasible(NO_ARCS_TAG);
    }
    let assignment = (0..inst.d().len())
        .map(|u| inst.best_color(u).expect("domains are non-empty"))
        .collect();
    Solution::scored(inst, assignment, NO_ARCS_TAG)
}
