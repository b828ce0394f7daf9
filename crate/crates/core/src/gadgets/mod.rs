//! Named targets and the hardness reductions from undirected graphs, with
//! brute-force certificates for small inputs.

mod certify;
mod enumerate;
mod reduce;

pub use certify::{
    certify_reduction, is_clique, is_independent, is_induced_bipartite, max_clique,
    max_independent_set, max_induced_bipartite, Certificate, FormulaCheck,
};
pub use enumerate::{
    acyclic_bipartite_tournaments, graphs_up_to_isomorphism, simple_acyclic_bipartite_tournaments,
};
pub use reduce::{reduce_ac, reduce_c3tail, GadgetCopy, PairMode, ReductionKind, ReductionOutput};

use thiserror::Error;

use crate::graph::{Digraph, GraphError};
use crate::instance::InstanceError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GadgetError {
    #[error("unknown target name `{0}`")]
    UnknownName(String),
    #[error("bad parameter in `{0}`")]
    BadParameter(String),
    #[error("reduction instance is invalid: {0}")]
    Instance(#[from] InstanceError),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Transitive tournament on `1..=k`, arcs `i -> j` for `i < j`.
pub fn tt(k: usize) -> Digraph {
    let arcs: Vec<_> = (1..=k)
        .flat_map(|i| (i + 1..=k).map(move |j| (i, j)))
        .collect();
    Digraph::numbered(k, &arcs).expect("valid arcs")
}

/// `TT_k` without the arc `1 -> k`.
pub fn tt_minus(k: usize) -> Digraph {
    let arcs: Vec<_> = (1..=k)
        .flat_map(|i| (i + 1..=k).map(move |j| (i, j)))
        .filter(|&(i, j)| (i, j) != (1, k))
        .collect();
    Digraph::numbered(k, &arcs).expect("valid arcs")
}

/// Directed cycle `1 -> 2 -> ... -> k -> 1`; `k = 2` is a digon.
pub fn cycle(k: usize) -> Digraph {
    let arcs: Vec<_> = (1..=k).map(|i| (i, i % k + 1)).collect();
    Digraph::numbered(k, &arcs).expect("valid arcs")
}

/// Looks up a target by name: `ac4`, `c3tail`, `bt5`, `tt:k`, `ttminus:k`
/// or `cycle:k`.
pub fn named_target(name: &str) -> Result<Digraph, GadgetError> {
    let fixed = |arcs: &[(usize, usize)], k| Ok(Digraph::numbered(k, arcs).expect("valid arcs"));
    match name {
        "ac4" => return fixed(&[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4)], 4),
        "c3tail" => return fixed(&[(1, 2), (2, 3), (3, 1), (3, 4), (4, 1)], 4),
        "bt5" => return fixed(&[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (3, 5)], 5),
        _ => {}
    }
    let (family, k) = name
        .split_once(':')
        .ok_or_else(|| GadgetError::UnknownName(name.into()))?;
    let k: usize = k
        .parse()
        .map_err(|_| GadgetError::BadParameter(name.into()))?;
    let (build, min_k): (fn(usize) -> Digraph, usize) = match family {
        "tt" => (tt, 1),
        "ttminus" => (tt_minus, 3),
        "cycle" => (cycle, 2),
        _ => return Err(GadgetError::UnknownName(name.into())),
    };
    if k < min_k {
        return Err(GadgetError::BadParameter(name.into()));
    }
    Ok(build(k))
}
