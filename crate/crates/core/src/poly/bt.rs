use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{
    is_acyclic, partite_sets, similarity_quotient, two_coloring, weak_components, Digraph,
};
use crate::instance::{HomInstance, Solution};

use super::canonical::canonical;
use super::lift::lift_extension;
use super::ttk::tt_core;
use super::SolveError;

pub(crate) const TAG: &str = "acyclic_bt";

/// Whether `h` is a bipartite tournament (two partite sets, no digon) without
/// directed cycles.
pub fn is_acyclic_bipartite_tournament(h: &Digraph) -> bool {
    matches!(partite_sets(h), Ok(p) if p.len() == 2) && !h.has_digon() && is_acyclic(h)
}

/// Orders the vertices by repeatedly removing the only vertex of in-degree
/// zero. `None` if at some step there is no such vertex or more than one.
pub fn elimination_order(h: &Digraph) -> Option<Vec<usize>> {
    let n = h.len();
    let mut indeg: Vec<usize> = (0..n).map(|v| h.in_degree(v)).collect();
    let mut removed = vec![false; n];
    let mut order = Vec::with_capacity(n);
    for _ in 0..n {
        let mut free = (0..n).filter(|&v| !removed[v] && indeg[v] == 0);
        let v = free.next()?;
        if free.next().is_some() {
            return None;
        }
        removed[v] = true;
        order.push(v);
        for w in h.out_neighbors(v) {
            indeg[w] -= 1;
        }
    }
    Some(order)
}

/// Optimal homomorphism to an acyclic bipartite tournament.
///
/// The target is reduced to its simple quotient. There, each weak component
/// of `D` is two-coloured and both ways of sending its sides to the partite
/// sets are tried; with sides fixed, the target behaves like the transitive
/// tournament on the elimination order.
pub fn solve_acyclic_bt(inst: &HomInstance) -> Result<Solution, SolveError> {
    if !is_acyclic_bipartite_tournament(inst.h()) {
        return Err(SolveError::NotBipartiteTarget);
    }
    let q = similarity_quotient(inst.h());
    Ok(canonical(inst, TAG, |i| {
        lift_extension(i, &q, simple_raw).expect("quotient of this target")
    }))
}

/// Solves against a simple acyclic bipartite tournament.
fn simple_raw(inst: &HomInstance) -> Solution {
    let (d, h) = (inst.d(), inst.h());
    let order =
        elimination_order(h).expect("simple acyclic bipartite tournaments eliminate uniquely");
    let parts = partite_sets(h).expect("bipartite target");
    if !is_acyclic(d) {
        return Solution::infeasible(TAG);
    }
    let Ok(side) = two_coloring(d) else {
        return Solution::infeasible(TAG);
    };
    let mut assignment = vec![0; d.len()];
    for comp in weak_components(d) {
        let sub = inst.induced(&comp);
        let mut best: Option<Solution> = None;
        for flip in [0, 1] {
            let allowed: BTreeMap<usize, BTreeSet<usize>> = comp
                .iter()
                .enumerate()
                .map(|(local, &u)| {
                    let part = &parts[usize::from(side[u] ^ flip)];
                    (local, part.iter().copied().collect())
                })
                .collect();
            let forced = sub
                .restrict_colors(&allowed)
                .expect("partite sets are non-empty");
            let s = tt_core(&forced, &order, TAG);
            let better = match (&best, s.cost()) {
                (_, None) => false,
                (None, Some(_)) => true,
                (Some(b), Some(c)) => inst.objective().better(c, b.cost().expect("optimal")),
            };
            if better {
                best = Some(s);
            }
        }
        let Some(colours) = best.as_ref().and_then(Solution::assignment) else {
            return Solution::infeasible(TAG);
        };
        for (&u, &c) in comp.iter().zip(colours) {
            assignment[u] = c;
        }
    }
    Solution::scored(inst, assignment, TAG)
}
