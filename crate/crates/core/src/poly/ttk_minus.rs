use crate::graph::is_acyclic;
use crate::instance::{HomInstance, Solution};

use super::canonical::canonical;
use super::ttk::ProductPoset;

pub(crate) const TAG: &str = "ttk_minus";

/// Optimal homomorphism to `TT_k^-` with `order` the positions `1..=k` of its
/// underlying transitive tournament (the arc `order[0] -> order[k-1]` absent).
pub fn solve_ttk_minus(inst: &HomInstance, order: &[usize]) -> Solution {
    assert!(order.len() >= 3, "TT_k^- needs k >= 3");
    canonical(inst, TAG, |i| raw(i, order))
}

pub(crate) fn raw(inst: &HomInstance, order: &[usize]) -> Solution {
    let d = inst.d();
    if !is_acyclic(d) {
        return Solution::infeasible(TAG);
    }
    let n = d.len();
    let (isolated, rest): (Vec<usize>, Vec<usize>) =
        (0..n).partition(|&u| d.neighbors(u).next().is_none());
    let mut assignment = vec![0; n];
    for &u in &isolated {
        assignment[u] = inst.best_color(u).expect("domains are non-empty");
    }
    if !rest.is_empty() {
        let sub = inst.induced(&rest);
        let pp = ProductPoset::tt_minus(&sub, order).expect("acyclic without isolated vertices");
        let Some(colours) = pp
            .solve(&sub, order, TAG)
            .assignment()
            .map(<[usize]>::to_vec)
        else {
            return Solution::infeasible(TAG);
        };
        for (&u, c) in rest.iter().zip(colours) {
            assignment[u] = c;
        }
    }
    Solution::scored(inst, assignment, TAG)
}
