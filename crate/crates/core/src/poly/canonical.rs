use crate::graph::weak_components;
use crate::instance::{HomInstance, Solution};

/// Runs `raw` on every weak component of `D` and refines each optimum to the
/// lexicographically least optimal colouring, so polynomial solvers and the
/// exact oracles agree on ties.
///
/// `raw` must be exact on any instance built from `inst` by pinning vertices
/// to allowed colours.
pub(crate) fn canonical(
    inst: &HomInstance,
    tag: &'static str,
    raw: impl Fn(&HomInstance) -> Solution,
) -> Solution {
    let mut assignment = vec![0; inst.d().len()];
    for comp in weak_components(inst.d()) {
        let sub = inst.induced(&comp);
        let Some(local) = refine(&sub, &raw) else {
            return Solution::infeasible(tag);
        };
        for (&u, c) in comp.iter().zip(local) {
            assignment[u] = c;
        }
    }
    Solution::scored(inst, assignment, tag)
}

fn refine(inst: &HomInstance, raw: &impl Fn(&HomInstance) -> Solution) -> Option<Vec<usize>> {
    let first = raw(inst);
    let target = first.cost()?;
    let mut best = first.assignment()?.to_vec();
    let mut pinned = inst.clone();
    for u in 0..best.len() {
        for i in pinned
            .domain(u)
            .take_while(|&i| i < best[u])
            .collect::<Vec<_>>()
        {
            let trial = raw(&pinned.fix(u, i));
            if trial.cost() == Some(target) {
                best = trial.assignment().expect("optimal").to_vec();
                break;
            }
        }
        pinned = pinned.fix(u, best[u]);
    }
    Some(best)
}
