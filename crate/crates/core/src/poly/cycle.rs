use std::collections::VecDeque;

use crate::instance::{HomInstance, Solution};

use super::canonical::canonical;

pub(crate) const TAG: &str = "cycle";

/// Optimal homomorphism to the directed cycle `order[0] -> order[1] -> ... -> order[0]`.
pub fn solve_cycle(inst: &HomInstance, order: &[usize]) -> Solution {
    assert!(order.len() >= 2, "cycles need k >= 2");
    canonical(inst, TAG, |i| raw(i, order))
}

/// Expects a weakly connected `D` (the canonical wrapper splits components).
/// Every arc fixes the phase difference of its ends, so a connected input
/// has at most `k` homomorphisms: one per rotation.
pub(crate) fn raw(inst: &HomInstance, order: &[usize]) -> Solution {
    let d = inst.d();
    let n = d.len();
    let k = order.len();
    let mut phase = vec![usize::MAX; n];
    let mut assignment = vec![0; n];
    for root in 0..n {
        if phase[root] != usize::MAX {
            continue;
        }
        phase[root] = 0;
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(u) = queue.pop_front() {
            let forward = d.out_neighbors(u).map(|v| (v, (phase[u] + 1) % k));
            let backward = d.in_neighbors(u).map(|v| (v, (phase[u] + k - 1) % k));
            for (v, want) in forward.chain(backward).collect::<Vec<_>>() {
                if phase[v] == usize::MAX {
                    phase[v] = want;
                    comp.push(v);
                    queue.push_back(v);
                } else if phase[v] != want {
                    return Solution::infeasible(TAG);
                }
            }
        }
        comp.sort_unstable();
        let mut best: Option<(i64, usize)> = None;
        for o in 0..k {
            let colour = |u: usize| order[(phase[u] + o) % k];
            if comp.iter().any(|&u| !inst.allows(u, colour(u))) {
                continue;
            }
            let cost = comp.iter().map(|&u| inst.cost(u, colour(u))).sum();
            if best.is_none_or(|(b, _)| inst.objective().better(cost, b)) {
                best = Some((cost, o));
            }
        }
        let Some((_, o)) = best else {
            return Solution::infeasible(TAG);
        };
        for &u in &comp {
            assignment[u] = order[(phase[u] + o) % k];
        }
    }
    Solution::scored(inst, assignment, TAG)
}
