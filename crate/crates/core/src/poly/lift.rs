use crate::graph::QuotientInfo;
use crate::instance::{HomInstance, Solution};

use super::SolveError;

/// Solves an instance on an extension of `q.base` through the base.
///
/// Each base colour costs the best cost over the allowed members of its
/// class; a solution on the base lifts member-wise to the best allowed
/// member, ties to the smallest index, at identical total cost.
pub fn lift_extension(
    inst: &HomInstance,
    q: &QuotientInfo,
    base_solver: impl Fn(&HomInstance) -> Solution,
) -> Result<Solution, SolveError> {
    let base = base_instance(inst, q)?;
    let sol = base_solver(&base);
    let Some(colours) = sol.assignment() else {
        return Ok(Solution::infeasible(sol.solver));
    };
    let lifted = colours
        .iter()
        .enumerate()
        .map(|(u, &x)| best_member(inst, u, &q.classes[x], true).expect("base colour was allowed"))
        .collect();
    Ok(Solution::scored(inst, lifted, sol.solver))
}

/// The instance on `q.base` that [`lift_extension`] hands to its solver.
pub fn base_instance(inst: &HomInstance, q: &QuotientInfo) -> Result<HomInstance, SolveError> {
    if !q.is_quotient_of(inst.h()) {
        return Err(SolveError::ClassMapInvalid);
    }
    let n = inst.d().len();
    let b = q.base.len();
    let mut entries = Vec::with_capacity(n * b);
    let mut allowed = Vec::with_capacity(n * b);
    for u in 0..n {
        for class in &q.classes {
            let member = best_member(inst, u, class, true);
            allowed.push(member.is_some());
            // Disallowed base colours still need a valid cost entry.
            let j = member
                .or_else(|| best_member(inst, u, class, false))
                .expect("classes are non-empty");
            entries.push(inst.cost(u, j));
        }
    }
    Ok(HomInstance::from_aligned(
        inst.d().clone(),
        q.base.clone(),
        entries,
        inst.objective(),
        allowed,
    ))
}

fn best_member(inst: &HomInstance, u: usize, class: &[usize], only_allowed: bool) -> Option<usize> {
    let mut best: Option<usize> = None;
    for &j in class {
        if only_allowed && !inst.allows(u, j) {
            continue;
        }
        if best.is_none_or(|b| inst.objective().better(inst.cost(u, j), inst.cost(u, b))) {
            best = Some(j);
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{similarity_quotient, Digraph};
    use crate::instance::{CostMatrix, Objective};
    use crate::poly::solve_cycle;

    fn doubled_c3() -> Digraph {
        Digraph::with_arcs(
            ["1a", "1b", "2", "3"],
            &[
                ("1a", "2"),
                ("1b", "2"),
                ("2", "3"),
                ("3", "1a"),
                ("3", "1b"),
            ],
        )
        .unwrap()
    }

    #[test]
    fn argmin_and_ties() {
        let h = doubled_c3();
        let q = similarity_quotient(&h);
        assert_eq!(q.classes, vec![vec![0, 1], vec![2], vec![3]]);
        let d = Digraph::new(["u"]).unwrap();
        for (costs, want) in [([4, 2, 9, 9], 1), ([3, 3, 9, 9], 0)] {
            let c = CostMatrix::from_fn(&d, &h, |_, j| costs[j]).unwrap();
            let inst = HomInstance::new(d.clone(), h.clone(), c, Objective::Min).unwrap();
            assert_eq!(
                base_instance(&inst, &q).unwrap().cost(0, 0),
                costs[0].min(costs[1])
            );
            let s = lift_extension(&inst, &q, |b| solve_cycle(b, &[0, 1, 2])).unwrap();
            assert_eq!(s.assignment(), Some(&[want][..]));
        }
    }

    #[test]
    fn identity_quotient_is_transparent() {
        let h = Digraph::numbered(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let d = Digraph::with_arcs(["a", "b"], &[("a", "b")]).unwrap();
        let c = CostMatrix::from_fn(&d, &h, |u, j| (u + 2 * j + 1) as i64).unwrap();
        let inst = HomInstance::new(d, h.clone(), c, Objective::Max).unwrap();
        let q = similarity_quotient(&h);
        let direct = solve_cycle(&inst, &[0, 1, 2]);
        assert_eq!(
            lift_extension(&inst, &q, |b| solve_cycle(b, &[0, 1, 2])).unwrap(),
            direct
        );
    }

    #[test]
    fn rejects_foreign_quotient() {
        let h = doubled_c3();
        let q = similarity_quotient(&Digraph::numbered(3, &[(1, 2), (2, 3), (3, 1)]).unwrap());
        let d = Digraph::new(["u"]).unwrap();
        let inst = HomInstance::new(
            d.clone(),
            h.clone(),
            CostMatrix::uniform(&d, &h, 1).unwrap(),
            Objective::Min,
        )
        .unwrap();
        assert_eq!(
            lift_extension(&inst, &q, |b| solve_cycle(b, &[0, 1, 2])),
            Err(SolveError::ClassMapInvalid)
        );
    }
}
