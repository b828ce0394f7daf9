mod common;

use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use rand::Rng;
use semihom::oracle::{homomorphic_product, mwis_exact, solve_backtracking, solve_via_product};
use semihom::random::{random_digraph, random_instance};
use semihom::{ExactConfig, HomInstance, Objective};

fn cfg() -> ExactConfig {
    ExactConfig::with_limit(200)
}

fn optimal_set(inst: &HomInstance) -> BTreeSet<Vec<usize>> {
    let best = common::brute_optimum(inst);
    common::all_homs(inst)
        .into_iter()
        .filter(|f| inst.evaluate(f) == best)
        .collect()
}

fn small_instance(
    seed: u64,
    nd: usize,
    nh: usize,
    max_cost: i64,
    objective: Objective,
) -> HomInstance {
    let mut r = common::rng(seed);
    let d = random_digraph(&mut r, nd, 0.3);
    let h = random_digraph(&mut r, nh, 0.5);
    random_instance(&mut r, d, h, max_cost, objective)
}

fn random_domains(seed: u64, inst: &HomInstance) -> BTreeMap<usize, BTreeSet<usize>> {
    let mut r = common::rng(seed);
    let m = inst.h().len();
    let mut out = BTreeMap::new();
    for u in 0..inst.d().len() {
        if r.gen_bool(0.5) {
            let mut s: BTreeSet<usize> = (0..m).filter(|_| r.gen_bool(0.6)).collect();
            s.insert(r.gen_range(0..m));
            out.insert(u, s);
        }
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn complement_preserves_optimal_assignments(seed: u64, nd in 1usize..5, nh in 1usize..4, min: bool) {
        let obj = if min { Objective::Min } else { Objective::Max };
        let inst = small_instance(seed, nd, nh, 5, obj);
        let comp = inst.complement_costs();
        prop_assert_eq!(comp.objective(), obj.flipped());
        prop_assert_eq!(optimal_set(&inst), optimal_set(&comp));
        prop_assert_eq!(optimal_set(&inst), optimal_set(&comp.complement_costs()));
    }

    #[test]
    fn restriction_composes_as_intersection(seed: u64, nd in 1usize..5, nh in 1usize..4) {
        let inst = small_instance(seed, nd, nh, 5, Objective::Min);
        let a = random_domains(seed ^ 1, &inst);
        let b = random_domains(seed ^ 2, &inst);
        let mut both = a.clone();
        for (u, s) in &b {
            let merged: BTreeSet<usize> = match both.get(u) {
                Some(t) => t.intersection(s).copied().collect(),
                None => s.clone(),
            };
            both.insert(*u, merged);
        }
        let twice = inst.restrict_colors(&a).unwrap().restrict_colors(&b);
        match inst.restrict_colors(&both) {
            Ok(once) => prop_assert_eq!(twice.unwrap(), once),
            // An empty intersection leaves an empty domain behind.
            Err(_) => {
                let twice = twice.unwrap();
                prop_assert!((0..nd).any(|u| twice.domain(u).next().is_none()));
                prop_assert!(common::all_homs(&twice).is_empty());
            }
        }
    }

    #[test]
    fn restriction_keeps_exactly_the_respecting_homs(seed: u64, nd in 1usize..5, nh in 1usize..4) {
        let inst = small_instance(seed, nd, nh, 5, Objective::Min);
        let dom = random_domains(seed ^ 3, &inst);
        let r = inst.restrict_colors(&dom).unwrap();
        let expected: Vec<Vec<usize>> = common::all_homs(&inst)
            .into_iter()
            .filter(|f| dom.iter().all(|(u, s)| s.contains(&f[*u])))
            .collect();
        prop_assert_eq!(common::all_homs(&r), expected);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn product_independence_number_decides_existence(seed: u64, nd in 1usize..7, nh in 1usize..6) {
        let inst = small_instance(seed, nd, nh, 10, Objective::Max);
        let p = homomorphic_product(&inst);
        let m = mwis_exact(&p.graph, &p.weights, &cfg()).unwrap();
        let exists = !common::all_homs(&inst).is_empty();
        prop_assert_eq!(exists, m.set.len() == nd);
    }

    #[test]
    fn oracles_agree_exactly(seed: u64, nd in 1usize..7, nh in 1usize..6, min: bool) {
        let obj = if min { Objective::Min } else { Objective::Max };
        let inst = small_instance(seed, nd, nh, 10, obj);
        let a = solve_via_product(&inst, &cfg()).unwrap();
        let b = solve_backtracking(&inst, &cfg()).unwrap();
        prop_assert_eq!(&a.outcome, &b.outcome);
        prop_assert_eq!(a.cost(), common::brute_optimum(&inst));
    }

    #[test]
    fn mu_shift_makes_cardinality_dominate(seed: u64, nd in 1usize..6, nh in 1usize..5) {
        let inst = small_instance(seed, nd, nh, 10, Objective::Max);
        let p = homomorphic_product(&inst);
        let wmin = *p.weights.iter().min().unwrap();
        let wmax = *p.weights.iter().max().unwrap();
        // Sets of size s + 1 weigh at least (s+1) * wmin; sets of size s at most s * wmax.
        for s in 0..nd {
            prop_assert!((s as i64 + 1) * wmin > s as i64 * wmax);
        }
    }
}

#[test]
fn size_limit_is_enforced() {
    let inst = small_instance(7, 6, 5, 10, Objective::Min);
    let small = ExactConfig::with_limit(10);
    assert!(solve_backtracking(&inst, &small).is_err());
    assert!(solve_via_product(&inst, &small).is_err());
}

#[test]
fn cancellation_is_honoured() {
    let inst = small_instance(11, 6, 5, 10, Objective::Min);
    let token = semihom::oracle::CancelToken::new();
    token.cancel();
    let cfg = ExactConfig {
        limit: 100,
        cancel: Some(token),
    };
    assert_eq!(
        solve_backtracking(&inst, &cfg),
        Err(semihom::OracleError::Cancelled)
    );
}
