use std::collections::VecDeque;

use crate::graph::UndirectedGraph;
use crate::oracle::{solve_backtracking, ExactConfig, OracleError};

use super::reduce::{PairMode, ReductionKind, ReductionOutput};

/// A closed-form prediction of the optimum and whether it held.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FormulaCheck {
    pub name: &'static str,
    pub predicted: i64,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// Exact optimum of the reduction instance (`None` if infeasible).
    pub optimum: Option<i64>,
    /// Vertices of `G` on a cheapest colour in the optimum found.
    pub extracted: Vec<usize>,
    /// Whether `extracted` has the structure the reduction encodes.
    pub structure_holds: bool,
    pub checks: Vec<FormulaCheck>,
}

impl Certificate {
    pub fn check(&self, name: &str) -> Option<&FormulaCheck> {
        self.checks.iter().find(|c| c.name == name)
    }
}

/// Solves the reduction exactly and compares the optimum against
/// brute-force graph invariants of the source graph.
///
/// For `ac` the extracted set is the colour-3 set, a clique in
/// non-adjacent mode and an independent set in adjacent mode. For `c3tail`
/// it is the set of vertices not coloured 1; with default costs that set
/// induces a bipartite subgraph, with strict costs an independent set.
pub fn certify_reduction(
    r: &ReductionOutput,
    cfg: &ExactConfig,
) -> Result<Certificate, OracleError> {
    let g = &r.source;
    let nv = g.len() as i64;
    let nd = r.d.len() as i64;
    let sol = solve_backtracking(&r.instance(), cfg)?;
    let optimum = sol.cost();
    let colours = sol.assignment().unwrap_or(&[]);
    let cheap = |u: usize| r.costs.get(u, colours[u]) == 1;
    let extracted: Vec<usize> = if colours.is_empty() {
        Vec::new()
    } else {
        (0..g.len()).filter(|&u| cheap(u)).collect()
    };
    let check = |name, predicted| FormulaCheck {
        name,
        predicted,
        holds: optimum == Some(predicted),
    };
    let (structure_holds, checks) = match r.kind {
        ReductionKind::Ac(mode) => {
            let m = r.gadgets.len() as i64;
            let (q, ok) = match mode {
                PairMode::NonAdjacent => (max_clique(g).len(), is_clique(g, &extracted)),
                PairMode::Adjacent => (max_independent_set(g).len(), is_independent(g, &extracted)),
            };
            let q = q as i64;
            let name = match mode {
                PairMode::NonAdjacent => "clique",
                PairMode::Adjacent => "independent-set",
            };
            let predicted = 2 * m + q + (nv - q) * (nd + 1);
            (
                ok && extracted.len() as i64 == q,
                vec![check(name, predicted)],
            )
        }
        ReductionKind::C3Tail { strict } => {
            let alpha = max_independent_set(g).len() as i64;
            let b = max_induced_bipartite(g).len() as i64;
            let ok = if strict {
                is_independent(g, &extracted) && extracted.len() as i64 == alpha
            } else {
                is_induced_bipartite(g, &extracted) && extracted.len() as i64 == b
            };
            let checks = vec![
                check("independent-set", nd + nv - alpha),
                check("induced-bipartite", nd + nv - b),
            ];
            (ok, checks)
        }
    };
    Ok(Certificate {
        optimum,
        extracted,
        structure_holds,
        checks,
    })
}

pub fn is_clique(g: &UndirectedGraph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| g.has_edge(a, b)))
}

pub fn is_independent(g: &UndirectedGraph, set: &[usize]) -> bool {
    set.iter()
        .enumerate()
        .all(|(i, &a)| set[i + 1..].iter().all(|&b| !g.has_edge(a, b)))
}

pub fn is_induced_bipartite(g: &UndirectedGraph, set: &[usize]) -> bool {
    let mut side = vec![None; g.len()];
    for &v in set {
        side[v] = Some(u8::MAX);
    }
    for &root in set {
        if side[root] != Some(u8::MAX) {
            continue;
        }
        side[root] = Some(0);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            let s = side[v].expect("in set");
            for w in g.neighbors(v) {
                match side[w] {
                    None => {}
                    Some(u8::MAX) => {
                        side[w] = Some(1 - s);
                        queue.push_back(w);
                    }
                    Some(t) if t == s => return false,
                    Some(_) => {}
                }
            }
        }
    }
    true
}

/// Largest vertex set with `keep`, by enumerating all subsets; among the
/// largest, the one with the smallest bitmask.
fn brute(g: &UndirectedGraph, keep: impl Fn(&UndirectedGraph, &[usize]) -> bool) -> Vec<usize> {
    let n = g.len();
    assert!(n <= 24, "brute-force oracles are for small graphs");
    let mut best: Vec<usize> = Vec::new();
    for mask in 0u32..1 << n {
        if (mask.count_ones() as usize) <= best.len() {
            continue;
        }
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if keep(g, &set) {
            best = set;
        }
    }
    best
}

pub fn max_clique(g: &UndirectedGraph) -> Vec<usize> {
    brute(g, is_clique)
}

pub fn max_independent_set(g: &UndirectedGraph) -> Vec<usize> {
    brute(g, is_independent)
}

pub fn max_induced_bipartite(g: &UndirectedGraph) -> Vec<usize> {
    brute(g, is_induced_bipartite)
}
