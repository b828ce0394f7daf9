use super::{ExactConfig, OracleError};
use crate::graph::weak_components;
use crate::instance::{HomInstance, Objective, Solution};

/// Colour domains are bitmasks, so targets are capped at 64 vertices.
const MAX_TARGET: usize = 64;

/// Exact solve by arc-consistent backtracking, one weak component at a time.
///
/// Vertices are assigned in canonical order with colours ascending, and the
/// incumbent is replaced only on strict improvement, so the result is the
/// lexicographically least optimal colouring.
pub fn solve_backtracking(inst: &HomInstance, cfg: &ExactConfig) -> Result<Solution, OracleError> {
    const TAG: &str = "backtracking";
    let (d, h) = (inst.d(), inst.h());
    let (n, m) = (d.len(), h.len());
    cfg.check_size(n * m)?;
    if m > MAX_TARGET {
        return Err(OracleError::SizeLimitExceeded {
            size: m,
            limit: MAX_TARGET,
        });
    }
    let mask = |it: &mut dyn Iterator<Item = usize>| it.fold(0u64, |acc, j| acc | 1 << j);
    let out: Vec<u64> = (0..m).map(|i| mask(&mut h.out_neighbors(i))).collect();
    let inn: Vec<u64> = (0..m).map(|i| mask(&mut h.in_neighbors(i))).collect();
    let domains: Vec<u64> = (0..n).map(|u| mask(&mut inst.domain(u))).collect();

    let mut assignment = vec![0; n];
    for comp in weak_components(d) {
        let arcs: Vec<(usize, usize)> = comp
            .iter()
            .flat_map(|&u| d.out_neighbors(u).map(move |v| (u, v)))
            .collect();
        let mut search = Search {
            inst,
            cfg,
            out: &out,
            inn: &inn,
            comp: &comp,
            arcs: &arcs,
            current: vec![0; n],
            best: None,
            steps: 0,
        };
        let mut doms = domains.clone();
        if search.propagate(&mut doms) {
            search.run(&doms, 0, 0)?;
        }
        let Some((colours, _)) = search.best else {
            return Ok(Solution::infeasible(TAG));
        };
        for &u in &comp {
            assignment[u] = colours[u];
        }
    }
    Ok(Solution::scored(inst, assignment, TAG))
}

struct Search<'a> {
    inst: &'a HomInstance,
    cfg: &'a ExactConfig,
    out: &'a [u64],
    inn: &'a [u64],
    comp: &'a [usize],
    arcs: &'a [(usize, usize)],
    current: Vec<usize>,
    best: Option<(Vec<usize>, i64)>,
    steps: u64,
}

impl Search<'_> {
    /// AC-3 style revision to a fixpoint; false when some domain empties.
    fn propagate(&self, doms: &mut [u64]) -> bool {
        let mut changed = true;
        while changed {
            changed = false;
            for &(u, v) in self.arcs {
                let du = keep(doms[u], |i| self.out[i] & doms[v] != 0);
                let dv = keep(doms[v], |j| self.inn[j] & du != 0);
                if du == 0 || dv == 0 {
                    return false;
                }
                if du != doms[u] || dv != doms[v] {
                    doms[u] = du;
                    doms[v] = dv;
                    changed = true;
                }
            }
        }
        true
    }

    fn best_in(&self, u: usize, dom: u64) -> i64 {
        let costs = bits(dom).map(|i| self.inst.cost(u, i));
        match self.inst.objective() {
            Objective::Min => costs.min(),
            Objective::Max => costs.max(),
        }
        .expect("domains are non-empty during search")
    }

    fn run(&mut self, doms: &[u64], depth: usize, so_far: i64) -> Result<(), OracleError> {
        self.steps += 1;
        if self.steps % 1024 == 1 {
            self.cfg.check_cancel()?;
        }
        let rest: i64 = self.comp[depth..]
            .iter()
            .map(|&u| self.best_in(u, doms[u]))
            .sum();
        if let Some((_, inc)) = &self.best {
            if !self.inst.objective().better(so_far + rest, *inc) {
                return Ok(());
            }
        }
        let Some(&u) = self.comp.get(depth) else {
            self.best = Some((self.current.clone(), so_far));
            return Ok(());
        };
        for i in bits(doms[u]) {
            let mut next = doms.to_vec();
            next[u] = 1 << i;
            if self.propagate(&mut next) {
                self.current[u] = i;
                self.run(&next, depth + 1, so_far + self.inst.cost(u, i))?;
            }
        }
        Ok(())
    }
}

fn bits(mut x: u64) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        (x != 0).then(|| {
            let i = x.trailing_zeros() as usize;
            x &= x - 1;
            i
        })
    })
}

fn keep(dom: u64, f: impl Fn(usize) -> bool) -> u64 {
    bits(dom).filter(|&i| f(i)).fold(0, |acc, i| acc | 1 << i)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Digraph;
    use crate::instance::CostMatrix;
    use crate::oracle::solve_via_product;

    fn instance(d: Digraph, h: Digraph, f: impl Fn(usize, usize) -> i64) -> HomInstance {
        let c = CostMatrix::from_fn(&d, &h, f).unwrap();
        HomInstance::new(d, h, c, Objective::Min).unwrap()
    }

    #[test]
    fn agrees_with_product_on_examples() {
        let cfg = ExactConfig::default();
        let ab = Digraph::with_arcs(["a", "b"], &[("a", "b")]).unwrap();
        let c3 =
            Digraph::with_arcs(["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let tt2 = Digraph::numbered(2, &[(1, 2)]).unwrap();
        let c2 = Digraph::numbered(2, &[(1, 2), (2, 1)]).unwrap();
        let costs = [[5, 1], [1, 5]];
        let cases = [
            instance(ab.clone(), tt2.clone(), |_, _| 1),
            instance(c3, tt2.clone(), |_, _| 1),
            instance(ab, c2, |u, i| costs[u][i]),
        ];
        for inst in &cases {
            let a = solve_backtracking(inst, &cfg).unwrap();
            let b = solve_via_product(inst, &cfg).unwrap();
            assert_eq!(a.outcome, b.outcome);
        }
    }

    #[test]
    fn single_vertex_argmin() {
        let d = Digraph::new(["a"]).unwrap();
        let h = Digraph::numbered(3, &[(1, 2), (1, 3), (2, 3)]).unwrap();
        let c = [3, 1, 2];
        let s = solve_backtracking(&instance(d, h, |_, i| c[i]), &ExactConfig::default()).unwrap();
        assert_eq!(s.assignment(), Some(&[1][..]));
        assert_eq!(s.cost(), Some(1));
    }

    #[test]
    fn digon_into_tt2_is_infeasible() {
        let d = Digraph::with_arcs(["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        let h = Digraph::numbered(2, &[(1, 2)]).unwrap();
        let s = solve_backtracking(&instance(d, h, |_, _| 1), &ExactConfig::default()).unwrap();
        assert!(!s.is_optimal());
    }

    #[test]
    fn bit_helpers() {
        assert_eq!(bits(0b10110).collect::<Vec<_>>(), vec![1, 2, 4]);
        assert_eq!(keep(0b111, |i| i != 1), 0b101);
    }
}
