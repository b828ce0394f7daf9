use crate::flow::{max_weight_antichain, Poset};
use crate::graph::{transitive_closure, Digraph, GraphError};
use crate::instance::{HomInstance, Objective, Solution};

use super::canonical::canonical;

/// `(vertex, position)`.
type Node = (usize, usize);

pub(crate) const TAG: &str = "ttk";

/// Oriented colour-restricted product: element `e` is the pair
/// `nodes[e] = (vertex, position)` where `position` indexes the colour order.
///
/// Order relations are `(y,p) > (z,q)` for each closure arc `yz` with
/// `p >= q`, `(x,p) > (x,q)` for `p > q`, plus any extra pairs supplied by
/// the caller. The poset stores them as `(larger, smaller)`.
#[derive(Debug, Clone)]
pub struct ProductPoset {
    pub nodes: Vec<(usize, usize)>,
    pub poset: Poset,
}

impl ProductPoset {
    /// The poset for a transitive tournament on `order`, over the full
    /// transitive closure of `D`.
    pub fn tt(inst: &HomInstance, order: &[usize]) -> Result<Self, GraphError> {
        let closure = transitive_closure(inst.d())?;
        Ok(Self::build(inst, order, &closure, |_, _| true, &[]))
    }

    /// The poset for `TT_k^-` on `order`. `D` must be acyclic without
    /// isolated vertices. Sources never take the last position, sinks never
    /// the first, inner vertices neither; arcs from a source to a sink add
    /// `(t, last) > (s, first)`.
    ///
    /// Comparabilities come from the full closure rather than the closure
    /// minus non-arc source/sink pairs: a path `s -> z -> t` already forbids
    /// `s` and `t` sharing a colour, and without those pairs the order is
    /// not transitive.
    pub fn tt_minus(inst: &HomInstance, order: &[usize]) -> Result<Self, GraphError> {
        let d = inst.d();
        let closure = transitive_closure(d)?;
        let last = order.len() - 1;
        let source = |u: usize| d.in_degree(u) == 0;
        let sink = |u: usize| d.out_degree(u) == 0;
        let keep = |u: usize, p: usize| !(p == last && !sink(u) || p == 0 && !source(u));
        let extra: Vec<_> = d
            .arcs()
            .filter(|&(s, t)| source(s) && sink(t))
            .map(|(s, t)| ((t, last), (s, 0)))
            .collect();
        Ok(Self::build(inst, order, &closure, keep, &extra))
    }

    fn build(
        inst: &HomInstance,
        order: &[usize],
        closure: &Digraph,
        keep: impl Fn(usize, usize) -> bool,
        extra: &[(Node, Node)],
    ) -> Self {
        let k = order.len();
        let n = inst.d().len();
        let mut index = vec![usize::MAX; n * k];
        let mut nodes = Vec::new();
        for u in 0..n {
            for p in 0..k {
                if inst.allows(u, order[p]) && keep(u, p) {
                    index[u * k + p] = nodes.len();
                    nodes.push((u, p));
                }
            }
        }
        let at = |u: usize, p: usize| Some(index[u * k + p]).filter(|&e| e != usize::MAX);
        let mut rel = Vec::new();
        for (y, z) in closure.arcs() {
            for p in 0..k {
                for q in 0..=p {
                    if let (Some(a), Some(b)) = (at(y, p), at(z, q)) {
                        rel.push((a, b));
                    }
                }
            }
        }
        for x in 0..n {
            for p in 0..k {
                for q in 0..p {
                    if let (Some(a), Some(b)) = (at(x, p), at(x, q)) {
                        rel.push((a, b));
                    }
                }
            }
        }
        for &((y, p), (z, q)) in extra {
            if let (Some(a), Some(b)) = (at(y, p), at(z, q)) {
                rel.push((a, b));
            }
        }
        let poset = Poset::new_unchecked(nodes.len(), rel);
        ProductPoset { nodes, poset }
    }

    /// Heaviest antichain under the shifted weights; a homomorphism exists
    /// iff it takes one element per input vertex.
    pub(crate) fn solve(&self, inst: &HomInstance, order: &[usize], tag: &'static str) -> Solution {
        let n = inst.d().len();
        let work = match inst.objective() {
            Objective::Min => inst.complement_costs(),
            Objective::Max => inst.clone(),
        };
        let shift = work.costs().max_entry() * n as i64;
        let weights: Vec<i64> = self
            .nodes
            .iter()
            .map(|&(u, p)| work.cost(u, order[p]) + shift)
            .collect();
        let chosen = max_weight_antichain(&self.poset, &weights)
            .expect("product posets are valid flow inputs");
        if chosen.elements.len() < n {
            return Solution::infeasible(tag);
        }
        let mut assignment = vec![0; n];
        for &e in &chosen.elements {
            let (u, p) = self.nodes[e];
            assignment[u] = order[p];
        }
        Solution::scored(inst, assignment, tag)
    }
}

/// One antichain solve against the transitive tournament on `order`; the
/// arcs of `H` itself are never consulted.
pub(crate) fn tt_core(inst: &HomInstance, order: &[usize], tag: &'static str) -> Solution {
    match ProductPoset::tt(inst, order) {
        Ok(pp) => pp.solve(inst, order, tag),
        Err(_) => Solution::infeasible(tag),
    }
}

/// Optimal homomorphism to the transitive tournament whose topological
/// order is `order` (colour indices of `H`).
pub fn solve_ttk(inst: &HomInstance, order: &[usize]) -> Solution {
    canonical(inst, TAG, |i| tt_core(i, order, TAG))
}
