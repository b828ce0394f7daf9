use crate::graph::{Digraph, UndirectedGraph};
use crate::instance::{CostMatrix, HomInstance, Objective};

use super::{named_target, GadgetError};

/// Which vertex pairs of `G` receive a gadget in [`reduce_ac`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairMode {
    /// Non-edges; the colour-3 set of an optimum is then a maximum clique.
    #[default]
    NonAdjacent,
    /// Edges; the colour-3 set is then a maximum independent set.
    Adjacent,
}

impl PairMode {
    pub fn as_str(self) -> &'static str {
        match self {
            PairMode::NonAdjacent => "non-adjacent",
            PairMode::Adjacent => "adjacent",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReductionKind {
    Ac(PairMode),
    C3Tail { strict: bool },
}

impl ReductionKind {
    pub fn name(self) -> &'static str {
        match self {
            ReductionKind::Ac(_) => "ac",
            ReductionKind::C3Tail { .. } => "c3tail",
        }
    }
}

/// One gadget: the pair of `G` it joins and the vertices it added to `D`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GadgetCopy {
    pub index: usize,
    pub ends: (usize, usize),
    pub vertices: Vec<usize>,
}

/// A reduction instance. The first `|V(G)|` vertices of `d` are the vertices
/// of `source`, in order; objective is minimisation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionOutput {
    pub kind: ReductionKind,
    pub source: UndirectedGraph,
    pub d: Digraph,
    pub h: Digraph,
    pub costs: CostMatrix,
    pub gadgets: Vec<GadgetCopy>,
}

impl ReductionOutput {
    pub fn instance(&self) -> HomInstance {
        HomInstance::new(
            self.d.clone(),
            self.h.clone(),
            self.costs.clone(),
            Objective::Min,
        )
        .expect("reductions emit valid instances")
    }
}

/// Reduction onto the target `ac4` (`12, 23, 34, 14, 24`).
///
/// Every selected pair `{x, y}` gets fresh `u`, `v` with arcs `u -> x`,
/// `u -> v`, `v -> y`. With `n = |V(D)|`, vertices of `G` pay 1 for colour 3,
/// `n + 1` for colour 4 and `n^2 + n + 1` otherwise; gadget vertices pay 1
/// except `n^2 + n + 1` for colour 4.
pub fn reduce_ac(g: &UndirectedGraph, mode: PairMode) -> Result<ReductionOutput, GadgetError> {
    let pairs: Vec<(usize, usize)> = match mode {
        PairMode::NonAdjacent => g.non_edges().collect(),
        PairMode::Adjacent => g.edges().collect(),
    };
    let mut labels: Vec<String> = g.labels().to_vec();
    for idx in 0..pairs.len() {
        labels.push(format!("e{idx}.u"));
        labels.push(format!("e{idx}.v"));
    }
    let mut d = Digraph::new(labels)?;
    let base = g.len();
    let mut gadgets = Vec::with_capacity(pairs.len());
    for (idx, &(x, y)) in pairs.iter().enumerate() {
        let (u, v) = (base + 2 * idx, base + 2 * idx + 1);
        for (a, b) in [(u, x), (u, v), (v, y)] {
            d.add_arc(a, b)?;
        }
        gadgets.push(GadgetCopy {
            index: idx,
            ends: (x, y),
            vertices: vec![u, v],
        });
    }
    let h = named_target("ac4")?;
    let n = d.len() as i64;
    let big = n * n + n + 1;
    let costs = CostMatrix::from_fn(&d, &h, |u, i| match (u < base, i) {
        (true, 2) => 1,
        (true, 3) => n + 1,
        (true, _) => big,
        (false, 3) => big,
        (false, _) => 1,
    })?;
    Ok(ReductionOutput {
        kind: ReductionKind::Ac(mode),
        source: g.clone(),
        d,
        h,
        costs,
        gadgets,
    })
}

const C3TAIL_PARTS: [&str; 4] = ["x", "y", "u'", "v'"];

/// Reduction onto the target `c3tail` (`12, 23, 31, 34, 41`).
///
/// Each edge `uv` of `G` (`u` the smaller index) gets a 16-vertex gadget
/// `x, y, u', v', c1..c12` with arcs `x -> y`, `x -> c1`, `y -> c1`,
/// `c6 -> u' -> u`, `c11 -> v' -> v` and the cycle `c1 -> ... -> c12 -> c1`.
/// All costs are 1 except colour 1 on vertices of `G`, which costs 2; with
/// `strict`, colours 3 and 4 cost 2 there as well.
pub fn reduce_c3tail(g: &UndirectedGraph, strict: bool) -> Result<ReductionOutput, GadgetError> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut labels: Vec<String> = g.labels().to_vec();
    for idx in 0..edges.len() {
        labels.extend(C3TAIL_PARTS.iter().map(|p| format!("e{idx}.{p}")));
        labels.extend((1..=12).map(|j| format!("e{idx}.c{j}")));
    }
    let mut d = Digraph::new(labels)?;
    let base = g.len();
    let mut gadgets = Vec::with_capacity(edges.len());
    for (idx, &(u, v)) in edges.iter().enumerate() {
        let first = base + 16 * idx;
        let (x, y, up, vp) = (first, first + 1, first + 2, first + 3);
        let c = |j: usize| first + 3 + j;
        let mut arcs = vec![
            (x, y),
            (x, c(1)),
            (y, c(1)),
            (c(6), up),
            (up, u),
            (c(11), vp),
            (vp, v),
        ];
        arcs.extend((1..=12).map(|j| (c(j), c(j % 12 + 1))));
        for (a, b) in arcs {
            d.add_arc(a, b)?;
        }
        gadgets.push(GadgetCopy {
            index: idx,
            ends: (u, v),
            vertices: (first..first + 16).collect(),
        });
    }
    let h = named_target("c3tail")?;
    let costs = CostMatrix::from_fn(&d, &h, |u, i| match (u < base, i) {
        (true, 0) => 2,
        (true, 2 | 3) if strict => 2,
        _ => 1,
    })?;
    Ok(ReductionOutput {
        kind: ReductionKind::C3Tail { strict },
        source: g.clone(),
        d,
        h,
        costs,
        gadgets,
    })
}
