use super::structure::topological_order;
use super::Digraph;

/// The named families a simple quotient base can belong to. Orders list the
/// base vertices as colours `1..=k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BaseShape {
    /// Acyclic tournament; arcs go from earlier to later positions.
    Tt(Vec<usize>),
    /// Acyclic tournament minus the arc from its source to its sink (k >= 3).
    TtMinus(Vec<usize>),
    /// Directed cycle `order[0] -> order[1] -> ... -> order[0]` (k >= 2).
    Cycle(Vec<usize>),
    Other,
}

impl BaseShape {
    pub fn k(&self) -> Option<usize> {
        match self {
            BaseShape::Tt(o) | BaseShape::TtMinus(o) | BaseShape::Cycle(o) => Some(o.len()),
            BaseShape::Other => None,
        }
    }
}

pub fn recognize_base(b: &Digraph) -> BaseShape {
    let k = b.len();
    if k == 0 {
        return BaseShape::Other;
    }
    let arcs = b.arc_count();
    let full = k * (k - 1) / 2;
    if let Some(order) = topological_order(b) {
        let missing: Vec<(usize, usize)> = (0..k)
            .flat_map(|i| (i + 1..k).map(move |j| (i, j)))
            .filter(|&(i, j)| !b.has_arc(order[i], order[j]))
            .collect();
        // Acyclic, so every arc runs forward in `order`; counting suffices.
        if arcs == full && missing.is_empty() {
            return BaseShape::Tt(order);
        }
        if k >= 3 && arcs + 1 == full && missing == [(0, k - 1)] {
            return BaseShape::TtMinus(order);
        }
        return BaseShape::Other;
    }
    if k >= 2 && arcs == k && (0..k).all(|v| b.out_degree(v) == 1 && b.in_degree(v) == 1) {
        let mut order = vec![0];
        let mut v = b.out_neighbors(0).next().unwrap();
        while v != 0 {
            order.push(v);
            v = b.out_neighbors(v).next().unwrap();
        }
        if order.len() == k {
            return BaseShape::Cycle(order);
        }
    }
    BaseShape::Other
}
