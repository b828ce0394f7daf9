use fixedbitset::FixedBitSet;

use super::network::{min_flow, FlowNetwork};
use super::FlowError;

/// A strict partial order on `0..len`, stored as its full comparability
/// relation: `above[u]` holds every `v` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Poset {
    above: Vec<FixedBitSet>,
}

impl Poset {
    /// Builds the order from its relation pairs `(u, v)` meaning `u < v`,
    /// rejecting relations that are cyclic or not transitively closed.
    pub fn new(
        len: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self, FlowError> {
        let mut above = vec![FixedBitSet::with_capacity(len); len];
        for (u, v) in pairs {
            if u >= len || v >= len {
                return Err(FlowError::InvalidNetwork(format!(
                    "relation {u} < {v} outside 0..{len}"
                )));
            }
            above[u].insert(v);
        }
        let p = Poset { above };
        p.check()?;
        Ok(p)
    }

    /// Like [`Poset::new`] but only verifies the order in debug builds.
    pub fn new_unchecked(len: usize, pairs: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut above = vec![FixedBitSet::with_capacity(len); len];
        for (u, v) in pairs {
            above[u].insert(v);
        }
        let p = Poset { above };
        debug_assert_eq!(p.check(), Ok(()));
        p
    }

    fn check(&self) -> Result<(), FlowError> {
        for (u, up) in self.above.iter().enumerate() {
            for v in up.ones() {
                if let Some(w) = self.above[v].difference(up).next() {
                    return Err(if w == u {
                        FlowError::CyclicOrder(u)
                    } else {
                        FlowError::NotTransitivelyClosed(u, w)
                    });
                }
            }
        }
        // Any remaining cycle is a self-relation.
        match (0..self.len()).find(|&u| self.above[u].contains(u)) {
            Some(u) => Err(FlowError::CyclicOrder(u)),
            None => Ok(()),
        }
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn less_than(&self, u: usize, v: usize) -> bool {
        self.above[u].contains(v)
    }

    pub fn comparable(&self, u: usize, v: usize) -> bool {
        self.less_than(u, v) || self.less_than(v, u)
    }

    pub fn relations(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.above
            .iter()
            .enumerate()
            .flat_map(|(u, up)| up.ones().map(move |v| (u, v)))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain {
    /// Elements, ascending.
    pub elements: Vec<usize>,
    pub total: i64,
    /// Value of the minimum flow; equals `total`.
    pub flow_value: i64,
}

/// Maximum-weight antichain through a minimum flow with lower bounds.
///
/// Element `v` becomes an arc `v- -> v+` that must carry at least `w[v]`;
/// every relation `u < v` becomes `u+ -> v-`. A minimum flow covers the
/// weights with as little as possible, and its sink-side residual cut crosses
/// exactly the element arcs of a heaviest antichain.
pub fn max_weight_antichain(p: &Poset, w: &[i64]) -> Result<Antichain, FlowError> {
    let n = p.len();
    assert_eq!(w.len(), n, "one weight per element");
    if let Some(v) = w.iter().position(|&x| x < 0) {
        return Err(FlowError::NegativeWeight(v));
    }
    let (s, t) = (0, 1);
    let minus = |v: usize| 2 + 2 * v;
    let plus = |v: usize| 3 + 2 * v;
    let mut net = FlowNetwork::new(2 * n + 2, s, t)?;
    let mut has_below = vec![false; n];
    for (u, v) in p.relations() {
        has_below[v] = true;
        net.add_arc(plus(u), minus(v), 0, None)?;
    }
    for v in 0..n {
        net.add_arc(minus(v), plus(v), w[v], None)?;
        if !has_below[v] {
            net.add_arc(s, minus(v), 0, None)?;
        }
        if p.above[v].is_clear() {
            net.add_arc(plus(v), t, 0, None)?;
        }
    }
    let f = min_flow(&net)?;
    let x = &f.sink_reachable;
    let elements: Vec<usize> = (0..n).filter(|&v| !x[minus(v)] && x[plus(v)]).collect();
    let total = elements.iter().map(|&v| w[v]).sum();
    Ok(Antichain {
        elements,
        total,
        flow_value: f.value,
    })
}
