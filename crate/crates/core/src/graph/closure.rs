use std::collections::VecDeque;

use super::structure::{cycle_error, topological_order};
use super::{Digraph, GraphError};

fn reachable_from(d: &Digraph, x: usize) -> Vec<bool> {
    let mut seen = vec![false; d.len()];
    let mut queue = VecDeque::from([x]);
    while let Some(v) = queue.pop_front() {
        for w in d.out_neighbors(v) {
            if !seen[w] {
                seen[w] = true;
                queue.push_back(w);
            }
        }
    }
    seen
}

/// Transitive closure of an acyclic digraph.
pub fn transitive_closure(d: &Digraph) -> Result<Digraph, GraphError> {
    if topological_order(d).is_none() {
        return Err(cycle_error(d));
    }
    let mut c = d.clone();
    for x in 0..d.len() {
        for (y, r) in reachable_from(d, x).into_iter().enumerate() {
            if r {
                c.add_arc(x, y)?;
            }
        }
    }
    Ok(c)
}

/// Transitive closure that never adds an arc from a source to a sink.
///
/// Arcs of `d` itself are kept even when they run from a source to a sink.
pub fn restricted_closure(d: &Digraph) -> Result<Digraph, GraphError> {
    if topological_order(d).is_none() {
        return Err(cycle_error(d));
    }
    if let Some(v) = (0..d.len()).find(|&v| d.in_degree(v) == 0 && d.out_degree(v) == 0) {
        return Err(GraphError::IsolatedVertex(d.label(v).to_string()));
    }
    let mut c = d.clone();
    for x in 0..d.len() {
        let x_source = d.in_degree(x) == 0;
        for (y, r) in reachable_from(d, x).into_iter().enumerate() {
            if r && !(x_source && d.out_degree(y) == 0) {
                c.add_arc(x, y)?;
            }
        }
    }
    Ok(c)
}
