use std::cmp::Reverse;
use std::collections::{BinaryHeap, VecDeque};

use super::{Digraph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Acyclicity {
    /// Lexicographically least topological order.
    Acyclic(Vec<usize>),
    /// A directed cycle, first vertex repeated at the end.
    Cyclic(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Bipartition {
    /// `side[v]` is 0 or 1; the first vertex of every weak component is on side 0.
    Bipartite(Vec<u8>),
    /// An odd cycle of the underlying graph, first vertex repeated at the end.
    OddCycle(Vec<usize>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructureReport {
    pub acyclicity: Acyclicity,
    pub weak_components: Vec<Vec<usize>>,
    pub sources: Vec<usize>,
    pub sinks: Vec<usize>,
    pub bipartition: Bipartition,
}

impl StructureReport {
    pub fn is_acyclic(&self) -> bool {
        matches!(self.acyclicity, Acyclicity::Acyclic(_))
    }
}

pub fn structure_report(d: &Digraph) -> StructureReport {
    let n = d.len();
    StructureReport {
        acyclicity: acyclicity(d),
        weak_components: weak_components(d),
        sources: (0..n).filter(|&v| d.in_degree(v) == 0).collect(),
        sinks: (0..n).filter(|&v| d.out_degree(v) == 0).collect(),
        bipartition: match two_coloring(d) {
            Ok(side) => Bipartition::Bipartite(side),
            Err(cycle) => Bipartition::OddCycle(cycle),
        },
    }
}

pub fn is_acyclic(d: &Digraph) -> bool {
    topological_order(d).is_some()
}

/// Kahn's algorithm with a min-heap, so ties go to the smallest index.
pub(crate) fn topological_order(d: &Digraph) -> Option<Vec<usize>> {
    let n = d.len();
    let mut indeg: Vec<usize> = (0..n).map(|v| d.in_degree(v)).collect();
    let mut heap: BinaryHeap<Reverse<usize>> =
        (0..n).filter(|&v| indeg[v] == 0).map(Reverse).collect();
    let mut order = Vec::with_capacity(n);
    while let Some(Reverse(v)) = heap.pop() {
        order.push(v);
        for w in d.out_neighbors(v) {
            indeg[w] -= 1;
            if indeg[w] == 0 {
                heap.push(Reverse(w));
            }
        }
    }
    (order.len() == n).then_some(order)
}

fn acyclicity(d: &Digraph) -> Acyclicity {
    match topological_order(d) {
        Some(order) => Acyclicity::Acyclic(order),
        None => Acyclicity::Cyclic(find_cycle(d).expect("Kahn failed so a cycle exists")),
    }
}

/// Iterative DFS in canonical order; returns the first cycle closed by a back arc.
pub(crate) fn find_cycle(d: &Digraph) -> Option<Vec<usize>> {
    const WHITE: u8 = 0;
    const GREY: u8 = 1;
    const BLACK: u8 = 2;
    let n = d.len();
    let mut color = vec![WHITE; n];
    let succ: Vec<Vec<usize>> = (0..n).map(|v| d.out_neighbors(v).collect()).collect();
    for root in 0..n {
        if color[root] != WHITE {
            continue;
        }
        let mut path: Vec<(usize, usize)> = vec![(root, 0)];
        color[root] = GREY;
        while let Some(&mut (v, ref mut next)) = path.last_mut() {
            if *next < succ[v].len() {
                let w = succ[v][*next];
                *next += 1;
                match color[w] {
                    WHITE => {
                        color[w] = GREY;
                        path.push((w, 0));
                    }
                    GREY => {
                        let start = path.iter().position(|&(x, _)| x == w).unwrap();
                        let mut cycle: Vec<usize> = path[start..].iter().map(|&(x, _)| x).collect();
                        cycle.push(w);
                        return Some(cycle);
                    }
                    _ => {}
                }
            } else {
                color[v] = BLACK;
                path.pop();
            }
        }
    }
    None
}

pub(crate) fn cycle_error(d: &Digraph) -> GraphError {
    let cycle = find_cycle(d).unwrap_or_default();
    GraphError::CyclicInput(cycle.iter().map(|&v| d.label(v).to_string()).collect())
}

/// Components of the underlying graph, each sorted, ordered by smallest member.
pub fn weak_components(d: &Digraph) -> Vec<Vec<usize>> {
    let n = d.len();
    let mut seen = vec![false; n];
    let mut comps = Vec::new();
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let mut comp = vec![root];
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in d.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push_back(w);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Two-colours the underlying graph by BFS. On failure returns an odd cycle.
pub fn two_coloring(d: &Digraph) -> Result<Vec<u8>, Vec<usize>> {
    let n = d.len();
    let mut side = vec![u8::MAX; n];
    let mut parent = vec![usize::MAX; n];
    for root in 0..n {
        if side[root] != u8::MAX {
            continue;
        }
        side[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in d.neighbors(v) {
                if side[w] == u8::MAX {
                    side[w] = 1 - side[v];
                    parent[w] = v;
                    queue.push_back(w);
                } else if side[w] == side[v] {
                    return Err(odd_cycle(&parent, v, w));
                }
            }
        }
    }
    Ok(side)
}

fn odd_cycle(parent: &[usize], v: usize, w: usize) -> Vec<usize> {
    let up = |mut x: usize| {
        let mut p = vec![x];
        while parent[x] != usize::MAX {
            x = parent[x];
            p.push(x);
        }
        p
    };
    let pv = up(v);
    let pw = up(w);
    // Strip the common tail (path to the root) down to the lowest common ancestor.
    let mut i = pv.len();
    let mut j = pw.len();
    while i > 1 && j > 1 && pv[i - 2] == pw[j - 2] {
        i -= 1;
        j -= 1;
    }
    let mut cycle: Vec<usize> = pv[..i].to_vec();
    cycle.extend(pw[..j - 1].iter().rev());
    cycle.push(v);
    cycle
}

/// Partite sets of a semicomplete multipartite digraph: the classes of the
/// non-adjacency relation, ordered by smallest member.
pub fn partite_sets(h: &Digraph) -> Result<Vec<Vec<usize>>, GraphError> {
    let n = h.len();
    let closed: Vec<Vec<usize>> = (0..n)
        .map(|v| (0..n).filter(|&w| w == v || !h.adjacent(v, w)).collect())
        .collect();
    for v in 0..n {
        for &w in &closed[v] {
            if closed[w] == closed[v] {
                continue;
            }
            let lbl = |x: usize| h.label(x).to_string();
            // z non-adjacent to v but adjacent to w: (z, v, w) is the bad triple.
            if let Some(&z) = closed[v].iter().find(|z| !closed[w].contains(z)) {
                return Err(GraphError::NotMultipartite(lbl(z), lbl(v), lbl(w)));
            }
            let z = *closed[w].iter().find(|z| !closed[v].contains(z)).unwrap();
            return Err(GraphError::NotMultipartite(lbl(v), lbl(w), lbl(z)));
        }
    }
    let mut seen = vec![false; n];
    let mut parts = Vec::new();
    for v in 0..n {
        if !seen[v] {
            for &w in &closed[v] {
                seen[w] = true;
            }
            parts.push(closed[v].clone());
        }
    }
    Ok(parts)
}
