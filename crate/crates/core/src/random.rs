//! Seeded generators for test and benchmark instances.

use rand::seq::SliceRandom;
use rand::Rng;

use crate::graph::{Digraph, UndirectedGraph};
use crate::instance::{CostMatrix, HomInstance, Objective};

fn labels(n: usize) -> Vec<String> {
    (0..n).map(|i| format!("v{i}")).collect()
}

/// Each ordered pair becomes an arc with probability `density`.
pub fn random_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let mut d = Digraph::new(labels(n)).expect("distinct labels");
    for u in 0..n {
        for v in 0..n {
            if u != v && rng.gen_bool(density) {
                d.add_arc(u, v).expect("in range");
            }
        }
    }
    d
}

/// Acyclic: arcs follow a hidden random order, each pair with probability
/// `density`.
pub fn random_dag(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let mut rank: Vec<usize> = (0..n).collect();
    rank.shuffle(rng);
    let mut d = Digraph::new(labels(n)).expect("distinct labels");
    for a in 0..n {
        for b in a + 1..n {
            if rng.gen_bool(density) {
                d.add_arc(rank[a], rank[b]).expect("in range");
            }
        }
    }
    d
}

/// Arcs only between two random sides, each in a random direction.
pub fn random_bipartite_digraph(rng: &mut impl Rng, n: usize, density: f64) -> Digraph {
    let side: Vec<bool> = (0..n).map(|_| rng.gen()).collect();
    let mut d = Digraph::new(labels(n)).expect("distinct labels");
    for u in 0..n {
        for v in u + 1..n {
            if side[u] != side[v] && rng.gen_bool(density) {
                let (a, b) = if rng.gen() { (u, v) } else { (v, u) };
                d.add_arc(a, b).expect("in range");
            }
        }
    }
    d
}

pub fn random_graph(rng: &mut impl Rng, n: usize, density: f64) -> UndirectedGraph {
    let mut g = UndirectedGraph::new(labels(n)).expect("distinct labels");
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(density) {
                g.add_edge(u, v).expect("in range");
            }
        }
    }
    g
}

/// A semicomplete multipartite digraph on `1..=n`: vertices fall into random
/// parts, and every pair across parts gets one arc or a digon (digons with
/// probability `digon`).
pub fn random_semicomplete_multipartite(rng: &mut impl Rng, n: usize, digon: f64) -> Digraph {
    let parts = rng.gen_range(1..=n.max(1));
    let part: Vec<usize> = (0..n).map(|_| rng.gen_range(0..parts)).collect();
    let mut h = Digraph::numbered(n, &[]).expect("numbered labels");
    for u in 0..n {
        for v in u + 1..n {
            if part[u] == part[v] {
                continue;
            }
            if rng.gen_bool(digon) {
                h.add_arc(u, v).expect("in range");
                h.add_arc(v, u).expect("in range");
            } else if rng.gen() {
                h.add_arc(u, v).expect("in range");
            } else {
                h.add_arc(v, u).expect("in range");
            }
        }
    }
    h
}

/// Uniform costs in `1..=max_cost`.
pub fn random_costs(rng: &mut impl Rng, d: &Digraph, h: &Digraph, max_cost: i64) -> CostMatrix {
    let cells: Vec<i64> = (0..d.len() * h.len())
        .map(|_| rng.gen_range(1..=max_cost))
        .collect();
    CostMatrix::from_fn(d, h, |u, i| cells[u * h.len() + i]).expect("costs in range")
}

pub fn random_instance(
    rng: &mut impl Rng,
    d: Digraph,
    h: Digraph,
    max_cost: i64,
    objective: Objective,
) -> HomInstance {
    let costs = random_costs(rng, &d, &h, max_cost);
    HomInstance::new(d, h, costs, objective).expect("aligned costs")
}
