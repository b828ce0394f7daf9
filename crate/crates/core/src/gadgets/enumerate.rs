use std::collections::BTreeSet;

use crate::graph::{is_acyclic, similarity_quotient, Digraph, UndirectedGraph};

/// Every acyclic orientation of `K_{a,b}` on `1..=a+b`, the first `a`
/// vertices forming one side.
pub fn acyclic_bipartite_tournaments(a: usize, b: usize) -> impl Iterator<Item = Digraph> {
    let pairs: Vec<(usize, usize)> = (0..a)
        .flat_map(|x| (a..a + b).map(move |y| (x, y)))
        .collect();
    assert!(pairs.len() < 32, "too many pairs to enumerate");
    (0u32..1 << pairs.len()).filter_map(move |mask| {
        let mut h = Digraph::numbered(a + b, &[]).expect("numbered labels");
        for (bit, &(x, y)) in pairs.iter().enumerate() {
            let (s, t) = if mask >> bit & 1 == 1 { (y, x) } else { (x, y) };
            h.add_arc(s, t).expect("in range");
        }
        is_acyclic(&h).then_some(h)
    })
}

/// Simple acyclic bipartite tournaments with at most `max_vertices`
/// vertices, one per isomorphism class.
pub fn simple_acyclic_bipartite_tournaments(max_vertices: usize) -> Vec<Digraph> {
    assert!(max_vertices <= 7, "isomorphism dedup is by brute force");
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for n in 2..=max_vertices {
        for a in 1..=n / 2 {
            for h in acyclic_bipartite_tournaments(a, n - a) {
                if similarity_quotient(&h).is_identity() && seen.insert(canonical_form(&h)) {
                    out.push(h);
                }
            }
        }
    }
    out
}

/// Undirected graphs on `1..=n`, one per isomorphism class.
pub fn graphs_up_to_isomorphism(n: usize) -> Vec<UndirectedGraph> {
    assert!(n <= 6, "isomorphism dedup is by brute force");
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for mask in 0u32..1 << pairs.len() {
        let chosen: Vec<(usize, usize)> = (0..pairs.len())
            .filter(|&b| mask >> b & 1 == 1)
            .map(|b| pairs[b])
            .collect();
        let both: Vec<(usize, usize)> =
            chosen.iter().flat_map(|&(u, v)| [(u, v), (v, u)]).collect();
        if seen.insert(min_code(n, &both)) {
            let g = UndirectedGraph::from_indices((1..=n).map(|i| i.to_string()), chosen)
                .expect("valid edges");
            out.push(g);
        }
    }
    out
}

fn canonical_form(h: &Digraph) -> (usize, u64) {
    let arcs: Vec<(usize, usize)> = h.arcs().collect();
    (h.len(), min_code(h.len(), &arcs))
}

/// Smallest adjacency bit string over all relabellings.
fn min_code(n: usize, arcs: &[(usize, usize)]) -> u64 {
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    loop {
        let mut code = 0u64;
        for &(u, v) in arcs {
            code |= 1 << (perm[u] * n + perm[v]);
        }
        best = best.min(code);
        if !next_permutation(&mut perm) {
            return best;
        }
    }
}

fn next_permutation(p: &mut [usize]) -> bool {
    let Some(i) = (1..p.len()).rev().find(|&i| p[i - 1] < p[i]) else {
        return false;
    };
    let j = (i..p.len())
        .rev()
        .find(|&j| p[j] > p[i - 1])
        .expect("p[i] qualifies");
    p.swap(i - 1, j);
    p[i..].reverse();
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_counts() {
        // K_{1,1} has two orientations, both the single arc.
        assert_eq!(acyclic_bipartite_tournaments(1, 1).count(), 2);
        // Every orientation of a star is acyclic.
        assert_eq!(acyclic_bipartite_tournaments(1, 3).count(), 8);
        // 4-cycle orientations of K_{2,2}: two of sixteen are cyclic.
        assert_eq!(acyclic_bipartite_tournaments(2, 2).count(), 14);
    }

    #[test]
    fn graph_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| graphs_up_to_isomorphism(n).len()).collect();
        assert_eq!(counts, vec![1, 2, 4, 11, 34]);
    }

    #[test]
    fn simple_ones_are_simple_and_distinct() {
        let all = simple_acyclic_bipartite_tournaments(5);
        assert!(all.iter().any(|h| h.len() == 2));
        assert!(all.iter().all(|h| similarity_quotient(h).is_identity()));
        let forms: BTreeSet<_> = all.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), all.len());
    }
}
