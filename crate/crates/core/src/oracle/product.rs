use super::{mwis_exact, ExactConfig, OracleError};
use crate::graph::UndirectedGraph;
use crate::instance::{HomInstance, Objective, Solution};

/// The homomorphic product `D (x) H` restricted to allowed colours.
///
/// Node `(u, i)` exists when colour `i` is allowed for `u`. Two nodes are
/// joined when they share the input vertex, or when `uv` is an arc of `D`
/// while `ij` is not an arc of `H`. Node weight is `c_i(u) + mu * |V(D)|`
/// with `mu` the largest cost, so heavier independent sets are never smaller.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductGraph {
    /// Node labels are `<u>:<i>`.
    pub graph: UndirectedGraph,
    /// `(input vertex, colour)` per node, ordered by vertex then colour.
    pub pairs: Vec<(usize, usize)>,
    pub weights: Vec<i64>,
}

/// Builds the product from the instance costs as given; maximisation is
/// implied, so minimisation callers complement costs first.
pub fn homomorphic_product(inst: &HomInstance) -> ProductGraph {
    let (d, h) = (inst.d(), inst.h());
    let n = d.len();
    let mu = inst.costs().max_entry();
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| inst.domain(u).map(move |i| (u, i)))
        .collect();
    let mut first = vec![0usize; n + 1];
    for &(u, _) in &pairs {
        first[u + 1] += 1;
    }
    for u in 0..n {
        first[u + 1] += first[u];
    }
    let labels = pairs
        .iter()
        .map(|&(u, i)| format!("{}:{}", d.label(u), h.label(i)));
    let mut graph = UndirectedGraph::new(labels).expect("pair labels are distinct");
    for u in 0..n {
        let block = first[u]..first[u + 1];
        for a in block.clone() {
            for b in a + 1..block.end {
                graph.add_edge(a, b).unwrap();
            }
        }
    }
    for (u, v) in d.arcs() {
        for a in first[u]..first[u + 1] {
            for b in first[v]..first[v + 1] {
                if !h.has_arc(pairs[a].1, pairs[b].1) {
                    graph.add_edge(a, b).unwrap();
                }
            }
        }
    }
    let shift = mu * n as i64;
    let weights = pairs
        .iter()
        .map(|&(u, i)| inst.cost(u, i) + shift)
        .collect();
    ProductGraph {
        graph,
        pairs,
        weights,
    }
}

/// Exact solve through the product: a homomorphism exists iff the maximum
/// weight independent set covers every input vertex.
pub fn solve_via_product(inst: &HomInstance, cfg: &ExactConfig) -> Result<Solution, OracleError> {
    const TAG: &str = "product";
    let n = inst.d().len();
    cfg.check_size(n * inst.h().len())?;
    let work = match inst.objective() {
        Objective::Min => inst.complement_costs(),
        Objective::Max => inst.clone(),
    };
    let p = homomorphic_product(&work);
    let best = mwis_exact(&p.graph, &p.weights, cfg)?;
    if best.set.len() < n {
        return Ok(Solution::infeasible(TAG));
    }
    let mut assignment = vec![0; n];
    for &node in &best.set {
        let (u, i) = p.pairs[node];
        assignment[u] = i;
    }
    Ok(Solution::scored(inst, assignment, TAG))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Digraph;
    use crate::instance::CostMatrix;

    fn instance(
        d: Digraph,
        h: Digraph,
        f: impl Fn(usize, usize) -> i64,
        obj: Objective,
    ) -> HomInstance {
        let c = CostMatrix::from_fn(&d, &h, f).unwrap();
        HomInstance::new(d, h, c, obj).unwrap()
    }

    fn edge_labels(p: &ProductGraph) -> Vec<(String, String)> {
        let g = &p.graph;
        g.edges()
            .map(|(a, b)| (g.label(a).to_string(), g.label(b).to_string()))
            .collect()
    }

    #[test]
    fn product_of_arc_and_tt2() {
        let d = Digraph::with_arcs(["a", "b"], &[("a", "b")]).unwrap();
        let h = Digraph::numbered(2, &[(1, 2)]).unwrap();
        let p = homomorphic_product(&instance(d, h, |_, _| 1, Objective::Max));
        let mut edges = edge_labels(&p);
        edges.sort();
        let mut want: Vec<(String, String)> = [
            ("a:1", "a:2"),
            ("a:1", "b:1"),
            ("a:2", "b:1"),
            ("a:2", "b:2"),
            ("b:1", "b:2"),
        ]
        .iter()
        .map(|&(x, y)| (x.into(), y.into()))
        .collect();
        want.sort();
        assert_eq!(edges, want);
        assert_eq!(p.weights, vec![3; 4]);
    }

    #[test]
    fn arcless_input_gives_only_vertex_cliques() {
        let d = Digraph::new(["a", "b"]).unwrap();
        let h = Digraph::numbered(3, &[(1, 2)]).unwrap();
        let p = homomorphic_product(&instance(d, h, |_, _| 1, Objective::Max));
        assert_eq!(p.graph.edge_count(), 6);
        assert!(p.graph.edges().all(|(a, b)| p.pairs[a].0 == p.pairs[b].0));
    }

    #[test]
    fn product_with_digon_target() {
        let d = Digraph::with_arcs(["a", "b"], &[("a", "b")]).unwrap();
        let h = Digraph::numbered(2, &[(1, 2), (2, 1)]).unwrap();
        let p = homomorphic_product(&instance(d, h, |_, _| 1, Objective::Max));
        let cross: Vec<_> = edge_labels(&p)
            .into_iter()
            .filter(|(x, y)| x[..1] != y[..1])
            .collect();
        assert_eq!(
            cross,
            vec![
                ("a:1".to_string(), "b:1".to_string()),
                ("a:2".into(), "b:2".into())
            ]
        );
    }

    #[test]
    fn solve_examples() {
        let cfg = ExactConfig::default();
        let ab = Digraph::with_arcs(["a", "b"], &[("a", "b")]).unwrap();
        let tt2 = Digraph::numbered(2, &[(1, 2)]).unwrap();
        let s = solve_via_product(
            &instance(ab.clone(), tt2.clone(), |_, _| 1, Objective::Min),
            &cfg,
        )
        .unwrap();
        assert_eq!(s.assignment(), Some(&[0, 1][..]));
        assert_eq!(s.cost(), Some(2));

        let c3 =
            Digraph::with_arcs(["a", "b", "c"], &[("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let s = solve_via_product(&instance(c3, tt2, |_, _| 1, Objective::Min), &cfg).unwrap();
        assert!(!s.is_optimal());

        let c2 = Digraph::numbered(2, &[(1, 2), (2, 1)]).unwrap();
        let costs = [[5, 1], [1, 5]];
        let s =
            solve_via_product(&instance(ab, c2, |u, i| costs[u][i], Objective::Min), &cfg).unwrap();
        assert_eq!(s.assignment(), Some(&[1, 0][..]));
        assert_eq!(s.cost(), Some(2));
    }
}
