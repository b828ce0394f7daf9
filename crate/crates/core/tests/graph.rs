mod common;

use proptest::prelude::*;
use semihom::gadgets;
use semihom::graph::{
    partite_sets, recognize_base, restricted_closure, similarity_quotient, structure_report,
    transitive_closure, Acyclicity, BaseShape, Bipartition,
};
use semihom::random::{random_dag, random_digraph, random_semicomplete_multipartite};
use semihom::Digraph;

fn reach(d: &Digraph, x: usize, y: usize) -> bool {
    let mut seen = vec![false; d.len()];
    let mut stack = vec![x];
    while let Some(v) = stack.pop() {
        for w in d.out_neighbors(v) {
            if w == y {
                return true;
            }
            if !seen[w] {
                seen[w] = true;
                stack.push(w);
            }
        }
    }
    false
}

fn arc_set(d: &Digraph) -> Vec<(usize, usize)> {
    d.arcs().collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn closure_matches_reachability(seed: u64, n in 1usize..9) {
        let d = random_dag(&mut common::rng(seed), n, 0.3);
        let c = transitive_closure(&d).unwrap();
        for x in 0..n {
            for y in 0..n {
                prop_assert_eq!(c.has_arc(x, y), reach(&d, x, y));
            }
        }
        prop_assert!(d.arcs().all(|(x, y)| c.has_arc(x, y)));
        prop_assert_eq!(arc_set(&transitive_closure(&c).unwrap()), arc_set(&c));
    }

    #[test]
    fn restricted_closure_drops_only_source_sink_pairs(seed: u64, n in 2usize..9) {
        let d = random_dag(&mut common::rng(seed), n, 0.35);
        let keep: Vec<usize> = (0..n).filter(|&v| d.in_degree(v) + d.out_degree(v) > 0).collect();
        prop_assume!(!keep.is_empty());
        let d = d.induced(&keep);
        let full = transitive_closure(&d).unwrap();
        let part = restricted_closure(&d).unwrap();
        for (x, y) in full.arcs() {
            let st = d.in_degree(x) == 0 && d.out_degree(y) == 0 && !d.has_arc(x, y);
            prop_assert_eq!(part.has_arc(x, y), !st);
        }
        prop_assert!(part.arcs().all(|(x, y)| full.has_arc(x, y)));
    }

    #[test]
    fn structure_report_is_consistent(seed: u64, n in 1usize..9) {
        let d = random_digraph(&mut common::rng(seed), n, 0.25);
        let r = structure_report(&d);
        match &r.acyclicity {
            Acyclicity::Acyclic(order) => {
                let pos: Vec<usize> = {
                    let mut p = vec![0; n];
                    for (i, &v) in order.iter().enumerate() { p[v] = i; }
                    p
                };
                prop_assert!(d.arcs().all(|(u, v)| pos[u] < pos[v]));
            }
            Acyclicity::Cyclic(w) => {
                prop_assert_eq!(w.first(), w.last());
                prop_assert!(w.windows(2).all(|p| d.has_arc(p[0], p[1])));
            }
        }
        for v in 0..n {
            prop_assert_eq!(r.sources.contains(&v), d.in_degree(v) == 0);
            prop_assert_eq!(r.sinks.contains(&v), d.out_degree(v) == 0);
        }
        if let Bipartition::Bipartite(side) = &r.bipartition {
            prop_assert!(d.arcs().all(|(u, v)| side[u] != side[v]));
        }
    }

    #[test]
    fn quotient_reconstructs(seed: u64, n in 1usize..8) {
        let h = random_digraph(&mut common::rng(seed), n, 0.4);
        let q = similarity_quotient(&h);
        prop_assert!(q.is_quotient_of(&h));
        let rebuilt = q.base.extension(
            &q.classes.iter().map(|c| c.iter().map(|&v| h.label(v).to_string()).collect()).collect::<Vec<Vec<_>>>(),
        ).unwrap();
        let label_arcs = |g: &Digraph| {
            let mut a: Vec<(String, String)> = g.arcs().map(|(u, v)| (g.label(u).into(), g.label(v).into())).collect();
            a.sort();
            a
        };
        prop_assert_eq!(label_arcs(&rebuilt), label_arcs(&h));
        prop_assert!(similarity_quotient(&q.base).is_identity());
    }

    #[test]
    fn partite_sets_fail_exactly_on_bad_triples(seed: u64, n in 1usize..7) {
        let h = random_digraph(&mut common::rng(seed), n, 0.5);
        let bad = (0..n).any(|x| (0..n).any(|y| (0..n).any(|z| {
            x != y && y != z && x != z && !h.adjacent(x, y) && !h.adjacent(y, z) && h.adjacent(x, z)
        })));
        prop_assert_eq!(partite_sets(&h).is_err(), bad);
    }

    #[test]
    fn generated_multipartite_targets_have_partite_sets(seed: u64, n in 1usize..8) {
        let h = random_semicomplete_multipartite(&mut common::rng(seed), n, 0.2);
        let parts = partite_sets(&h).unwrap();
        prop_assert_eq!(parts.iter().map(Vec::len).sum::<usize>(), n);
    }
}

#[test]
fn named_constructors_are_recognised() {
    for k in 1..=8 {
        assert!(matches!(recognize_base(&gadgets::tt(k)), BaseShape::Tt(o) if o.len() == k));
        assert!(matches!(recognize_base(&gadgets::tt(k).dual()), BaseShape::Tt(o) if o.len() == k));
    }
    for k in 2..=8 {
        assert!(matches!(recognize_base(&gadgets::cycle(k)), BaseShape::Cycle(o) if o.len() == k));
    }
    for k in 3..=8 {
        assert!(
            matches!(recognize_base(&gadgets::tt_minus(k)), BaseShape::TtMinus(o) if o.len() == k)
        );
    }
    assert!(matches!(
        recognize_base(&gadgets::named_target("ac4").unwrap()),
        BaseShape::Other
    ));
}

#[test]
fn closure_examples() {
    let d = Digraph::with_arcs(
        ["a", "b", "c", "d", "e"],
        &[("a", "b"), ("b", "c"), ("c", "d"), ("e", "c")],
    )
    .unwrap();
    let r = restricted_closure(&d).unwrap();
    let added: Vec<_> = r.arcs().filter(|&(x, y)| !d.has_arc(x, y)).collect();
    assert_eq!(added, vec![(0, 2), (1, 3)]);
    let p =
        Digraph::with_arcs(["a", "b", "c", "d"], &[("a", "b"), ("b", "c"), ("c", "d")]).unwrap();
    let full = transitive_closure(&p).unwrap();
    assert_eq!(full.arc_count(), 6);
}
