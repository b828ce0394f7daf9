mod common;

use proptest::prelude::*;
use rand::Rng;
use semihom::graph::similarity_quotient;
use semihom::oracle::solve_backtracking;
use semihom::random::{
    random_bipartite_digraph, random_dag, random_digraph, random_instance,
    random_semicomplete_multipartite,
};
use semihom::{
    classify, gadgets, solve_poly, Classification, Digraph, ExactConfig, HardCase, PolyTag,
};

/// All semicomplete multipartite digraphs on `1..=n`: every set partition,
/// every choice of arc, reverse arc or digon across parts.
fn all_multipartite(n: usize) -> Vec<Digraph> {
    let mut out = Vec::new();
    let mut part = vec![0usize; n];
    loop {
        let cross: Vec<(usize, usize)> = (0..n)
            .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
            .filter(|&(u, v)| part[u] != part[v])
            .collect();
        for code in 0..3usize.pow(cross.len() as u32) {
            let mut h = Digraph::numbered(n, &[]).unwrap();
            let mut c = code;
            for &(u, v) in &cross {
                match c % 3 {
                    0 => h.add_arc(u, v).unwrap(),
                    1 => h.add_arc(v, u).unwrap(),
                    _ => h.add_arc(u, v).unwrap() | h.add_arc(v, u).unwrap(),
                };
                c /= 3;
            }
            out.push(h);
        }
        // Next restricted-growth string.
        let mut i = n;
        loop {
            if i <= 1 {
                return out;
            }
            i -= 1;
            let cap = part[..i].iter().max().map_or(0, |m| m + 1);
            if part[i] < cap {
                part[i] += 1;
                part[i + 1..].iter_mut().for_each(|p| *p = 0);
                break;
            }
        }
    }
}

fn kind(c: &Classification) -> (&'static str, Option<&'static str>) {
    (c.verdict(), c.tag().map(PolyTag::name))
}

#[test]
fn every_small_multipartite_target_gets_a_verdict() {
    for n in 1..=5 {
        for h in all_multipartite(n) {
            let c = classify(&h);
            assert!(!matches!(c, Classification::Unsupported(_)), "{h:?}");
        }
    }
}

#[test]
fn duals_get_the_same_kind_of_verdict() {
    for n in 1..=5 {
        for h in all_multipartite(n) {
            let (a, b) = (classify(&h), classify(&h.dual()));
            assert_eq!(a.verdict(), b.verdict(), "{h:?}");
            assert_eq!(a.k(), b.k(), "{h:?}");
        }
    }
}

#[test]
fn polynomial_verdicts_reconstruct_the_target() {
    for n in 1..=5 {
        for h in all_multipartite(n) {
            if let Classification::Polynomial { quotient, .. } = classify(&h) {
                assert!(quotient.is_quotient_of(&h));
                assert_eq!(quotient, similarity_quotient(&h));
            }
        }
    }
}

#[test]
fn golden_table() {
    let numbered = |n, arcs: &[(usize, usize)]| Digraph::numbered(n, arcs).unwrap();
    let c3 = gadgets::cycle(3);
    assert_eq!(kind(&classify(&c3)), ("polynomial", Some("cycle")));
    assert_eq!(classify(&c3).k(), Some(3));
    let ttm4 = gadgets::tt_minus(4);
    assert_eq!(
        (kind(&classify(&ttm4)), classify(&ttm4).k()),
        (("polynomial", Some("ttminus")), Some(4))
    );
    let c4x = gadgets::cycle(4).blow_up(&[2, 1, 1, 1]).unwrap();
    assert_eq!(
        (kind(&classify(&c4x)), classify(&c4x).k()),
        (("polynomial", Some("cycle")), Some(4))
    );
    let ac4 = gadgets::named_target("ac4").unwrap();
    assert_eq!(
        classify(&ac4),
        Classification::NpHard(HardCase::KPartiteNotListed)
    );
    assert_eq!(classify(&ac4.dual()).verdict(), "np_hard");
    assert_eq!(
        classify(&gadgets::named_target("c3tail").unwrap()).verdict(),
        "np_hard"
    );
    assert_eq!(
        classify(&gadgets::named_target("bt5").unwrap()),
        Classification::NpHard(HardCase::BtCyclicNotC4)
    );
    let digon_dom = numbered(3, &[(1, 2), (2, 1), (1, 3), (2, 3)]);
    assert_eq!(
        classify(&digon_dom),
        Classification::NpHard(HardCase::Digon)
    );
    let mut kb = numbered(4, &[]);
    for (a, b) in [(0, 2), (0, 3), (1, 2), (1, 3)] {
        kb.add_arc(a, b).unwrap();
        kb.add_arc(b, a).unwrap();
    }
    assert_eq!(
        (kind(&classify(&kb)), classify(&kb).k()),
        (("polynomial", Some("cycle")), Some(2))
    );
    let mixed = numbered(4, &[(1, 3), (3, 1), (1, 4), (2, 3), (2, 4)]);
    assert_eq!(classify(&mixed), Classification::Open);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn polynomial_verdicts_are_sound(seed: u64, nh in 1usize..7, digon in 0.0f64..0.3) {
        let mut r = common::rng(seed);
        let h = random_semicomplete_multipartite(&mut r, nh, digon);
        let cls = classify(&h);
        prop_assume!(cls.is_polynomial());
        let cfg = ExactConfig::with_limit(1000);
        for _ in 0..20 {
            let n = r.gen_range(1..=7);
            let d = match r.gen_range(0..3) {
                0 => random_dag(&mut r, n, 0.3),
                1 => random_bipartite_digraph(&mut r, n, 0.4),
                _ => random_digraph(&mut r, n, 0.2),
            };
            for obj in common::objectives() {
                let inst = random_instance(&mut r, d.clone(), h.clone(), 10, obj);
                let got = solve_poly(&inst, &cls).unwrap();
                let want = solve_backtracking(&inst, &cfg).unwrap();
                prop_assert_eq!(&got.outcome, &want.outcome, "{:?} on {:?}", cls, h);
            }
        }
    }
}

#[test]
fn non_multipartite_and_empty_are_unsupported() {
    let h = Digraph::with_arcs(["a", "b", "c"], &[("a", "b")]).unwrap();
    assert_eq!(classify(&h).verdict(), "unsupported");
    assert_eq!(
        classify(&Digraph::new(Vec::<String>::new()).unwrap()).verdict(),
        "unsupported"
    );
}
