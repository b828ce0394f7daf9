//! Complexity classification of semicomplete multipartite targets.

use crate::graph::{
    is_acyclic, partite_sets, recognize_base, similarity_quotient, BaseShape, Digraph, QuotientInfo,
};

/// Which polynomial algorithm applies. Orders refer to vertices of the
/// quotient base.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PolyTag {
    Tt(Vec<usize>),
    TtMinus(Vec<usize>),
    Cycle(Vec<usize>),
    AcyclicBt,
    NoArcs,
}

impl PolyTag {
    pub fn name(&self) -> &'static str {
        match self {
            PolyTag::Tt(_) => "tt",
            PolyTag::TtMinus(_) => "ttminus",
            PolyTag::Cycle(_) => "cycle",
            PolyTag::AcyclicBt => "acyclic_bt",
            PolyTag::NoArcs => "no_arcs",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HardCase {
    Digon,
    KPartiteNotListed,
    BtCyclicNotC4,
    SemicompleteCyclic,
}

impl HardCase {
    pub fn label(self) -> &'static str {
        match self {
            HardCase::Digon => "digon",
            HardCase::KPartiteNotListed => "k-partite-not-listed",
            HardCase::BtCyclicNotC4 => "bt-cyclic-not-C4",
            HardCase::SemicompleteCyclic => "semicomplete-cyclic",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    Polynomial {
        tag: PolyTag,
        quotient: QuotientInfo,
    },
    NpHard(HardCase),
    Open,
    Unsupported(String),
}

impl Classification {
    pub fn verdict(&self) -> &'static str {
        match self {
            Classification::Polynomial { .. } => "polynomial",
            Classification::NpHard(_) => "np_hard",
            Classification::Open => "open",
            Classification::Unsupported(_) => "unsupported",
        }
    }

    pub fn is_polynomial(&self) -> bool {
        matches!(self, Classification::Polynomial { .. })
    }

    /// Size of the quotient base for polynomial verdicts.
    pub fn k(&self) -> Option<usize> {
        match self {
            Classification::Polynomial { quotient, .. } => Some(quotient.base.len()),
            _ => None,
        }
    }

    pub fn tag(&self) -> Option<&PolyTag> {
        match self {
            Classification::Polynomial { tag, .. } => Some(tag),
            _ => None,
        }
    }
}

/// Decides whether MinHOM/MaxHOM to `h` is polynomial, NP-hard or open.
pub fn classify(h: &Digraph) -> Classification {
    if h.is_empty() {
        return Classification::Unsupported("empty target".into());
    }
    let parts = match partite_sets(h) {
        Ok(p) => p,
        Err(e) => return Classification::Unsupported(e.to_string()),
    };
    let q = similarity_quotient(h);
    let shape = recognize_base(&q.base);
    let poly = |tag| Classification::Polynomial {
        tag,
        quotient: q.clone(),
    };
    let k = parts.len();
    if k == 1 {
        return poly(PolyTag::NoArcs);
    }
    if parts.iter().all(|p| p.len() == 1) {
        return match shape {
            BaseShape::Tt(o) => poly(PolyTag::Tt(o)),
            BaseShape::Cycle(o) if o.len() <= 3 => poly(PolyTag::Cycle(o)),
            _ if h.has_digon() => Classification::NpHard(HardCase::Digon),
            _ => Classification::NpHard(HardCase::SemicompleteCyclic),
        };
    }
    if k == 2 {
        if h.has_digon() {
            return match shape {
                BaseShape::Cycle(o) if o.len() == 2 => poly(PolyTag::Cycle(o)),
                _ => Classification::Open,
            };
        }
        if is_acyclic(h) {
            return match shape {
                BaseShape::Tt(o) => poly(PolyTag::Tt(o)),
                _ => poly(PolyTag::AcyclicBt),
            };
        }
        return match shape {
            BaseShape::Cycle(o) if o.len() == 4 => poly(PolyTag::Cycle(o)),
            _ => Classification::NpHard(HardCase::BtCyclicNotC4),
        };
    }
    match shape {
        BaseShape::Tt(o) => poly(PolyTag::Tt(o)),
        BaseShape::Cycle(o) if o.len() == 3 => poly(PolyTag::Cycle(o)),
        BaseShape::TtMinus(o) if o.len() >= 4 => poly(PolyTag::TtMinus(o)),
        _ if h.has_digon() => Classification::NpHard(HardCase::Digon),
        _ => Classification::NpHard(HardCase::KPartiteNotListed),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn n(k: usize, arcs: &[(usize, usize)]) -> Digraph {
        Digraph::numbered(k, arcs).unwrap()
    }

    fn summary(c: &Classification) -> (&'static str, Option<&'static str>, Option<usize>) {
        match c {
            Classification::NpHard(h) => ("np_hard", Some(h.label()), None),
            _ => (c.verdict(), c.tag().map(PolyTag::name), c.k()),
        }
    }

    #[test]
    fn golden() {
        let c3 = n(3, &[(1, 2), (2, 3), (3, 1)]);
        assert_eq!(
            summary(&classify(&c3)),
            ("polynomial", Some("cycle"), Some(3))
        );
        let ac4 = n(4, &[(1, 2), (2, 3), (3, 4), (1, 4), (2, 4)]);
        assert_eq!(
            summary(&classify(&ac4)),
            ("np_hard", Some("k-partite-not-listed"), None)
        );
        assert_eq!(classify(&ac4.dual()).verdict(), "np_hard");
        let c4x = n(4, &[(1, 2), (2, 3), (3, 4), (4, 1)])
            .blow_up(&[2, 1, 1, 1])
            .unwrap();
        assert_eq!(
            summary(&classify(&c4x)),
            ("polynomial", Some("cycle"), Some(4))
        );
        let h1 = n(5, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 5), (3, 5)]);
        assert_eq!(
            summary(&classify(&h1)),
            ("np_hard", Some("bt-cyclic-not-C4"), None)
        );
        let digon3 = n(3, &[(1, 2), (2, 1), (1, 3), (2, 3)]);
        assert_eq!(classify(&digon3).verdict(), "np_hard");
        let k22 = n(
            4,
            &[
                (1, 3),
                (3, 1),
                (1, 4),
                (4, 1),
                (2, 3),
                (3, 2),
                (2, 4),
                (4, 2),
            ],
        );
        assert_eq!(
            summary(&classify(&k22)),
            ("polynomial", Some("cycle"), Some(2))
        );
        let mixed = n(4, &[(1, 3), (3, 1), (1, 4), (2, 3), (2, 4)]);
        assert_eq!(classify(&mixed), Classification::Open);
    }

    #[test]
    fn other_branches() {
        assert_eq!(
            summary(&classify(&n(3, &[]))),
            ("polynomial", Some("no_arcs"), Some(1))
        );
        let not_multi = n(3, &[(1, 2)]);
        assert!(matches!(
            classify(&not_multi),
            Classification::Unsupported(_)
        ));
        let ttm4 = n(4, &[(1, 2), (1, 3), (2, 3), (2, 4), (3, 4)]);
        assert_eq!(
            summary(&classify(&ttm4)),
            ("polynomial", Some("ttminus"), Some(4))
        );
        let tt3 = n(3, &[(1, 2), (1, 3), (2, 3)]);
        assert_eq!(
            summary(&classify(&tt3)),
            ("polynomial", Some("tt"), Some(3))
        );
        // TT_3^- is bipartite: {1,3} against {2}.
        let ttm3 = n(3, &[(1, 2), (2, 3)]);
        assert_eq!(
            summary(&classify(&ttm3)),
            ("polynomial", Some("acyclic_bt"), Some(3))
        );
        let k12 = n(3, &[(1, 2), (1, 3)]);
        assert_eq!(
            summary(&classify(&k12)),
            ("polynomial", Some("tt"), Some(2))
        );
        let c4 = n(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]);
        assert_eq!(
            summary(&classify(&c4)),
            ("polynomial", Some("cycle"), Some(4))
        );
        let t4 = n(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3), (2, 4)]);
        assert_eq!(
            summary(&classify(&t4)),
            ("np_hard", Some("semicomplete-cyclic"), None)
        );
        let c4t = n(4, &[(1, 2), (2, 3), (3, 4), (4, 1), (1, 3)]);
        assert_eq!(
            summary(&classify(&c4t)),
            ("np_hard", Some("k-partite-not-listed"), None)
        );
    }
}
