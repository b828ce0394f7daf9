use fixedbitset::FixedBitSet;

use super::{ExactConfig, OracleError};
use crate::graph::UndirectedGraph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mwis {
    /// Chosen vertices, ascending.
    pub set: Vec<usize>,
    pub weight: i64,
}

/// Maximum weight independent set by branch and bound.
///
/// Branches include-first on the smallest remaining candidate and only ever
/// replaces the incumbent on strict improvement, so the reported optimum is
/// the first one in include-first order (for positive weights: the
/// lexicographically least optimal set). Weights must be non-negative.
pub fn mwis_exact(
    g: &UndirectedGraph,
    weights: &[i64],
    cfg: &ExactConfig,
) -> Result<Mwis, OracleError> {
    let n = g.len();
    assert_eq!(weights.len(), n, "one weight per vertex");
    assert!(
        weights.iter().all(|&w| w >= 0),
        "weights must be non-negative"
    );
    cfg.check_size(n)?;
    let adj: Vec<FixedBitSet> = (0..n)
        .map(|v| {
            let mut b = FixedBitSet::with_capacity(n);
            for w in g.neighbors(v) {
                b.insert(w);
            }
            b
        })
        .collect();
    let mut by_weight: Vec<usize> = (0..n).collect();
    by_weight.sort_by_key(|&v| (std::cmp::Reverse(weights[v]), v));
    let mut search = Search {
        adj: &adj,
        weights,
        by_weight: &by_weight,
        cfg,
        best: None,
        chosen: Vec::new(),
        steps: 0,
    };
    let mut all = FixedBitSet::with_capacity(n);
    all.insert_range(..);
    search.run(&all, 0)?;
    let (set, weight) = search.best.expect("the empty set is always found");
    Ok(Mwis { set, weight })
}

struct Search<'a> {
    adj: &'a [FixedBitSet],
    weights: &'a [i64],
    by_weight: &'a [usize],
    cfg: &'a ExactConfig,
    best: Option<(Vec<usize>, i64)>,
    chosen: Vec<usize>,
    steps: u64,
}

impl Search<'_> {
    /// Greedy clique cover of the candidates in descending weight order; an
    /// independent set takes at most one vertex per clique.
    fn bound(&self, cands: &FixedBitSet) -> i64 {
        let mut cliques: Vec<(FixedBitSet, i64)> = Vec::new();
        for &v in self.by_weight {
            if !cands.contains(v) {
                continue;
            }
            match cliques
                .iter_mut()
                .find(|(members, _)| members.is_subset(&self.adj[v]))
            {
                Some((members, _)) => members.insert(v),
                None => {
                    let mut m = FixedBitSet::with_capacity(cands.len());
                    m.insert(v);
                    cliques.push((m, self.weights[v]));
                }
            }
        }
        cliques.iter().map(|&(_, w)| w).sum()
    }

    fn run(&mut self, cands: &FixedBitSet, weight: i64) -> Result<(), OracleError> {
        self.steps += 1;
        if self.steps % 1024 == 1 {
            self.cfg.check_cancel()?;
        }
        if let Some((_, best)) = &self.best {
            if weight + self.bound(cands) <= *best {
                return Ok(());
            }
        }
        let Some(v) = cands.ones().next() else {
            self.best = Some((self.chosen.clone(), weight));
            return Ok(());
        };
        let mut with = cands.clone();
        with.difference_with(&self.adj[v]);
        with.set(v, false);
        self.chosen.push(v);
        self.run(&with, weight + self.weights[v])?;
        self.chosen.pop();

        let mut without = cands.clone();
        without.set(v, false);
        self.run(&without, weight)
    }
}
