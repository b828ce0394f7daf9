#![allow(dead_code)]

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use semihom::{Digraph, HomInstance, Objective};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Every map `V(D) -> V(H)` that is a homomorphism respecting the domains.
pub fn all_homs(inst: &HomInstance) -> Vec<Vec<usize>> {
    let (n, m) = (inst.d().len(), inst.h().len());
    let mut out = Vec::new();
    let mut f = vec![0; n];
    loop {
        if inst.evaluate(&f).is_some() {
            out.push(f.clone());
        }
        let mut i = 0;
        loop {
            if i == n {
                return out;
            }
            f[i] += 1;
            if f[i] < m {
                break;
            }
            f[i] = 0;
            i += 1;
        }
    }
}

/// Best cost over all homomorphisms, by enumeration.
pub fn brute_optimum(inst: &HomInstance) -> Option<i64> {
    let costs = all_homs(inst)
        .into_iter()
        .map(|f| inst.evaluate(&f).unwrap());
    match inst.objective() {
        Objective::Min => costs.min(),
        Objective::Max => costs.max(),
    }
}

pub fn objectives() -> [Objective; 2] {
    [Objective::Min, Objective::Max]
}

/// Whether every arc of `d` maps to an arc of `h` under `f`.
pub fn is_hom(d: &Digraph, h: &Digraph, f: &[usize]) -> bool {
    d.arcs().all(|(u, v)| h.has_arc(f[u], f[v]))
}
