use std::collections::{BTreeSet, HashMap};

use super::Digraph;

/// The similarity quotient of a digraph: similar vertices (identical in- and
/// out-neighbourhoods) collapsed onto their first member.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuotientInfo {
    /// One representative per class, arcs induced.
    pub base: Digraph,
    /// Vertex of the original digraph to its base vertex.
    pub class_of: Vec<usize>,
    /// Base vertex to its class, ascending.
    pub classes: Vec<Vec<usize>>,
}

impl QuotientInfo {
    pub fn is_identity(&self) -> bool {
        self.classes.iter().all(|c| c.len() == 1)
    }

    /// Checks that `h` is exactly the extension of `base` by `classes`.
    pub fn is_quotient_of(&self, h: &Digraph) -> bool {
        let n = h.len();
        if self.class_of.len() != n || self.classes.len() != self.base.len() {
            return false;
        }
        let mut covered = 0;
        for (x, class) in self.classes.iter().enumerate() {
            if class.is_empty() {
                return false;
            }
            for &v in class {
                if v >= n || self.class_of[v] != x {
                    return false;
                }
            }
            covered += class.len();
        }
        if covered != n {
            return false;
        }
        (0..n).all(|a| {
            (0..n).all(|b| h.has_arc(a, b) == self.base.has_arc(self.class_of[a], self.class_of[b]))
        })
    }
}

pub fn similarity_quotient(h: &Digraph) -> QuotientInfo {
    let n = h.len();
    let mut key_to_class: HashMap<(&BTreeSet<usize>, &BTreeSet<usize>), usize> = HashMap::new();
    let mut class_of = Vec::with_capacity(n);
    let mut classes: Vec<Vec<usize>> = Vec::new();
    for v in 0..n {
        let key = (h.in_set(v), h.out_set(v));
        let c = *key_to_class.entry(key).or_insert_with(|| {
            classes.push(Vec::new());
            classes.len() - 1
        });
        classes[c].push(v);
        class_of.push(c);
    }
    let reps: Vec<usize> = classes.iter().map(|c| c[0]).collect();
    QuotientInfo {
        base: h.induced(&reps),
        class_of,
        classes,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complete_bipartite_collapses_to_an_arc() {
        let mut h = Digraph::new(["u1", "u2", "v1", "v2", "v3"]).unwrap();
        for u in 0..2 {
            for v in 2..5 {
                h.add_arc(u, v).unwrap();
            }
        }
        let q = similarity_quotient(&h);
        assert_eq!(q.classes, vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(q.base.labels(), ["u1", "v1"]);
        assert_eq!(q.base.arc_count(), 1);
        assert!(q.is_quotient_of(&h));
    }

    #[test]
    fn four_cycle_is_simple() {
        let c4 = Digraph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let q = similarity_quotient(&c4);
        assert!(q.is_identity());
        assert_eq!(q.base, c4);
    }

    #[test]
    fn doubled_three_cycle() {
        let c3 = Digraph::numbered(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let h = c3
            .extension(&[vec!["1a", "1b"], vec!["2"], vec!["3"]])
            .unwrap();
        let q = similarity_quotient(&h);
        assert_eq!(q.classes, vec![vec![0, 1], vec![2], vec![3]]);
        assert_eq!(q.base.arc_count(), 3);
        assert!(q.is_quotient_of(&h));
        assert!(!q.is_quotient_of(&c3));
    }
}
