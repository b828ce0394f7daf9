use std::collections::{BTreeSet, HashMap};

use super::GraphError;

/// A loop-free directed graph over labelled vertices.
///
/// Vertices are addressed by their position in declaration order, which is
/// also the canonical tie-breaking order used by every algorithm in the crate.
/// A digon is simply the pair of arcs `(u, v)` and `(v, u)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Digraph {
    labels: Vec<String>,
    index: HashMap<String, usize>,
    out: Vec<BTreeSet<usize>>,
    inn: Vec<BTreeSet<usize>>,
}

impl Digraph {
    pub fn new<I, S>(labels: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        let mut index = HashMap::with_capacity(labels.len());
        for (i, l) in labels.iter().enumerate() {
            if index.insert(l.clone(), i).is_some() {
                return Err(GraphError::DuplicateVertex(l.clone()));
            }
        }
        let n = labels.len();
        Ok(Digraph {
            labels,
            index,
            out: vec![BTreeSet::new(); n],
            inn: vec![BTreeSet::new(); n],
        })
    }

    /// Builds a digraph from labels and labelled arcs.
    pub fn with_arcs<I, S>(labels: I, arcs: &[(&str, &str)]) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
    {
        let mut d = Digraph::new(labels)?;
        for &(a, b) in arcs {
            d.add_arc_by_label(a, b)?;
        }
        Ok(d)
    }

    /// Builds a digraph from labels and index arcs.
    pub fn from_indices<I, S, A>(labels: I, arcs: A) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = S>,
        S: Into<String>,
        A: IntoIterator<Item = (usize, usize)>,
    {
        let mut d = Digraph::new(labels)?;
        for (a, b) in arcs {
            d.add_arc(a, b)?;
        }
        Ok(d)
    }

    /// Vertices labelled `1..=k`; arcs given as 1-based pairs.
    pub fn numbered(k: usize, arcs: &[(usize, usize)]) -> Result<Self, GraphError> {
        Digraph::from_indices(
            (1..=k).map(|i| i.to_string()),
            arcs.iter().map(|&(a, b)| (a - 1, b - 1)),
        )
    }

    /// Adds an arc; returns `false` if it was already present.
    pub fn add_arc(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        let n = self.len();
        if u >= n || v >= n {
            return Err(GraphError::VertexOutOfRange(u.max(v)));
        }
        if u == v {
            return Err(GraphError::Loop(self.labels[u].clone()));
        }
        let fresh = self.out[u].insert(v);
        self.inn[v].insert(u);
        Ok(fresh)
    }

    pub fn add_arc_by_label(&mut self, u: &str, v: &str) -> Result<bool, GraphError> {
        let a = self.require(u)?;
        let b = self.require(v)?;
        self.add_arc(a, b)
    }

    fn require(&self, label: &str) -> Result<usize, GraphError> {
        self.index_of(label)
            .ok_or_else(|| GraphError::UnknownVertex(label.to_string()))
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(BTreeSet::len).sum()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    pub fn has_arc(&self, u: usize, v: usize) -> bool {
        self.out[u].contains(&v)
    }

    /// Whether `u` and `v` are joined by an arc in either direction.
    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.has_arc(u, v) || self.has_arc(v, u)
    }

    pub fn out_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[u].iter().copied()
    }

    pub fn in_neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.inn[u].iter().copied()
    }

    pub fn out_set(&self, u: usize) -> &BTreeSet<usize> {
        &self.out[u]
    }

    pub fn in_set(&self, u: usize) -> &BTreeSet<usize> {
        &self.inn[u]
    }

    pub fn out_degree(&self, u: usize) -> usize {
        self.out[u].len()
    }

    pub fn in_degree(&self, u: usize) -> usize {
        self.inn[u].len()
    }

    /// Underlying-graph neighbours (in or out), ascending.
    pub fn neighbors(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        self.out[u].union(&self.inn[u]).copied()
    }

    /// Arcs in canonical order: by tail, then head.
    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
    }

    pub fn has_digon(&self) -> bool {
        self.arcs().any(|(u, v)| self.has_arc(v, u))
    }

    /// Sub-digraph induced by `vertices`, which keep the given order.
    pub fn induced(&self, vertices: &[usize]) -> Digraph {
        let mut pos = vec![usize::MAX; self.len()];
        for (i, &v) in vertices.iter().enumerate() {
            pos[v] = i;
        }
        let mut d = Digraph::new(vertices.iter().map(|&v| self.labels[v].clone()))
            .expect("induced labels are distinct");
        for (i, &v) in vertices.iter().enumerate() {
            for &w in &self.out[v] {
                if pos[w] != usize::MAX {
                    d.out[i].insert(pos[w]);
                    d.inn[pos[w]].insert(i);
                }
            }
        }
        d
    }

    /// The dual digraph: every arc reversed.
    pub fn dual(&self) -> Digraph {
        Digraph {
            labels: self.labels.clone(),
            index: self.index.clone(),
            out: self.inn.clone(),
            inn: self.out.clone(),
        }
    }

    /// Replaces every vertex `x` of `self` by the independent set `classes[x]`,
    /// joining `a -> b` whenever the base has `x -> y`, `a` in class `x`, `b` in class `y`.
    pub fn extension<S: AsRef<str>>(&self, classes: &[Vec<S>]) -> Result<Digraph, GraphError> {
        if classes.len() != self.len() {
            return Err(GraphError::ClassCountMismatch {
                expected: self.len(),
                found: classes.len(),
            });
        }
        let mut labels = Vec::new();
        let mut members: Vec<Vec<usize>> = Vec::with_capacity(classes.len());
        for (x, class) in classes.iter().enumerate() {
            if class.is_empty() {
                return Err(GraphError::EmptyClass(self.labels[x].clone()));
            }
            let mut ids = Vec::with_capacity(class.len());
            for l in class {
                ids.push(labels.len());
                labels.push(l.as_ref().to_string());
            }
            members.push(ids);
        }
        let mut h = Digraph::new(labels)?;
        for (x, y) in self.arcs() {
            for &a in &members[x] {
                for &b in &members[y] {
                    h.add_arc(a, b)?;
                }
            }
        }
        Ok(h)
    }

    /// Extension where class `x` gets `sizes[x]` copies labelled `<label>.<j>`
    /// (or the plain label when the size is one).
    pub fn blow_up(&self, sizes: &[usize]) -> Result<Digraph, GraphError> {
        let classes: Vec<Vec<String>> = sizes
            .iter()
            .enumerate()
            .map(|(x, &s)| {
                if s == 1 {
                    vec![self.labels[x].clone()]
                } else {
                    (0..s)
                        .map(|j| format!("{}.{}", self.labels[x], j))
                        .collect()
                }
            })
            .collect();
        self.extension(&classes)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_loops_and_duplicates() {
        assert!(matches!(
            Digraph::new(["a", "a"]),
            Err(GraphError::DuplicateVertex(_))
        ));
        let mut d = Digraph::new(["a", "b"]).unwrap();
        assert!(matches!(d.add_arc(0, 0), Err(GraphError::Loop(_))));
        assert!(d.add_arc(0, 1).unwrap());
        assert!(!d.add_arc(0, 1).unwrap());
        assert_eq!(d.arc_count(), 1);
    }

    #[test]
    fn digon_is_two_arcs() {
        let d = Digraph::with_arcs(["a", "b"], &[("a", "b"), ("b", "a")]).unwrap();
        assert_eq!(d.arc_count(), 2);
        assert!(d.has_digon());
    }

    #[test]
    fn dual_reverses_arcs() {
        let d = Digraph::with_arcs(["a", "b"], &[("a", "b")]).unwrap();
        let r = d.dual();
        assert!(r.has_arc(1, 0));
        assert!(!r.has_arc(0, 1));
        assert_eq!(r.dual(), d);
    }

    #[test]
    fn extension_duplicates_adjacencies() {
        let c3 = Digraph::numbered(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        let h = c3
            .extension(&[vec!["1a", "1b"], vec!["2"], vec!["3"]])
            .unwrap();
        assert_eq!(h.len(), 4);
        assert_eq!(h.arc_count(), 5);
        assert!(h.has_arc(h.index_of("1b").unwrap(), h.index_of("2").unwrap()));
        assert!(h.has_arc(h.index_of("3").unwrap(), h.index_of("1a").unwrap()));
    }

    #[test]
    fn induced_keeps_order() {
        let d = Digraph::numbered(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap();
        let s = d.induced(&[2, 1]);
        assert_eq!(s.labels(), ["3", "2"]);
        assert!(s.has_arc(1, 0));
        assert_eq!(s.arc_count(), 1);
    }
}
