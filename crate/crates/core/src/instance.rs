//! Cost matrices, problem instances and solutions.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use thiserror::Error;

use crate::graph::Digraph;

/// Largest admissible cost entry. With `|V(D)| <= 10^5` every weight the
/// solvers derive stays far inside `i64`.
pub const MAX_COST: i64 = 1_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InstanceError {
    #[error("missing cost for vertex `{vertex}` and colour `{color}`")]
    MissingCost { vertex: String, color: String },
    #[error("cost {value} for vertex `{vertex}` and colour `{color}` is not positive")]
    NonPositiveCost {
        vertex: String,
        color: String,
        value: i64,
    },
    #[error("cost {value} for vertex `{vertex}` and colour `{color}` exceeds {MAX_COST}")]
    CostTooLarge {
        vertex: String,
        color: String,
        value: i64,
    },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("duplicate label `{0}` in cost matrix")]
    DuplicateLabel(String),
    #[error("cost matrix has {found} entries, expected {expected}")]
    ShapeMismatch { expected: usize, found: usize },
    #[error("empty colour domain for vertex `{0}`")]
    EmptyDomain(String),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Objective {
    Min,
    Max,
}

impl Objective {
    pub fn flipped(self) -> Objective {
        match self {
            Objective::Min => Objective::Max,
            Objective::Max => Objective::Min,
        }
    }

    /// Whether `a` is strictly better than `b`.
    pub fn better(self, a: i64, b: i64) -> bool {
        match self {
            Objective::Min => a < b,
            Objective::Max => a > b,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Objective::Min => "min",
            Objective::Max => "max",
        }
    }
}

/// Positive integer costs `c_i(u)`: rows are input vertices, columns colours.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CostMatrix {
    rows: Vec<String>,
    cols: Vec<String>,
    entries: Vec<i64>,
}

impl CostMatrix {
    /// Row-major `entries`; `None` marks a missing cell.
    pub fn new(
        rows: Vec<String>,
        cols: Vec<String>,
        entries: Vec<Option<i64>>,
    ) -> Result<Self, InstanceError> {
        check_distinct(&rows)?;
        check_distinct(&cols)?;
        if entries.len() != rows.len() * cols.len() {
            return Err(InstanceError::ShapeMismatch {
                expected: rows.len() * cols.len(),
                found: entries.len(),
            });
        }
        let w = cols.len();
        let mut dense = Vec::with_capacity(entries.len());
        for (k, e) in entries.into_iter().enumerate() {
            let (vertex, color) = (rows[k / w].clone(), cols[k % w].clone());
            let value = e.ok_or_else(|| InstanceError::MissingCost {
                vertex: vertex.clone(),
                color: color.clone(),
            })?;
            check_value(value, &vertex, &color)?;
            dense.push(value);
        }
        Ok(CostMatrix {
            rows,
            cols,
            entries: dense,
        })
    }

    /// Matrix aligned with `d` (rows) and `h` (columns), filled from `f(u, i)`.
    pub fn from_fn(
        d: &Digraph,
        h: &Digraph,
        f: impl Fn(usize, usize) -> i64,
    ) -> Result<Self, InstanceError> {
        let entries = (0..d.len())
            .flat_map(|u| (0..h.len()).map(move |i| (u, i)))
            .map(|(u, i)| Some(f(u, i)))
            .collect();
        CostMatrix::new(d.labels().to_vec(), h.labels().to_vec(), entries)
    }

    pub fn uniform(d: &Digraph, h: &Digraph, c: i64) -> Result<Self, InstanceError> {
        CostMatrix::from_fn(d, h, |_, _| c)
    }

    pub fn rows(&self) -> &[String] {
        &self.rows
    }

    pub fn cols(&self) -> &[String] {
        &self.cols
    }

    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.entries[row * self.cols.len() + col]
    }

    pub fn max_entry(&self) -> i64 {
        self.entries.iter().copied().max().unwrap_or(0)
    }
}

fn check_distinct(labels: &[String]) -> Result<(), InstanceError> {
    let mut seen = BTreeSet::new();
    for l in labels {
        if !seen.insert(l) {
            return Err(InstanceError::DuplicateLabel(l.clone()));
        }
    }
    Ok(())
}

fn check_value(value: i64, vertex: &str, color: &str) -> Result<(), InstanceError> {
    if value <= 0 {
        return Err(InstanceError::NonPositiveCost {
            vertex: vertex.into(),
            color: color.into(),
            value,
        });
    }
    if value > MAX_COST {
        return Err(InstanceError::CostTooLarge {
            vertex: vertex.into(),
            color: color.into(),
            value,
        });
    }
    Ok(())
}

/// Checks that `costs` covers exactly `V(D) x V(H)` with admissible values.
pub fn validate(d: &Digraph, h: &Digraph, costs: &CostMatrix) -> Result<(), InstanceError> {
    for r in costs.rows() {
        if d.index_of(r).is_none() {
            return Err(InstanceError::UnknownLabel(r.clone()));
        }
    }
    for c in costs.cols() {
        if h.index_of(c).is_none() {
            return Err(InstanceError::UnknownLabel(c.clone()));
        }
    }
    let row_of: HashMap<&str, usize> = costs
        .rows()
        .iter()
        .enumerate()
        .map(|(i, r)| (r.as_str(), i))
        .collect();
    let col_of: HashMap<&str, usize> = costs
        .cols()
        .iter()
        .enumerate()
        .map(|(i, c)| (c.as_str(), i))
        .collect();
    for u in d.labels() {
        for i in h.labels() {
            match (row_of.get(u.as_str()), col_of.get(i.as_str())) {
                (Some(&r), Some(&c)) => check_value(costs.get(r, c), u, i)?,
                _ => {
                    return Err(InstanceError::MissingCost {
                        vertex: u.clone(),
                        color: i.clone(),
                    })
                }
            }
        }
    }
    Ok(())
}

/// A MinHOM/MaxHOM instance: input digraph `D`, target `H`, costs, objective
/// and a colour domain per input vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomInstance {
    d: Digraph,
    h: Digraph,
    costs: CostMatrix,
    objective: Objective,
    allowed: Vec<bool>,
}

impl HomInstance {
    /// Validates and realigns `costs` so rows follow `D` and columns follow `H`.
    pub fn new(
        d: Digraph,
        h: Digraph,
        costs: CostMatrix,
        objective: Objective,
    ) -> Result<Self, InstanceError> {
        validate(&d, &h, &costs)?;
        let aligned = if costs.rows() == d.labels() && costs.cols() == h.labels() {
            costs
        } else {
            let rmap: HashMap<&str, usize> = costs
                .rows()
                .iter()
                .enumerate()
                .map(|(i, r)| (r.as_str(), i))
                .collect();
            let cmap: HashMap<&str, usize> = costs
                .cols()
                .iter()
                .enumerate()
                .map(|(i, c)| (c.as_str(), i))
                .collect();
            let mut entries = Vec::with_capacity(d.len() * h.len());
            for u in d.labels() {
                for i in h.labels() {
                    entries.push(costs.get(rmap[u.as_str()], cmap[i.as_str()]));
                }
            }
            CostMatrix {
                rows: d.labels().to_vec(),
                cols: h.labels().to_vec(),
                entries,
            }
        };
        let allowed = vec![true; d.len() * h.len()];
        Ok(HomInstance {
            d,
            h,
            costs: aligned,
            objective,
            allowed,
        })
    }

    /// Assembles an instance from parts already aligned with `d` and `h`.
    pub(crate) fn from_aligned(
        d: Digraph,
        h: Digraph,
        entries: Vec<i64>,
        objective: Objective,
        allowed: Vec<bool>,
    ) -> Self {
        debug_assert_eq!(entries.len(), d.len() * h.len());
        debug_assert_eq!(allowed.len(), entries.len());
        let costs = CostMatrix {
            rows: d.labels().to_vec(),
            cols: h.labels().to_vec(),
            entries,
        };
        HomInstance {
            d,
            h,
            costs,
            objective,
            allowed,
        }
    }

    pub fn d(&self) -> &Digraph {
        &self.d
    }

    pub fn h(&self) -> &Digraph {
        &self.h
    }

    pub fn costs(&self) -> &CostMatrix {
        &self.costs
    }

    pub fn objective(&self) -> Objective {
        self.objective
    }

    pub fn with_objective(mut self, objective: Objective) -> Self {
        self.objective = objective;
        self
    }

    pub fn cost(&self, u: usize, i: usize) -> i64 {
        self.costs.get(u, i)
    }

    pub fn allows(&self, u: usize, i: usize) -> bool {
        self.allowed[u * self.h.len() + i]
    }

    /// Allowed colours of `u`, ascending.
    pub fn domain(&self, u: usize) -> impl Iterator<Item = usize> + '_ {
        (0..self.h.len()).filter(move |&i| self.allows(u, i))
    }

    pub fn is_unrestricted(&self) -> bool {
        self.allowed.iter().all(|&a| a)
    }

    /// Replaces every cost by `M - c` with `M = 1 + max c` and flips the objective.
    pub fn complement_costs(&self) -> HomInstance {
        let m = self.costs.max_entry() + 1;
        let mut out = self.clone();
        for e in &mut out.costs.entries {
            *e = m - *e;
        }
        out.objective = self.objective.flipped();
        out
    }

    /// Intersects the domains of the listed vertices with the given colour sets.
    /// Each given set must be non-empty; an intersection may still come out
    /// empty, which leaves the instance infeasible.
    pub fn restrict_colors(
        &self,
        allowed: &BTreeMap<usize, BTreeSet<usize>>,
    ) -> Result<HomInstance, InstanceError> {
        let w = self.h.len();
        let mut out = self.clone();
        for (&u, colors) in allowed {
            if u >= self.d.len() {
                return Err(InstanceError::UnknownLabel(format!("#{u}")));
            }
            if colors.is_empty() {
                return Err(InstanceError::EmptyDomain(self.d.label(u).to_string()));
            }
            if let Some(&bad) = colors.iter().find(|&&i| i >= w) {
                return Err(InstanceError::UnknownLabel(format!("#{bad}")));
            }
            for i in 0..w {
                if !colors.contains(&i) {
                    out.allowed[u * w + i] = false;
                }
            }
        }
        Ok(out)
    }

    /// Pins `u` to colour `i` (intersecting with its current domain).
    pub fn fix(&self, u: usize, i: usize) -> HomInstance {
        let w = self.h.len();
        let mut out = self.clone();
        for j in 0..w {
            if j != i {
                out.allowed[u * w + j] = false;
            }
        }
        out
    }

    /// The instance restricted to the given input vertices (order kept).
    pub fn induced(&self, vertices: &[usize]) -> HomInstance {
        let w = self.h.len();
        let d = self.d.induced(vertices);
        let mut entries = Vec::with_capacity(vertices.len() * w);
        let mut allowed = Vec::with_capacity(vertices.len() * w);
        for &u in vertices {
            entries.extend_from_slice(&self.costs.entries[u * w..(u + 1) * w]);
            allowed.extend_from_slice(&self.allowed[u * w..(u + 1) * w]);
        }
        HomInstance::from_aligned(d, self.h.clone(), entries, self.objective, allowed)
    }

    /// Cost of `assignment` if it is a homomorphism respecting the domains.
    pub fn evaluate(&self, assignment: &[usize]) -> Option<i64> {
        if assignment.len() != self.d.len() {
            return None;
        }
        if assignment
            .iter()
            .enumerate()
            .any(|(u, &i)| i >= self.h.len() || !self.allows(u, i))
        {
            return None;
        }
        if self
            .d
            .arcs()
            .any(|(u, v)| !self.h.has_arc(assignment[u], assignment[v]))
        {
            return None;
        }
        Some(
            assignment
                .iter()
                .enumerate()
                .map(|(u, &i)| self.cost(u, i))
                .sum(),
        )
    }

    /// Best allowed colour of `u` for the objective; ties to the smallest index.
    pub fn best_color(&self, u: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for i in self.domain(u) {
            if best.is_none_or(|b| self.objective.better(self.cost(u, i), self.cost(u, b))) {
                best = Some(i);
            }
        }
        best
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Outcome {
    Optimal { assignment: Vec<usize>, cost: i64 },
    Infeasible,
}

/// Solver result: assignment maps every input vertex to a colour index of `H`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub outcome: Outcome,
    pub solver: &'static str,
}

impl Solution {
    pub fn optimal(assignment: Vec<usize>, cost: i64, solver: &'static str) -> Self {
        Solution {
            outcome: Outcome::Optimal { assignment, cost },
            solver,
        }
    }

    pub fn infeasible(solver: &'static str) -> Self {
        Solution {
            outcome: Outcome::Infeasible,
            solver,
        }
    }

    /// Scores `assignment` against `inst`; panics if it is not a valid colouring,
    /// which would be a solver bug.
    pub(crate) fn scored(inst: &HomInstance, assignment: Vec<usize>, solver: &'static str) -> Self {
        let cost = inst
            .evaluate(&assignment)
            .unwrap_or_else(|| panic!("{solver} produced an invalid colouring"));
        Solution::optimal(assignment, cost, solver)
    }

    pub fn is_optimal(&self) -> bool {
        matches!(self.outcome, Outcome::Optimal { .. })
    }

    pub fn cost(&self) -> Option<i64> {
        match &self.outcome {
            Outcome::Optimal { cost, .. } => Some(*cost),
            Outcome::Infeasible => None,
        }
    }

    pub fn assignment(&self) -> Option<&[usize]> {
        match &self.outcome {
            Outcome::Optimal { assignment, .. } => Some(assignment),
            Outcome::Infeasible => None,
        }
    }

    pub fn with_solver(mut self, solver: &'static str) -> Self {
        self.solver = solver;
        self
    }
}
