use std::collections::VecDeque;

use super::FlowError;

/// Stand-in for an infinite capacity; large enough that no finite network we
/// build reaches it, small enough that sums of a few never overflow.
pub const INF: i64 = i64::MAX / 4;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct FlowArc {
    pub from: usize,
    pub to: usize,
    pub lower: i64,
    /// `None` is unbounded.
    pub capacity: Option<i64>,
}

/// A directed network with lower and upper bounds on arcs.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FlowNetwork {
    nodes: usize,
    source: usize,
    sink: usize,
    arcs: Vec<FlowArc>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MaxFlow {
    pub value: i64,
    /// Flow per arc, in insertion order.
    pub flow: Vec<i64>,
    /// Source side of a minimum cut.
    pub source_side: Vec<bool>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MinFlow {
    pub value: i64,
    pub flow: Vec<i64>,
    /// Nodes reachable from the sink in the final residual network.
    pub sink_reachable: Vec<bool>,
}

impl FlowNetwork {
    pub fn new(nodes: usize, source: usize, sink: usize) -> Result<Self, FlowError> {
        if source >= nodes || sink >= nodes || source == sink {
            return Err(FlowError::InvalidNetwork(format!(
                "source {source} and sink {sink} must be distinct nodes below {nodes}"
            )));
        }
        Ok(FlowNetwork {
            nodes,
            source,
            sink,
            arcs: Vec::new(),
        })
    }

    /// Adds an arc and returns its index.
    pub fn add_arc(
        &mut self,
        from: usize,
        to: usize,
        lower: i64,
        capacity: Option<i64>,
    ) -> Result<usize, FlowError> {
        let bad = |why: &str| {
            Err(FlowError::InvalidNetwork(format!(
                "arc {from}->{to}: {why}"
            )))
        };
        if from >= self.nodes || to >= self.nodes {
            return bad("endpoint out of range");
        }
        if from == to {
            return bad("loop");
        }
        if to == self.source || from == self.sink {
            return bad("source in-arcs and sink out-arcs are not allowed");
        }
        if lower < 0 || capacity.is_some_and(|c| c < 0) {
            return bad("negative bound");
        }
        if capacity.is_some_and(|c| c >= INF) || lower >= INF {
            return bad("bound too large");
        }
        self.arcs.push(FlowArc {
            from,
            to,
            lower,
            capacity,
        });
        Ok(self.arcs.len() - 1)
    }

    pub fn node_count(&self) -> usize {
        self.nodes
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn sink(&self) -> usize {
        self.sink
    }

    pub fn arcs(&self) -> &[FlowArc] {
        &self.arcs
    }
}

/// Maximum flow by Dinic's algorithm. Requires all lower bounds to be zero.
pub fn max_flow(net: &FlowNetwork) -> Result<MaxFlow, FlowError> {
    if let Some(a) = net.arcs.iter().find(|a| a.lower != 0) {
        return Err(FlowError::NonZeroLowerBound {
            from: a.from,
            to: a.to,
        });
    }
    let mut r = Residual::new(net.nodes);
    let ids: Vec<usize> = net
        .arcs
        .iter()
        .map(|a| r.add(a.from, a.to, a.capacity.unwrap_or(INF)))
        .collect();
    let value = r.max_flow(net.source, net.sink, INF);
    if value >= INF {
        return Err(FlowError::Unbounded);
    }
    Ok(MaxFlow {
        value,
        flow: ids.iter().map(|&e| r.cap[e ^ 1]).collect(),
        source_side: r.reachable(net.source),
    })
}

/// Minimum feasible flow in two phases: find any flow meeting the lower
/// bounds, then push as much as possible back from sink to source.
pub fn min_flow(net: &FlowNetwork) -> Result<MinFlow, FlowError> {
    let n = net.nodes;
    let (s, t) = (net.source, net.sink);
    let (ss, tt) = (n, n + 1);
    let mut r = Residual::new(n + 2);
    let mut excess = vec![0i64; n];
    let ids: Vec<usize> = net
        .arcs
        .iter()
        .map(|a| {
            excess[a.to] += a.lower;
            excess[a.from] -= a.lower;
            let cap = a.capacity.map_or(INF, |c| c - a.lower);
            if cap < 0 {
                return None;
            }
            Some(r.add(a.from, a.to, cap))
        })
        .collect::<Option<_>>()
        .ok_or(FlowError::InfeasibleLowerBounds)?;
    let back = r.add(t, s, INF);
    let mut need = 0;
    let mut aux = Vec::new();
    for (v, &e) in excess.iter().enumerate() {
        if e > 0 {
            aux.push(r.add(ss, v, e));
            need += e;
        } else if e < 0 {
            aux.push(r.add(v, tt, -e));
        }
    }
    if r.max_flow(ss, tt, INF) < need {
        return Err(FlowError::InfeasibleLowerBounds);
    }
    let feasible = r.cap[back ^ 1];
    for e in aux.into_iter().chain([back]) {
        r.cap[e] = 0;
        r.cap[e ^ 1] = 0;
    }
    let returned = r.max_flow(t, s, INF);
    let mut sink_reachable = r.reachable(t);
    sink_reachable.truncate(n);
    Ok(MinFlow {
        value: feasible - returned,
        flow: ids
            .iter()
            .zip(&net.arcs)
            .map(|(&e, a)| a.lower + r.cap[e ^ 1])
            .collect(),
        sink_reachable,
    })
}

/// Residual graph: arc `e` and its reverse `e ^ 1` are stored in pairs.
struct Residual {
    head: Vec<usize>,
    cap: Vec<i64>,
    adj: Vec<Vec<usize>>,
    level: Vec<usize>,
    next: Vec<usize>,
}

impl Residual {
    fn new(n: usize) -> Self {
        Residual {
            head: Vec::new(),
            cap: Vec::new(),
            adj: vec![Vec::new(); n],
            level: vec![0; n],
            next: vec![0; n],
        }
    }

    fn add(&mut self, from: usize, to: usize, cap: i64) -> usize {
        let e = self.head.len();
        self.head.extend([to, from]);
        self.cap.extend([cap, 0]);
        self.adj[from].push(e);
        self.adj[to].push(e ^ 1);
        e
    }

    fn bfs(&mut self, s: usize, t: usize) -> bool {
        self.level.fill(usize::MAX);
        self.level[s] = 0;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if self.cap[e] > 0 && self.level[v] == usize::MAX {
                    self.level[v] = self.level[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        self.level[t] != usize::MAX
    }

    fn dfs(&mut self, u: usize, t: usize, limit: i64) -> i64 {
        if u == t {
            return limit;
        }
        while self.next[u] < self.adj[u].len() {
            let e = self.adj[u][self.next[u]];
            let v = self.head[e];
            if self.cap[e] > 0 && self.level[v] == self.level[u] + 1 {
                let pushed = self.dfs(v, t, limit.min(self.cap[e]));
                if pushed > 0 {
                    self.cap[e] -= pushed;
                    self.cap[e ^ 1] += pushed;
                    return pushed;
                }
            }
            self.next[u] += 1;
        }
        0
    }

    /// Augments from `s` to `t` until blocked or `bound` units have moved.
    fn max_flow(&mut self, s: usize, t: usize, bound: i64) -> i64 {
        let mut total = 0;
        while total < bound && self.bfs(s, t) {
            self.next.fill(0);
            loop {
                let pushed = self.dfs(s, t, bound - total);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    fn reachable(&self, from: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[from] = true;
        let mut stack = vec![from];
        while let Some(u) = stack.pop() {
            for &e in &self.adj[u] {
                let v = self.head[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    stack.push(v);
                }
            }
        }
        seen
    }
}
