//! Unit-capacity style max-flow by shortest augmenting paths.

use std::collections::VecDeque;

use crate::graph::Graph;

#[derive(Debug, Clone)]
pub(crate) struct FlowNetwork {
    adj: Vec<Vec<usize>>,
    to: Vec<usize>,
    cap: Vec<u32>,
    initial: Vec<u32>,
}

impl FlowNetwork {
    pub(crate) fn new(nodes: usize) -> Self {
        FlowNetwork {
            adj: vec![Vec::new(); nodes],
            to: Vec::new(),
            cap: Vec::new(),
            initial: Vec::new(),
        }
    }

    /// Arc `u -> v` with capacity `fwd` paired with `v -> u` with capacity `bwd`.
    pub(crate) fn add_pair(&mut self, u: usize, v: usize, fwd: u32, bwd: u32) {
        let id = self.to.len();
        self.to.extend([v, u]);
        self.cap.extend([fwd, bwd]);
        self.initial.extend([fwd, bwd]);
        self.adj[u].push(id);
        self.adj[v].push(id + 1);
    }

    /// Each undirected edge becomes a pair of unit arcs.
    pub(crate) fn bidirected(g: &Graph) -> Self {
        let mut net = FlowNetwork::new(g.n());
        for (u, v) in g.edges() {
            net.add_pair(u, v, 1, 1);
        }
        net
    }

    /// Vertex-split network: vertex `v` becomes `2v -> 2v+1` with unit
    /// capacity; edges become uncapacitated arcs between the halves.
    pub(crate) fn vertex_split(g: &Graph) -> Self {
        let big = g.n() as u32 + 1;
        let mut net = FlowNetwork::new(2 * g.n());
        for v in 0..g.n() {
            net.add_pair(2 * v, 2 * v + 1, 1, 0);
        }
        for (u, v) in g.edges() {
            net.add_pair(2 * u + 1, 2 * v, big, 0);
            net.add_pair(2 * v + 1, 2 * u, big, 0);
        }
        net
    }

    pub(crate) fn reset(&mut self) {
        self.cap.copy_from_slice(&self.initial);
    }

    /// Pushes flow from `s` to `t` until none remains or `limit` is reached.
    /// Returns the pushed amount.
    pub(crate) fn max_flow(&mut self, s: usize, t: usize, limit: u32) -> u32 {
        let mut flow = 0;
        let mut pred: Vec<Option<usize>> = vec![None; self.adj.len()];
        while flow < limit {
            pred.iter_mut().for_each(|p| *p = None);
            let mut seen = vec![false; self.adj.len()];
            seen[s] = true;
            let mut queue = VecDeque::from([s]);
            'bfs: while let Some(u) = queue.pop_front() {
                for &e in &self.adj[u] {
                    let v = self.to[e];
                    if self.cap[e] > 0 && !seen[v] {
                        seen[v] = true;
                        pred[v] = Some(e);
                        if v == t {
                            break 'bfs;
                        }
                        queue.push_back(v);
                    }
                }
            }
            if !seen[t] {
                break;
            }
            let mut bottleneck = limit - flow;
            let mut v = t;
            while let Some(e) = pred[v] {
                bottleneck = bottleneck.min(self.cap[e]);
                v = self.to[e ^ 1];
            }
            let mut v = t;
            while let Some(e) = pred[v] {
                self.cap[e] -= bottleneck;
                self.cap[e ^ 1] += bottleneck;
                v = self.to[e ^ 1];
            }
            flow += bottleneck;
        }
        flow
    }

    /// Nodes reachable from `s` through arcs with residual capacity.
    pub(crate) fn residual_reach(&self, s: usize) -> Vec<bool> {
        let mut seen = vec![false; self.adj.len()];
        seen[s] = true;
        let mut queue = VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &e in &self.adj[u] {
                let v = self.to[e];
                if self.cap[e] > 0 && !seen[v] {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        seen
    }
}
