//! Integer-capacity max-flow (Dinic) with min-cut extraction.

use std::collections::VecDeque;

#[derive(Debug, Clone)]
struct Arc {
    to: usize,
    rev: usize,
    cap: u128,
}

/// Directed capacitated network. Node ids are `0..nodes`.
#[derive(Debug, Clone)]
pub struct FlowNetwork {
    arcs: Vec<Vec<Arc>>,
    level: Vec<usize>,
    next: Vec<usize>,
}

impl FlowNetwork {
    pub fn new(nodes: usize) -> Self {
        FlowNetwork {
            arcs: vec![Vec::new(); nodes],
            level: vec![0; nodes],
            next: vec![0; nodes],
        }
    }

    pub fn nodes(&self) -> usize {
        self.arcs.len()
    }

    pub fn add_arc(&mut self, from: usize, to: usize, cap: u128) {
        let rev_from = self.arcs[to].len() + usize::from(from == to);
        let rev_to = self.arcs[from].len();
        self.arcs[from].push(Arc {
            to,
            rev: rev_from,
            cap,
        });
        self.arcs[to].push(Arc {
            to: from,
            rev: rev_to,
            cap: 0,
        });
    }

    /// Undirected edge of capacity `cap` each way, stored as a single arc pair.
    pub fn add_edge(&mut self, a: usize, b: usize, cap: u128) {
        let rev_a = self.arcs[b].len();
        let rev_b = self.arcs[a].len();
        self.arcs[a].push(Arc {
            to: b,
            rev: rev_a,
            cap,
        });
        self.arcs[b].push(Arc {
            to: a,
            rev: rev_b,
            cap,
        });
    }

    /// Maximum flow from `source` to `sink`; the residual network is kept for [`Self::source_side`].
    pub fn max_flow(&mut self, source: usize, sink: usize) -> u128 {
        let mut total = 0;
        while self.bfs(source, sink) {
            self.next.iter_mut().for_each(|i| *i = 0);
            loop {
                let pushed = self.dfs(source, sink, u128::MAX);
                if pushed == 0 {
                    break;
                }
                total += pushed;
            }
        }
        total
    }

    /// Nodes reachable from `source` in the residual network: the minimal min-cut side.
    pub fn source_side(&self, source: usize) -> Vec<bool> {
        let mut seen = vec![false; self.nodes()];
        seen[source] = true;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for a in &self.arcs[v] {
                if a.cap > 0 && !seen[a.to] {
                    seen[a.to] = true;
                    queue.push_back(a.to);
                }
            }
        }
        seen
    }

    fn bfs(&mut self, source: usize, sink: usize) -> bool {
        self.level.iter_mut().for_each(|l| *l = usize::MAX);
        self.level[source] = 0;
        let mut queue = VecDeque::from([source]);
        while let Some(v) = queue.pop_front() {
            for a in &self.arcs[v] {
                if a.cap > 0 && self.level[a.to] == usize::MAX {
                    self.level[a.to] = self.level[v] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        self.level[sink] != usize::MAX
    }

    // Iterative blocking-flow search along level-increasing arcs.
    fn dfs(&mut self, source: usize, sink: usize, limit: u128) -> u128 {
        let mut path: Vec<(usize, usize)> = Vec::new();
        let mut v = source;
        loop {
            if v == sink {
                let bottleneck = path
                    .iter()
                    .map(|&(u, i)| self.arcs[u][i].cap)
                    .min()
                    .unwrap_or(limit)
                    .min(limit);
                for &(u, i) in &path {
                    let Arc { to, rev, .. } = self.arcs[u][i];
                    self.arcs[u][i].cap -= bottleneck;
                    self.arcs[to][rev].cap += bottleneck;
                }
                return bottleneck;
            }
            let mut advanced = false;
            while self.next[v] < self.arcs[v].len() {
                let i = self.next[v];
                let a = &self.arcs[v][i];
                if a.cap > 0 && self.level[a.to] == self.level[v] + 1 {
                    path.push((v, i));
                    v = a.to;
                    advanced = true;
                    break;
                }
                self.next[v] += 1;
            }
            if !advanced {
                // dead end: retreat and skip the arc that led here
                self.level[v] = usize::MAX;
                match path.pop() {
                    Some((u, _)) => {
                        self.next[u] += 1;
                        v = u;
                    }
                    None => return 0,
                }
            }
        }
    }
}
