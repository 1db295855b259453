//! Simple undirected graphs, vertex sets and induced-subgraph views.

use std::collections::HashSet;
use std::fmt::Write as _;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::density::Density;
use crate::error::{Error, Result};

/// A simple undirected graph on vertices `0..n` with optional nonnegative integer edge weights.
///
/// Immutable after construction. Adjacency lists are sorted and, for weighted graphs,
/// carry a parallel list of weights.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    n: usize,
    adj: Vec<Vec<usize>>,
    adj_weights: Option<Vec<Vec<u32>>>,
    edges: Vec<(usize, usize)>,
    weights: Option<Vec<u32>>,
}

impl Graph {
    /// Unweighted graph. Rejects self-loops, parallel edges and out-of-range ids.
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        Self::build(n, edges.into_iter().map(|(u, v)| (u, v, 1)), false)
    }

    /// Weighted graph; every edge carries a weight in `0..=u32::MAX`.
    pub fn with_weights(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, u32)>,
    ) -> Result<Self> {
        Self::build(n, edges, true)
    }

    fn build(
        n: usize,
        edges: impl IntoIterator<Item = (usize, usize, u32)>,
        weighted: bool,
    ) -> Result<Self> {
        let mut list: Vec<(usize, usize, u32)> = Vec::new();
        for (u, v, w) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(Error::UnknownVertex { vertex: x, n });
                }
            }
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            list.push((u.min(v), u.max(v), w));
        }
        list.sort_unstable();
        if let Some(w) = list
            .windows(2)
            .find(|w| (w[0].0, w[0].1) == (w[1].0, w[1].1))
        {
            return Err(Error::DuplicateEdge(w[0].0, w[0].1));
        }

        let mut adj: Vec<Vec<(usize, u32)>> = vec![Vec::new(); n];
        for &(u, v, w) in &list {
            adj[u].push((v, w));
            adj[v].push((u, w));
        }
        for row in &mut adj {
            row.sort_unstable();
        }
        let adj_weights = weighted.then(|| {
            adj.iter()
                .map(|row| row.iter().map(|&(_, w)| w).collect())
                .collect()
        });
        Ok(Graph {
            n,
            adj: adj
                .into_iter()
                .map(|row| row.into_iter().map(|(v, _)| v).collect())
                .collect(),
            adj_weights,
            edges: list.iter().map(|&(u, v, _)| (u, v)).collect(),
            weights: weighted.then(|| list.iter().map(|&(_, _, w)| w).collect()),
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn is_weighted(&self) -> bool {
        self.weights.is_some()
    }

    /// Edges as `(u, v)` with `u < v`, sorted.
    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    /// Weight of the `i`-th edge of [`Graph::edges`] (1 when unweighted).
    pub fn edge_weight(&self, i: usize) -> u32 {
        self.weights.as_ref().map_or(1, |w| w[i])
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    /// Neighbors of `v` together with the weight of the connecting edge.
    pub fn weighted_neighbors(&self, v: usize) -> impl Iterator<Item = (usize, u32)> + '_ {
        let ws = self.adj_weights.as_ref().map(|w| w[v].as_slice());
        self.adj[v]
            .iter()
            .enumerate()
            .map(move |(i, &u)| (u, ws.map_or(1, |w| w[i])))
    }

    pub fn weight(&self, u: usize, v: usize) -> Option<u32> {
        let i = self.adj.get(u)?.binary_search(&v).ok()?;
        Some(self.adj_weights.as_ref().map_or(1, |w| w[u][i]))
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.weight(u, v).is_some()
    }

    pub fn total_weight(&self) -> u64 {
        match &self.weights {
            Some(w) => w.iter().map(|&x| x as u64).sum(),
            None => self.m() as u64,
        }
    }

    /// View of the whole graph.
    pub fn full(&self) -> View<'_> {
        View::new(self, (0..self.n).collect())
    }

    /// View of the subgraph induced by `s`.
    pub fn view(&self, s: &VertexSet) -> Result<View<'_>> {
        if let Some(&v) = s.as_slice().last() {
            if v >= self.n {
                return Err(Error::UnknownVertex {
                    vertex: v,
                    n: self.n,
                });
            }
        }
        Ok(View::new(self, s.as_slice().to_vec()))
    }

    pub fn is_connected(&self) -> bool {
        self.full().is_connected()
    }

    /// Parse the edge-list format: header `n m [weighted]`, then `m` lines `u v` or `u v w`.
    /// Blank lines are ignored.
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.trim()))
            .filter(|(_, l)| !l.is_empty());

        let (header_line, header) = lines.next().ok_or(Error::Parse {
            line: 1,
            message: "missing header `n m [weighted]`".into(),
        })?;
        let tokens: Vec<&str> = header.split_whitespace().collect();
        let weighted = match tokens.as_slice() {
            [_, _] => false,
            [_, _, "weighted"] => true,
            _ => {
                return Err(Error::Parse {
                    line: header_line,
                    message: format!("bad header `{header}`, expected `n m [weighted]`"),
                })
            }
        };
        let n: usize = parse_token(tokens[0], header_line, "vertex count")?;
        let m: usize = parse_token(tokens[1], header_line, "edge count")?;

        let mut seen = HashSet::with_capacity(m);
        let mut edges = Vec::with_capacity(m);
        let mut last_line = header_line;
        for (line, body) in lines {
            last_line = line;
            if edges.len() == m {
                return Err(Error::Parse {
                    line,
                    message: format!("more than {m} edge lines"),
                });
            }
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let expected = if weighted { 3 } else { 2 };
            if tokens.len() != expected {
                return Err(Error::Parse {
                    line,
                    message: format!("expected {expected} fields, found {}", tokens.len()),
                });
            }
            let u: usize = parse_token(tokens[0], line, "vertex id")?;
            let v: usize = parse_token(tokens[1], line, "vertex id")?;
            let w: u32 = if weighted {
                parse_token(tokens[2], line, "weight")?
            } else {
                1
            };
            if u >= n || v >= n {
                return Err(Error::Parse {
                    line,
                    message: format!("vertex id out of range for n = {n}"),
                });
            }
            if u == v {
                return Err(Error::Parse {
                    line,
                    message: format!("self-loop on vertex {u}"),
                });
            }
            if !seen.insert((u.min(v), u.max(v))) {
                return Err(Error::Parse {
                    line,
                    message: format!("duplicate edge {u} {v}"),
                });
            }
            edges.push((u, v, w));
        }
        if edges.len() < m {
            return Err(Error::Parse {
                line: last_line,
                message: format!("expected {m} edges, found {}", edges.len()),
            });
        }
        Self::build(n, edges, weighted)
    }

    /// Serialize to the edge-list format, edges sorted, one per line.
    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        if self.is_weighted() {
            let _ = writeln!(out, "{} {} weighted", self.n, self.m());
        } else {
            let _ = writeln!(out, "{} {}", self.n, self.m());
        }
        for (i, &(u, v)) in self.edges.iter().enumerate() {
            match &self.weights {
                Some(w) => {
                    let _ = writeln!(out, "{u} {v} {}", w[i]);
                }
                None => {
                    let _ = writeln!(out, "{u} {v}");
                }
            }
        }
        out
    }
}

fn parse_token<T: FromStr>(token: &str, line: usize, what: &str) -> Result<T> {
    token.parse().map_err(|_| Error::Parse {
        line,
        message: format!("invalid {what} `{token}`"),
    })
}

impl FromStr for Graph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Graph::parse_edge_list(s)
    }
}

/// Sorted set of distinct vertex ids.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct VertexSet(Vec<usize>);

impl VertexSet {
    /// Validates ids against a host graph with `n` vertices; rejects duplicates.
    pub fn new(ids: impl IntoIterator<Item = usize>, n: usize) -> Result<Self> {
        let mut v: Vec<usize> = ids.into_iter().collect();
        v.sort_unstable();
        if let Some(w) = v.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0]));
        }
        if let Some(&last) = v.last() {
            if last >= n {
                return Err(Error::UnknownVertex { vertex: last, n });
            }
        }
        Ok(VertexSet(v))
    }

    pub fn empty() -> Self {
        VertexSet(Vec::new())
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn first(&self) -> Option<usize> {
        self.0.first().copied()
    }

    pub fn iter(&self) -> impl Iterator<Item = usize> + '_ {
        self.0.iter().copied()
    }

    pub fn union(&self, other: &VertexSet) -> VertexSet {
        self.iter().chain(other.iter()).collect()
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    pub fn is_disjoint(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| !other.contains(v))
    }
}

/// Sorts and deduplicates.
impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut v: Vec<usize> = iter.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        VertexSet(v)
    }
}

/// Induced subgraph of a host [`Graph`], kept as a membership mask with cached
/// in-view degrees, edge count and edge weight.
#[derive(Debug, Clone)]
pub struct View<'g> {
    graph: &'g Graph,
    mask: Vec<bool>,
    members: Vec<usize>,
    degree: Vec<usize>,
    weighted_degree: Vec<u64>,
    edges: usize,
    weight: u64,
}

impl<'g> View<'g> {
    /// `members` must be sorted, distinct and in range.
    fn new(graph: &'g Graph, members: Vec<usize>) -> Self {
        let n = graph.n();
        let mut mask = vec![false; n];
        for &v in &members {
            mask[v] = true;
        }
        let mut degree = vec![0; n];
        let mut weighted_degree = vec![0u64; n];
        let mut edges = 0;
        let mut weight = 0;
        for &v in &members {
            for (u, w) in graph.weighted_neighbors(v) {
                if mask[u] {
                    degree[v] += 1;
                    weighted_degree[v] += w as u64;
                    if u > v {
                        edges += 1;
                        weight += w as u64;
                    }
                }
            }
        }
        View {
            graph,
            mask,
            members,
            degree,
            weighted_degree,
            edges,
            weight,
        }
    }

    pub fn graph(&self) -> &'g Graph {
        self.graph
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.mask.get(v).copied().unwrap_or(false)
    }

    pub fn members(&self) -> &[usize] {
        &self.members
    }

    pub fn vertex_set(&self) -> VertexSet {
        VertexSet(self.members.clone())
    }

    /// Degree of `v` inside the view (0 for non-members).
    pub fn degree(&self, v: usize) -> usize {
        if self.contains(v) {
            self.degree[v]
        } else {
            0
        }
    }

    pub fn weighted_degree(&self, v: usize) -> u64 {
        if self.contains(v) {
            self.weighted_degree[v]
        } else {
            0
        }
    }

    pub fn edge_count(&self) -> usize {
        self.edges
    }

    pub fn weight(&self) -> u64 {
        self.weight
    }

    /// Neighbors of `v` that lie in the view, ascending.
    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.graph
            .neighbors(v)
            .iter()
            .copied()
            .filter(move |&u| self.mask[u])
    }

    pub fn density(&self) -> Result<Density> {
        if self.is_empty() {
            return Err(Error::EmptySubgraph);
        }
        Ok(Density::of(self.weight, self.len()))
    }

    /// Delete `v` and its incident edges. No-op for non-members.
    pub fn remove(&mut self, v: usize) {
        if !self.contains(v) {
            return;
        }
        self.mask[v] = false;
        for (u, w) in self.graph.weighted_neighbors(v) {
            if self.mask[u] {
                self.degree[u] -= 1;
                self.weighted_degree[u] -= w as u64;
                self.edges -= 1;
                self.weight -= w as u64;
            }
        }
        self.degree[v] = 0;
        self.weighted_degree[v] = 0;
        if let Ok(i) = self.members.binary_search(&v) {
            self.members.remove(i);
        }
    }

    /// Sub-view induced by `s`; members of `s` outside this view are an error.
    pub fn restrict(&self, s: &VertexSet) -> Result<View<'g>> {
        self.check_members(s)?;
        Ok(View::new(self.graph, s.as_slice().to_vec()))
    }

    pub(crate) fn check_members(&self, s: &VertexSet) -> Result<()> {
        match s.iter().find(|&v| !self.contains(v)) {
            Some(v) => Err(Error::UnknownVertex {
                vertex: v,
                n: self.graph.n(),
            }),
            None => Ok(()),
        }
    }

    pub fn is_connected(&self) -> bool {
        match self.members.first() {
            None => true,
            Some(&root) => self.reach(root).len() == self.len(),
        }
    }

    /// Vertices reachable from `root` inside the view, in discovery order.
    pub(crate) fn reach(&self, root: usize) -> Vec<usize> {
        let mut seen = vec![false; self.graph.n()];
        let mut order = vec![root];
        seen[root] = true;
        let mut head = 0;
        while head < order.len() {
            let v = order[head];
            head += 1;
            for u in self.neighbors(v) {
                if !seen[u] {
                    seen[u] = true;
                    order.push(u);
                }
            }
        }
        order
    }
}
