//! Shared primitives: density, removability, components, cut-vertices,
//! greedy attachment and connected expansion.
//!
//! Ties are always broken towards the smallest vertex id.

use std::collections::{BTreeSet, VecDeque};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, View};

/// `2 * w(G[s]) / |s|`, exactly.
pub fn density(g: &Graph, s: &VertexSet) -> Result<Density> {
    if s.is_empty() {
        return Err(Error::EmptySubgraph);
    }
    Ok(Density::of(induced_weight(g, s)?, s.len()))
}

/// Total weight of the edges of `G[s]` (edge count when unweighted).
pub fn induced_weight(g: &Graph, s: &VertexSet) -> Result<u64> {
    if let Some(last) = s.as_slice().last() {
        if *last >= g.n() {
            return Err(Error::UnknownVertex {
                vertex: *last,
                n: g.n(),
            });
        }
    }
    let mut total = 0u64;
    for v in s.iter() {
        for (u, w) in g.weighted_neighbors(v) {
            if u > v && s.contains(u) {
                total += w as u64;
            }
        }
    }
    Ok(total)
}

/// Number of edges of `G[s]`, ignoring weights.
pub fn induced_edges(g: &Graph, s: &VertexSet) -> usize {
    s.iter()
        .map(|v| {
            g.neighbors(v)
                .iter()
                .filter(|&&u| u > v && s.contains(u))
                .count()
        })
        .sum()
}

/// Whether deleting `v` strictly increases the density of `view`.
///
/// Decided through the degree test `d(v) < σ/2`, i.e. `|V|·d(v) < w(E)`,
/// which is equivalent to `σ(G∖v) > σ(G)`.
pub fn is_removable(view: &View<'_>, v: usize) -> Result<bool> {
    if !view.contains(v) {
        return Err(Error::UnknownVertex {
            vertex: v,
            n: view.graph().n(),
        });
    }
    if view.len() < 2 {
        return Err(Error::Precondition(
            "removability needs at least 2 vertices".into(),
        ));
    }
    Ok((view.len() as u128) * (view.weighted_degree(v) as u128) < view.weight() as u128)
}

/// Removable vertices of `view`, ascending.
pub fn removable_vertices(view: &View<'_>) -> Vec<usize> {
    if view.len() < 2 {
        return Vec::new();
    }
    let total = view.weight() as u128;
    let size = view.len() as u128;
    view.members()
        .iter()
        .copied()
        .filter(|&v| size * (view.weighted_degree(v) as u128) < total)
        .collect()
}

/// Maximal connected pieces of `G[s]`, ordered by smallest member.
pub fn components(g: &Graph, s: &VertexSet) -> Result<Vec<VertexSet>> {
    Ok(view_components(&g.view(s)?))
}

/// Components of a view, ordered by smallest member.
pub fn view_components(view: &View<'_>) -> Vec<VertexSet> {
    let mut seen = vec![false; view.graph().n()];
    let mut out = Vec::new();
    for &root in view.members() {
        if seen[root] {
            continue;
        }
        let piece = view.reach(root);
        for &v in &piece {
            seen[v] = true;
        }
        out.push(piece.into_iter().collect());
    }
    out
}

/// Articulation points of a connected view.
pub fn cut_vertices(view: &View<'_>) -> Result<VertexSet> {
    let Some(&root) = view.members().first() else {
        return Ok(VertexSet::empty());
    };
    let g = view.graph();
    let n = g.n();
    const UNSEEN: usize = usize::MAX;
    let mut disc = vec![UNSEEN; n];
    let mut low = vec![0usize; n];
    let mut is_cut = vec![false; n];
    let mut timer = 0;
    let mut root_children = 0;
    let mut visited = 1;

    // (vertex, parent, next adjacency index)
    let mut stack: Vec<(usize, usize, usize)> = vec![(root, UNSEEN, 0)];
    disc[root] = timer;
    low[root] = timer;
    timer += 1;
    while let Some(top) = stack.last_mut() {
        let (v, parent, i) = *top;
        let adj = g.neighbors(v);
        if i < adj.len() {
            top.2 += 1;
            let w = adj[i];
            if !view.contains(w) {
                continue;
            }
            if disc[w] == UNSEEN {
                disc[w] = timer;
                low[w] = timer;
                timer += 1;
                visited += 1;
                if v == root {
                    root_children += 1;
                }
                stack.push((w, v, 0));
            } else if w != parent {
                low[v] = low[v].min(disc[w]);
            }
        } else {
            stack.pop();
            if let Some(&(u, _, _)) = stack.last() {
                low[u] = low[u].min(low[v]);
                if u != root && low[v] >= disc[u] {
                    is_cut[u] = true;
                }
            }
        }
    }
    if visited != view.len() {
        return Err(Error::Disconnected);
    }
    if root_children > 1 {
        is_cut[root] = true;
    }
    Ok(view
        .members()
        .iter()
        .copied()
        .filter(|&v| is_cut[v])
        .collect())
}

/// For a cut-vertex `v`, a densest component of `view ∖ v` and that component plus `v`.
pub fn densest_component_after(view: &View<'_>, v: usize) -> Result<(VertexSet, VertexSet)> {
    if !view.contains(v) {
        return Err(Error::UnknownVertex {
            vertex: v,
            n: view.graph().n(),
        });
    }
    let mut rest = view.clone();
    rest.remove(v);
    let pieces = view_components(&rest);
    if pieces.len() < 2 {
        return Err(Error::NotCutVertex(v));
    }
    let g = view.graph();
    let mut best: Option<(Density, VertexSet)> = None;
    for piece in pieces {
        let d = density(g, &piece)?;
        if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
            best = Some((d, piece));
        }
    }
    let gv = best.map(|(_, p)| p).expect("at least two components");
    let mut plus = gv.clone().into_vec();
    plus.push(v);
    Ok((gv, plus.into_iter().collect()))
}

/// Greedy `j`-attachment of `s` inside `view`.
///
/// Outside vertices are taken by decreasing number of neighbors in `s`. Once no
/// vertex with a neighbor in `s` is left, the smallest-id vertex adjacent to the
/// growing set is taken, so every chosen vertex touches `s` or an earlier choice.
pub fn j_attachment(view: &View<'_>, s: &VertexSet, j: usize) -> Result<VertexSet> {
    view.check_members(s)?;
    let available = view.len() - s.len();
    if j == 0 || j > available {
        return Err(Error::AttachmentOutOfRange { j, available });
    }
    let g = view.graph();
    let mut in_set = vec![false; g.n()];
    for v in s.iter() {
        in_set[v] = true;
    }
    let mut counts = vec![0usize; g.n()];
    let mut touched = Vec::new();
    for v in s.iter() {
        for u in view.neighbors(v) {
            if !in_set[u] {
                if counts[u] == 0 {
                    touched.push(u);
                }
                counts[u] += 1;
            }
        }
    }
    touched.sort_unstable_by(|&a, &b| counts[b].cmp(&counts[a]).then(a.cmp(&b)));
    touched.truncate(j);
    let mut chosen = touched;
    for &u in &chosen {
        in_set[u] = true;
    }

    if chosen.len() < j {
        let mut frontier: BTreeSet<usize> = BTreeSet::new();
        for v in s.iter().chain(chosen.iter().copied()) {
            frontier.extend(view.neighbors(v).filter(|&u| !in_set[u]));
        }
        while chosen.len() < j {
            let Some(u) = frontier.pop_first() else {
                return Err(Error::Disconnected);
            };
            in_set[u] = true;
            chosen.push(u);
            frontier.extend(view.neighbors(u).filter(|&x| !in_set[x]));
        }
    }
    Ok(chosen.into_iter().collect())
}

/// Grow `s` to exactly `k` vertices breadth-first, scanning neighbors in ascending id order.
/// An empty `s` is seeded with the smallest member of the view.
pub fn expand_to_k(view: &View<'_>, s: &VertexSet, k: usize) -> Result<VertexSet> {
    view.check_members(s)?;
    if s.len() > k || k > view.len() {
        return Err(Error::KOutOfRange {
            k,
            min: s.len(),
            max: view.len(),
        });
    }
    if s.len() == k {
        return Ok(s.clone());
    }
    let g = view.graph();
    let mut in_set = vec![false; g.n()];
    let mut out: Vec<usize> = s.as_slice().to_vec();
    if out.is_empty() {
        out.push(view.members()[0]);
    }
    for &v in &out {
        in_set[v] = true;
    }
    let mut queue: VecDeque<usize> = out.iter().copied().collect();
    'grow: while let Some(v) = queue.pop_front() {
        for u in view.neighbors(v) {
            if out.len() == k {
                break 'grow;
            }
            if !in_set[u] {
                in_set[u] = true;
                out.push(u);
                queue.push_back(u);
            }
        }
    }
    if out.len() < k {
        return Err(Error::Disconnected);
    }
    Ok(out.into_iter().collect())
}

/// Number of edges between `a` and the disjoint set `b`.
pub fn cut_size(g: &Graph, a: &VertexSet, b: &VertexSet) -> usize {
    a.iter()
        .map(|v| g.neighbors(v).iter().filter(|&&u| b.contains(u)).count())
        .sum()
}
