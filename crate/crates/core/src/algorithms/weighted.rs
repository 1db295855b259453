use super::{Algorithm, Solution};
use crate::density::Density;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ops::{density, expand_to_k};

/// Heaviest star: every vertex with its `min(d(v), k−1)` heaviest neighbors, grown to
/// k vertices when short. Within a factor `k/2` of the heaviest k-subgraph.
///
/// Works on unweighted graphs too (all weights 1).
pub fn weighted_greedy(g: &Graph, k: usize) -> Result<Solution> {
    if k == 0 || k > g.n() {
        return Err(Error::KOutOfRange {
            k,
            min: 1,
            max: g.n(),
        });
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let full = g.full();
    let mut best: Option<(Density, VertexSet)> = None;
    for v in 0..g.n() {
        let mut nbrs: Vec<(usize, u32)> = g.weighted_neighbors(v).collect();
        nbrs.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let star: VertexSet = std::iter::once(v)
            .chain(nbrs.iter().take(k - 1).map(|&(u, _)| u))
            .collect();
        let candidate = expand_to_k(&full, &star, k)?;
        let d = density(g, &candidate)?;
        if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
            best = Some((d, candidate));
        }
    }
    let (_, out) = best.ok_or(Error::EmptySubgraph)?;
    Solution::new(g, out, Algorithm::WGreedy)
}
