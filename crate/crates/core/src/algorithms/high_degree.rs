use serde::{Deserialize, Serialize};

use super::{check_even_input, Algorithm, Solution};
use crate::density::Density;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};
use crate::ops::{components, density, expand_to_k, j_attachment};

/// The `count` vertices of highest degree (smallest id on ties).
pub fn high_degree_set(g: &Graph, count: usize) -> VertexSet {
    let mut order: Vec<usize> = (0..g.n()).collect();
    order.sort_by(|&a, &b| g.degree(b).cmp(&g.degree(a)).then(a.cmp(&b)));
    order.truncate(count);
    order.into_iter().collect()
}

/// Average degree of a vertex set, `(1/|S|)·Σ d(v)`, as an exact fraction.
pub(crate) fn average_degree(g: &Graph, s: &VertexSet) -> Density {
    let total: u64 = s.iter().map(|v| g.degree(v) as u64).sum();
    Density::new(total, s.len().max(1) as u64)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alg4Trace {
    pub high: VertexSet,
    /// Average degree `d_h` of `high`.
    pub d_h: Density,
    /// `high ∪ high*`, where `high*` is the `(k/2)`-attachment.
    pub union: VertexSet,
    /// `σ̄ = σ(G[high ∪ high*])`.
    pub sigma_bar: Density,
    /// Densest component of `G[union]`, before expansion.
    pub component: VertexSet,
}

/// High-degree seed plus greedy attachment; output density is at least `σ̄/√k`.
pub fn alg4(g: &Graph, k: usize) -> Result<Solution> {
    alg4_traced(g, k).map(|(s, _)| s)
}

pub fn alg4_traced(g: &Graph, k: usize) -> Result<(Solution, Alg4Trace)> {
    check_even_input(g, k, Algorithm::Alg4)?;
    let half = k / 2;
    let high = high_degree_set(g, half);
    let full = g.full();
    let attached = j_attachment(&full, &high, half)?;
    let union = high.union(&attached);
    let sigma_bar = density(g, &union)?;

    let mut best: Option<(Density, VertexSet)> = None;
    for piece in components(g, &union)? {
        let d = density(g, &piece)?;
        if best.as_ref().is_none_or(|(bd, _)| d > *bd) {
            best = Some((d, piece));
        }
    }
    let component = best.map(|(_, p)| p).unwrap_or_default();
    let out = expand_to_k(&full, &component, k)?;
    let trace = Alg4Trace {
        d_h: average_degree(g, &high),
        high,
        union,
        sigma_bar,
        component,
    };
    Ok((Solution::new(g, out, Algorithm::Alg4)?, trace))
}
