//! Densest subgraph (no size constraint) through a min-cut feasibility test
//! and binary search over the density parameter.
//!
//! For a guess `λ = t / N` with `N = n²`, the network has arcs
//! `s → v` of capacity `N·M`, `v → t` of capacity `N·M + t − N·w(v)` and an
//! undirected arc of capacity `N·w(uv)` per edge, where `w(v)` is the weighted
//! degree and `M` the maximum weighted degree. A cut with source side `S ∪ {s}`
//! costs `N·M·n − (2N·w(S) − t·|S|)`, so the min cut is below `N·M·n` exactly
//! when some `S` has `σ(S) > λ`. Distinct densities with denominators at most
//! `n` are more than `1/n²` apart, so the last feasible grid point pins the
//! optimum and its witness attains it.

use serde::{Deserialize, Serialize};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::flow::FlowNetwork;
use crate::graph::{Graph, VertexSet};
use crate::ops::{components, density};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DensestResult {
    pub subgraph: VertexSet,
    pub density: Density,
    /// Smallest-id component of `subgraph`; equally dense.
    pub connected_variant: VertexSet,
}

/// A maximum-density subgraph of `g`.
pub fn densest_subgraph(g: &Graph) -> Result<DensestResult> {
    let n = g.n();
    let wdeg: Vec<u128> = (0..n)
        .map(|v| g.weighted_neighbors(v).map(|(_, w)| w as u128).sum())
        .collect();
    let max_wdeg = wdeg.iter().copied().max().unwrap_or(0);
    if max_wdeg == 0 {
        return Err(Error::Edgeless);
    }
    let scale = (n as u128) * (n as u128);

    let feasible = |t: u128| -> Option<VertexSet> {
        let (source, sink) = (n, n + 1);
        let mut net = FlowNetwork::new(n + 2);
        let base = scale * max_wdeg;
        for v in 0..n {
            net.add_arc(source, v, base);
            net.add_arc(v, sink, base + t - scale * wdeg[v]);
        }
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            let w = g.edge_weight(i) as u128;
            if w > 0 {
                net.add_edge(u, v, scale * w);
            }
        }
        let cut = net.max_flow(source, sink);
        if cut < base * n as u128 {
            let side = net.source_side(source);
            Some((0..n).filter(|&v| side[v]).collect())
        } else {
            None
        }
    };

    let mut witness = feasible(0).ok_or(Error::Edgeless)?;
    let (mut lo, mut hi) = (0u128, scale * max_wdeg);
    while hi - lo > 1 {
        let mid = lo + (hi - lo) / 2;
        match feasible(mid) {
            Some(s) => {
                witness = s;
                lo = mid;
            }
            None => hi = mid,
        }
    }

    let d = density(g, &witness)?;
    let connected_variant = components(g, &witness)?
        .into_iter()
        .next()
        .ok_or_else(|| Error::Invariant("empty densest witness".into()))?;
    Ok(DensestResult {
        subgraph: witness,
        density: d,
        connected_variant,
    })
}

/// A densest subgraph that is connected: the smallest-id component of [`densest_subgraph`].
pub fn densest_connected_subgraph(g: &Graph) -> Result<VertexSet> {
    Ok(densest_subgraph(g)?.connected_variant)
}
