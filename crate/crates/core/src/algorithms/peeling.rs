//! Removable-vertex peeling with recursion into densest components, and the two
//! finishing procedures it hands off to.
//!
//! Guarantee: `σ*_k(G) / σ(alg1(G, k)) ≤ 12n²/k²`.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::{check_even_input, Algorithm, Solution};
use crate::density::Density;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, View};
use crate::ops::{
    cut_vertices, densest_component_after, expand_to_k, induced_edges, is_removable, j_attachment,
    removable_vertices,
};

fn check_procedure_input(view: &View<'_>, k: usize) -> Result<()> {
    if k < 2 || !k.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "procedure needs an even k >= 2, got {k}"
        )));
    }
    if view.len() <= k {
        return Err(Error::Precondition(format!(
            "procedure needs more than k = {k} vertices, got {}",
            view.len()
        )));
    }
    if !view.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Connected k-subgraph of a removable-free view: a BFS-grown `(k/2)`-set from the
/// smallest id plus its `(k/2)`-attachment. Density is at least `k/(4|G′|)·σ(G′)`.
pub fn prc1(view: &View<'_>, k: usize) -> Result<VertexSet> {
    check_procedure_input(view, k)?;
    if let Some(&v) = removable_vertices(view).first() {
        return Err(Error::Precondition(format!("vertex {v} is removable")));
    }
    let half = k / 2;
    let seed: VertexSet = view.members()[..1].iter().copied().collect();
    let core = expand_to_k(view, &seed, half)?;
    let attached = j_attachment(view, &core, half)?;
    Ok(core.union(&attached))
}

/// Internal state of [`prc2`], exposed for verification.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Prc2State {
    /// `H` after the deletion loop.
    pub h: VertexSet,
    /// Removable vertices of `G′`.
    pub removable: VertexSet,
    /// `θ(v)` for every `v ∈ H`.
    pub theta: BTreeMap<usize, usize>,
    /// Minimal connected `S ⊆ H` with `Σθ ≥ k/2`.
    pub s: VertexSet,
    pub s_star: VertexSet,
    /// `(r, G′_r)` for each removable `r ∈ S`.
    pub attached: Vec<(usize, VertexSet)>,
    pub v1: VertexSet,
    pub v2: VertexSet,
    pub chose_v1: bool,
}

/// Connected k-subgraph of a view in which every removable vertex `r` is a
/// cut-vertex with `|G′_r| < k`.
pub fn prc2(view: &View<'_>, k: usize) -> Result<VertexSet> {
    prc2_traced(view, k).map(|(out, _)| out)
}

pub fn prc2_traced(view: &View<'_>, k: usize) -> Result<(VertexSet, Prc2State)> {
    check_procedure_input(view, k)?;
    let half = k / 2;
    let removable = removable_vertices(view);
    let cuts = cut_vertices(view)?;
    let mut dense_part: BTreeMap<usize, VertexSet> = BTreeMap::new();
    for &r in &removable {
        if !cuts.contains(r) {
            return Err(Error::Precondition(format!(
                "removable vertex {r} is not a cut-vertex"
            )));
        }
        let (gr, _) = densest_component_after(view, r)?;
        if gr.len() >= k {
            return Err(Error::Precondition(format!(
                "removable vertex {r} leaves a densest component of {} >= k vertices",
                gr.len()
            )));
        }
        dense_part.insert(r, gr);
    }

    // Deletion loop: strip G′_r for every surviving removable r.
    let mut h = view.clone();
    let mut pending: BTreeSet<usize> = removable.iter().copied().collect();
    while let Some(r) = pending.pop_first() {
        for v in dense_part[&r].iter() {
            h.remove(v);
            pending.remove(&v);
        }
    }
    if !h.is_connected() {
        return Err(Error::Invariant(
            "H disconnected after the deletion loop".into(),
        ));
    }

    let removable_set: VertexSet = removable.iter().copied().collect();
    let theta: BTreeMap<usize, usize> = h
        .members()
        .iter()
        .map(|&v| (v, dense_part.get(&v).map_or(1, |gr| gr.len() + 1)))
        .collect();

    // G′_r for r ∈ R ∩ H must be pairwise disjoint and, with H ∖ R, tile G′.
    let mut owner = vec![usize::MAX; view.graph().n()];
    for (&r, gr) in dense_part.iter().filter(|(r, _)| h.contains(**r)) {
        for v in gr.iter() {
            if owner[v] != usize::MAX {
                return Err(Error::Invariant(format!(
                    "G'_{r} and G'_{} intersect at {v}",
                    owner[v]
                )));
            }
            owner[v] = r;
        }
    }
    let theta_sum: usize = theta.values().sum();
    if theta_sum != view.len() {
        return Err(Error::Invariant(format!(
            "theta sums to {theta_sum}, expected |G'| = {}",
            view.len()
        )));
    }

    let s = minimal_cover(&h, &theta, half)?;
    let attached: Vec<(usize, VertexSet)> = s
        .iter()
        .filter_map(|v| dense_part.get(&v).map(|gr| (v, gr.clone())))
        .collect();
    let v1: VertexSet = s
        .iter()
        .chain(attached.iter().flat_map(|(_, gr)| gr.iter()))
        .collect();
    if v1.len() < half || v1.len() > k {
        return Err(Error::Invariant(format!(
            "|V1| = {} outside [{half}, {k}]",
            v1.len()
        )));
    }

    let j = half.min(h.len() - s.len());
    let s_star = if j > 0 {
        j_attachment(&h, &s, j)?
    } else {
        VertexSet::empty()
    };
    let v2 = s.union(&s_star);

    let g = view.graph();
    let chose_v1 = induced_edges(g, &v1) >= induced_edges(g, &v2);
    let chosen = if chose_v1 { &v1 } else { &v2 };
    let out = expand_to_k(view, chosen, k)?;
    let state = Prc2State {
        h: h.vertex_set(),
        removable: removable_set,
        theta,
        s,
        s_star,
        attached,
        v1,
        v2,
        chose_v1,
    };
    Ok((out, state))
}

/// Inclusion-minimal connected `S ⊆ H` with `Σ_{v∈S} θ(v) ≥ target`.
///
/// Grows a BFS prefix from the smallest id until the target is met, then deletes
/// non-cut vertices (smallest id first) while the target still holds.
fn minimal_cover(h: &View<'_>, theta: &BTreeMap<usize, usize>, target: usize) -> Result<VertexSet> {
    let root = *h.members().first().ok_or(Error::EmptySubgraph)?;
    let mut chosen = Vec::new();
    let mut sum = 0;
    for v in h.reach(root) {
        chosen.push(v);
        sum += theta[&v];
        if sum >= target {
            break;
        }
    }
    if sum < target {
        return Err(Error::Invariant(format!(
            "theta total {sum} below {target}"
        )));
    }
    let mut s: VertexSet = chosen.into_iter().collect();
    loop {
        let sub = h.restrict(&s)?;
        let cuts = cut_vertices(&sub)?;
        let drop = s
            .iter()
            .find(|&v| !cuts.contains(v) && sum - theta[&v] >= target);
        match drop {
            Some(v) if s.len() > 1 => {
                sum -= theta[&v];
                s = s.iter().filter(|&u| u != v).collect();
            }
            _ => break,
        }
    }
    Ok(s)
}

/// How [`alg1`] produced its output.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub enum Alg1Finish {
    /// Peeling reached exactly k vertices.
    Peeled,
    Prc1,
    Prc2(Box<Prc2State>),
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alg1Trace {
    /// Vertices deleted by the peeling loop, in order.
    pub peeled: Vec<usize>,
    /// `σ(G′)` at entry to each peeling round and after every deletion.
    pub densities: Vec<Density>,
    /// Removable cut-vertices whose densest component became the new `G′`.
    pub recursions: Vec<usize>,
    pub finish: Alg1Finish,
}

pub fn alg1(g: &Graph, k: usize) -> Result<Solution> {
    alg1_traced(g, k).map(|(s, _)| s)
}

pub fn alg1_traced(g: &Graph, k: usize) -> Result<(Solution, Alg1Trace)> {
    check_even_input(g, k, Algorithm::Alg1)?;
    let mut current = g.full();
    let mut peeled = Vec::new();
    let mut densities = Vec::new();
    let mut recursions = Vec::new();

    let finish_with = |vertices: VertexSet, finish, peeled, densities, recursions| {
        let solution = Solution::new(g, vertices, Algorithm::Alg1)?;
        Ok((
            solution,
            Alg1Trace {
                peeled,
                densities,
                recursions,
                finish,
            },
        ))
    };

    loop {
        densities.push(current.density()?);
        while current.len() > k {
            let candidates = removable_vertices(&current);
            if candidates.is_empty() {
                break;
            }
            let cuts = cut_vertices(&current)?;
            let Some(r) = candidates.into_iter().find(|&v| !cuts.contains(v)) else {
                break;
            };
            debug_assert!(is_removable(&current, r)?);
            current.remove(r);
            peeled.push(r);
            densities.push(current.density()?);
        }

        if current.len() == k {
            return finish_with(
                current.vertex_set(),
                Alg1Finish::Peeled,
                peeled,
                densities,
                recursions,
            );
        }
        let removable = removable_vertices(&current);
        if removable.is_empty() {
            let out = prc1(&current, k)?;
            return finish_with(out, Alg1Finish::Prc1, peeled, densities, recursions);
        }
        let mut next = None;
        for &r in &removable {
            let (gr, _) = densest_component_after(&current, r)?;
            if gr.len() >= k {
                next = Some((r, gr));
                break;
            }
        }
        match next {
            Some((r, gr)) => {
                recursions.push(r);
                current = current.restrict(&gr)?;
            }
            None => {
                let (out, state) = prc2_traced(&current, k)?;
                return finish_with(
                    out,
                    Alg1Finish::Prc2(Box::new(state)),
                    peeled,
                    densities,
                    recursions,
                );
            }
        }
    }
}
