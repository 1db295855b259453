//! Hub algorithm: for every low-degree vertex `v`, gather the vertices sharing the
//! most length-2 walks with it (`P^v`) and the neighbors of `v` best linked to them
//! (`B^v`), take the component of `v`, and grow it to k vertices.

use serde::{Deserialize, Serialize};

use super::high_degree::{average_degree, high_degree_set};
use super::{check_even_input, Algorithm, Solution};
use crate::density::Density;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, View};
use crate::ops::{density, expand_to_k};

/// Length-2 walk counts `W(u, v)`, `u ≠ v`, inside `G ∖ excluded`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Walk2Counts {
    /// Per vertex, `(v, W(u, v))` for every `v` with a positive count, ascending by `v`.
    rows: Vec<Vec<(usize, usize)>>,
}

impl Walk2Counts {
    pub fn get(&self, u: usize, v: usize) -> usize {
        self.rows
            .get(u)
            .and_then(|row| {
                row.binary_search_by_key(&v, |&(x, _)| x)
                    .ok()
                    .map(|i| row[i].1)
            })
            .unwrap_or(0)
    }

    pub fn row(&self, u: usize) -> &[(usize, usize)] {
        self.rows.get(u).map_or(&[], |r| r.as_slice())
    }
}

pub fn walk2_counts(g: &Graph, excluded: &VertexSet) -> Walk2Counts {
    let kept: VertexSet = (0..g.n()).filter(|&v| !excluded.contains(v)).collect();
    let view = g.view(&kept).expect("ids come from the graph");
    walk2_in(&view)
}

fn walk2_in(view: &View<'_>) -> Walk2Counts {
    let n = view.graph().n();
    let mut rows = vec![Vec::new(); n];
    let mut count = vec![0usize; n];
    let mut touched = Vec::new();
    for &u in view.members() {
        for x in view.neighbors(u) {
            for v in view.neighbors(x) {
                if v != u {
                    if count[v] == 0 {
                        touched.push(v);
                    }
                    count[v] += 1;
                }
            }
        }
        touched.sort_unstable();
        rows[u] = touched.iter().map(|&v| (v, count[v])).collect();
        for &v in &touched {
            count[v] = 0;
        }
        touched.clear();
    }
    Walk2Counts { rows }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct HubTrace {
    pub high: VertexSet,
    pub d_h: Density,
    /// Winning hub vertex.
    pub hub: usize,
    pub p: VertexSet,
    pub b: VertexSet,
    /// Component of the hub in `G_ℓ[{v} ∪ B ∪ P]`, before expansion.
    pub component: VertexSet,
}

pub fn alg5_hub(g: &Graph, k: usize) -> Result<Solution> {
    alg5_hub_traced(g, k).map(|(s, _)| s)
}

pub fn alg5_hub_traced(g: &Graph, k: usize) -> Result<(Solution, HubTrace)> {
    check_even_input(g, k, Algorithm::Hub)?;
    let half = k / 2;
    let high = high_degree_set(g, half);
    if high.len() >= g.n() {
        return Err(Error::HubInapplicable);
    }
    let low_set: VertexSet = (0..g.n()).filter(|&v| !high.contains(v)).collect();
    let low = g.view(&low_set)?;
    let walks = walk2_in(&low);
    let full = g.full();

    let mut in_p = vec![false; g.n()];
    let mut best: Option<(Density, VertexSet, HubTrace)> = None;
    for &v in low.members() {
        let mut ranked: Vec<(usize, usize)> = walks.row(v).to_vec();
        ranked.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let p: Vec<usize> = ranked
            .iter()
            .take(half.saturating_sub(1))
            .map(|&(u, _)| u)
            .collect();
        for &u in &p {
            in_p[u] = true;
        }

        let mut nbrs: Vec<(usize, usize)> = low
            .neighbors(v)
            .map(|b| (b, low.neighbors(b).filter(|&x| in_p[x]).count()))
            .collect();
        nbrs.sort_by(|a, b| b.1.cmp(&a.1).then(a.0.cmp(&b.0)));
        let b: Vec<usize> = nbrs.iter().take(half).map(|&(u, _)| u).collect();
        for &u in &p {
            in_p[u] = false;
        }

        let p: VertexSet = p.into_iter().collect();
        let b: VertexSet = b.into_iter().collect();
        let pool: VertexSet = std::iter::once(v).chain(p.iter()).chain(b.iter()).collect();
        let component: VertexSet = low.restrict(&pool)?.reach(v).into_iter().collect();
        let out = expand_to_k(&full, &component, k)?;
        let d = density(g, &out)?;
        if best.as_ref().is_none_or(|(bd, _, _)| d > *bd) {
            let trace = HubTrace {
                high: high.clone(),
                d_h: average_degree(g, &high),
                hub: v,
                p,
                b,
                component,
            };
            best = Some((d, out, trace));
        }
    }
    let (_, out, trace) = best.ok_or(Error::HubInapplicable)?;
    Ok((Solution::new(g, out, Algorithm::Hub)?, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ops::fixtures::*;

    #[test]
    fn walk_counts() {
        let w = walk2_counts(&path(3), &VertexSet::empty());
        assert_eq!(w.get(0, 2), 1);
        assert_eq!(w.get(0, 1), 0);
        let w = walk2_counts(&cycle(4), &VertexSet::empty());
        assert_eq!(w.get(0, 2), 2);
        assert_eq!(w.get(1, 3), 2);
        let pair = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        let w = walk2_counts(&pair, &VertexSet::empty());
        assert!((0..4).all(|u| w.row(u).is_empty()));
    }

    #[test]
    fn exclusion_removes_middle_vertices() {
        let w = walk2_counts(&star(4), &[0].into_iter().collect());
        assert!(w.row(1).is_empty());
    }

    #[test]
    fn star_hub() {
        // High set is the center and leaf 1, so G_ℓ is edgeless and each remaining
        // leaf grows through the center.
        let (s, t) = alg5_hub_traced(&star(5), 4).unwrap();
        assert_eq!(t.high, [0, 1].into_iter().collect());
        assert_eq!(t.hub, 2);
        assert!(t.p.is_empty() && t.b.is_empty());
        assert_eq!(s.vertices, [0, 1, 2, 3].into_iter().collect());
        assert_eq!(s.density, Density::new(3, 2));
    }

    #[test]
    fn four_cycle() {
        let s = alg5_hub(&cycle(4), 4).unwrap();
        assert_eq!(s.vertices.len(), 4);
        assert_eq!(s.density, Density::new(2, 1));
    }

    #[test]
    fn inapplicable_without_low_vertices() {
        let g = Graph::new(2, [(0, 1)]).unwrap();
        // k/2 = 1 < 2, still applicable
        assert!(alg5_hub(&g, 2).is_ok());
    }
}
