//! Gap instances with known optima and seeded random corpora.
//!
//! Random generators draw from [`SplitMix64`] so that a corpus is reproducible
//! bit-for-bit from its seed, independently of any RNG crate's versioning.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::density::Density;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ops::{components, density};

/// SplitMix64: `state += 0x9E3779B97F4A7C15`, then the output is `state` mixed by
/// `z = (z ^ z>>30)·0xBF58476D1CE4E5B9; z = (z ^ z>>27)·0x94D049BB133111EB; z ^ z>>31`.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)`: the top 53 bits of [`Self::next_u64`] scaled by `2^-53`.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }

    /// One draw; true iff `next_f64() < p`.
    pub fn bernoulli(&mut self, p: f64) -> bool {
        self.next_f64() < p
    }

    /// `next_u64() % bound`; `bound` must be positive.
    pub fn below(&mut self, bound: u64) -> u64 {
        self.next_u64() % bound
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "EX1A")]
    Ex1a,
    #[serde(rename = "EX1B")]
    Ex1b,
    #[serde(rename = "GNP")]
    Gnp,
    #[serde(rename = "PLANTED")]
    Planted,
}

/// A generated graph together with what is known about its optimal k-subgraph density.
#[derive(Debug, Clone, PartialEq)]
pub struct GapInstance {
    pub graph: Graph,
    pub k: usize,
    pub family: Family,
    pub params: BTreeMap<String, f64>,
    /// Unconstrained (weighted) `σ*_k`, or a lower bound when `opt_is_lower_bound`.
    pub known_opt_density: Density,
    pub opt_is_lower_bound: bool,
    pub known_connected_density: Option<Density>,
    pub planted_block: Option<VertexSet>,
}

/// JSON sidecar written next to a generated edge list.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sidecar {
    pub family: Family,
    pub params: BTreeMap<String, f64>,
    pub k: Option<usize>,
    pub known_opt_num: Option<u64>,
    pub known_opt_den: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_connected_num: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub known_connected_den: Option<u64>,
    #[serde(default)]
    pub opt_is_lower_bound: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub planted_block: Option<VertexSet>,
}

impl Sidecar {
    pub fn known_opt(&self) -> Option<Density> {
        match (self.known_opt_num, self.known_opt_den) {
            (Some(num), Some(den)) if den > 0 => Some(Density::new(num, den)),
            _ => None,
        }
    }
}

impl GapInstance {
    pub fn sidecar(&self) -> Sidecar {
        let opt = self.known_opt_density.reduced();
        let connected = self.known_connected_density.map(|d| d.reduced());
        Sidecar {
            family: self.family,
            params: self.params.clone(),
            k: Some(self.k),
            known_opt_num: Some(opt.num()),
            known_opt_den: Some(opt.den()),
            known_connected_num: connected.map(|d| d.num()),
            known_connected_den: connected.map(|d| d.den()),
            opt_is_lower_bound: self.opt_is_lower_bound,
            planted_block: self.planted_block.clone(),
        }
    }
}

fn check_ell(ell: usize) -> Result<()> {
    if ell < 2 {
        return Err(Error::InvalidParameter(format!(
            "ell must be at least 2, got {ell}"
        )));
    }
    Ok(())
}

/// `ℓ` disjoint `ℓ`-cliques chained by paths with `ℓ²` interior vertices each;
/// `n = ℓ³`, `k = ℓ²`.
///
/// Layout: clique `i` occupies `iℓ..(i+1)ℓ`, path `i` interiors follow from `ℓ²`
/// onward, ordered from clique `i` to clique `i+1`. Paths attach to the lowest-id
/// vertex of each clique.
pub fn example1a(ell: usize) -> Result<GapInstance> {
    check_ell(ell)?;
    let k = ell * ell;
    let n = k * ell;
    let mut edges = Vec::new();
    for c in 0..ell {
        let base = c * ell;
        for a in 0..ell {
            for b in a + 1..ell {
                edges.push((base + a, base + b));
            }
        }
    }
    for p in 0..ell - 1 {
        let interior: Vec<usize> = (0..k).map(|j| k + p * k + j).collect();
        let mut prev = p * ell;
        for &v in &interior {
            edges.push((prev, v));
            prev = v;
        }
        edges.push((prev, (p + 1) * ell));
    }
    let graph = Graph::new(n, edges)?;
    let ell64 = ell as u64;
    // The clique union has density ℓ−1. For ℓ = 2 the whole graph is a path on
    // 8 vertices and four consecutive path vertices (density 3/2) do better.
    let known_opt_density = if ell == 2 {
        Density::new(3, 2)
    } else {
        Density::new(ell64 - 1, 1)
    };
    let known_connected = Density::new(
        ell64 * (ell64 - 1) + 2 * (ell64 * ell64 - ell64),
        ell64 * ell64,
    );
    Ok(GapInstance {
        graph,
        k,
        family: Family::Ex1a,
        params: BTreeMap::from([("ell".to_string(), ell as f64)]),
        known_opt_density,
        opt_is_lower_bound: false,
        known_connected_density: Some(known_connected),
        planted_block: None,
    })
}

/// Weighted spider: a center with `ℓ` legs of `ℓ` edges each; the leaf edge of every
/// leg has weight 1, all others 0. `n = ℓ² + 1`, `k = 2ℓ`.
///
/// Layout: center 0, leg `i` occupies `1 + iℓ ..= (i+1)ℓ` from the center outward.
pub fn example1b(ell: usize) -> Result<GapInstance> {
    check_ell(ell)?;
    let n = ell * ell + 1;
    let mut edges = Vec::new();
    for leg in 0..ell {
        let first = 1 + leg * ell;
        let mut prev = 0;
        for j in 0..ell {
            let v = first + j;
            let w = u32::from(j == ell - 1);
            edges.push((prev, v, w));
            prev = v;
        }
    }
    Ok(GapInstance {
        graph: Graph::with_weights(n, edges)?,
        k: 2 * ell,
        family: Family::Ex1b,
        params: BTreeMap::from([("ell".to_string(), ell as f64)]),
        known_opt_density: Density::new(1, 1),
        opt_is_lower_bound: false,
        known_connected_density: Some(Density::new(1, ell as u64)),
        planted_block: None,
    })
}

/// A `G(n, p)` sample reduced to its largest connected component.
#[derive(Debug, Clone, PartialEq)]
pub struct Sampled {
    pub graph: Graph,
    /// The sample was disconnected and `graph` is its relabeled largest component.
    pub relabeled: bool,
    /// Original id of each vertex of `graph`.
    pub original_ids: Vec<usize>,
}

fn check_probability(name: &str, p: f64) -> Result<()> {
    if !(0.0..=1.0).contains(&p) {
        return Err(Error::InvalidParameter(format!(
            "{name} must lie in [0, 1], got {p}"
        )));
    }
    Ok(())
}

/// Pairs `u < v` are visited in lexicographic order with one draw each.
fn sample_pairs(
    n: usize,
    rng: &mut SplitMix64,
    mut p: impl FnMut(usize, usize) -> f64,
) -> Vec<(usize, usize)> {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p(u, v)) {
                edges.push((u, v));
            }
        }
    }
    edges
}

/// Erdős–Rényi sample; the largest component (smallest id on ties) is kept and relabeled.
pub fn gnp(n: usize, p: f64, seed: u64) -> Result<Sampled> {
    check_probability("p", p)?;
    if n == 0 {
        return Err(Error::InvalidParameter("n must be positive".into()));
    }
    let mut rng = SplitMix64::new(seed);
    let edges = sample_pairs(n, &mut rng, |_, _| p);
    if edges.is_empty() {
        return Err(Error::NoEdges);
    }
    let raw = Graph::new(n, edges)?;
    let pieces = components(&raw, &raw.full().vertex_set())?;
    if pieces.len() == 1 {
        return Ok(Sampled {
            graph: raw,
            relabeled: false,
            original_ids: (0..n).collect(),
        });
    }
    let largest = pieces.iter().fold(
        &pieces[0],
        |best, c| if c.len() > best.len() { c } else { best },
    );
    let ids = largest.as_slice().to_vec();
    let mut index = vec![usize::MAX; n];
    for (i, &v) in ids.iter().enumerate() {
        index[v] = i;
    }
    let edges: Vec<(usize, usize)> = raw
        .edges()
        .iter()
        .filter(|&&(u, v)| index[u] != usize::MAX && index[v] != usize::MAX)
        .map(|&(u, v)| (index[u], index[v]))
        .collect();
    Ok(Sampled {
        graph: Graph::new(ids.len(), edges)?,
        relabeled: true,
        original_ids: ids,
    })
}

/// `G(k, p_in)` block on vertices `0..k` inside a `G(n, p_out)` background.
///
/// A disconnected sample is stitched by joining the smallest vertex of each further
/// component to vertex 0. The block's density is recorded as a lower bound on `σ*_k`.
pub fn planted(n: usize, k: usize, p_in: f64, p_out: f64, seed: u64) -> Result<GapInstance> {
    check_probability("p_in", p_in)?;
    check_probability("p_out", p_out)?;
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, min: 1, max: n });
    }
    let mut rng = SplitMix64::new(seed);
    let mut edges = sample_pairs(
        n,
        &mut rng,
        |u, v| if v < k && u < k { p_in } else { p_out },
    );
    let raw = Graph::new(n, edges.iter().copied())?;
    let pieces = components(&raw, &raw.full().vertex_set())?;
    for piece in pieces.iter().skip(1) {
        edges.push((0, piece.first().expect("components are nonempty")));
    }
    let graph = Graph::new(n, edges)?;
    let block: VertexSet = (0..k).collect();
    let block_density = density(&graph, &block)?;
    Ok(GapInstance {
        graph,
        k,
        family: Family::Planted,
        params: BTreeMap::from([
            ("n".to_string(), n as f64),
            ("k".to_string(), k as f64),
            ("p_in".to_string(), p_in),
            ("p_out".to_string(), p_out),
            ("seed".to_string(), seed as f64),
        ]),
        known_opt_density: block_density,
        opt_is_lower_bound: true,
        known_connected_density: None,
        planted_block: Some(block),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs for seed 0 of the published SplitMix64 reference.
        let mut rng = SplitMix64::new(0);
        assert_eq!(rng.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(rng.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn example1a_shapes() {
        let i = example1a(2).unwrap();
        assert_eq!((i.graph.n(), i.k), (8, 4));
        let i = example1a(3).unwrap();
        assert_eq!((i.graph.n(), i.k), (27, 9));
        assert_eq!(i.known_opt_density, Density::new(2, 1));
        assert_eq!(i.known_connected_density, Some(Density::new(18, 9)));
        let i = example1a(6).unwrap();
        assert_eq!((i.graph.n(), i.k), (216, 36));
        assert_eq!(i.known_opt_density, Density::new(5, 1));
        assert_eq!(i.known_connected_density, Some(Density::new(5, 2)));
        let ratio = i
            .known_opt_density
            .ratio_to(&i.known_connected_density.unwrap())
            .unwrap();
        assert_eq!((ratio.num(), ratio.den()), (2, 1));
        assert!(i.graph.is_connected());
        // ℓ cliques (ℓ(ℓ−1)/2 edges each) and ℓ−1 paths of ℓ²+1 edges
        assert_eq!(i.graph.m(), 6 * 15 + 5 * 37);
    }

    #[test]
    fn example1b_shapes() {
        let i = example1b(2).unwrap();
        assert_eq!((i.graph.n(), i.k), (5, 4));
        let i = example1b(4).unwrap();
        assert_eq!((i.graph.n(), i.k), (17, 8));
        assert_eq!(i.graph.total_weight(), 4);
        assert_eq!(i.graph.weight(4, 3), Some(1));
        assert_eq!(i.graph.weight(0, 1), Some(0));
        assert!(i.graph.is_connected());
    }

    #[test]
    fn rejects_small_ell() {
        assert!(example1a(1).is_err());
        assert!(example1b(0).is_err());
    }

    #[test]
    fn gnp_degenerate_probabilities() {
        let s = gnp(10, 1.0, 7).unwrap();
        assert_eq!(s.graph.m(), 45);
        assert!(!s.relabeled);
        assert_eq!(gnp(10, 0.0, 7), Err(Error::NoEdges));
        assert!(gnp(10, 1.5, 7).is_err());
    }

    #[test]
    fn gnp_is_reproducible_and_connected() {
        let a = gnp(40, 0.05, 11).unwrap();
        let b = gnp(40, 0.05, 11).unwrap();
        assert_eq!(a, b);
        assert!(a.graph.is_connected());
    }

    #[test]
    fn planted_block_density_is_recorded() {
        let i = planted(30, 8, 0.9, 0.1, 42).unwrap();
        let block = i.planted_block.clone().unwrap();
        assert_eq!(density(&i.graph, &block).unwrap(), i.known_opt_density);
        assert!(i.opt_is_lower_bound);
        assert!(i.graph.is_connected());
        assert_eq!(i.sidecar().k, Some(8));
    }
}
