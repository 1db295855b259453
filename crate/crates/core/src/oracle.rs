//! Exhaustive reference solvers for small instances.
//!
//! These exist to be obviously correct; every ratio assertion in the test suites is
//! measured against them.

use serde::{Deserialize, Serialize};

use crate::density::{Density, Ratio};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// Environment variable overriding both size guards.
pub const LIMIT_ENV: &str = "DENSEK_ORACLE_LIMIT";

/// Size guards for exhaustive enumeration.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct OracleConfig {
    /// Largest `n` accepted by [`brute_k`].
    pub max_n_k: usize,
    /// Largest `n` accepted by [`brute_densest`] (enumerates all `2^n` subsets).
    pub max_n_densest: usize,
}

impl Default for OracleConfig {
    fn default() -> Self {
        OracleConfig {
            max_n_k: 20,
            max_n_densest: 16,
        }
    }
}

impl OracleConfig {
    /// Defaults, with both guards replaced by `DENSEK_ORACLE_LIMIT` when it parses.
    pub fn from_env() -> Self {
        match std::env::var(LIMIT_ENV)
            .ok()
            .and_then(|s| s.trim().parse::<usize>().ok())
        {
            Some(limit) => OracleConfig::with_limit(limit),
            None => OracleConfig::default(),
        }
    }

    pub fn with_limit(limit: usize) -> Self {
        // bitmask enumeration caps n at 64
        let limit = limit.min(64);
        OracleConfig {
            max_n_k: limit,
            max_n_densest: limit,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleResult {
    pub best_set: VertexSet,
    pub best_density: Density,
    pub connected_required: bool,
    pub k: usize,
}

struct Bits {
    adj: Vec<u64>,
    weights: Option<Vec<Vec<u64>>>,
}

impl Bits {
    fn new(g: &Graph) -> Self {
        let n = g.n();
        let mut adj = vec![0u64; n];
        for &(u, v) in g.edges() {
            adj[u] |= 1 << v;
            adj[v] |= 1 << u;
        }
        let weights = g.is_weighted().then(|| {
            let mut w = vec![vec![0u64; n]; n];
            for (i, &(u, v)) in g.edges().iter().enumerate() {
                w[u][v] = g.edge_weight(i) as u64;
                w[v][u] = g.edge_weight(i) as u64;
            }
            w
        });
        Bits { adj, weights }
    }

    /// Weight of the edges between `v` and the members of `mask`.
    fn gain(&self, v: usize, mask: u64) -> u64 {
        let hits = self.adj[v] & mask;
        match &self.weights {
            None => hits.count_ones() as u64,
            Some(w) => {
                let mut bits = hits;
                let mut total = 0;
                while bits != 0 {
                    let u = bits.trailing_zeros() as usize;
                    total += w[v][u];
                    bits &= bits - 1;
                }
                total
            }
        }
    }

    fn connected(&self, mask: u64) -> bool {
        if mask == 0 {
            return true;
        }
        let mut seen = mask & mask.wrapping_neg();
        let mut frontier = seen;
        while frontier != 0 {
            let v = frontier.trailing_zeros() as usize;
            frontier &= frontier - 1;
            let fresh = self.adj[v] & mask & !seen;
            seen |= fresh;
            frontier |= fresh;
        }
        seen == mask
    }
}

fn mask_to_set(mask: u64) -> VertexSet {
    (0..64).filter(|&v| mask >> v & 1 == 1).collect()
}

/// Maximum (weighted) density over all k-subsets, optionally restricted to connected ones.
/// Guarded by [`OracleConfig::from_env`].
pub fn brute_k(g: &Graph, k: usize, connected: bool) -> Result<OracleResult> {
    brute_k_with(&OracleConfig::from_env(), g, k, connected)
}

/// Subsets are enumerated in lexicographic order and only strict improvements are kept,
/// so the witness is the lexicographically smallest maximizer.
pub fn brute_k_with(
    cfg: &OracleConfig,
    g: &Graph,
    k: usize,
    connected: bool,
) -> Result<OracleResult> {
    let n = g.n();
    if n > cfg.max_n_k.min(64) {
        return Err(Error::OracleTooLarge {
            n,
            limit: cfg.max_n_k.min(64),
        });
    }
    if k == 0 || k > n {
        return Err(Error::KOutOfRange { k, min: 1, max: n });
    }
    let bits = Bits::new(g);
    let mut best: Option<(u64, u64)> = None;
    let mut chosen = Vec::with_capacity(k);
    enumerate(&bits, n, k, connected, 0, 0, 0, &mut chosen, &mut best);
    let (weight, mask) = best.ok_or(Error::NoConnectedSubgraph(k))?;
    Ok(OracleResult {
        best_set: mask_to_set(mask),
        best_density: Density::of(weight, k),
        connected_required: connected,
        k,
    })
}

#[allow(clippy::too_many_arguments)]
fn enumerate(
    bits: &Bits,
    n: usize,
    k: usize,
    connected: bool,
    start: usize,
    mask: u64,
    weight: u64,
    chosen: &mut Vec<usize>,
    best: &mut Option<(u64, u64)>,
) {
    if chosen.len() == k {
        let improves = best.is_none_or(|(w, _)| weight > w);
        if improves && (!connected || bits.connected(mask)) {
            *best = Some((weight, mask));
        }
        return;
    }
    let remaining = k - chosen.len();
    for v in start..=n - remaining {
        chosen.push(v);
        enumerate(
            bits,
            n,
            k,
            connected,
            v + 1,
            mask | 1 << v,
            weight + bits.gain(v, mask),
            chosen,
            best,
        );
        chosen.pop();
    }
}

/// Maximum density over all nonempty subsets. Guarded by [`OracleConfig::from_env`].
pub fn brute_densest(g: &Graph) -> Result<OracleResult> {
    brute_densest_with(&OracleConfig::from_env(), g)
}

pub fn brute_densest_with(cfg: &OracleConfig, g: &Graph) -> Result<OracleResult> {
    let n = g.n();
    let limit = cfg.max_n_densest.min(63);
    if n > limit {
        return Err(Error::OracleTooLarge { n, limit });
    }
    if n == 0 {
        return Err(Error::EmptySubgraph);
    }
    let bits = Bits::new(g);
    let mut best = (Density::ZERO, 1u64);
    for mask in 1u64..(1 << n) {
        let mut doubled = 0;
        let mut rest = mask;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            doubled += bits.gain(v, mask);
        }
        let d = Density::new(doubled, mask.count_ones() as u64);
        if d > best.0 {
            best = (d, mask);
        }
    }
    let best_set = mask_to_set(best.1);
    Ok(OracleResult {
        k: best_set.len(),
        best_set,
        best_density: best.0,
        connected_required: false,
    })
}

/// `σ*_k(unconstrained) / σ*_k(connected)`, exactly.
pub fn gap_ratio(g: &Graph, k: usize) -> Result<Ratio> {
    gap_ratio_with(&OracleConfig::from_env(), g, k)
}

pub fn gap_ratio_with(cfg: &OracleConfig, g: &Graph, k: usize) -> Result<Ratio> {
    let free = brute_k_with(cfg, g, k, false)?;
    let tied = brute_k_with(cfg, g, k, true)?;
    free.best_density
        .ratio_to(&tied.best_density)
        .ok_or(Error::ZeroDenominator)
}
