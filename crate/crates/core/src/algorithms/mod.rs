//! Connected k-subgraph approximation algorithms and the combined selector.

mod dense_core;
mod high_degree;
mod hub;
mod peeling;
mod weighted;

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use serde::{Deserialize, Serialize};

pub use dense_core::{alg3, alg3_traced, Alg3Branch, Alg3Trace};
pub use high_degree::{alg4, alg4_traced, high_degree_set, Alg4Trace};
pub use hub::{alg5_hub, alg5_hub_traced, walk2_counts, HubTrace, Walk2Counts};
pub use peeling::{alg1, alg1_traced, prc1, prc2, prc2_traced, Alg1Finish, Alg1Trace, Prc2State};
pub use weighted::weighted_greedy;

use crate::densest::densest_connected_subgraph;
use crate::density::Density;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ops::density;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Algorithm {
    #[serde(rename = "ALG1")]
    Alg1,
    #[serde(rename = "ALG3")]
    Alg3,
    #[serde(rename = "ALG4")]
    Alg4,
    #[serde(rename = "HUB")]
    Hub,
    #[serde(rename = "WGREEDY")]
    WGreedy,
    #[serde(rename = "COMBINED")]
    Combined,
}

impl Algorithm {
    /// Individual algorithms in the order the combined selector runs them.
    pub const UNWEIGHTED: [Algorithm; 4] = [
        Algorithm::Alg1,
        Algorithm::Alg3,
        Algorithm::Alg4,
        Algorithm::Hub,
    ];

    pub fn tag(&self) -> &'static str {
        match self {
            Algorithm::Alg1 => "ALG1",
            Algorithm::Alg3 => "ALG3",
            Algorithm::Alg4 => "ALG4",
            Algorithm::Hub => "HUB",
            Algorithm::WGreedy => "WGREEDY",
            Algorithm::Combined => "COMBINED",
        }
    }

    pub fn supports_weights(&self) -> bool {
        matches!(self, Algorithm::WGreedy | Algorithm::Combined)
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Accepts the command-line names (`auto`, `alg1`, `alg3`, `alg4`, `hub`, `wgreedy`)
/// as well as the report tags.
impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "alg1" => Ok(Algorithm::Alg1),
            "alg3" => Ok(Algorithm::Alg3),
            "alg4" => Ok(Algorithm::Alg4),
            "hub" => Ok(Algorithm::Hub),
            "wgreedy" => Ok(Algorithm::WGreedy),
            "auto" | "combined" => Ok(Algorithm::Combined),
            other => Err(Error::InvalidParameter(format!(
                "unknown algorithm `{other}`"
            ))),
        }
    }
}

/// A connected k-subgraph produced by one of the algorithms.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Solution {
    pub vertices: VertexSet,
    pub density: Density,
    pub algorithm: Algorithm,
    pub k: usize,
}

impl Solution {
    pub fn new(g: &Graph, vertices: VertexSet, algorithm: Algorithm) -> Result<Self> {
        let density = density(g, &vertices)?;
        Ok(Solution {
            k: vertices.len(),
            vertices,
            density,
            algorithm,
        })
    }
}

pub(crate) fn require_unweighted(g: &Graph, algorithm: Algorithm) -> Result<()> {
    if g.is_weighted() {
        Err(Error::WeightedUnsupported(algorithm))
    } else {
        Ok(())
    }
}

/// Contract shared by the even-k algorithms: unweighted, connected, `k` even in `2..=n`.
pub(crate) fn check_even_input(g: &Graph, k: usize, algorithm: Algorithm) -> Result<()> {
    require_unweighted(g, algorithm)?;
    if k < 2 || k > g.n() {
        return Err(Error::KOutOfRange {
            k,
            min: 2,
            max: g.n(),
        });
    }
    if !k.is_multiple_of(2) {
        return Err(Error::Precondition(format!(
            "{algorithm} needs an even k, got {k}"
        )));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(())
}

/// Add the outside vertex with the most neighbors in `s` (smallest id on ties).
pub fn attach_best_neighbor(g: &Graph, s: &VertexSet) -> Result<VertexSet> {
    let mut counts = vec![0usize; g.n()];
    for v in s.iter() {
        for &u in g.neighbors(v) {
            if !s.contains(u) {
                counts[u] += 1;
            }
        }
    }
    let best = (0..g.n())
        .filter(|&u| counts[u] > 0)
        .max_by(|&a, &b| counts[a].cmp(&counts[b]).then(b.cmp(&a)))
        .ok_or(Error::Disconnected)?;
    let mut out = s.clone().into_vec();
    out.push(best);
    Ok(out.into_iter().collect())
}

/// Run an even-k routine, handling odd `k` by solving for `k − 1` and attaching one vertex.
fn with_parity(
    g: &Graph,
    k: usize,
    run: impl FnOnce(usize) -> Result<Solution>,
) -> Result<Solution> {
    if k.is_multiple_of(2) {
        return run(k);
    }
    let smaller = run(k - 1)?;
    let grown = attach_best_neighbor(g, &smaller.vertices)?;
    Solution::new(g, grown, smaller.algorithm)
}

fn check_k(g: &Graph, k: usize) -> Result<()> {
    if k < 3 || k > g.n() {
        return Err(Error::KOutOfRange {
            k,
            min: 3,
            max: g.n(),
        });
    }
    Ok(())
}

/// Run one algorithm for any `k` in `3..=n`.
pub fn solve(g: &Graph, k: usize, algorithm: Algorithm) -> Result<Solution> {
    check_k(g, k)?;
    if !algorithm.supports_weights() {
        require_unweighted(g, algorithm)?;
    }
    match algorithm {
        Algorithm::Alg1 => with_parity(g, k, |k| alg1(g, k)),
        Algorithm::Alg3 => {
            let d = densest_connected_subgraph(g)?;
            with_parity(g, k, |k| alg3(g, k, &d))
        }
        Algorithm::Alg4 => with_parity(g, k, |k| alg4(g, k)),
        Algorithm::Hub => with_parity(g, k, |k| alg5_hub(g, k)),
        Algorithm::WGreedy => weighted_greedy(g, k),
        Algorithm::Combined => best_connected_k_subgraph(g, k),
    }
}

/// Outputs of every applicable algorithm plus the densest among them.
#[derive(Debug, Clone)]
pub struct Selection {
    /// Densest candidate; keeps the tag of the algorithm that produced it.
    pub best: Solution,
    pub candidates: Vec<(Solution, Duration)>,
}

/// Run all applicable algorithms and keep the densest output (earlier algorithm on ties).
///
/// Unweighted graphs use the four unweighted algorithms; weighted graphs use the
/// weighted greedy alone.
pub fn select(g: &Graph, k: usize) -> Result<Selection> {
    check_k(g, k)?;
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let mut candidates = Vec::new();
    if g.is_weighted() {
        let start = Instant::now();
        let s = weighted_greedy(g, k)?;
        candidates.push((s, start.elapsed()));
    } else {
        let start = Instant::now();
        let d = densest_connected_subgraph(g)?;
        let densest_time = start.elapsed();
        for algorithm in Algorithm::UNWEIGHTED {
            let start = Instant::now();
            let s = match algorithm {
                Algorithm::Alg1 => with_parity(g, k, |k| alg1(g, k))?,
                Algorithm::Alg3 => with_parity(g, k, |k| alg3(g, k, &d))?,
                Algorithm::Alg4 => with_parity(g, k, |k| alg4(g, k))?,
                Algorithm::Hub => with_parity(g, k, |k| alg5_hub(g, k))?,
                _ => unreachable!(),
            };
            let mut elapsed = start.elapsed();
            if algorithm == Algorithm::Alg3 {
                elapsed += densest_time;
            }
            candidates.push((s, elapsed));
        }
    }
    let best = candidates
        .iter()
        .map(|(s, _)| s)
        .fold(None::<&Solution>, |acc, s| match acc {
            Some(b) if b.density >= s.density => Some(b),
            _ => Some(s),
        })
        .cloned()
        .expect("at least one candidate");
    Ok(Selection { best, candidates })
}

/// Densest connected k-subgraph found by the combined selector, tagged `COMBINED`.
pub fn best_connected_k_subgraph(g: &Graph, k: usize) -> Result<Solution> {
    let mut best = select(g, k)?.best;
    best.algorithm = Algorithm::Combined;
    Ok(best)
}

/// Machine-readable record of one algorithm run.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunEntry {
    pub algorithm: Algorithm,
    pub k: usize,
    pub vertices: VertexSet,
    pub density: Density,
    pub density_decimal: f64,
    pub elapsed_ms: f64,
}

impl RunEntry {
    pub fn new(solution: &Solution, algorithm: Algorithm, elapsed: Duration) -> Self {
        RunEntry {
            algorithm,
            k: solution.k,
            vertices: solution.vertices.clone(),
            density: solution.density.reduced(),
            density_decimal: solution.density.to_f64(),
            elapsed_ms: elapsed.as_secs_f64() * 1e3,
        }
    }
}

/// Time a single [`solve`] call.
pub fn run(g: &Graph, k: usize, algorithm: Algorithm) -> Result<RunEntry> {
    let start = Instant::now();
    let s = solve(g, k, algorithm)?;
    Ok(RunEntry::new(&s, algorithm, start.elapsed()))
}
