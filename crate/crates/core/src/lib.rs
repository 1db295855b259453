//! Dense connected k-subgraphs.
//!
//! Given a connected graph `G` and an integer `k`, find a connected subgraph on exactly
//! `k` vertices with high density `σ(S) = 2·e(S)/|S|`. The crate provides the
//! approximation algorithms, an exact flow-based densest-subgraph solver, exhaustive
//! oracles for small graphs, and generators for instances with known optima.
//!
//! ```
//! use densek::{select, Graph, Density};
//!
//! // K4 with a pendant vertex.
//! let g = Graph::new(5, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3), (3, 4)]).unwrap();
//! let picked = select(&g, 4).unwrap().best;
//! assert_eq!(picked.density, Density::new(3, 1));
//! ```

pub mod algorithms;
pub mod densest;
pub mod density;
pub mod error;
pub mod flow;
pub mod generators;
pub mod graph;
pub mod ops;
pub mod oracle;

pub use algorithms::{
    alg1, alg3, alg4, alg5_hub, best_connected_k_subgraph, run, select, solve, weighted_greedy,
    Algorithm, RunEntry, Selection, Solution,
};
pub use densest::{densest_connected_subgraph, densest_subgraph, DensestResult};
pub use density::{Density, Ratio};
pub use error::{Error, Result};
pub use generators::{
    example1a, example1b, gnp, planted, Family, GapInstance, Sidecar, SplitMix64,
};
pub use graph::{Graph, VertexSet, View};
pub use oracle::{brute_densest, brute_k, gap_ratio, OracleConfig, OracleResult};
