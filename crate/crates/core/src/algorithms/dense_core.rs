use serde::{Deserialize, Serialize};

use super::peeling::prc1;
use super::{check_even_input, Algorithm, Solution};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::ops::expand_to_k;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Alg3Branch {
    /// `|D| ≤ k`: D grown to k vertices.
    Expand,
    /// `|D| > k`: first procedure run inside D.
    Prc1,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Alg3Trace {
    pub branch: Alg3Branch,
    pub dense_core: VertexSet,
}

/// Build a connected k-subgraph around a densest connected subgraph `d` of `g`.
///
/// `d` is the caller's responsibility (see [`crate::densest_connected_subgraph`]);
/// it is not re-verified here.
pub fn alg3(g: &Graph, k: usize, d: &VertexSet) -> Result<Solution> {
    alg3_traced(g, k, d).map(|(s, _)| s)
}

pub fn alg3_traced(g: &Graph, k: usize, d: &VertexSet) -> Result<(Solution, Alg3Trace)> {
    check_even_input(g, k, Algorithm::Alg3)?;
    if d.is_empty() {
        return Err(Error::EmptySubgraph);
    }
    let (out, branch) = if d.len() <= k {
        (expand_to_k(&g.full(), d, k)?, Alg3Branch::Expand)
    } else {
        (prc1(&g.view(d)?, k)?, Alg3Branch::Prc1)
    };
    let solution = Solution::new(g, out, Algorithm::Alg3)?;
    Ok((
        solution,
        Alg3Trace {
            branch,
            dense_core: d.clone(),
        },
    ))
}
