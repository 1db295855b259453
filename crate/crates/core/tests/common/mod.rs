#![allow(dead_code)]

use densek::{Density, Graph, SplitMix64};

pub fn random_graph(rng: &mut SplitMix64, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

/// `G(n, p)` plus a random spanning tree, so the result is always connected.
pub fn random_connected(rng: &mut SplitMix64, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for v in 1..n {
        let u = rng.below(v as u64) as usize;
        edges.push((u, v));
    }
    for u in 0..n {
        for v in u + 1..n {
            if rng.bernoulli(p) && !edges.contains(&(u, v)) {
                edges.push((u, v));
            }
        }
    }
    Graph::new(n, edges).unwrap()
}

pub fn random_weighted(rng: &mut SplitMix64, n: usize, p: f64, max_w: u32) -> Graph {
    let g = random_connected(rng, n, p);
    let edges: Vec<(usize, usize, u32)> = g
        .edges()
        .iter()
        .map(|&(u, v)| (u, v, rng.below(max_w as u64 + 1) as u32))
        .collect();
    Graph::with_weights(n, edges).unwrap()
}

/// Near-cliques of 3 to 6 vertices chained through degree-2 connector vertices.
/// Connectors are low-degree cut-vertices, so these graphs exercise the peeling
/// recursion and its second finishing procedure.
pub fn clique_chain(rng: &mut SplitMix64, max_n: usize) -> Graph {
    loop {
        let blocks = 2 + rng.below(2) as usize;
        let mut n = 0;
        let mut edges = Vec::new();
        let mut anchor = 0;
        for b in 0..blocks {
            let size = 3 + rng.below(4) as usize;
            let base = n;
            n += size;
            for u in 0..size {
                for v in u + 1..size {
                    if rng.bernoulli(0.9) {
                        edges.push((base + u, base + v));
                    }
                }
            }
            if b > 0 {
                let c = n;
                n += 1;
                edges.push((anchor, c));
                edges.push((base + rng.below(size as u64) as usize, c));
            }
            anchor = base + rng.below(size as u64) as usize;
        }
        if n > max_n {
            continue;
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}

/// `a <= c · b` for densities, with `c = cn/cd`.
pub fn at_most_times(a: Density, b: Density, cn: u128, cd: u128) -> bool {
    a.num() as u128 * cd * b.den() as u128 <= cn * b.num() as u128 * a.den() as u128
}

/// Low-id stars whose centers outrank a dense block on higher ids. The highest-degree
/// vertices then sit away from the densest part, which pushes `σ*_k` above twice the
/// density around the high-degree set.
pub fn stars_and_block(rng: &mut SplitMix64, max_n: usize) -> Graph {
    loop {
        let stars = 2 + rng.below(2) as usize;
        let mut n = 0;
        let mut edges = Vec::new();
        let mut centers = Vec::new();
        for _ in 0..stars {
            let center = n;
            let leaves = 3 + rng.below(3) as usize;
            for leaf in 1..=leaves {
                edges.push((center, center + leaf));
            }
            centers.push(center);
            n += leaves + 1;
        }
        let block = 4 + rng.below(3) as usize;
        let base = n;
        n += block;
        for u in base..n {
            for v in u + 1..n {
                if rng.bernoulli(0.85) {
                    edges.push((u, v));
                }
            }
        }
        for &c in &centers {
            edges.push((c, base + rng.below(block as u64) as usize));
        }
        if n > max_n {
            continue;
        }
        let g = Graph::new(n, edges).unwrap();
        if g.is_connected() {
            return g;
        }
    }
}
