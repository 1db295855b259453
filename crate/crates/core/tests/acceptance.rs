//! Acceptance run: one line per criterion, nonzero exit if any fails.
//!
//! Run with `cargo test -p densek --test acceptance`; `--release` is faster but not
//! needed for the time limits.

mod common;

use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::{clique_chain, random_connected, random_graph, random_weighted, stars_and_block};
use densek::algorithms::{alg1_traced, alg4_traced, alg5_hub_traced, Alg1Finish};
use densek::ops::{cut_size, density, is_removable, j_attachment};
use densek::oracle::{brute_k_with, OracleConfig};
use densek::{
    best_connected_k_subgraph, brute_densest, densest_connected_subgraph, densest_subgraph,
    example1a, example1b, solve, weighted_greedy, Algorithm, Density, Error, Graph, SplitMix64,
    VertexSet,
};

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(pass: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        pass,
        detail: detail.into(),
    }
}

fn oracle() -> OracleConfig {
    OracleConfig::default()
}

fn sigma_star_k(g: &Graph, k: usize) -> Density {
    brute_k_with(&oracle(), g, k, false)
        .expect("oracle-sized")
        .best_density
}

/// `a ≤ (cn/cd)·b`.
fn at_most_times(a: Density, b: Density, cn: u128, cd: u128) -> bool {
    common::at_most_times(a, b, cn, cd)
}

fn is_connected_k(g: &Graph, out: &VertexSet, k: usize) -> bool {
    out.len() == k && g.view(out).map(|v| v.is_connected()).unwrap_or(false)
}

/// 140 random connected graphs and 80 clique chains, 6 ≤ n ≤ 14.
fn sweep_corpus() -> Vec<Graph> {
    let mut rng = SplitMix64::new(0x5EED_0001);
    let mut out = Vec::new();
    for i in 0..140 {
        let n = 6 + (i % 9);
        let p = 0.1 + 0.5 * rng.next_f64();
        out.push(random_connected(&mut rng, n, p));
    }
    for _ in 0..80 {
        out.push(clique_chain(&mut rng, 14));
    }
    out
}

struct SweepStats {
    prc2_calls: usize,
    prc2_bad: Vec<String>,
}

fn criterion_1(corpus: &[Graph], stats: &mut SweepStats) -> Outcome {
    let start = Instant::now();
    let mut runs = 0;
    // (ratio, bound) with the largest ratio/bound
    let mut worst = (0.0f64, 1.0f64);
    let mut largest = 0.0f64;
    let mut failures = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let n = g.n() as u128;
        for k in (4..=g.n()).step_by(2) {
            runs += 1;
            let (s, trace) = match alg1_traced(g, k) {
                Ok(r) => r,
                Err(e) => {
                    failures.push(format!("graph {i} k={k}: {e}"));
                    continue;
                }
            };
            if let Alg1Finish::Prc2(state) = &trace.finish {
                stats.prc2_calls += 1;
                let v1 = state.v1.len();
                if v1 * 2 < k || v1 > k {
                    stats.prc2_bad.push(format!("graph {i} k={k}: |V1| = {v1}"));
                }
            }
            if !is_connected_k(g, &s.vertices, k) {
                failures.push(format!("graph {i} k={k}: malformed output"));
                continue;
            }
            let opt = sigma_star_k(g, k);
            let kk = k as u128;
            if s.density == Density::ZERO || !at_most_times(opt, s.density, 12 * n * n, kk * kk) {
                failures.push(format!("graph {i} k={k}: σ*={opt} σ={}", s.density));
                continue;
            }
            let ratio = opt.to_f64() / s.density.to_f64();
            let bound = 12.0 * (n * n) as f64 / (kk * kk) as f64;
            largest = largest.max(ratio);
            if ratio / bound > worst.0 / worst.1 {
                worst = (ratio, bound);
            }
        }
    }
    let elapsed = start.elapsed();
    let within_time = elapsed < Duration::from_secs(120);
    let pass = failures.is_empty() && within_time && corpus.len() >= 200;
    let mut detail = format!(
        "{} graphs, {runs} (graph, k) runs, {} violations, largest ratio {largest:.3}, closest to bound {:.3} vs {:.1}, {:.2}s",
        corpus.len(),
        failures.len(),
        worst.0,
        worst.1,
        elapsed.as_secs_f64()
    );
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first: {f}"));
    }
    outcome(pass, detail)
}

fn criterion_2() -> Outcome {
    let mut rng = SplitMix64::new(0x5EED_0002);
    let mut triples = 0;
    let mut violations = Vec::new();
    while triples < 1200 {
        let n = 4 + rng.below(11) as usize;
        let g = {
            let p = 0.1 + 0.6 * rng.next_f64();
            random_connected(&mut rng, n, p)
        };
        let s: VertexSet = (0..n).filter(|_| rng.bernoulli(0.4)).collect();
        if s.is_empty() || s.len() == n {
            continue;
        }
        let j = 1 + rng.below((n - s.len()) as u64) as usize;
        let star = match j_attachment(&g.full(), &s, j) {
            Ok(star) => star,
            Err(e) => {
                violations.push(format!("error {e}"));
                continue;
            }
        };
        triples += 1;
        let rest: VertexSet = (0..n).filter(|&v| !s.contains(v)).collect();
        let lhs = n * cut_size(&g, &s, &star);
        let rhs = j * cut_size(&g, &s, &rest);
        if star.len() != j || lhs < rhs {
            violations.push(format!("n={n} s={s:?} j={j}: {lhs} < {rhs}"));
        }
    }
    outcome(
        violations.is_empty(),
        format!("{triples} triples, {} violations", violations.len()),
    )
}

fn criterion_3(stats: &SweepStats) -> Outcome {
    let pass = stats.prc2_bad.is_empty() && stats.prc2_calls > 0;
    let mut detail = format!(
        "{} second-procedure invocations in the sweep, {} outside k/2 <= |V1| <= k",
        stats.prc2_calls,
        stats.prc2_bad.len()
    );
    if stats.prc2_calls == 0 {
        detail.push_str(" (no invocation observed, nothing checked)");
    }
    outcome(pass, detail)
}

fn criterion_4() -> Outcome {
    let mut rng = SplitMix64::new(0x5EED_0004);
    let mut checks = 0;
    let mut violations = Vec::new();
    for i in 0..100 {
        let n = 3 + (i % 10);
        let g = {
            let p = 0.2 + 0.6 * rng.next_f64();
            random_graph(&mut rng, n, p)
        };
        let mut prev = sigma_star_k(&g, 2);
        for k in 3..=n {
            let cur = sigma_star_k(&g, k);
            checks += 1;
            let (a, b) = (cur.num() as u128, cur.den() as u128);
            let (c, d) = (prev.num() as u128, prev.den() as u128);
            let additive = a * d < (c + 2 * d) * b;
            let multiplicative = a * d <= 3 * c * b;
            if !additive || !multiplicative {
                violations.push(format!("graph {i} k={k}: σ*_k={cur} σ*_(k-1)={prev}"));
            }
            prev = cur;
        }
    }
    outcome(
        violations.is_empty(),
        format!(
            "100 graphs, {checks} (k-1, k) pairs, {} violations",
            violations.len()
        ),
    )
}

fn criterion_5() -> Outcome {
    let mut rng = SplitMix64::new(0x5EED_0005);
    let mut samples = 0;
    let mut removable = 0;
    let mut mismatches = 0;
    while samples < 1000 {
        let n = 2 + rng.below(13) as usize;
        let g = {
            let p = 0.1 + 0.7 * rng.next_f64();
            random_graph(&mut rng, n, p)
        };
        if g.m() == 0 {
            continue;
        }
        let v = rng.below(n as u64) as usize;
        let full = g.full();
        let rest: VertexSet = (0..n).filter(|&u| u != v).collect();
        let direct = density(&g, &rest).unwrap() > full.density().unwrap();
        let shortcut = is_removable(&full, v).unwrap();
        samples += 1;
        removable += usize::from(direct);
        mismatches += usize::from(direct != shortcut);
    }
    outcome(
        mismatches == 0,
        format!("{samples} samples ({removable} removable), {mismatches} disagreements"),
    )
}

fn criterion_6() -> Outcome {
    let mut rng = SplitMix64::new(0x5EED_0006);
    let mut corpus = Vec::new();
    while corpus.len() < 50 {
        let n = 2 + rng.below(15) as usize;
        let g = match corpus.len() % 3 {
            0 => {
                let p = 0.1 + 0.6 * rng.next_f64();
                random_graph(&mut rng, n, p)
            }
            1 => {
                let p = 0.3 * rng.next_f64();
                random_connected(&mut rng, n, p)
            }
            // every third instance weighted
            _ => {
                let p = 0.4 * rng.next_f64();
                random_weighted(&mut rng, n, p, 6)
            }
        };
        if g.total_weight() > 0 {
            corpus.push(g);
        }
    }
    let weighted = corpus.iter().filter(|g| g.is_weighted()).count();
    let mut mismatches = Vec::new();
    for (i, g) in corpus.iter().enumerate() {
        let brute = brute_densest(g).unwrap().best_density;
        let flow = densest_subgraph(g).unwrap();
        let connected = densest_connected_subgraph(g).unwrap();
        let connected_density = density(g, &connected).unwrap();
        let connected_ok = g.view(&connected).unwrap().is_connected();
        if flow.density != brute
            || density(g, &flow.subgraph).unwrap() != brute
            || connected_density != brute
            || !connected_ok
        {
            mismatches.push(format!(
                "instance {i}: flow {} brute {brute} connected {connected_density}",
                flow.density
            ));
        }
    }
    let mut detail = format!(
        "50 instances ({weighted} weighted, n <= 16), {} mismatches",
        mismatches.len()
    );
    if let Some(m) = mismatches.first() {
        detail.push_str(&format!("; first: {m}"));
    }
    outcome(mismatches.is_empty(), detail)
}

fn criterion_7() -> Outcome {
    let start = Instant::now();
    let inst = example1a(6).unwrap();
    let g = &inst.graph;
    let (n, k) = (g.n(), inst.k);
    let shape = n == 216 && k == 36 && inst.known_opt_density == Density::new(5, 1);
    let out = match best_connected_k_subgraph(g, k) {
        Ok(out) => out,
        Err(e) => return outcome(false, format!("combined solver failed: {e}")),
    };
    let elapsed = start.elapsed();
    let well_formed = is_connected_k(g, &out.vertices, k);
    let (n2, k2) = ((n * n) as u128, (k * k) as u128);
    let bound = out.density > Density::ZERO
        && at_most_times(inst.known_opt_density, out.density, 12 * n2, k2);
    let achieved = inst.known_opt_density.ratio_to(&out.density);

    let small = example1a(2).unwrap();
    let free = brute_k_with(&oracle(), &small.graph, small.k, false)
        .unwrap()
        .best_density;
    let tied = brute_k_with(&oracle(), &small.graph, small.k, true)
        .unwrap()
        .best_density;
    let small_ok = free == small.known_opt_density && Some(tied) == small.known_connected_density;

    let pass = shape && well_formed && bound && small_ok && elapsed < Duration::from_secs(10);
    outcome(
        pass,
        format!(
            "n={n} k={k} σ(output)={} achieved ratio {} (bound 432), connected optimum {}; ell=2 oracle free {free}, connected {tied} vs stored {}, {}; {:.2}s",
            out.density,
            achieved.map_or("undefined".into(), |r| r.to_string()),
            inst.known_connected_density.unwrap(),
            small.known_opt_density,
            small.known_connected_density.unwrap(),
            elapsed.as_secs_f64()
        ),
    )
}

fn criterion_8() -> Outcome {
    let inst = example1b(4).unwrap();
    let out = weighted_greedy(&inst.graph, inst.k).unwrap();
    let opt = sigma_star_k(&inst.graph, inst.k);
    let ratio = opt.ratio_to(&out.density);
    let pass = out.density == Density::new(1, 4)
        && opt == Density::new(1, 1)
        && ratio.is_some_and(|r| r.num() == inst.k as u128 / 2 && r.den() == 1)
        && is_connected_k(&inst.graph, &out.vertices, inst.k);
    outcome(
        pass,
        format!(
            "greedy {} vs oracle {opt}, ratio {} (k/2 = {})",
            out.density,
            ratio.map_or("undefined".into(), |r| r.to_string()),
            inst.k / 2
        ),
    )
}

/// `σ ≥ (σ* − 2σ̄)² / (6·max{k, 2d_h})`, applied when `σ* > 2σ̄`.
fn hub_bound_holds(
    sigma: Density,
    star: Density,
    bar: Density,
    d_h: Density,
    k: usize,
) -> Option<bool> {
    let (a, b) = (star.num() as i128, star.den() as i128);
    let (c, d) = (bar.num() as i128, bar.den() as i128);
    let diff = a * d - 2 * c * b;
    if diff <= 0 {
        return None;
    }
    let diff = diff as u128;
    let bd = (b * d) as u128;
    // max{k, 2d_h} as mn/md
    let (e, f) = (d_h.num() as u128, d_h.den() as u128);
    let (mn, md) = if k as u128 * f >= 2 * e {
        (k as u128, 1)
    } else {
        (2 * e, f)
    };
    let (p, q) = (sigma.num() as u128, sigma.den() as u128);
    Some(p * bd * bd * 6 * mn >= q * diff * diff * md)
}

fn criterion_9() -> Outcome {
    let mut rng = SplitMix64::new(0x5EED_0009);
    let mut checked = 0;
    let mut vacuous = 0;
    let mut violations = Vec::new();
    for i in 0..300 {
        let n = 6 + (i % 9);
        let g = match i % 3 {
            0 => stars_and_block(&mut rng, 14),
            1 => clique_chain(&mut rng, 14),
            _ => {
                let p = 0.1 + 0.5 * rng.next_f64();
                random_connected(&mut rng, n, p)
            }
        };
        let n = g.n();
        for k in (2..=2 * n / 3).step_by(2) {
            let (s, trace) = match alg5_hub_traced(&g, k) {
                Ok(r) => r,
                Err(e) => {
                    violations.push(format!("graph {i} k={k}: {e}"));
                    continue;
                }
            };
            let bar = alg4_traced(&g, k).unwrap().1.sigma_bar;
            let star = sigma_star_k(&g, k);
            match hub_bound_holds(s.density, star, bar, trace.d_h, k) {
                Some(true) => checked += 1,
                Some(false) => violations.push(format!(
                    "graph {i} k={k}: σ={} σ*={star} σ̄={bar}",
                    s.density
                )),
                None => vacuous += 1,
            }
        }
    }
    let mut detail = format!(
        "{checked} nontrivial (graph, k) checks, {vacuous} with σ* <= 2σ̄, {} violations",
        violations.len()
    );
    if let Some(v) = violations.first() {
        detail.push_str(&format!("; first: {v}"));
    }
    outcome(violations.is_empty() && checked > 0, detail)
}

fn is_contract_error(e: &Error) -> bool {
    matches!(
        e,
        Error::KOutOfRange { .. }
            | Error::Precondition(_)
            | Error::Disconnected
            | Error::WeightedUnsupported(_)
            | Error::HubInapplicable
    )
}

const ALL: [Algorithm; 6] = [
    Algorithm::Alg1,
    Algorithm::Alg3,
    Algorithm::Alg4,
    Algorithm::Hub,
    Algorithm::WGreedy,
    Algorithm::Combined,
];

fn criterion_10(corpus: &[Graph]) -> Outcome {
    let mut rng = SplitMix64::new(0x5EED_0010);
    let mut instances: Vec<Graph> = corpus.to_vec();
    for _ in 0..20 {
        let n = 3 + rng.below(12) as usize;
        instances.push(random_weighted(&mut rng, n, 0.3, 5));
    }
    instances.push(example1a(2).unwrap().graph);
    instances.push(example1a(3).unwrap().graph);
    instances.push(example1b(3).unwrap().graph);
    instances.push(Graph::new(4, [(0, 1), (2, 3)]).unwrap());

    let (mut ok, mut contract, mut odd) = (0, 0, 0);
    let mut bad = Vec::new();
    for (i, g) in instances.iter().enumerate() {
        for k in 1..=g.n() + 1 {
            for algorithm in ALL {
                match solve(g, k, algorithm) {
                    Ok(s) => {
                        let exact = density(g, &s.vertices).ok() == Some(s.density);
                        if is_connected_k(g, &s.vertices, k) && exact {
                            ok += 1;
                            odd += k % 2;
                        } else {
                            bad.push(format!(
                                "instance {i} {algorithm} k={k}: malformed {:?}",
                                s.vertices
                            ));
                        }
                    }
                    Err(e) if is_contract_error(&e) => {
                        let legitimate = k < 3
                            || k > g.n()
                            || !g.is_connected()
                            || (g.is_weighted() && !algorithm.supports_weights());
                        if legitimate {
                            contract += 1;
                        } else {
                            bad.push(format!("instance {i} {algorithm} k={k}: unexpected {e}"));
                        }
                    }
                    Err(e) => bad.push(format!("instance {i} {algorithm} k={k}: {e}")),
                }
            }
        }
    }
    let total = ok + contract + bad.len();
    let mut detail = format!(
        "{total} runs over {} instances: {ok} well-formed ({odd} odd k), {contract} contract errors, {} bad",
        instances.len(),
        bad.len()
    );
    if let Some(b) = bad.first() {
        detail.push_str(&format!("; first: {b}"));
    }
    outcome(bad.is_empty(), detail)
}

fn main() -> ExitCode {
    let corpus = sweep_corpus();
    let mut stats = SweepStats {
        prc2_calls: 0,
        prc2_bad: Vec::new(),
    };
    let c1 = criterion_1(&corpus, &mut stats);
    let results = [
        ("peeling ratio bound 12n^2/k^2", c1),
        ("attachment cut bound", criterion_2()),
        ("second procedure |V1| range", criterion_3(&stats)),
        ("consecutive optimum densities", criterion_4()),
        ("removability equivalence", criterion_5()),
        ("flow densest subgraph vs enumeration", criterion_6()),
        ("clique-and-path gap instance", criterion_7()),
        ("weighted spider greedy tightness", criterion_8()),
        ("hub output lower bound", criterion_9()),
        ("universal well-formedness", criterion_10(&corpus)),
    ];
    let mut failed = 0;
    for (i, (name, o)) in results.iter().enumerate() {
        let status = if o.pass { "PASS" } else { "FAIL" };
        failed += usize::from(!o.pass);
        println!("criterion {:>2}: {status} {name}: {}", i + 1, o.detail);
    }
    println!(
        "{} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
