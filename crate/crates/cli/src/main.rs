use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use densek::generators::Sampled;
use densek::oracle::{brute_k_with, LIMIT_ENV};
use densek::{
    densest_subgraph, example1a, example1b, gnp, planted, select, Algorithm, Family, Graph,
    OracleConfig, RunEntry, Sidecar,
};

mod report;

use report::{BenchRow, InstanceInfo, OracleEntry, RunReport};

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Parse {
        path: PathBuf,
        source: densek::Error,
    },
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] densek::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        use densek::Error as E;
        match self {
            CliError::Usage(_) => 2,
            CliError::Parse { .. } => 3,
            CliError::Io(_) => 7,
            CliError::Csv(_) => 7,
            CliError::Core(e) => match e {
                E::KOutOfRange { .. } => 4,
                E::WeightedUnsupported(_) => 5,
                E::OracleTooLarge { .. } => 6,
                E::InvalidParameter(_) => 2,
                _ => 1,
            },
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "densek", version, about = "Dense connected k-subgraphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum AlgoArg {
    Auto,
    Alg1,
    Alg3,
    Alg4,
    Hub,
    Wgreedy,
}

impl From<AlgoArg> for Algorithm {
    fn from(a: AlgoArg) -> Self {
        match a {
            AlgoArg::Auto => Algorithm::Combined,
            AlgoArg::Alg1 => Algorithm::Alg1,
            AlgoArg::Alg3 => Algorithm::Alg3,
            AlgoArg::Alg4 => Algorithm::Alg4,
            AlgoArg::Hub => Algorithm::Hub,
            AlgoArg::Wgreedy => Algorithm::WGreedy,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum FamilyArg {
    Example1a,
    Example1b,
    Gnp,
    Planted,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Find a dense connected k-subgraph.
    Solve {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_solve_k)]
        k: usize,
        #[arg(long, value_enum, default_value = "auto")]
        algo: AlgoArg,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also compute the exact connected optimum and the ratio.
        #[arg(long)]
        with_oracle: bool,
        #[arg(long, env = LIMIT_ENV)]
        oracle_limit: Option<usize>,
    },
    /// Exact optimum by exhaustive enumeration.
    Oracle {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, value_parser = parse_oracle_k)]
        k: usize,
        /// Restrict to connected k-subgraphs.
        #[arg(long)]
        connected: bool,
        #[arg(long, env = LIMIT_ENV)]
        oracle_limit: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Maximum-density subgraph of any size.
    Densest {
        #[arg(long)]
        input: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Write a generated instance and its JSON sidecar.
    Gen {
        #[arg(value_enum)]
        family: FamilyArg,
        #[arg(long)]
        ell: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
        #[arg(long)]
        p: Option<f64>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long)]
        p_in: Option<f64>,
        #[arg(long)]
        p_out: Option<f64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Edge-list path; the sidecar goes next to it with a `.json` extension.
        #[arg(long)]
        out: PathBuf,
    },
    /// Run every applicable algorithm over a directory of instances.
    Bench {
        #[arg(long)]
        corpus: PathBuf,
        /// `sidecar` to use each instance's stored k, or a comma-separated list.
        #[arg(long, default_value = "sidecar")]
        k: String,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn parse_k_at_least(s: &str, min: usize) -> Result<usize, String> {
    let k: usize = s
        .parse()
        .map_err(|_| format!("`{s}` is not a nonnegative integer"))?;
    if k < min {
        return Err(format!("k must be at least {min}"));
    }
    Ok(k)
}

fn parse_solve_k(s: &str) -> Result<usize, String> {
    parse_k_at_least(s, 3)
}

fn parse_oracle_k(s: &str) -> Result<usize, String> {
    parse_k_at_least(s, 1)
}

fn load(path: &Path) -> Result<Graph, CliError> {
    let text =
        fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    Graph::parse_edge_list(&text).map_err(|source| CliError::Parse {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(out: Option<&Path>, text: &str) -> Result<(), CliError> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))
        }
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn oracle_config(limit: Option<usize>) -> OracleConfig {
    limit.map_or_else(OracleConfig::default, OracleConfig::with_limit)
}

fn sidecar_path(path: &Path) -> PathBuf {
    path.with_extension("json")
}

fn solve_entries(
    g: &Graph,
    k: usize,
    algorithm: Algorithm,
) -> Result<(Vec<RunEntry>, RunEntry), CliError> {
    if algorithm == Algorithm::Combined {
        let selection = select(g, k)?;
        let entries: Vec<RunEntry> = selection
            .candidates
            .iter()
            .map(|(s, t)| RunEntry::new(s, s.algorithm, *t))
            .collect();
        let best = entries
            .iter()
            .find(|e| {
                e.vertices == selection.best.vertices && e.algorithm == selection.best.algorithm
            })
            .cloned()
            .expect("best is one of the candidates");
        Ok((entries, best))
    } else {
        let entry = densek::run(g, k, algorithm)?;
        Ok((vec![entry.clone()], entry))
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_solve(
    input: &Path,
    k: usize,
    algo: AlgoArg,
    format: Format,
    out: Option<&Path>,
    with_oracle: bool,
    oracle_limit: Option<usize>,
) -> Result<(), CliError> {
    let g = load(input)?;
    let (entries, best) = solve_entries(&g, k, algo.into())?;
    let mut report = RunReport {
        instance: InstanceInfo::new(&g, input),
        k,
        entries,
        best: Some(best.clone()),
        oracle: None,
        ratio: None,
    };
    if with_oracle {
        let r = brute_k_with(&oracle_config(oracle_limit), &g, k, true)?;
        report.ratio = r.best_density.ratio_to(&best.density).map(Into::into);
        report.oracle = Some(OracleEntry::from(&r));
    }
    let text = match format {
        Format::Json => report.to_json(),
        Format::Csv => report.to_csv()?,
    };
    emit(out, &text)
}

fn cmd_oracle(
    input: &Path,
    k: usize,
    connected: bool,
    oracle_limit: Option<usize>,
    out: Option<&Path>,
) -> Result<(), CliError> {
    let g = load(input)?;
    let r = brute_k_with(&oracle_config(oracle_limit), &g, k, connected)?;
    let report = RunReport {
        instance: InstanceInfo::new(&g, input),
        k,
        entries: Vec::new(),
        best: None,
        oracle: Some(OracleEntry::from(&r)),
        ratio: None,
    };
    emit(out, &report.to_json())
}

fn cmd_densest(input: &Path, out: Option<&Path>) -> Result<(), CliError> {
    let g = load(input)?;
    let r = densest_subgraph(&g)?;
    let body = serde_json::json!({
        "instance": InstanceInfo::new(&g, input),
        "subgraph": r.subgraph,
        "density": r.density.reduced(),
        "density_decimal": r.density.to_f64(),
        "connected_variant": r.connected_variant,
    });
    emit(
        out,
        &format!(
            "{}\n",
            serde_json::to_string_pretty(&body).expect("json value serializes")
        ),
    )
}

fn required<T>(value: Option<T>, flag: &str, family: &str) -> Result<T, CliError> {
    value.ok_or_else(|| CliError::Usage(format!("{family} requires --{flag}")))
}

#[allow(clippy::too_many_arguments)]
fn cmd_gen(
    family: FamilyArg,
    ell: Option<usize>,
    n: Option<usize>,
    p: Option<f64>,
    k: Option<usize>,
    p_in: Option<f64>,
    p_out: Option<f64>,
    seed: u64,
    out: &Path,
) -> Result<(), CliError> {
    let (graph, sidecar) = match family {
        FamilyArg::Example1a => {
            let inst = example1a(required(ell, "ell", "example1a")?)?;
            (inst.graph.clone(), inst.sidecar())
        }
        FamilyArg::Example1b => {
            let inst = example1b(required(ell, "ell", "example1b")?)?;
            (inst.graph.clone(), inst.sidecar())
        }
        FamilyArg::Planted => {
            let inst = planted(
                required(n, "n", "planted")?,
                required(k, "k", "planted")?,
                required(p_in, "p-in", "planted")?,
                required(p_out, "p-out", "planted")?,
                seed,
            )?;
            (inst.graph.clone(), inst.sidecar())
        }
        FamilyArg::Gnp => {
            let n = required(n, "n", "gnp")?;
            let p = required(p, "p", "gnp")?;
            let Sampled {
                graph, relabeled, ..
            } = gnp(n, p, seed)?;
            let sidecar = Sidecar {
                family: Family::Gnp,
                params: [
                    ("n".to_string(), n as f64),
                    ("p".to_string(), p),
                    ("seed".to_string(), seed as f64),
                    ("relabeled".to_string(), if relabeled { 1.0 } else { 0.0 }),
                ]
                .into(),
                k,
                known_opt_num: None,
                known_opt_den: None,
                known_connected_num: None,
                known_connected_den: None,
                opt_is_lower_bound: false,
                planted_block: None,
            };
            if relabeled {
                eprintln!(
                    "note: sample was disconnected; wrote its largest component ({} vertices)",
                    graph.n()
                );
            }
            (graph, sidecar)
        }
    };
    emit(Some(out), &graph.to_edge_list())?;
    let json = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
    emit(Some(&sidecar_path(out)), &format!("{json}\n"))
}

fn parse_k_list(spec: &str) -> Result<Option<Vec<usize>>, CliError> {
    if spec.eq_ignore_ascii_case("sidecar") {
        return Ok(None);
    }
    spec.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .map_err(|_| CliError::Usage(format!("bad k `{s}` in --k")))
        })
        .collect::<Result<Vec<_>, _>>()
        .map(Some)
}

fn read_sidecar(path: &Path) -> Result<Option<Sidecar>, CliError> {
    let side = sidecar_path(path);
    if !side.exists() {
        return Ok(None);
    }
    let text =
        fs::read_to_string(&side).map_err(|e| CliError::Io(format!("{}: {e}", side.display())))?;
    serde_json::from_str(&text)
        .map(Some)
        .map_err(|e| CliError::Io(format!("{}: malformed sidecar: {e}", side.display())))
}

fn bench_algorithms(g: &Graph) -> Vec<Algorithm> {
    if g.is_weighted() {
        vec![Algorithm::WGreedy]
    } else {
        vec![
            Algorithm::Alg1,
            Algorithm::Alg3,
            Algorithm::Alg4,
            Algorithm::Hub,
            Algorithm::WGreedy,
            Algorithm::Combined,
        ]
    }
}

fn cmd_bench(corpus: &Path, k_spec: &str, out: Option<&Path>) -> Result<(), CliError> {
    let ks = parse_k_list(k_spec)?;
    let listing =
        fs::read_dir(corpus).map_err(|e| CliError::Io(format!("{}: {e}", corpus.display())))?;
    let mut files: Vec<PathBuf> = listing
        .filter_map(|entry| entry.ok().map(|e| e.path()))
        .filter(|p| p.is_file() && p.extension().is_none_or(|ext| ext != "json"))
        .collect();
    files.sort();

    let mut w = csv::Writer::from_writer(Vec::new());
    for path in &files {
        let g = load(path)?;
        let sidecar = read_sidecar(path)?;
        let instance = path
            .file_name()
            .map_or_else(String::new, |s| s.to_string_lossy().into_owned());
        let instance_ks = match (&ks, sidecar.as_ref().and_then(|s| s.k)) {
            (Some(list), _) => list.clone(),
            (None, Some(k)) => vec![k],
            (None, None) => {
                return Err(CliError::Usage(format!(
                    "{instance}: no sidecar k; pass --k explicitly"
                )));
            }
        };
        for k in instance_ks {
            // The stored bound only applies at the k it was computed for.
            let known = sidecar
                .as_ref()
                .filter(|s| s.k == Some(k))
                .and_then(Sidecar::known_opt);
            for algorithm in bench_algorithms(&g) {
                let start = Instant::now();
                let result = densek::solve(&g, k, algorithm);
                let elapsed_ms = start.elapsed().as_secs_f64() * 1e3;
                let row = match result {
                    Ok(s) => {
                        let d = s.density.reduced();
                        let ratio = known.and_then(|b| b.ratio_to(&s.density));
                        BenchRow {
                            instance: instance.clone(),
                            algorithm: algorithm.tag().to_string(),
                            k,
                            density_num: Some(d.num()),
                            density_den: Some(d.den()),
                            density: Some(d.to_f64()),
                            known_bound: known.map(|b| b.to_string()),
                            ratio: ratio.map(|r| r.to_string()),
                            ratio_decimal: ratio.map(|r| r.to_f64()),
                            elapsed_ms,
                            status: "ok".to_string(),
                        }
                    }
                    Err(e) => BenchRow {
                        instance: instance.clone(),
                        algorithm: algorithm.tag().to_string(),
                        k,
                        density_num: None,
                        density_den: None,
                        density: None,
                        known_bound: known.map(|b| b.to_string()),
                        ratio: None,
                        ratio_decimal: None,
                        elapsed_ms,
                        status: format!("error: {e}"),
                    },
                };
                w.serialize(row)?;
            }
        }
    }
    let bytes = w.into_inner().map_err(|e| CliError::Io(e.to_string()))?;
    emit(out, &String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn run(cli: Cli) -> Result<(), CliError> {
    match cli.command {
        Command::Solve {
            input,
            k,
            algo,
            format,
            out,
            with_oracle,
            oracle_limit,
        } => cmd_solve(
            &input,
            k,
            algo,
            format,
            out.as_deref(),
            with_oracle,
            oracle_limit,
        ),
        Command::Oracle {
            input,
            k,
            connected,
            oracle_limit,
            out,
        } => cmd_oracle(&input, k, connected, oracle_limit, out.as_deref()),
        Command::Densest { input, out } => cmd_densest(&input, out.as_deref()),
        Command::Gen {
            family,
            ell,
            n,
            p,
            k,
            p_in,
            p_out,
            seed,
            out,
        } => cmd_gen(family, ell, n, p, k, p_in, p_out, seed, &out),
        Command::Bench { corpus, k, out } => cmd_bench(&corpus, &k, out.as_deref()),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
