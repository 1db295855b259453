use std::path::{Path, PathBuf};

use densek::{Density, Graph, OracleResult, Ratio, RunEntry, VertexSet};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct InstanceInfo {
    pub n: usize,
    pub m: usize,
    pub weighted: bool,
    pub source: PathBuf,
}

impl InstanceInfo {
    pub fn new(g: &Graph, source: &Path) -> Self {
        InstanceInfo {
            n: g.n(),
            m: g.m(),
            weighted: g.is_weighted(),
            source: source.to_path_buf(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OracleEntry {
    pub connected_required: bool,
    pub vertices: VertexSet,
    pub density: Density,
    pub density_decimal: f64,
}

impl From<&OracleResult> for OracleEntry {
    fn from(r: &OracleResult) -> Self {
        OracleEntry {
            connected_required: r.connected_required,
            vertices: r.best_set.clone(),
            density: r.best_density.reduced(),
            density_decimal: r.best_density.to_f64(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RatioEntry {
    pub num: u128,
    pub den: u128,
    pub decimal: f64,
}

impl From<Ratio> for RatioEntry {
    fn from(r: Ratio) -> Self {
        RatioEntry {
            num: r.num(),
            den: r.den(),
            decimal: r.to_f64(),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RunReport {
    pub instance: InstanceInfo,
    pub k: usize,
    pub entries: Vec<RunEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub best: Option<RunEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle: Option<OracleEntry>,
    /// Oracle optimum over the best density.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ratio: Option<RatioEntry>,
}

fn join_vertices(s: &VertexSet) -> String {
    s.iter()
        .map(|v| v.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

impl RunReport {
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("report serializes");
        out.push('\n');
        out
    }

    /// One row per entry; the oracle, when present, is an extra `ORACLE` row.
    pub fn to_csv(&self) -> Result<String, csv::Error> {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record([
            "algorithm",
            "k",
            "density_num",
            "density_den",
            "density",
            "elapsed_ms",
            "vertices",
        ])?;
        for e in &self.entries {
            w.write_record([
                e.algorithm.tag().to_string(),
                e.k.to_string(),
                e.density.num().to_string(),
                e.density.den().to_string(),
                format!("{:.6}", e.density_decimal),
                format!("{:.3}", e.elapsed_ms),
                join_vertices(&e.vertices),
            ])?;
        }
        if let Some(o) = &self.oracle {
            w.write_record([
                "ORACLE".to_string(),
                self.k.to_string(),
                o.density.num().to_string(),
                o.density.den().to_string(),
                format!("{:.6}", o.density_decimal),
                String::new(),
                join_vertices(&o.vertices),
            ])?;
        }
        let bytes = w.into_inner().map_err(|e| e.into_error())?;
        Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
    }
}

/// One line of the bench CSV.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BenchRow {
    pub instance: String,
    pub algorithm: String,
    pub k: usize,
    pub density_num: Option<u64>,
    pub density_den: Option<u64>,
    pub density: Option<f64>,
    /// Known optimum (or lower bound) from the sidecar, as `p/q`.
    pub known_bound: Option<String>,
    /// `known_bound / density`, as `p/q`.
    pub ratio: Option<String>,
    pub ratio_decimal: Option<f64>,
    pub elapsed_ms: f64,
    pub status: String,
}
