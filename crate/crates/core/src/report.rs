//! Human and machine readable run reports.

use std::fmt::Write as _;

use serde::Serialize;

use crate::circuit::Circuit;
use crate::error::SimError;
use crate::oracle::{sum_to_vector, DEFAULT_CAP};
use crate::runner::{replay_dense, RunStats};
use crate::state::{StateSum, TermJson};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Clone, Copy, Debug)]
pub struct ReportOptions {
    pub format: Format,
    pub amplitudes: bool,
    pub verify: bool,
    /// Full statistics block in text output; JSON always carries stats.
    pub stats: bool,
    pub oracle_cap: usize,
}

impl Default for ReportOptions {
    fn default() -> Self {
        Self { format: Format::Text, amplitudes: false, verify: false, stats: false, oracle_cap: DEFAULT_CAP }
    }
}

#[derive(Clone, Debug)]
pub struct Report {
    pub body: String,
    /// `Some` when verification was requested.
    pub verified: Option<bool>,
}

#[derive(Serialize)]
struct JsonReport<'a> {
    n: usize,
    terms: Vec<TermJson>,
    stats: &'a RunStats,
    #[serde(skip_serializing_if = "Option::is_none")]
    amplitudes: Option<Vec<[String; 2]>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    verified: Option<bool>,
}

/// Renders the report. Oracle-backed options beyond the cap are refused.
pub fn emit_report(
    circuit: &Circuit,
    sum: &StateSum,
    stats: &RunStats,
    opts: &ReportOptions,
) -> Result<Report, SimError> {
    let needs_oracle = opts.amplitudes || opts.verify;
    if needs_oracle && sum.n > opts.oracle_cap {
        return Err(SimError::OracleCap { n: sum.n, cap: opts.oracle_cap });
    }
    let dense = if needs_oracle { Some(sum_to_vector(sum, opts.oracle_cap)?) } else { None };
    let verified = match (&dense, opts.verify) {
        (Some(d), true) => Some(*d == replay_dense(circuit, opts.oracle_cap)?),
        _ => None,
    };
    let amplitudes = dense.filter(|_| opts.amplitudes).map(|d| d.approx_pairs());
    let body = match opts.format {
        Format::Json => {
            let r = JsonReport {
                n: sum.n,
                terms: sum.terms.iter().map(|t| t.to_json()).collect(),
                stats,
                amplitudes,
                verified,
            };
            serde_json::to_string_pretty(&r).expect("report serializes") + "\n"
        }
        Format::Text => text_report(sum, stats, opts.stats, amplitudes.as_deref(), verified),
    };
    Ok(Report { body, verified })
}

fn text_report(
    sum: &StateSum,
    stats: &RunStats,
    full_stats: bool,
    amplitudes: Option<&[[String; 2]]>,
    verified: Option<bool>,
) -> String {
    let rows: Vec<[String; 4]> = sum
        .terms
        .iter()
        .enumerate()
        .map(|(i, t)| {
            let vops: Vec<&str> = t.vops.iter().map(|v| v.label()).collect();
            let edges: Vec<String> = t.graph.edges().iter().map(|(a, b)| format!("{}-{}", a + 1, b + 1)).collect();
            [
                (i + 1).to_string(),
                t.coeff.approx_string(),
                vops.join(" "),
                if edges.is_empty() { "-".into() } else { edges.join(" ") },
            ]
        })
        .collect();
    let header = ["#", "coeff", "vops", "edges"].map(String::from);
    let mut widths = header.clone().map(|h| h.chars().count());
    for r in &rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let mut out = String::new();
    writeln!(out, "qubits {}, terms {}", sum.n, sum.len()).unwrap();
    for r in std::iter::once(&header).chain(&rows) {
        let line: Vec<String> = r.iter().zip(&widths).map(|(c, w)| format!("{c:<w$}")).collect();
        writeln!(out, "{}", line.join("  ").trim_end()).unwrap();
    }
    if full_stats {
        writeln!(out, "\nstats").unwrap();
        writeln!(out, "  final terms    {}", stats.final_terms).unwrap();
        writeln!(out, "  peak terms     {}", stats.peak_terms).unwrap();
        writeln!(out, "  merges         {}", stats.merges).unwrap();
        writeln!(out, "  cancellations  {}", stats.cancellations).unwrap();
        writeln!(out, "  avg degree     {:.3}", stats.avg_degree).unwrap();
        writeln!(out, "  gates          {} ({} C3)", stats.gates, stats.c3_gates).unwrap();
        writeln!(out, "  wall time      {:.3} ms", stats.wall_time.as_secs_f64() * 1e3).unwrap();
    }
    if let Some(amps) = amplitudes {
        writeln!(out, "\namplitudes").unwrap();
        let width = sum.n.max(1);
        for (z, [re, im]) in amps.iter().enumerate() {
            writeln!(out, "  |{z:0width$b}>  {re:>10} {im:>10}").unwrap();
        }
    }
    if let Some(v) = verified {
        writeln!(out, "\nverified: {v}").unwrap();
    }
    out
}
