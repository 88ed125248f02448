use std::path::PathBuf;
use std::process::ExitCode;

use c3graph::bench::{scaling, RATIO_LIMIT};
use c3graph::oracle::DEFAULT_CAP;
use c3graph::{emit_report, parse_circuit, run_circuit, Format, Gate, ReportOptions, RunOptions};
use clap::{Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "c3sim", version, about = "Exact Clifford + C3 circuit simulator over sums of graph states")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Text,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Simulate a circuit file and print the final state.
    Simulate {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
        /// Compare against a dense replay of the whole circuit.
        #[arg(long)]
        verify: bool,
        /// Include dense amplitudes.
        #[arg(long)]
        amplitudes: bool,
        /// Skip merging after C3 gates.
        #[arg(long)]
        no_merge: bool,
        /// Largest qubit count the dense oracle accepts.
        #[arg(long, default_value_t = DEFAULT_CAP)]
        oracle_cap: usize,
        /// Print the full statistics block (text format).
        #[arg(long)]
        stats: bool,
    },
    /// Time one C3 gate on single-term random graph states.
    Bench {
        #[arg(long, value_delimiter = ',', default_value = "50,100,200,400")]
        n: Vec<usize>,
        #[arg(long, value_delimiter = ',', default_value = "2,4,8,16")]
        d: Vec<f64>,
        #[arg(long, default_value = "CCZ")]
        gate: String,
        #[arg(long, default_value_t = 200)]
        samples: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, value_enum, default_value = "text")]
        format: OutputFormat,
    },
}

fn simulate(
    file: PathBuf,
    run: RunOptions,
    report: ReportOptions,
) -> Result<Option<bool>, String> {
    let text = std::fs::read_to_string(&file).map_err(|e| format!("{}: {e}", file.display()))?;
    let circuit = parse_circuit(&text).map_err(|e| format!("{}: {e}", file.display()))?;
    let (sum, stats) = run_circuit(&circuit, run).map_err(|e| e.to_string())?;
    let r = emit_report(&circuit, &sum, &stats, &report).map_err(|e| e.to_string())?;
    print!("{}", r.body);
    Ok(r.verified)
}

fn bench(n: &[usize], d: &[f64], gate: &str, samples: usize, seed: u64, format: OutputFormat) -> Result<(), String> {
    let gate: Gate = gate.to_ascii_uppercase().parse()?;
    if gate.is_clifford() {
        return Err(format!("{gate} is not a C3 gate"));
    }
    if samples == 0 {
        return Err("--samples must be positive".into());
    }
    if let Some(&bad) = n.iter().find(|&&n| n < gate.arity()) {
        return Err(format!("n = {bad} is smaller than the arity of {gate}"));
    }
    let (points, rows) = scaling(gate, n, d, samples, seed);
    match format {
        OutputFormat::Json => {
            let v = serde_json::json!({ "gate": gate.name(), "points": points, "scaling": rows, "limit": RATIO_LIMIT });
            println!("{}", serde_json::to_string_pretty(&v).expect("serializes"));
        }
        OutputFormat::Text => {
            println!("gate {gate}, {samples} samples per point");
            println!("{:>6} {:>6} {:>8} {:>12}", "n", "d", "deg", "median us");
            for p in &points {
                println!("{:>6} {:>6} {:>8.2} {:>12.2}", p.n, p.target_degree, p.degree, p.median_ns / 1e3);
            }
            println!("\ndoubling ratios (limit {RATIO_LIMIT})");
            for r in &rows {
                let verdict = if r.within { "ok" } else { "above" };
                println!(
                    "  {} ({}, {}) -> ({}, {}): {:.2} {verdict}",
                    r.doubled, r.from.0, r.from.1, r.to.0, r.to.1, r.ratio
                );
            }
        }
    }
    Ok(())
}

/// 0 on success, 2 when verification ran and failed, 1 on any input error.
fn exit_code(outcome: &Result<Option<bool>, String>) -> u8 {
    match outcome {
        Ok(Some(false)) => 2,
        Ok(_) => 0,
        Err(_) => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let outcome = match cli.command {
        Command::Simulate { file, format, verify, amplitudes, no_merge, oracle_cap, stats } => {
            let format = match format {
                OutputFormat::Text => Format::Text,
                OutputFormat::Json => Format::Json,
            };
            let report = ReportOptions { format, amplitudes, verify, stats, oracle_cap };
            simulate(file, RunOptions { no_merge }, report)
        }
        Command::Bench { n, d, gate, samples, seed, format } => {
            bench(&n, &d, &gate, samples, seed, format).map(|()| None)
        }
    };
    match &outcome {
        Ok(Some(false)) => eprintln!("verification failed: state differs from dense replay"),
        Err(e) => eprintln!("error: {e}"),
        Ok(_) => {}
    }
    ExitCode::from(exit_code(&outcome))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exit_codes() {
        assert_eq!(exit_code(&Ok(None)), 0);
        assert_eq!(exit_code(&Ok(Some(true))), 0);
        assert_eq!(exit_code(&Ok(Some(false))), 2);
        assert_eq!(exit_code(&Err("bad".into())), 1);
    }

    #[test]
    fn cli_definition_is_consistent() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}
