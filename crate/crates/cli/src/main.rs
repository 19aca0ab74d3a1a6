//! `scwave`: spectro-computational analysis of waveform scenarios.
//!
//! Subcommands: `analyze`, `compare`, `classify`, `sweep`, `bench`,
//! `dump`. Exit codes: 0 success, 2 usage or configuration error, 1
//! internal error.

mod output;

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Parser, Subcommand};

use sc_core::bench::measure;
use sc_core::classifier::{classify_ofdm, scalability, DftConjecture, Verdict};
use sc_core::dft::DftImpl;
use sc_core::growth::GrowthFn;
use sc_core::metrics::{pow2_range, sweep_over, ScReport};
use sc_core::scenario::Scenario;

#[derive(Parser)]
#[command(
    name = "scwave",
    version,
    about = "Spectro-computational analysis: throughput and capacity budgets that charge for baseband computation, not just airtime"
)]
struct Cli {
    /// Write the command's tabular output as CSV to this path
    #[arg(long, global = true, value_name = "PATH")]
    csv: Option<PathBuf>,

    /// Suppress the human-readable report on stdout
    #[arg(long, global = true)]
    quiet: bool,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the full metric report for one scenario file
    Analyze {
        /// Scenario file (key = value lines)
        scenario: PathBuf,
    },
    /// Analyze two scenarios and print rate gains of the first over the second
    Compare {
        scenario_a: PathBuf,
        scenario_b: PathBuf,
    },
    /// Decide scalability / comp-limited status from growth functions
    Classify {
        /// Bit-growth function, e.g. "N" (requires --t)
        #[arg(long, value_name = "EXPR", requires = "t", conflicts_with = "ofdm")]
        b: Option<String>,
        /// Time-complexity growth function, e.g. "N*log" (requires --b)
        #[arg(long, value_name = "EXPR", requires = "b", conflicts_with = "ofdm")]
        t: Option<String>,
        /// Classify uncoded OFDM under a DFT lower-bound conjecture
        #[arg(long, requires = "conjecture")]
        ofdm: bool,
        /// DFT lower-bound conjecture: nlogn | linear[:c]
        #[arg(long, value_name = "CONJ", requires = "ofdm")]
        conjecture: Option<String>,
    },
    /// SC throughput over all powers of two in [n-min, n-max]
    Sweep {
        scenario: PathBuf,
        #[arg(long, value_name = "N")]
        n_min: u64,
        #[arg(long, value_name = "N")]
        n_max: u64,
    },
    /// Measure an instrumented DFT implementation
    Bench {
        /// dft_naive | fft_radix2
        #[arg(long = "impl", value_name = "NAME")]
        implementation: String,
        /// Comma-separated transform sizes, e.g. 64,512
        #[arg(long, value_name = "LIST")]
        n_list: String,
        /// Timing repetitions per size (median wall time is reported)
        #[arg(long, default_value_t = 5)]
        reps: u32,
        /// Seed for the deterministic input vectors
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
    /// Print the canonical form of a scenario file
    Dump {
        scenario: PathBuf,
        /// Write to a file instead of stdout
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

enum CliError {
    /// Bad arguments or configuration: exit code 2.
    Usage(String),
    /// Environment failures such as unwritable output files: exit code 1.
    Internal(String),
}

impl From<sc_core::Error> for CliError {
    fn from(e: sc_core::Error) -> Self {
        match e {
            sc_core::Error::Io(_) => CliError::Internal(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

type CliResult<T> = Result<T, CliError>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Internal(msg)) => {
            eprintln!("internal error: {msg}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> CliResult<()> {
    match cli.command {
        Command::Analyze { ref scenario } => cmd_analyze(scenario, &cli),
        Command::Compare {
            ref scenario_a,
            ref scenario_b,
        } => cmd_compare(scenario_a, scenario_b, &cli),
        Command::Classify {
            ref b,
            ref t,
            ofdm,
            ref conjecture,
        } => cmd_classify(b.as_deref(), t.as_deref(), ofdm, conjecture.as_deref(), &cli),
        Command::Sweep {
            ref scenario,
            n_min,
            n_max,
        } => cmd_sweep(scenario, n_min, n_max, &cli),
        Command::Bench {
            ref implementation,
            ref n_list,
            reps,
            seed,
        } => cmd_bench(implementation, n_list, reps, seed, &cli),
        Command::Dump {
            ref scenario,
            ref out,
        } => cmd_dump(scenario, out.as_deref()),
    }
}

/// Scenario-file problems are configuration errors, including an
/// unreadable path.
fn load_scenario(path: &Path) -> CliResult<Scenario> {
    Scenario::load(path).map_err(|e| CliError::Usage(format!("{}: {e}", path.display())))
}

fn write_csv(path: &Path, header: &str, rows: &[String]) -> CliResult<()> {
    let mut text = String::with_capacity(header.len() + rows.iter().map(String::len).sum::<usize>() + rows.len() + 1);
    text.push_str(header);
    text.push('\n');
    for row in rows {
        text.push_str(row);
        text.push('\n');
    }
    fs::write(path, text)
        .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display())))
}

fn emit_report_csv(cli: &Cli, reports: &[&ScReport]) -> CliResult<()> {
    if let Some(path) = &cli.csv {
        let rows: Vec<String> = reports.iter().map(|r| output::report_row(r)).collect();
        write_csv(path, output::REPORT_HEADER, &rows)?;
    }
    Ok(())
}

fn cmd_analyze(scenario: &Path, cli: &Cli) -> CliResult<()> {
    let report = load_scenario(scenario)?.report()?;
    emit_report_csv(cli, &[&report])?;
    if !cli.quiet {
        print!("{}", output::human_report(&report));
    }
    Ok(())
}

fn cmd_compare(scenario_a: &Path, scenario_b: &Path, cli: &Cli) -> CliResult<()> {
    let a = load_scenario(scenario_a)?.report()?;
    let b = load_scenario(scenario_b)?.report()?;
    emit_report_csv(cli, &[&a, &b])?;
    if !cli.quiet {
        print!("{}", output::human_compare(&a, &b));
    }
    Ok(())
}

fn parse_conjecture(text: &str) -> CliResult<DftConjecture> {
    if text == "nlogn" {
        return Ok(DftConjecture::NLogN);
    }
    if text == "linear" {
        return Ok(DftConjecture::Linear(1.0));
    }
    if let Some(c_text) = text.strip_prefix("linear:") {
        let c: f64 = c_text.parse().map_err(|_| {
            CliError::Usage(format!("invalid linear-conjecture coefficient `{c_text}`"))
        })?;
        if !c.is_finite() || c <= 0.0 {
            return Err(CliError::Usage(format!(
                "linear-conjecture coefficient must be positive, got {c}"
            )));
        }
        return Ok(DftConjecture::Linear(c));
    }
    Err(CliError::Usage(format!(
        "unknown conjecture `{text}` (expected nlogn or linear[:c])"
    )))
}

fn cmd_classify(
    b: Option<&str>,
    t: Option<&str>,
    ofdm: bool,
    conjecture: Option<&str>,
    cli: &Cli,
) -> CliResult<()> {
    let verdict: Verdict = if ofdm {
        let conj = conjecture.expect("clap enforces --conjecture with --ofdm");
        classify_ofdm(parse_conjecture(conj)?)
    } else {
        match (b, t) {
            (Some(b), Some(t)) => {
                let b = GrowthFn::parse(b)?;
                let t = GrowthFn::parse(t)?;
                scalability(&b, &t)
            }
            _ => {
                return Err(CliError::Usage(
                    "classify needs either --ofdm --conjecture <CONJ> or --b <EXPR> --t <EXPR>"
                        .into(),
                ))
            }
        }
    };
    if cli.quiet {
        print!("{}", verdict.to_record());
    } else {
        println!("{verdict}");
    }
    Ok(())
}

fn cmd_sweep(scenario: &Path, n_min: u64, n_max: u64, cli: &Cli) -> CliResult<()> {
    let s = load_scenario(scenario)?;
    let grid = pow2_range(n_min, n_max)?;
    let points = sweep_over(
        &grid,
        s.waveform.constellation_order(),
        s.waveform.subcarrier_spacing_hz(),
        s.processor.instr_per_s(),
        &s.complexity,
    )?;
    if let Some(path) = &cli.csv {
        let rows: Vec<String> = points.iter().map(output::sweep_row).collect();
        write_csv(path, output::SWEEP_HEADER, &rows)?;
    }
    if !cli.quiet {
        print!("{}", output::human_sweep(&points));
    }
    Ok(())
}

fn cmd_bench(implementation: &str, n_list: &str, reps: u32, seed: u64, cli: &Cli) -> CliResult<()> {
    let imp = DftImpl::from_str(implementation)?;
    let mut sizes = Vec::new();
    for part in n_list.split(',') {
        let part = part.trim();
        let n: u64 = part
            .parse()
            .map_err(|_| CliError::Usage(format!("invalid transform size `{part}` in --n-list")))?;
        sizes.push(n);
    }
    if sizes.is_empty() {
        return Err(CliError::Usage("--n-list must name at least one size".into()));
    }
    let samples = sizes
        .iter()
        .map(|&n| measure(imp, n, reps, seed))
        .collect::<sc_core::Result<Vec<_>>>()?;
    if let Some(path) = &cli.csv {
        let rows: Vec<String> = samples.iter().map(output::bench_row).collect();
        write_csv(path, output::BENCH_HEADER, &rows)?;
    }
    if !cli.quiet {
        print!("{}", output::human_bench(&samples));
    }
    Ok(())
}

fn cmd_dump(scenario: &Path, out: Option<&Path>) -> CliResult<()> {
    let text = load_scenario(scenario)?.dump();
    match out {
        Some(path) => fs::write(path, text)
            .map_err(|e| CliError::Internal(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}
