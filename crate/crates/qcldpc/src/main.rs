use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use qcldpc::check::{analyze, CheckOptions};
use qcldpc::format::{parse_any, write_dense, write_exponent, MatrixFile};
use qcldpc::sim::{
    append_csv, simulate_code, SimConfig, CSV_HEADER, DEFAULT_MAX_ITER, DEFAULT_SEED,
    DEFAULT_TRIALS,
};
use qcldpc::Error;
use qcldpc_core::codes::{benchmark_codes, builtin, builtin_codes};
use qcldpc_core::{is_dual_containing, CheckMatrix, CodeKind, CodeSpec};

/// Worker-count override for simulations.
const THREADS_ENV: &str = "QCLDPC_THREADS";

const DEFAULT_GRID: [f64; 5] = [0.001, 0.005, 0.01, 0.02, 0.03];

#[derive(Parser)]
#[command(name = "qcldpc", version, about = "Entanglement-assisted quantum QC-LDPC codes")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum OutputFormat {
    Text,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MatrixFormat {
    Exponent,
    Dense,
}

#[derive(Subcommand)]
enum Command {
    /// List the built-in codes and their declared parameters.
    Info,
    /// Analyze a built-in code or a matrix file.
    Check {
        /// Built-in code name or path to an exponent/dense matrix file.
        #[arg(long)]
        code: String,
        /// Distance-search rounds per matrix (0 skips the search).
        #[arg(long, default_value_t = 100)]
        distance_budget: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// Write the check matrices of a built-in code.
    Export {
        #[arg(long)]
        code: String,
        #[arg(long, value_enum, default_value_t = MatrixFormat::Exponent)]
        matrix: MatrixFormat,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Simulate one (code, f_m) point.
    Simulate {
        #[arg(long)]
        code: String,
        #[arg(long = "fm")]
        f_m: f64,
        #[command(flatten)]
        run: RunArgs,
    },
    /// Simulate a grid of codes and f_m values.
    Sweep {
        /// Repeatable; defaults to the four benchmark codes.
        #[arg(long)]
        code: Vec<String>,
        /// Repeatable; defaults to 0.001 0.005 0.01 0.02 0.03.
        #[arg(long = "fm")]
        f_m: Vec<f64>,
        #[command(flatten)]
        run: RunArgs,
    },
}

#[derive(clap::Args)]
struct RunArgs {
    #[arg(long, default_value_t = DEFAULT_TRIALS)]
    trials: u64,
    #[arg(long, default_value_t = DEFAULT_MAX_ITER)]
    max_iter: usize,
    #[arg(long, default_value_t = DEFAULT_SEED)]
    seed: u64,
    /// CSV file to append records to.
    #[arg(long)]
    out: Option<PathBuf>,
    /// Format of the records printed to stdout.
    #[arg(long, value_enum, default_value_t = OutputFormat::Text)]
    format: OutputFormat,
}

/// Failure carrying the exit status it maps to.
enum Failure {
    Mismatch(String),
    Usage(String),
    Io(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Io { .. } => Failure::Io(e.to_string()),
            Error::UnknownCode(_) => Failure::Usage(e.to_string()),
            _ => Failure::Mismatch(e.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(2) } else { ExitCode::SUCCESS };
        }
    };
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Mismatch(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(2)
        }
        Err(Failure::Io(m)) => {
            eprintln!("error: {m}");
            ExitCode::from(3)
        }
    }
}

fn run(command: Command) -> Result<(), Failure> {
    match command {
        Command::Info => {
            info();
            Ok(())
        }
        Command::Check {
            code,
            distance_budget,
            seed,
        } => {
            let spec = resolve_code(&code)?;
            let report = analyze(&spec, &CheckOptions { distance_budget, seed })?;
            println!("{report}");
            if report.passes() {
                Ok(())
            } else {
                Err(Failure::Mismatch(format!("{} does not reproduce its declared parameters", spec.name)))
            }
        }
        Command::Export { code, matrix, out } => {
            let spec = builtin(&code).ok_or(Error::UnknownCode(code))?;
            let text = export(&spec, matrix);
            match out {
                Some(path) => std::fs::write(&path, text)
                    .map_err(|e| Failure::Io(format!("{}: {e}", path.display()))),
                None => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Simulate { code, f_m, run } => simulate(&[code], &[f_m], &run),
        Command::Sweep { code, f_m, run } => {
            let codes = if code.is_empty() {
                benchmark_codes().into_iter().map(|c| c.name).collect()
            } else {
                code
            };
            let grid = if f_m.is_empty() { DEFAULT_GRID.to_vec() } else { f_m };
            simulate(&codes, &grid, &run)
        }
    }
}

fn info() {
    for code in builtin_codes() {
        let n = code.block_length();
        let kind = match code.kind {
            CodeKind::EntanglementAssisted => "entanglement-assisted",
            CodeKind::DualContaining => "dual-containing",
            CodeKind::CssPair => "CSS pair",
        };
        let declared = match code.declared {
            Some(d) => {
                let dist = d.distance.map_or(String::new(), |d| format!(",{d}"));
                format!("[[{},{}{dist};{}]]", d.n, d.k_logical, d.ebits)
            }
            None => "none".into(),
        };
        println!("{:<14} n = {n:<4} {kind:<22} declared {declared}", code.name);
    }
}

/// A built-in name, or else a matrix file read from disk.
fn resolve_code(name: &str) -> Result<CodeSpec, Failure> {
    if let Some(code) = builtin(name) {
        return Ok(code);
    }
    let path = Path::new(name);
    if !path.exists() {
        return Err(Error::UnknownCode(name.into()).into());
    }
    let text = std::fs::read_to_string(path).map_err(|e| Failure::Io(format!("{name}: {e}")))?;
    let checks: Vec<CheckMatrix> = match parse_any(&text).map_err(|e| Failure::Mismatch(format!("{name}: {e}")))? {
        MatrixFile::Exponent(ms) => ms.into_iter().map(CheckMatrix::Exponent).collect(),
        MatrixFile::Dense(ms) => ms.into_iter().map(CheckMatrix::Binary).collect(),
    };
    let kind = match checks.len() {
        1 if is_dual_containing(&checks[0].to_binary()) => CodeKind::DualContaining,
        1 => CodeKind::EntanglementAssisted,
        2 => CodeKind::CssPair,
        k => return Err(Failure::Mismatch(format!("{name}: expected 1 or 2 matrices, found {k}"))),
    };
    Ok(CodeSpec {
        name: name.into(),
        kind,
        checks,
        declared: None,
    })
}

fn export(spec: &CodeSpec, format: MatrixFormat) -> String {
    spec.checks
        .iter()
        .map(|c| match (format, c) {
            (MatrixFormat::Exponent, CheckMatrix::Exponent(e)) => write_exponent(e),
            _ => write_dense(&c.to_binary()),
        })
        .collect()
}

fn configure_threads() -> Result<(), Failure> {
    let Ok(value) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let threads: usize = value
        .trim()
        .parse()
        .map_err(|_| Failure::Usage(format!("{THREADS_ENV} must be a positive integer, got `{value}`")))?;
    // A second call fails harmlessly if the pool already exists.
    let _ = rayon::ThreadPoolBuilder::new().num_threads(threads).build_global();
    Ok(())
}

fn simulate(codes: &[String], grid: &[f64], run: &RunArgs) -> Result<(), Failure> {
    configure_threads()?;
    let specs = codes
        .iter()
        .map(|name| builtin(name).ok_or_else(|| Error::UnknownCode(name.clone())))
        .collect::<Result<Vec<_>, _>>()?;
    let configs: Vec<SimConfig> = specs
        .iter()
        .flat_map(|spec| {
            grid.iter().map(|&f_m| SimConfig {
                code: spec.name.clone(),
                f_m,
                trials: run.trials,
                max_iter: run.max_iter,
                seed: run.seed,
            })
        })
        .collect();
    for c in &configs {
        c.validate()?;
    }
    if run.format == OutputFormat::Csv {
        println!("{CSV_HEADER}");
    }
    let total = configs.len();
    for (i, config) in configs.iter().enumerate() {
        let spec = specs.iter().find(|s| s.name == config.code).expect("resolved above");
        eprintln!("[{}/{total}] {} f_m={}", i + 1, config.code, config.f_m);
        let report = simulate_code(spec, config)?;
        match run.format {
            OutputFormat::Text => println!("{}", report.summary()),
            OutputFormat::Csv => println!("{}", report.csv_record()),
        }
        if let Some(path) = &run.out {
            append_csv(std::slice::from_ref(&report), path)?;
        }
    }
    Ok(())
}
