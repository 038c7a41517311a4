//! Monte Carlo block-error simulation under depolarizing noise.
//!
//! Trial `t` of a run draws its randomness from ChaCha8 seeded with
//! `seed_from_u64(seed)` on stream `t`, so a report depends only on the
//! config and never on how trials are spread over worker threads.

use std::fs::OpenOptions;
use std::io::Write;
use std::path::Path;

use qcldpc_core::channel::{run_trial, PreparedCode, MAX_FM};
use qcldpc_core::codes::{builtin, CodeSpec};
use rand_chacha::ChaCha8Rng;
use rand_core::SeedableRng;
use rayon::prelude::*;

use crate::error::{Error, Result};

pub const DEFAULT_MAX_ITER: usize = 100;
pub const DEFAULT_TRIALS: u64 = 10_000;
pub const DEFAULT_SEED: u64 = 1;

/// Two-sided 95% normal quantile.
const Z95: f64 = 1.959_963_984_540_054;

pub const CSV_FORMAT_VERSION: u32 = 1;
pub const CSV_HEADER: &str = "code,f_m,trials,max_iter,seed,block_errors,bler,x_failures,z_failures,mean_iterations,ci_low,ci_high";

#[derive(Clone, Debug, PartialEq)]
pub struct SimConfig {
    pub code: String,
    pub f_m: f64,
    pub trials: u64,
    pub max_iter: usize,
    pub seed: u64,
}

impl SimConfig {
    pub fn new(code: impl Into<String>, f_m: f64) -> Self {
        Self {
            code: code.into(),
            f_m,
            trials: DEFAULT_TRIALS,
            max_iter: DEFAULT_MAX_ITER,
            seed: DEFAULT_SEED,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..MAX_FM).contains(&self.f_m) {
            return Err(Error::Config(format!(
                "f_m = {} must lie in [0, {MAX_FM})",
                self.f_m
            )));
        }
        if self.trials == 0 {
            return Err(Error::Config("trials must be at least 1".into()));
        }
        if self.max_iter == 0 {
            return Err(Error::Config("max_iter must be at least 1".into()));
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct SimReport {
    pub config: SimConfig,
    pub block_errors: u64,
    pub bler: f64,
    pub x_failures: u64,
    pub z_failures: u64,
    /// Mean SPA iterations per component decode.
    pub mean_iterations: f64,
    pub wilson_95: (f64, f64),
}

impl SimReport {
    /// One CSV record in [`CSV_HEADER`] order, without a newline.
    pub fn csv_record(&self) -> String {
        let c = &self.config;
        format!(
            "{},{},{},{},{},{},{:.6},{},{},{:.4},{:.6},{:.6}",
            c.code,
            c.f_m,
            c.trials,
            c.max_iter,
            c.seed,
            self.block_errors,
            self.bler,
            self.x_failures,
            self.z_failures,
            self.mean_iterations,
            self.wilson_95.0,
            self.wilson_95.1
        )
    }

    pub fn summary(&self) -> String {
        let c = &self.config;
        format!(
            "{} f_m={} trials={} max_iter={} seed={}: block errors {} (bler {:.6}, 95% CI [{:.6}, {:.6}]), X failures {}, Z failures {}, mean iterations {:.4}",
            c.code,
            c.f_m,
            c.trials,
            c.max_iter,
            c.seed,
            self.block_errors,
            self.bler,
            self.wilson_95.0,
            self.wilson_95.1,
            self.x_failures,
            self.z_failures,
            self.mean_iterations
        )
    }
}

/// Wilson score interval for `successes` out of `trials` at 95%.
pub fn wilson_interval(successes: u64, trials: u64) -> (f64, f64) {
    if trials == 0 {
        return (0.0, 1.0);
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = Z95 * Z95;
    let denom = 1.0 + z2 / n;
    let centre = (p + z2 / (2.0 * n)) / denom;
    let half = Z95 * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    // The bounds are exactly 0 and 1 at the extremes; rounding would leave residue.
    let lo = if successes == 0 { 0.0 } else { (centre - half).max(0.0) };
    let hi = if successes == trials { 1.0 } else { (centre + half).min(1.0) };
    (lo, hi)
}

/// Generator for trial `trial` of a run seeded with `seed`.
pub fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(trial);
    rng
}

#[derive(Clone, Copy, Default)]
struct Tally {
    block_errors: u64,
    x_failures: u64,
    z_failures: u64,
    iterations: u64,
}

impl Tally {
    fn merge(self, o: Tally) -> Tally {
        Tally {
            block_errors: self.block_errors + o.block_errors,
            x_failures: self.x_failures + o.x_failures,
            z_failures: self.z_failures + o.z_failures,
            iterations: self.iterations + o.iterations,
        }
    }
}

/// Runs `config` against an already prepared code.
pub fn simulate_prepared(code: &PreparedCode, config: &SimConfig) -> Result<SimReport> {
    config.validate()?;
    let tally = (0..config.trials)
        .into_par_iter()
        .map(|t| -> Result<Tally> {
            let mut rng = trial_rng(config.seed, t);
            let out = run_trial(code, config.f_m, config.max_iter, &mut rng)?;
            Ok(Tally {
                block_errors: u64::from(!out.success()),
                x_failures: u64::from(!out.x_ok),
                z_failures: u64::from(!out.z_ok),
                iterations: (out.x_iterations + out.z_iterations) as u64,
            })
        })
        .try_reduce(Tally::default, |a, b| Ok(a.merge(b)))?;
    Ok(SimReport {
        config: config.clone(),
        block_errors: tally.block_errors,
        bler: tally.block_errors as f64 / config.trials as f64,
        x_failures: tally.x_failures,
        z_failures: tally.z_failures,
        mean_iterations: tally.iterations as f64 / (2 * config.trials) as f64,
        wilson_95: wilson_interval(tally.block_errors, config.trials),
    })
}

pub fn simulate_code(code: &CodeSpec, config: &SimConfig) -> Result<SimReport> {
    simulate_prepared(&code.prepare(), config)
}

/// Runs `config` on the built-in code it names.
pub fn run_simulation(config: &SimConfig) -> Result<SimReport> {
    let code = builtin(&config.code).ok_or_else(|| Error::UnknownCode(config.code.clone()))?;
    simulate_code(&code, config)
}

/// Appends `report` to the CSV file at `path`, writing the version line and
/// header first when the file is new or empty.
pub fn write_csv(report: &SimReport, path: &Path) -> Result<()> {
    append_csv(std::slice::from_ref(report), path)
}

pub fn append_csv(reports: &[SimReport], path: &Path) -> Result<()> {
    let fresh = std::fs::metadata(path).map(|m| m.len() == 0).unwrap_or(true);
    let mut file = OpenOptions::new()
        .create(true)
        .append(true)
        .open(path)
        .map_err(|e| Error::io(path, e))?;
    let mut text = String::new();
    if fresh {
        text.push_str(&format!("# qcldpc-sweep-csv format-version {CSV_FORMAT_VERSION}\n"));
        text.push_str(CSV_HEADER);
        text.push('\n');
    }
    for r in reports {
        text.push_str(&r.csv_record());
        text.push('\n');
    }
    file.write_all(text.as_bytes()).map_err(|e| Error::io(path, e))
}
