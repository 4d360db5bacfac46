//! Command dispatch and exit-code policy.
//!
//! Exit codes: 0 on success (eigenvalue converged, all properties pass),
//! 1 on a property failure or non-convergence, 2 on usage errors and any
//! problem with the input (unreadable file, malformed document, rejected
//! tensor or flag value).

use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use teneig::{
    fixtures, is_irreducible, run_suite, solve_dominant, PositiveVector, PropertyReport,
    SolverConfig, Suite, TensorShape,
};

use crate::format::{parse_tensor, serialize_tensor, Layout};
use crate::render;

/// Environment variable overriding the default eps; both `--eps` and the
/// built-in default 1e-9 take precedence rules: flag > environment > default.
pub const EPS_ENV_VAR: &str = "TENEIG_EPS";

#[derive(Debug, Parser)]
#[command(
    name = "teneig",
    version,
    about = "Dominant eigenvalues of essentially nonnegative tensors"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Compute the dominant eigenvalue of a tensor file
    Eig {
        /// JSON tensor document
        file: PathBuf,
        /// Perturbation and stopping threshold (default 1e-9)
        #[arg(long)]
        eps: Option<f64>,
        /// Stopping threshold decoupled from the perturbation
        #[arg(long)]
        stop_eps: Option<f64>,
        /// Iteration cap (default 1000)
        #[arg(long)]
        max_iter: Option<usize>,
        /// JSON array with a positive starting vector
        #[arg(long)]
        x0: Option<PathBuf>,
        /// Print the per-iteration bounds table
        #[arg(long)]
        trace: bool,
        /// Emit the result as JSON
        #[arg(long)]
        json: bool,
    },
    /// Print structural verdicts for a tensor file
    Check {
        /// JSON tensor document
        file: PathBuf,
    },
    /// Verify eigenvalue properties on seeded random instances
    Props {
        /// Which property suite to run
        suite: SuiteArg,
        /// RNG seed (default 1)
        #[arg(long)]
        seed: Option<u64>,
        /// Instances per suite (default 25)
        #[arg(long)]
        samples: Option<usize>,
        /// Tensor order of the generated instances (default 3)
        #[arg(long)]
        order: Option<usize>,
        /// Tensor dimension of the generated instances (default 3)
        #[arg(long)]
        dim: Option<usize>,
        /// Emit the reports as JSON
        #[arg(long)]
        json: bool,
    },
    /// Write the bundled example tensors to files in the working directory
    Examples,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Minimax,
    Monotone,
    Convexity,
    SymmetricConvexity,
    #[value(name = "logconvexity")]
    LogConvexity,
    All,
}

impl SuiteArg {
    fn suites(self) -> Vec<Suite> {
        match self {
            SuiteArg::Minimax => vec![Suite::Minimax],
            SuiteArg::Monotone => vec![Suite::Monotone],
            SuiteArg::Convexity => vec![Suite::Convexity],
            SuiteArg::SymmetricConvexity => vec![Suite::SymmetricConvexity],
            SuiteArg::LogConvexity => vec![Suite::LogConvexity],
            SuiteArg::All => vec![
                Suite::Minimax,
                Suite::Monotone,
                Suite::Convexity,
                Suite::SymmetricConvexity,
                Suite::LogConvexity,
            ],
        }
    }
}

/// Entry point shared by the binary and the tests. Returns the process
/// exit code instead of exiting.
pub fn cli_main<I, T>(argv: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(err) => {
            // help and version requests arrive here as "errors" but exit 0
            let code = if err.use_stderr() { 2 } else { 0 };
            let _ = err.print();
            return code;
        }
    };
    match run(cli.command) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            2
        }
    }
}

fn run(command: Command) -> Result<i32, String> {
    match command {
        Command::Eig {
            file,
            eps,
            stop_eps,
            max_iter,
            x0,
            trace,
            json,
        } => {
            let tensor = load_tensor(&file)?;
            let mut cfg = SolverConfig::default();
            cfg.eps = match eps {
                Some(value) => value,
                None => eps_from_environment()?.unwrap_or(cfg.eps),
            };
            cfg.stop_eps = stop_eps;
            if let Some(cap) = max_iter {
                cfg.max_iter = cap;
            }
            if let Some(path) = x0 {
                cfg.x0 = Some(load_vector(&path)?);
            }
            let started = Instant::now();
            let result = solve_dominant(&tensor, &cfg).map_err(|e| e.to_string())?;
            let elapsed = started.elapsed().as_secs_f64();
            if json {
                println!("{}", serde_json::to_string_pretty(&result).expect("serializable"));
            } else {
                if trace {
                    print!("{}", render::render_trace(&result));
                }
                println!("{}", render::render_eig(&result));
                println!("{}", render::render_summary(&result, elapsed));
            }
            Ok(if result.converged { 0 } else { 1 })
        }
        Command::Check { file } => {
            let tensor = load_tensor(&file)?;
            let report = is_irreducible(&tensor);
            println!("{}", render::render_check(&tensor, &report));
            Ok(0)
        }
        Command::Props {
            suite,
            seed,
            samples,
            order,
            dim,
            json,
        } => {
            let shape = TensorShape::new(order.unwrap_or(3), dim.unwrap_or(3))
                .map_err(|e| e.to_string())?;
            let samples = samples.unwrap_or(25);
            let seed = seed.unwrap_or(1);
            let mut reports = Vec::new();
            for s in suite.suites() {
                reports.push(run_suite(s, shape, samples, seed).map_err(|e| e.to_string())?);
            }
            if json {
                println!("{}", serde_json::to_string_pretty(&reports).expect("serializable"));
            } else {
                for report in &reports {
                    println!("{}", render::render_report(report));
                }
            }
            Ok(reports_exit_code(&reports))
        }
        Command::Examples => {
            let files = [
                ("example1.json", serialize_tensor(&fixtures::example1(), Layout::Dense)),
                ("example2.json", serialize_tensor(&fixtures::example2(), Layout::Coo)),
                ("example3.json", serialize_tensor(&fixtures::example3(), Layout::Coo)),
            ];
            for (name, text) in files {
                fs::write(name, text).map_err(|e| format!("writing {name}: {e}"))?;
                println!("wrote {name}");
            }
            Ok(0)
        }
    }
}

/// Exit code for a batch of property reports: 0 when all pass, 1 otherwise.
pub fn reports_exit_code(reports: &[PropertyReport]) -> i32 {
    if reports.iter().all(|r| r.pass) {
        0
    } else {
        1
    }
}

fn eps_from_environment() -> Result<Option<f64>, String> {
    match std::env::var(EPS_ENV_VAR) {
        Ok(raw) => raw
            .parse::<f64>()
            .map(Some)
            .map_err(|_| format!("{EPS_ENV_VAR} is not a number: {raw:?}")),
        Err(_) => Ok(None),
    }
}

fn load_tensor(path: &Path) -> Result<teneig::DenseTensor, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    parse_tensor(&text).map_err(|e| format!("parsing {}: {e}", path.display()))
}

fn load_vector(path: &Path) -> Result<PositiveVector, String> {
    let text =
        fs::read_to_string(path).map_err(|e| format!("reading {}: {e}", path.display()))?;
    let values: Vec<f64> =
        serde_json::from_str(&text).map_err(|e| format!("parsing {}: {e}", path.display()))?;
    PositiveVector::new(values).map_err(|e| e.to_string())
}
