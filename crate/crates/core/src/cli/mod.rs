//! Command-line front end of the `hytet` binary.
//!
//! Exit codes: 0 success, 2 the tetrahedron does not exist, 64 malformed
//! input, 70 numerical failure or a failed validation.

mod commands;
pub mod input;
pub mod output;

use std::ffi::OsString;
use std::io::Read;
use std::path::PathBuf;

use clap::{Parser, Subcommand, ValueEnum};

use input::{parse_document, parse_inline, DocConfig, InputDocument};

pub const EXIT_OK: i32 = 0;
pub const EXIT_NONEXISTENT: i32 = 2;
pub const EXIT_INPUT: i32 = 64;
pub const EXIT_NUMERICAL: i32 = 70;

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MC_SAMPLES: u64 = 1_000_000;
pub const DEFAULT_SEED: u64 = 0x5eed;
pub const DEFAULT_SWEEP_SAMPLES: usize = 33;

#[derive(Debug, Parser)]
#[command(
    name = "hytet",
    version,
    about = "Compact hyperbolic tetrahedra from their edge lengths"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

/// Options shared by every subcommand.
#[derive(Debug, Clone, clap::Args)]
pub struct Opts {
    /// Input document (JSON); `-` or absent reads standard input.
    pub input: Option<PathBuf>,

    /// Inline edges, e.g. `l12=1,l13=1,l14=1,l23=1,l24=1,l34=0.5`.
    #[arg(long)]
    pub edges: Option<String>,

    /// Quadrature tolerance (absolute and relative).
    #[arg(long, env = "HYTET_TOL")]
    pub tol: Option<f64>,

    /// Monte Carlo sample count.
    #[arg(long = "mc-samples", env = "HYTET_MC_SAMPLES")]
    pub mc_samples: Option<u64>,

    /// Monte Carlo seed.
    #[arg(long, env = "HYTET_SEED")]
    pub seed: Option<u64>,

    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decide existence and report the admissible interval for l34.
    Check {
        #[command(flatten)]
        opts: Opts,
    },
    /// Six dihedral angles from the edge-matrix cofactors.
    Angles {
        #[command(flatten)]
        opts: Opts,
    },
    /// Volume by the edge integral.
    Volume {
        /// Cross-check against the angle integral and Monte Carlo.
        #[arg(long)]
        validate: bool,
        #[command(flatten)]
        opts: Opts,
    },
    /// Table of t, dV/dt and V(t) over the admissible interval of l34.
    Sweep {
        /// Number of grid points, endpoints included.
        #[arg(long, default_value_t = DEFAULT_SWEEP_SAMPLES)]
        samples: usize,
        #[command(flatten)]
        opts: Opts,
    },
    /// Run the full property battery on the input.
    Validate {
        #[command(flatten)]
        opts: Opts,
    },
}

impl Command {
    fn opts(&self) -> &Opts {
        match self {
            Command::Check { opts }
            | Command::Angles { opts }
            | Command::Volume { opts, .. }
            | Command::Sweep { opts, .. }
            | Command::Validate { opts } => opts,
        }
    }
}

/// Effective settings after flags, environment, document and defaults.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Settings {
    pub tol: f64,
    pub mc_samples: u64,
    pub seed: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    pub(crate) fn input_error(msg: impl std::fmt::Display) -> Self {
        Outcome {
            code: EXIT_INPUT,
            stdout: String::new(),
            stderr: format!("error: {msg}\n"),
        }
    }
}

fn resolve(opts: &Opts, doc: &DocConfig) -> Result<Settings, String> {
    let s = Settings {
        tol: opts.tol.or(doc.tol).unwrap_or(DEFAULT_TOL),
        mc_samples: opts.mc_samples.or(doc.mc_samples).unwrap_or(DEFAULT_MC_SAMPLES),
        seed: opts.seed.or(doc.seed).unwrap_or(DEFAULT_SEED),
    };
    if !(s.tol.is_finite() && s.tol > 0.0) {
        return Err(format!("tol = {} must be positive and finite", s.tol));
    }
    if s.mc_samples == 0 {
        return Err("mc-samples must be at least 1".to_string());
    }
    Ok(s)
}

fn load_document(opts: &Opts, stdin: &mut dyn Read) -> Result<InputDocument, String> {
    if let Some(spec) = &opts.edges {
        let mut doc = match &opts.input {
            Some(_) => read_document(opts, stdin)?,
            None => {
                return Ok(InputDocument {
                    edges: parse_inline(spec)?,
                    config: DocConfig::default(),
                })
            }
        };
        doc.edges = parse_inline(spec)?;
        return Ok(doc);
    }
    read_document(opts, stdin)
}

fn read_document(opts: &Opts, stdin: &mut dyn Read) -> Result<InputDocument, String> {
    let text = match &opts.input {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| format!("cannot read {}: {e}", p.display()))?
        }
        _ => {
            let mut s = String::new();
            stdin
                .read_to_string(&mut s)
                .map_err(|e| format!("cannot read standard input: {e}"))?;
            s
        }
    };
    parse_document(&text)
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code and both output streams.
pub fn run<I, T>(args: I, stdin: &mut dyn Read) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                Outcome {
                    code: EXIT_INPUT,
                    stdout: String::new(),
                    stderr: text,
                }
            } else {
                Outcome {
                    code: EXIT_OK,
                    stdout: text,
                    stderr: String::new(),
                }
            };
        }
    };
    let opts = cli.command.opts();
    let doc = match load_document(opts, stdin) {
        Ok(d) => d,
        Err(e) => return Outcome::input_error(e),
    };
    let lengths = match doc.edges.lengths() {
        Ok(l) => l,
        Err(e) => return Outcome::input_error(e),
    };
    let settings = match resolve(opts, &doc.config) {
        Ok(s) => s,
        Err(e) => return Outcome::input_error(e),
    };
    let echo = InputDocument {
        edges: doc.edges.clone(),
        config: DocConfig {
            tol: Some(settings.tol),
            mc_samples: Some(settings.mc_samples),
            seed: Some(settings.seed),
        },
    };
    let ctx = commands::Context {
        lengths,
        settings,
        echo,
    };
    let format = opts.format;
    match &cli.command {
        Command::Check { .. } => commands::check(&ctx, format),
        Command::Angles { .. } => commands::angles(&ctx, format),
        Command::Volume { validate, .. } => commands::volume(&ctx, *validate, format),
        Command::Sweep { samples, .. } => commands::sweep(&ctx, *samples, format),
        Command::Validate { .. } => commands::validate(&ctx, format),
    }
}
