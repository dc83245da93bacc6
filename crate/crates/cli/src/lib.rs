//! Argument parsing and dispatch for the `fusym` binary.
//!
//! Exit codes: 0 on success, 1 when a verification or numerical check fails,
//! 2 for usage and configuration errors.

mod commands;
mod output;

use std::ffi::OsString;
use std::io::Write;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fusym::towers::DEFAULT_N_CAP;
use fusym::{Error, Kind, RootOfUnity};

pub const EXIT_OK: u8 = 0;
pub const EXIT_FAILURE: u8 = 1;
pub const EXIT_USAGE: u8 = 2;

#[derive(Debug, Parser)]
#[command(name = "fusym", version, about = "Labels, weights, branching rules, principal graphs and indices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Args)]
pub struct ContextArgs {
    /// Signed parameter N; negative values select the symplectic series.
    #[arg(long = "N", id = "N", value_name = "N", allow_hyphen_values = true)]
    pub n_param: i64,
    /// Level ℓ, with 1 < |N| < ℓ.
    #[arg(long)]
    pub ell: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
    Csv,
    Dot,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum KindArg {
    Hecke,
    Brauer,
}

impl From<KindArg> for Kind {
    fn from(k: KindArg) -> Self {
        match k {
            KindArg::Hecke => Kind::Hecke,
            KindArg::Brauer => Kind::Brauer,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum MethodArg {
    Direct,
    Folded,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Target {
    All,
    Molev,
    Smatrix,
    Squaresum,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Labels with a given number of boxes.
    Labels {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Number of boxes.
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Hecke)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Quantum dimensions of the labels with a given number of boxes.
    Weights {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Hecke)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Restriction multiplicities of one Hecke label.
    Branch {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Row lengths, e.g. "4 2".
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t = MethodArg::Both)]
        method: MethodArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The inclusion graph at level n, or the stable principal graph.
    Graph {
        #[command(flatten)]
        ctx: ContextArgs,
        /// Fixed even level; omit to search for the stable graph.
        #[arg(long)]
        n: Option<usize>,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        n_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// The index from the stable graph and from the closed form.
    Index {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long, default_value_t = DEFAULT_N_CAP)]
        n_cap: usize,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Levels, edges and path counts of a tower.
    Bratteli {
        #[command(flatten)]
        ctx: ContextArgs,
        #[arg(long)]
        n_max: usize,
        #[arg(long, value_enum, default_value_t = KindArg::Hecke)]
        kind: KindArg,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Run the verification suite, or one part of it.
    Verify {
        #[arg(value_enum, default_value_t = Target::All)]
        target: Target,
        #[command(flatten)]
        ctx: ContextArgs,
        /// Tensor factors for the molev target.
        #[arg(long)]
        n: Option<usize>,
        /// Scales every threshold; 1e-8 gives the defaults.
        #[arg(long, default_value_t = 1e-8)]
        tol: f64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

/// Validated settings shared by the subcommands.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RunConfig {
    pub context: RootOfUnity,
    pub format: Format,
    pub tol: f64,
}

impl RunConfig {
    pub fn new(ctx: &ContextArgs, format: Format, allowed: &[Format], tol: f64) -> Result<Self, Failure> {
        let context = RootOfUnity::new(ctx.n_param, ctx.ell)?;
        if !allowed.contains(&format) {
            let names: Vec<String> = allowed.iter().map(|f| format!("{f:?}").to_lowercase()).collect();
            return Err(Failure::Usage(format!(
                "format {} is not available here; use one of {}",
                format!("{format:?}").to_lowercase(),
                names.join(", ")
            )));
        }
        if !(tol > 0.0 && tol <= 1e-3) {
            return Err(Failure::Usage(format!("tol must lie in (0, 1e-3], got {tol}")));
        }
        Ok(Self { context, format, tol })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Failure {
    /// Bad flags, an invalid context or an unknown label.
    Usage(String),
    /// A computation that could not complete.
    Compute(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Context(_) | Error::Domain(_) | Error::Label { .. } | Error::Size { .. } | Error::Config(_) => {
                Failure::Usage(e.to_string())
            }
            _ => Failure::Compute(e.to_string()),
        }
    }
}

/// Standard output of a finished command, and the first failing check if any.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Outcome {
    pub stdout: String,
    pub failure: Option<String>,
}

impl Outcome {
    fn ok(stdout: String) -> Self {
        Self { stdout, failure: None }
    }
}

pub fn run<I, T>(argv: I, out: &mut impl Write, err: &mut impl Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let text = e.render().to_string();
            return if e.use_stderr() {
                let _ = err.write_all(text.as_bytes());
                EXIT_USAGE
            } else {
                let _ = out.write_all(text.as_bytes());
                EXIT_OK
            };
        }
    };
    match commands::execute(&cli.command) {
        Ok(outcome) => {
            let _ = out.write_all(outcome.stdout.as_bytes());
            match outcome.failure {
                Some(name) => {
                    let _ = writeln!(err, "verification failed: {name}");
                    EXIT_FAILURE
                }
                None => EXIT_OK,
            }
        }
        Err(Failure::Usage(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_USAGE
        }
        Err(Failure::Compute(m)) => {
            let _ = writeln!(err, "error: {m}");
            EXIT_FAILURE
        }
    }
}
