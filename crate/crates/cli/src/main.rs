//! `cyclo-schur`: batch driver for enumeration and verification jobs.
//!
//! Exit codes: 0 success, 1 a verification failed, 2 invalid
//! configuration, 3 scale limit exceeded, 4 internal or I/O error.

mod commands;
mod output;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use cyclo_schur::combin::HookProfile;
use cyclo_schur::hecke::DEFAULT_DIM_LIMIT;
use cyclo_schur::supermod::DEFAULT_MODULE_LIMIT;

use output::Format;

/// Directory that receives a copy of every rendered artifact.
pub const CACHE_DIR_VAR: &str = "CYCLO_SCHUR_CACHE_DIR";

#[derive(Parser)]
#[command(name = "cyclo-schur", version, about = "Cyclotomic Hecke algebras, permutation supermodules and q-Schur superalgebras")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "text")]
    format: Format,
    /// Largest allowed dim H = m^n n!.
    #[arg(long, global = true, default_value_t = DEFAULT_DIM_LIMIT)]
    max_dim_hecke: usize,
    /// Largest allowed total rank of the permutation supermodules.
    #[arg(long, global = true, default_value_t = DEFAULT_MODULE_LIMIT)]
    max_dim_module: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Clone)]
pub struct ProfileArgs {
    /// Number of components; must match the lengths of --bk and --bl.
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: usize,
    /// Even hook widths k_1,…,k_m.
    #[arg(long, value_delimiter = ',', required = true)]
    bk: Vec<usize>,
    /// Odd hook widths l_1,…,l_m.
    #[arg(long, value_delimiter = ',', required = true)]
    bl: Vec<usize>,
    /// Restrict to these weights, e.g. `((1);(0))|((1);(0))`. Repeatable;
    /// all weights when absent.
    #[arg(long = "weight")]
    weights: Vec<String>,
}

impl ProfileArgs {
    pub fn profile(&self) -> Result<HookProfile, CliError> {
        let p = HookProfile::new(self.bk.clone(), self.bl.clone())?;
        if let Some(m) = self.m {
            if m != p.m() {
                return Err(CliError::Config(format!("--m {m} does not match {} components in --bk/--bl", p.m())));
            }
        }
        if self.n == 0 {
            return Err(CliError::Config("--n must be positive".into()));
        }
        Ok(p)
    }
}

#[derive(Subcommand)]
enum Command {
    /// List the hook multipartitions of n for a profile.
    Hooks(ProfileArgs),
    /// Dimension of H(m, n), checked by closing the normal form under the generators.
    DimHecke {
        #[arg(long)]
        m: usize,
        #[arg(long)]
        n: usize,
    },
    /// Per-weight data of the permutation supermodules.
    Supermod(ProfileArgs),
    /// The q-Schur superalgebra.
    #[command(subcommand)]
    Schur(SchurCommand),
    /// Run every verifier for one configuration.
    VerifyAll(ProfileArgs),
    /// Compare the worked examples with their golden files.
    Golden,
}

#[derive(Subcommand)]
enum SchurCommand {
    /// Dimension, basis rank and per-shape counts; simple dimensions with --spec.
    Dims {
        #[command(flatten)]
        profile: ProfileArgs,
        /// Specialization, e.g. `q=1,Q=1,-1` or `generic:SEED`.
        #[arg(long)]
        spec: Option<String>,
    },
    /// Gram matrix of one Weyl module.
    Gram {
        #[command(flatten)]
        profile: ProfileArgs,
        /// Shape, e.g. `((1);(1))`.
        #[arg(long)]
        shape: String,
        #[arg(long)]
        spec: Option<String>,
    },
    /// Check the cellular basis axioms on all composable products.
    VerifyCellular {
        #[command(flatten)]
        profile: ProfileArgs,
    },
    /// Double centralizer check at a specialization.
    VerifyDuality {
        #[command(flatten)]
        profile: ProfileArgs,
        #[arg(long, default_value = "generic")]
        spec: String,
    },
}

#[derive(Debug)]
pub enum CliError {
    Config(String),
    Scale(String),
    Internal(String),
}

impl From<cyclo_schur::Error> for CliError {
    fn from(e: cyclo_schur::Error) -> Self {
        use cyclo_schur::Error as E;
        match e {
            E::Parse(_) | E::InvalidTarget(_) | E::InvalidInput(_) => CliError::Config(e.to_string()),
            E::ScaleLimit { .. } => CliError::Scale(e.to_string()),
            E::NotMember | E::Internal(_) => CliError::Internal(e.to_string()),
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Config(_) => 2,
            CliError::Scale(_) => 3,
            CliError::Internal(_) => 4,
        }
    }
}

/// Limits shared by every command.
#[derive(Clone, Copy)]
pub struct Limits {
    pub hecke: usize,
    pub module: usize,
}

fn artifact_name() -> String {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let raw = args.join("_");
    raw.chars().map(|c| if c.is_ascii_alphanumeric() || "-.=".contains(c) { c } else { '_' }).collect()
}

fn write_artifact(dir: &PathBuf, body: &str, format: Format) -> Result<(), CliError> {
    std::fs::create_dir_all(dir).map_err(|e| CliError::Internal(format!("{}: {e}", dir.display())))?;
    let path = dir.join(format!("{}.{}", artifact_name(), format.extension()));
    std::fs::write(&path, body).map_err(|e| CliError::Internal(format!("{}: {e}", path.display())))
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let limits = Limits { hecke: cli.max_dim_hecke, module: cli.max_dim_module };
    let report = match &cli.command {
        Command::Hooks(p) => commands::hooks(p)?,
        Command::DimHecke { m, n } => commands::dim_hecke(*m, *n, limits)?,
        Command::Supermod(p) => commands::supermod(p, limits)?,
        Command::Schur(SchurCommand::Dims { profile, spec }) => commands::schur_dims(profile, spec.as_deref(), limits)?,
        Command::Schur(SchurCommand::Gram { profile, shape, spec }) => commands::schur_gram(profile, shape, spec.as_deref(), limits)?,
        Command::Schur(SchurCommand::VerifyCellular { profile }) => commands::verify_cellular(profile, limits)?,
        Command::Schur(SchurCommand::VerifyDuality { profile, spec }) => commands::verify_duality(profile, spec, limits)?,
        Command::VerifyAll(p) => commands::verify_all(p, limits)?,
        Command::Golden => commands::golden(),
    };
    let body = report.render(cli.format).map_err(CliError::Internal)?;
    print!("{body}");
    if let Some(dir) = std::env::var_os(CACHE_DIR_VAR) {
        write_artifact(&PathBuf::from(dir), &body, cli.format)?;
    }
    Ok(report.ok)
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            let (CliError::Config(msg) | CliError::Scale(msg) | CliError::Internal(msg)) = &e;
            eprintln!("error: {msg}");
            ExitCode::from(e.exit_code())
        }
    }
}
