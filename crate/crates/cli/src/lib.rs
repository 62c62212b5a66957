//! The `tori` command line: catalog tables, field enumeration, identity
//! checks, Dirichlet series, torus counts and the acceptance runner.

pub mod acceptance;
mod commands;
pub mod config;
pub mod output;

use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};

use crate::config::{Config, FieldKind, GridSpec};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
    #[error("{0}")]
    Json(serde_json::Error),
    #[error("{0}")]
    Csv(#[from] csv::Error),
    #[error(transparent)]
    Import(#[from] fields::ImportError),
    #[error(transparent)]
    Census(#[from] census::CensusError),
    #[error(transparent)]
    Dirichlet(#[from] dirichlet::DirichletError),
    #[error("{0}")]
    Failed(String),
}

impl CliError {
    pub fn io(path: impl AsRef<Path>, source: std::io::Error) -> Self {
        CliError::Io { path: path.as_ref().display().to_string(), source }
    }

    fn kind(&self) -> &'static str {
        match self {
            CliError::Usage(_) => "usage",
            CliError::Io { .. } => "io",
            CliError::Json(_) => "json",
            CliError::Csv(_) => "csv",
            CliError::Import(_) => "import",
            CliError::Census(_) => "census",
            CliError::Dirichlet(_) => "dirichlet",
            CliError::Failed(_) => "failed",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            _ => 1,
        }
    }

    /// One-line JSON error record.
    pub fn record(&self) -> String {
        serde_json::json!({ "error": self.kind(), "message": self.to_string() }).to_string()
    }
}

#[derive(Debug, Parser)]
#[command(name = "tori", version, about = "Counting algebraic tori of rank 3 by conductor")]
struct Cli {
    #[command(flatten)]
    global: GlobalArgs,
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Args)]
struct GlobalArgs {
    /// `key=value` settings file; flags take precedence.
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,
    /// Size of the worker pool.
    #[arg(long, global = true, value_name = "N")]
    workers: Option<String>,
    /// Output file; standard output when absent.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,
    /// Enumeration bound, `kind=X` (kinds quad, c3, s3, c4) or a bare `X`
    /// for `fields enum`.
    #[arg(long = "bound", global = true, value_name = "[KIND=]X")]
    bounds: Vec<String>,
    /// Fit grid: `default`, `LO..HI` or a comma list. A bare `--grid` asks
    /// for the default.
    #[arg(long, global = true, num_args = 0..=1, default_missing_value = "default", value_name = "SPEC")]
    grid: Option<String>,
    /// Field table in the lmfdb-nf-v1 schema; repeatable.
    #[arg(long = "import", global = true, value_name = "PATH")]
    imports: Vec<PathBuf>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Catalog of finite subgroups of GL3(Z).
    Groups {
        #[command(subcommand)]
        action: GroupsAction,
    },
    /// Number field enumeration.
    Fields {
        #[command(subcommand)]
        action: FieldsAction,
    },
    /// Discriminant identity checks.
    Verify {
        #[command(subcommand)]
        action: VerifyAction,
    },
    /// Dirichlet series coefficients and partial-sum fits.
    Dirichlet {
        #[command(subcommand)]
        action: DirichletAction,
    },
    /// Torus counts by conductor.
    Count(CountArgs),
    /// Runs the acceptance criteria.
    Accept {
        /// Criteria 1, 2, 5 and 8 only.
        #[arg(long)]
        quick: bool,
    },
}

#[derive(Debug, Subcommand)]
enum GroupsAction {
    /// CSV `label,order,iso,a,b`, one row per nontrivial class.
    Table,
}

#[derive(Debug, Subcommand)]
enum FieldsAction {
    /// Fields of one kind up to the bound, as lmfdb-nf-v1 CSV.
    Enum {
        #[arg(long, value_parser = ["quad", "c3", "s3", "c4"])]
        kind: String,
    },
}

#[derive(Debug, Subcommand)]
enum VerifyAction {
    /// Checks an identity on every row of a bundle CSV.
    Identities {
        /// 22a, 22b, 22c, 22d, 3.2, 3.3, 3.4 or 3.5.
        #[arg(long)]
        lemma: String,
        /// CSV whose columns are the identity's role names.
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Same as `--out`.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Subcommand)]
enum DirichletAction {
    /// Coefficients of a named series up to N.
    Expand {
        /// g1, g2, g3, h, lemma42 or lemma25.
        #[arg(long)]
        series: String,
        #[arg(long = "N", value_name = "N")]
        n: String,
    },
    /// Exponent fit of the partial sums of a coefficient file.
    Fit {
        #[arg(long = "in", value_name = "PATH")]
        input: PathBuf,
        /// Same as `--out`.
        #[arg(long, value_name = "PATH")]
        report: Option<PathBuf>,
    },
}

#[derive(Debug, Args)]
struct CountArgs {
    /// Family label, e.g. `H_{4,e}`, `H_4_e` or `4e`.
    #[arg(long, conflicts_with = "all_implemented", required_unless_present = "all_implemented")]
    family: Option<String>,
    /// Every family with a counting bijection.
    #[arg(long)]
    all_implemented: bool,
    /// Largest conductor.
    #[arg(long = "X", value_name = "X")]
    x: Option<String>,
}

/// Settings after reading `--config` and applying flags over it.
fn resolve_config(g: &GlobalArgs, fields_kind: Option<FieldKind>) -> Result<Config, CliError> {
    let mut config = match &g.config {
        Some(path) => Config::load(path)?,
        None => Config::default(),
    };
    if let Some(w) = &g.workers {
        config.set("workers", w)?;
    }
    for b in &g.bounds {
        match (b.split_once('='), fields_kind) {
            (Some((kind, value)), _) => {
                let kind = FieldKind::parse(kind).ok_or_else(|| CliError::Usage(format!("unknown field kind {kind}")))?;
                config.set_bound(kind, value)?;
            }
            (None, Some(kind)) => config.set_bound(kind, b)?,
            (None, None) => return Err(CliError::Usage(format!("--bound {b}: give it as kind=X"))),
        }
    }
    if let Some(spec) = &g.grid {
        config.grid = Some(GridSpec::parse(spec)?);
    }
    config.imports.extend(g.imports.iter().cloned());
    Ok(config)
}

/// Parses `args` (without the program name) and runs the command. Returns
/// the process exit code; errors go to standard error as a JSON record.
pub fn run(args: &[String]) -> i32 {
    let argv = std::iter::once("tori".to_string()).chain(args.iter().cloned());
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return 0;
            }
            let err = CliError::Usage(e.render().to_string().trim().to_string());
            eprintln!("{}", err.record());
            return err.exit_code();
        }
    };
    match dispatch(cli, args) {
        Ok(()) => 0,
        Err(err) => {
            eprintln!("{}", err.record());
            err.exit_code()
        }
    }
}

fn dispatch(cli: Cli, args: &[String]) -> Result<(), CliError> {
    let fields_kind = match &cli.command {
        Command::Fields { action: FieldsAction::Enum { kind } } => FieldKind::parse(kind),
        _ => None,
    };
    let config = resolve_config(&cli.global, fields_kind)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| CliError::Failed(format!("worker pool: {e}")))?;
    let ctx = commands::Context::new(args, config, cli.global.out.clone());
    pool.install(|| match cli.command {
        Command::Groups { action: GroupsAction::Table } => commands::groups_table(&ctx),
        Command::Fields { action: FieldsAction::Enum { .. } } => {
            commands::fields_enum(&ctx, fields_kind.expect("checked by clap"))
        }
        Command::Verify { action: VerifyAction::Identities { lemma, input, report } } => {
            commands::verify_identities(&ctx.with_out(report), &lemma, &input)
        }
        Command::Dirichlet { action: DirichletAction::Expand { series, n } } => {
            commands::dirichlet_expand(&ctx, &series, config::parse_count(&n)?)
        }
        Command::Dirichlet { action: DirichletAction::Fit { input, report } } => {
            commands::dirichlet_fit(&ctx.with_out(report), &input)
        }
        Command::Count(c) => {
            let x = c.x.as_deref().map(config::parse_count).transpose()?;
            match c.family {
                Some(label) => commands::count_one(&ctx, &label, x),
                None => commands::count_all(&ctx, x),
            }
        }
        Command::Accept { quick } => commands::accept(&ctx, quick),
    })
}
