use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use torelli::report::{exit, run, Command, JobConfig};
use torelli::text::parse_rational;

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum Subcommand {
    Decompose,
    Forms,
    Johnson,
    Act,
    Audit,
    Invariants,
}

/// Exact computations with Johnson elements and the Torelli action on the
/// invariant H3 of three-point configuration spaces of surfaces.
#[derive(Debug, Parser)]
#[command(name = "torelli", version)]
struct Cli {
    #[arg(value_enum)]
    command: Subcommand,
    /// Job configuration file (TOML).
    #[arg(long)]
    config: Option<PathBuf>,
    /// Built-in fixture, e.g. paper-figure-1.
    #[arg(long)]
    fixture: Option<String>,
    #[arg(long)]
    genus: Option<usize>,
    /// Seed for the randomized invariants suite.
    #[arg(long)]
    seed: Option<u64>,
    #[arg(long, allow_hyphen_values = true)]
    kappa1: Option<String>,
    #[arg(long, allow_hyphen_values = true)]
    kappa2: Option<String>,
    /// Command argument as key=value, e.g. --arg "top=a2^b1^a3".
    #[arg(long = "arg", value_name = "KEY=VALUE")]
    args: Vec<String>,
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
}

impl Subcommand {
    fn command(self) -> Command {
        match self {
            Subcommand::Decompose => Command::Decompose,
            Subcommand::Forms => Command::Forms,
            Subcommand::Johnson => Command::Johnson,
            Subcommand::Act => Command::Act,
            Subcommand::Audit => Command::Audit,
            Subcommand::Invariants => Command::Invariants,
        }
    }
}

fn build_config(cli: &Cli) -> torelli::Result<JobConfig> {
    let mut config = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| torelli::Error::Config {
                location: path.display().to_string(),
                message: e.to_string(),
            })?;
            JobConfig::from_toml_str(&text)?
        }
        None => JobConfig::default(),
    };
    config.command = Some(cli.command.command().name().to_string());
    if cli.fixture.is_some() {
        config.fixture = cli.fixture.clone();
    }
    if cli.genus.is_some() {
        config.genus = cli.genus;
    }
    if cli.seed.is_some() {
        config.seed = cli.seed;
    }
    for (flag, value, slot) in [
        ("--kappa1", &cli.kappa1, &mut config.params.kappa1),
        ("--kappa2", &cli.kappa2, &mut config.params.kappa2),
    ] {
        if let Some(v) = value {
            parse_rational(v).map_err(|e| torelli::Error::Config {
                location: flag.into(),
                message: e.to_string(),
            })?;
            *slot = Some(torelli::report::config::Coef::Text(v.clone()));
        }
    }
    for kv in &cli.args {
        let (k, v) = kv.split_once('=').ok_or_else(|| torelli::Error::Config {
            location: "--arg".into(),
            message: format!("expected KEY=VALUE, got {kv:?}"),
        })?;
        config.set_arg(k.trim(), v.trim());
    }
    Ok(config)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let report = match build_config(&cli).and_then(|c| run(&c)) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(exit::INPUT_ERROR as u8);
        }
    };
    match cli.format {
        Format::Text => print!("{}", report.to_text()),
        Format::Json => print!("{}", report.to_json()),
    }
    if report.all_pass() {
        ExitCode::from(exit::OK as u8)
    } else {
        for c in report.failed() {
            eprintln!("identity failed: {}", c.identity);
        }
        ExitCode::from(exit::IDENTITY_FAILURE as u8)
    }
}
