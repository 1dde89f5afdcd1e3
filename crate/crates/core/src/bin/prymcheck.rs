use std::path::PathBuf;
use std::process::ExitCode;
use std::time::{SystemTime, UNIX_EPOCH};

use clap::{builder::PossibleValuesParser, Parser, ValueEnum};
use prymcheck::ledger::Mode;
use prymcheck::report::{run_subcommand, ConfigDocument, Metadata, RunFlags, SUBCOMMANDS};

const INPUT_ERROR: u8 = 3;

#[derive(Clone, Copy, Debug, ValueEnum)]
enum CliMode {
    Paper,
    Derived,
}

/// Exact checks of invariant rings, quotient singularities, enumerative counts
/// and Euler characteristic ledgers.
#[derive(Debug, Parser)]
#[command(name = "prymcheck", version)]
struct Cli {
    #[arg(value_parser = PossibleValuesParser::new(SUBCOMMANDS))]
    subcommand: String,

    /// TOML configuration; the bundled suite is used when absent.
    #[arg(long)]
    config: Option<PathBuf>,

    #[arg(long, value_enum)]
    mode: Option<CliMode>,

    /// Exit nonzero on failures (2) and discrepancies (1).
    #[arg(long)]
    strict: bool,

    /// Also write the report as JSON.
    #[arg(long)]
    json: Option<PathBuf>,

    /// Keep only checks whose name contains this string.
    #[arg(long)]
    check: Option<String>,

    /// Add a timestamped metadata block to the JSON output.
    #[arg(long)]
    metadata: bool,

    /// Suppress the text report.
    #[arg(long, short)]
    quiet: bool,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(INPUT_ERROR) } else { ExitCode::SUCCESS };
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(msg) => {
            eprintln!("prymcheck: {msg}");
            ExitCode::from(INPUT_ERROR)
        }
    }
}

fn run(cli: &Cli) -> Result<u8, String> {
    let (doc, source) = match &cli.config {
        Some(path) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            (ConfigDocument::from_toml(&text).map_err(|e| e.to_string())?, path.display().to_string())
        }
        None => (ConfigDocument::builtin_suite(), "built-in".to_string()),
    };
    let flags = RunFlags {
        mode: cli.mode.map(|m| match m {
            CliMode::Paper => Mode::Paper,
            CliMode::Derived => Mode::Derived,
        }),
        strict: cli.strict,
        check: cli.check.clone(),
    };
    let mut report = run_subcommand(&cli.subcommand, &doc, &flags).map_err(|e| e.to_string())?;
    if !cli.quiet {
        print!("{}", report.render_text());
    }
    if let Some(path) = &cli.json {
        let body = if cli.metadata {
            let now = SystemTime::now().duration_since(UNIX_EPOCH).map(|d| d.as_secs()).unwrap_or(0);
            report.metadata = Some(Metadata { generated_at_unix: now, config_source: source });
            report.to_json()
        } else {
            report.canonical_json()
        };
        std::fs::write(path, body).map_err(|e| format!("{}: {e}", path.display()))?;
    }
    Ok(report.exit_code(cli.strict) as u8)
}
