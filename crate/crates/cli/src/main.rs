use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, ValueEnum};

use novikov_cli::{parse_grid, parse_problem, render_csv, render_human, run, Command, CommandError, Options};
use novikov_core::algebra::parse_rational;

const EXIT_VALIDATION: u8 = 2;
const EXIT_VERDICT: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Machine,
}

/// Twisted cohomology, jump loci and Morse-type inequalities for simplicial complexes.
#[derive(Parser, Debug)]
#[command(name = "novikov", version)]
struct Cli {
    /// betti, twisted, jumps, sample, equivariant, morse-check, double-check or report
    command: String,
    /// Problem document (JSON)
    input: PathBuf,
    /// Show only this degree in human output
    #[arg(long)]
    degree: Option<usize>,
    /// Restrict to one irreducible representation
    #[arg(long)]
    rep: Option<String>,
    /// Grid of s values: `a,b,c` or `start:stop:step`
    #[arg(long, allow_hyphen_values = true)]
    grid: Option<String>,
    /// Specialize the equivariant computation at this s
    #[arg(long, allow_hyphen_values = true)]
    at: Option<String>,
    #[arg(long, value_enum, default_value = "human")]
    format: Format,
}

fn usage(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(EXIT_USAGE) } else { ExitCode::SUCCESS };
        }
    };
    let command: Command = match cli.command.parse() {
        Ok(c) => c,
        Err(msg) => return usage(&msg),
    };
    let grid = match cli.grid.as_deref().map(parse_grid).transpose() {
        Ok(g) => g,
        Err(msg) => return usage(&format!("--grid: {msg}")),
    };
    let at = match cli.at.as_deref() {
        Some(t) => match parse_rational(t) {
            Some(q) => Some(q),
            None => return usage(&format!("--at: cannot read {t:?} as a rational number")),
        },
        None => None,
    };
    let text = match std::fs::read_to_string(&cli.input) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: {}: {e}", cli.input.display());
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    let doc = match parse_problem(&text) {
        Ok(d) => d,
        Err(errors) => {
            for e in errors {
                eprintln!("error: {e}");
            }
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    let opts = Options { rep: cli.rep, grid, at };
    let report = match run(command, &doc, &opts) {
        Ok(r) => r,
        Err(CommandError::Usage(msg)) if command == Command::Sample => return usage(&msg),
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_VALIDATION);
        }
    };
    let text = match (command, cli.format) {
        (Command::Sample, _) => render_csv(report.sample.as_deref().unwrap_or(&[])),
        (_, Format::Human) => render_human(&report, cli.degree),
        (_, Format::Machine) => serde_json::to_string_pretty(&report).expect("report serializes") + "\n",
    };
    // a closed pipe downstream is not an error of ours
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
    if command != Command::Report && !report.verdicts_hold() {
        return ExitCode::from(EXIT_VERDICT);
    }
    ExitCode::SUCCESS
}
