use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use bicyclic::extension::{
    classify, equivalence_test, iso_test, split_test, validate_delta, ExtSpec,
};
use bicyclic::suite::{verify, RunConfig};
use bicyclic::{laurent_image, parse_element, to_matrix, Error};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

#[derive(Parser)]
#[command(
    name = "bicyclic",
    version,
    about = "Exact computations in k<x,y>/(yx - 1)"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Element arithmetic.
    #[command(subcommand)]
    Algebra(AlgebraCmd),
    /// Extensions of simple modules, read from JSON spec files.
    #[command(subcommand)]
    Ext(ExtCmd),
    /// Run the full verification suite.
    Verify(VerifyArgs),
}

#[derive(Subcommand)]
enum AlgebraCmd {
    /// Normal form.
    Nf {
        expr: String,
    },
    Mul {
        a: String,
        b: String,
    },
    /// The involution swapping x and y.
    Eta {
        expr: String,
    },
    /// Truncated matrix in the shift representation.
    Rep {
        #[arg(long, default_value_t = 4)]
        dim: usize,
        expr: String,
    },
    /// Image in k[t, t^-1].
    Laurent {
        expr: String,
    },
}

#[derive(Subcommand)]
enum ExtCmd {
    Validate { spec: PathBuf },
    Split { spec: PathBuf },
    Iso { a: PathBuf, b: PathBuf },
    Equiv { a: PathBuf, b: PathBuf },
    Classify { spec: PathBuf },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
    Dot,
}

#[derive(clap::Args)]
struct VerifyArgs {
    #[arg(long, default_value_t = 6, value_parser = clap::value_parser!(u32).range(1..))]
    max_degree: u32,
    #[arg(long, default_value_t = 6)]
    slack_cap: u32,
    #[arg(long, default_value_t = RunConfig::default().seed)]
    seed: u64,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// With `dot`, the link graph goes here and the report to stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

enum Failure {
    /// Bad input; exit code 2.
    Usage(String),
    /// Structured JSON already describing the problem; exit code 1.
    Reported(Value),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } | Error::Json(_) => Failure::Usage(e.to_string()),
            other => Failure::Reported(error_json(&other)),
        }
    }
}

fn error_json(e: &Error) -> Value {
    let body = match e {
        Error::IncompatibleDelta { index, residual } => json!({
            "kind": "IncompatibleDelta",
            "index": index,
            "residual": residual,
            "message": e.to_string(),
        }),
        Error::InvalidSpec(_) => json!({ "kind": "InvalidSpec", "message": e.to_string() }),
        Error::ShapeMismatch(_) => json!({ "kind": "ShapeMismatch", "message": e.to_string() }),
        _ => json!({ "kind": "Error", "message": e.to_string() }),
    };
    json!({ "error": body })
}

fn pretty(v: &Value) -> String {
    serde_json::to_string_pretty(v).expect("json value serializes")
}

fn read_spec(path: &Path) -> Result<ExtSpec, Failure> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write_file(path: &Path, contents: &str) -> Result<(), Failure> {
    std::fs::write(path, contents).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn run_algebra(cmd: AlgebraCmd) -> Result<String, Failure> {
    Ok(match cmd {
        AlgebraCmd::Nf { expr } => parse_element(&expr)?.to_string(),
        AlgebraCmd::Mul { a, b } => parse_element(&a)?.mul(&parse_element(&b)?).to_string(),
        AlgebraCmd::Eta { expr } => parse_element(&expr)?.involution().to_string(),
        AlgebraCmd::Rep { dim, expr } => to_matrix(&parse_element(&expr)?, dim)
            .map_err(|e| Failure::Usage(e.to_string()))?
            .to_string()
            .trim_end()
            .to_string(),
        AlgebraCmd::Laurent { expr } => laurent_image(&parse_element(&expr)?).to_string(),
    })
}

fn run_ext(cmd: ExtCmd) -> Result<String, Failure> {
    let out = match cmd {
        ExtCmd::Validate { spec } => {
            validate_delta(&read_spec(&spec)?)?;
            json!({ "valid": true })
        }
        ExtCmd::Split { spec } => {
            let spec = read_spec(&spec)?;
            validate_delta(&spec)?;
            split_test(&spec)?.to_json()
        }
        ExtCmd::Iso { a, b } => {
            let (a, b) = (read_spec(&a)?, read_spec(&b)?);
            validate_delta(&a)?;
            validate_delta(&b)?;
            iso_test(&a, &b)?.to_json()
        }
        ExtCmd::Equiv { a, b } => {
            let (a, b) = (read_spec(&a)?, read_spec(&b)?);
            validate_delta(&a)?;
            validate_delta(&b)?;
            json!({ "equivalent": equivalence_test(&a, &b)? })
        }
        ExtCmd::Classify { spec } => {
            let spec = read_spec(&spec)?;
            validate_delta(&spec)?;
            classify(&spec)?.to_json()
        }
    };
    Ok(pretty(&out))
}

fn run_verify(args: VerifyArgs) -> Result<(String, bool), Failure> {
    let config = RunConfig {
        max_degree: args.max_degree,
        slack_cap: args.slack_cap,
        seed: args.seed,
    };
    let suite = verify(&config)?;
    let failed = suite.report.has_fail();
    let stdout = match args.format {
        Format::Json | Format::Text => {
            let body = match args.format {
                Format::Text => suite.report.to_text(),
                _ => suite.report.to_json(),
            };
            match &args.out {
                Some(path) => {
                    write_file(path, &body)?;
                    let s = &suite.report.summary;
                    format!(
                        "{} claims: {} pass, {} fail, {} discrepancy",
                        s.total, s.pass, s.fail, s.discrepancy
                    )
                }
                None => body,
            }
        }
        Format::Dot => {
            let dot = suite.graph.as_ref().map(|g| g.to_dot()).unwrap_or_default();
            match &args.out {
                Some(path) => {
                    write_file(path, &dot)?;
                    suite.report.to_json()
                }
                None => dot,
            }
        }
    };
    Ok((stdout, failed))
}

/// Ignores a closed stdout, e.g. when piped into `head`.
fn emit(text: &str) {
    let _ = writeln!(std::io::stdout().lock(), "{text}");
}

/// Stdout text and exit code; usage errors go to stderr.
fn execute(command: Command) -> (Result<String, String>, u8) {
    let result = match command {
        Command::Algebra(cmd) => run_algebra(cmd).map(|s| (s, false)),
        Command::Ext(cmd) => run_ext(cmd).map(|s| (s, false)),
        Command::Verify(args) => run_verify(args),
    };
    match result {
        Ok((out, failed)) => (Ok(out.trim_end().to_string()), u8::from(failed)),
        Err(Failure::Usage(msg)) => (Err(msg), 2),
        Err(Failure::Reported(v)) => (Ok(pretty(&v)), 1),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (out, code) = execute(cli.command);
    match out {
        Ok(text) => emit(&text),
        Err(msg) => eprintln!("error: {msg}"),
    }
    ExitCode::from(code)
}
