use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use multiheight_cli::error::JobError;
use multiheight_cli::fixtures;
use multiheight_cli::manifest::{Command as JobCommand, Job, Manifest};
use multiheight_cli::run::{run_manifest, Mode, RunConfig};

const MANIFEST_SCHEMA: &str = include_str!("../schema/manifest.schema.json");
const REPORT_SCHEMA: &str = include_str!("../schema/report.schema.json");

#[derive(Parser, Debug)]
#[command(name = "multiheight", version, about = "Degree and height bounds for polynomial systems")]
struct Cli {
    /// Job manifest (JSON).
    #[arg(long, global = true)]
    manifest: Option<PathBuf>,
    /// Seed for random linear forms; MULTIHEIGHT_SEED takes precedence.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[arg(long, global = true, value_enum, default_value_t = ModeArg::RandomU)]
    mode: ModeArg,
    /// Relative tolerance for floating-point comparisons.
    #[arg(long, global = true, default_value_t = 1e-9)]
    tol: f64,
    /// Write the report here instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Omit wall-clock timings so reports are byte-for-byte reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
    #[command(subcommand)]
    command: Option<Sub>,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModeArg {
    SymbolicU,
    RandomU,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Subcommand, Debug)]
enum Sub {
    /// Run every job in the manifest.
    Run,
    /// Run the built-in worked examples and compare with their expected values.
    VerifyExamples,
    /// Print the built-in examples as a manifest.
    Fixtures,
    /// Print a JSON schema.
    Schema {
        #[arg(value_enum, default_value_t = SchemaKind::Manifest)]
        which: SchemaKind,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum SchemaKind {
    Manifest,
    Report,
}

fn emit(cli: &Cli, text: &str) -> Result<(), String> {
    match &cli.out {
        Some(p) => std::fs::write(p, text).map_err(|e| format!("cannot write {}: {e}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn fail(cli: &Cli, e: &JobError) -> ExitCode {
    let body = json!({"error": {"kind": e.kind(), "message": e.to_string()}});
    if cli.format == Format::Json {
        println!("{}", serde_json::to_string_pretty(&body).expect("serializable"));
    } else {
        eprintln!("multiheight: {e}");
    }
    ExitCode::from(e.exit_code() as u8)
}

fn seed(cli: &Cli) -> Result<u64, JobError> {
    match std::env::var("MULTIHEIGHT_SEED") {
        Ok(s) if !s.trim().is_empty() => {
            s.trim().parse().map_err(|_| JobError::Input(format!("MULTIHEIGHT_SEED: cannot parse `{s}`")))
        }
        _ => Ok(cli.seed),
    }
}

fn load(path: &PathBuf) -> Result<Vec<Job>, JobError> {
    let text = std::fs::read_to_string(path).map_err(|e| JobError::Input(format!("{}: {e}", path.display())))?;
    Ok(Manifest::from_json(&text)?.jobs)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let jobs = match &cli.command {
        Some(Sub::Schema { which }) => {
            let text = match which {
                SchemaKind::Manifest => MANIFEST_SCHEMA,
                SchemaKind::Report => REPORT_SCHEMA,
            };
            return finish(&cli, text, 0);
        }
        Some(Sub::Fixtures) => {
            return finish(&cli, fixtures::GOLDEN, 0);
        }
        Some(Sub::VerifyExamples) => Ok(vec![verify_job()]),
        Some(Sub::Run) | None => match &cli.manifest {
            Some(p) => load(p),
            None => Err(JobError::Input("no manifest given (use --manifest PATH)".into())),
        },
    };
    let cfg = match (jobs, seed(&cli)) {
        (Ok(jobs), Ok(seed)) => {
            let mode = match cli.mode {
                ModeArg::SymbolicU => Mode::SymbolicU,
                ModeArg::RandomU => Mode::RandomU,
            };
            (jobs, RunConfig { seed, mode, tol: cli.tol, timing: !cli.no_timing })
        }
        (Err(e), _) | (_, Err(e)) => return fail(&cli, &e),
    };
    let (jobs, cfg) = cfg;
    let report = run_manifest(&jobs, &cfg);
    let text = match cli.format {
        Format::Json => report.to_json(),
        Format::Text => report.to_text(),
    };
    finish(&cli, &text, report.summary.exit_code)
}

fn finish(cli: &Cli, text: &str, code: i32) -> ExitCode {
    if let Err(e) = emit(cli, text) {
        eprintln!("multiheight: {e}");
        return ExitCode::from(2);
    }
    ExitCode::from(code as u8)
}

fn verify_job() -> Job {
    Job {
        name: "verify-examples".into(),
        command: JobCommand::VerifyExamples,
        note: None,
        variables: Vec::new(),
        ideal: Vec::new(),
        polys: Vec::new(),
        map: Vec::new(),
        g: None,
        options: Default::default(),
        invariants: None,
        expect: Vec::new(),
    }
}
