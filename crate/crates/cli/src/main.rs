mod error;
mod job;
mod report;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;

use error::CliError;
use job::JobSpec;

/// Functional Čech (co)homology of spaces presented by finite cover systems.
#[derive(Debug, Parser)]
#[command(name = "funcech", version)]
struct Args {
    /// JSON job file.
    input: Option<PathBuf>,

    /// Print the machine-readable report instead of text.
    #[arg(long)]
    json: bool,

    /// Degree range `a..b`, inclusive.
    #[arg(long, value_parser = parse_degrees)]
    degrees: Option<(usize, usize)>,

    /// Number of trailing isomorphisms needed to call a limit stabilized.
    #[arg(long)]
    window: Option<usize>,

    /// Run every applicable request on a bundled fixture.
    #[arg(long, conflicts_with = "input")]
    fixture: Option<String>,

    /// Chain depth for `--fixture`.
    #[arg(long, requires = "fixture")]
    depth: Option<usize>,

    /// List the bundled fixtures and exit.
    #[arg(long)]
    list_fixtures: bool,
}

fn parse_degrees(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s
        .split_once("..")
        .ok_or_else(|| format!("expected `a..b`, got `{s}`"))?;
    let a = a.trim().parse().map_err(|_| format!("bad lower degree in `{s}`"))?;
    let b = b.trim().parse().map_err(|_| format!("bad upper degree in `{s}`"))?;
    if a > b {
        return Err(format!("empty degree range `{s}`"));
    }
    Ok((a, b))
}

fn load(args: &Args) -> Result<JobSpec, CliError> {
    let mut job = match (&args.fixture, &args.input) {
        (Some(name), _) => JobSpec::for_fixture(name)?,
        (None, Some(path)) => JobSpec::read(path)?,
        (None, None) => return Err(CliError::Input("give a job file or --fixture <name>".into())),
    };
    if let (Some(d), job::ChainSpec::Fixture { depth, .. }) = (args.depth, &mut job.cover_chain) {
        *depth = Some(d);
    }
    if let Some((a, b)) = args.degrees {
        job.options.degrees = Some([a, b]);
    }
    if let Some(w) = args.window {
        job.options.window = Some(w);
    }
    Ok(job)
}

/// Writes to standard output, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn main() -> ExitCode {
    let args = Args::parse();
    if args.list_fixtures {
        let entries = report::list_fixtures();
        if args.json {
            emit(&(serde_json::to_string_pretty(&entries).expect("serializable") + "\n"));
        } else {
            emit(&report::fixtures_text(&entries));
        }
        return ExitCode::SUCCESS;
    }
    let start = Instant::now();
    let outcome = load(&args).and_then(|job| report::run(&job));
    match outcome {
        Ok(r) => {
            if args.json {
                emit(&(serde_json::to_string_pretty(&r).expect("serializable") + "\n"));
            } else {
                emit(&r.to_text());
                emit(&format!("time: {} ms\n", start.elapsed().as_millis()));
            }
            if r.passed() {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}
