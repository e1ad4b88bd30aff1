//! Command-line front end for the `liyorke` library.

// `!(a > b)` is used on purpose so that NaN fails validation
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod args;
mod commands;
mod config;
pub mod error;
mod output;

use std::ffi::OsString;

use clap::{CommandFactory, FromArgMatches};

pub use args::Cli;
use args::Command;
pub use commands::Outcome;
pub use error::{CliError, CliResult};

/// Parses `argv`, runs the command and returns the process exit code.
pub fn run<I, S>(argv: I) -> u8
where
    I: IntoIterator<Item = S>,
    S: Into<OsString>,
{
    let raw: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match parse(raw) {
        Ok(cli) => cli,
        Err(Parse::Clap(e)) => {
            let _ = e.print();
            return e.exit_code() as u8;
        }
        Err(Parse::Cli(e)) => return report(e),
    };
    match execute(&cli) {
        Ok(()) => 0,
        Err(e) => report(e),
    }
}

fn report(e: CliError) -> u8 {
    eprintln!("error: {e}");
    e.exit_code()
}

enum Parse {
    Clap(clap::Error),
    Cli(CliError),
}

fn parse(raw: Vec<OsString>) -> Result<Cli, Parse> {
    let first = Cli::command()
        .try_get_matches_from(&raw)
        .map_err(Parse::Clap)?;
    let merged = config::apply_config(raw, &first).map_err(Parse::Cli)?;
    let matches = Cli::command()
        .try_get_matches_from(&merged)
        .map_err(Parse::Clap)?;
    Cli::from_arg_matches(&matches).map_err(Parse::Clap)
}

/// Runs the parsed command on a pool of `--threads` workers and writes its
/// output.
pub fn execute(cli: &Cli) -> CliResult<()> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cli.threads)
        .build()
        .map_err(|e| CliError::Invalid(e.to_string()))?;
    let (outcome, out) = pool.install(|| -> CliResult<_> {
        Ok(match &cli.command {
            Command::Dimension(a) => (commands::dimension(a)?, a.out.as_deref()),
            Command::Construct(a) => (commands::construct(a)?, a.out.as_deref()),
            Command::Verify(a) => (commands::verify(a)?, a.out.as_deref()),
            Command::Boxdim(a) => (commands::boxdim(a)?, a.out.as_deref()),
            Command::Sample(a) => (commands::sample(a)?, a.out.as_deref()),
        })
    })?;
    output::emit(out, &outcome.content)?;
    for line in &outcome.summary {
        eprintln!("{line}");
    }
    Ok(())
}
