use std::ffi::OsString;
use std::path::PathBuf;

use clap::parser::ValueSource;
use clap::{ArgMatches, CommandFactory};
use serde_json::Value;

use crate::args::Cli;
use crate::error::{invalid, CliError, CliResult};

fn explicit(m: &ArgMatches, id: &str) -> bool {
    m.try_contains_id(id).unwrap_or(false) && m.value_source(id) == Some(ValueSource::CommandLine)
}

/// Appends flags from the `--config` file for every option not given on the
/// command line. Returns `raw` unchanged when no config file is named.
pub fn apply_config(raw: Vec<OsString>, matches: &ArgMatches) -> CliResult<Vec<OsString>> {
    let Some(path) = matches.get_one::<PathBuf>("config") else {
        return Ok(raw);
    };
    let text = std::fs::read_to_string(path).map_err(|source| CliError::Io {
        path: path.clone(),
        source,
    })?;
    let table: serde_json::Map<String, Value> =
        serde_json::from_str(&text).map_err(|e| invalid(format!("{}: {e}", path.display())))?;

    let (name, sub) = matches.subcommand().expect("subcommand is required");
    let root = Cli::command();
    let cmd = root
        .find_subcommand(name)
        .expect("parsed subcommand exists");

    let mut out = raw;
    for (key, value) in &table {
        let id = key.replace('-', "_");
        if id == "config" {
            return Err(invalid("config files cannot name another config file"));
        }
        let arg = cmd
            .get_arguments()
            .chain(root.get_arguments())
            .find(|a| a.get_id() == id.as_str())
            .ok_or_else(|| invalid(format!("unknown config key '{key}' for {name}")))?;
        if explicit(sub, &id) || explicit(matches, &id) {
            continue;
        }
        let rival = match id.as_str() {
            "system" => Some("ifs"),
            "ifs" => Some("system"),
            _ => None,
        };
        if rival.is_some_and(|r| explicit(sub, r)) {
            continue;
        }
        let long = arg.get_long().expect("all options are long flags");
        if !arg.get_action().takes_values() {
            match value {
                Value::Bool(true) => out.push(format!("--{long}").into()),
                Value::Bool(false) => {}
                _ => return Err(invalid(format!("config key '{key}' must be true or false"))),
            }
            continue;
        }
        let text = match value {
            Value::String(s) => s.clone(),
            Value::Number(n) => n.to_string(),
            Value::Bool(b) => b.to_string(),
            _ => {
                return Err(invalid(format!(
                    "config key '{key}' must be a string or number"
                )))
            }
        };
        out.push(format!("--{long}={text}").into());
    }
    Ok(out)
}
