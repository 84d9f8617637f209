//! Command-line front end over the `ordspace` library. `run` does all the
//! work and returns the rendered output with its exit code, so tests can
//! drive it without spawning a process.

mod args;
mod commands;
mod render;

use std::path::Path;

pub use args::{BudgetArgs, Cli, Command, FilterArg, Format, Global};
use ordspace::Error;
use serde_json::{json, Value};

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

pub const EXIT_OK: i32 = 0;
pub const EXIT_NEGATIVE: i32 = 1;
pub const EXIT_INPUT: i32 = 2;
pub const EXIT_GUARD: i32 = 3;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

/// What a subcommand computed, in every format it supports.
pub(crate) struct Response {
    pub negative: bool,
    pub text: String,
    pub json: Value,
    pub dot: Option<String>,
}

#[derive(Debug)]
pub(crate) enum Failure {
    Input(String),
    Guard(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::SizeLimit { .. } => Failure::Guard(e.to_string()),
            _ => Failure::Input(e.to_string()),
        }
    }
}

pub(crate) fn at(path: &Path, e: Error) -> Failure {
    match Failure::from(e) {
        Failure::Input(m) => Failure::Input(format!("{}: {m}", path.display())),
        g => g,
    }
}

pub fn run(cli: &Cli) -> Output {
    let result = match cli.global.jobs {
        Some(j) => match rayon::ThreadPoolBuilder::new().num_threads(j.max(1)).build() {
            Ok(pool) => pool.install(|| commands::dispatch(cli)),
            Err(e) => Err(Failure::Input(format!("cannot start {j} workers: {e}"))),
        },
        None => commands::dispatch(cli),
    };
    let response = result.and_then(|r| {
        let wants_dot = cli.global.format == Format::Dot || matches!(cli.command, Command::Hasse { dot: true, .. });
        if wants_dot && r.dot.is_none() {
            return Err(Failure::Input("dot output is only available for `hasse`".into()));
        }
        Ok((r, wants_dot))
    });
    match response {
        Ok((r, true)) => Output {
            code: code_of(&r),
            stdout: r.dot.unwrap(),
            stderr: String::new(),
        },
        Ok((r, false)) => {
            let stdout = match cli.global.format {
                Format::Json => render::json_report(cli, r.json.clone()),
                _ => format!("{}{}", render::text_header(cli), r.text),
            };
            Output {
                code: code_of(&r),
                stdout,
                stderr: String::new(),
            }
        }
        Err(f) => {
            let (code, message) = match f {
                Failure::Input(m) => (EXIT_INPUT, m),
                Failure::Guard(m) => (EXIT_GUARD, m),
            };
            Output {
                code,
                stdout: String::new(),
                stderr: format!("error: {message}\n"),
            }
        }
    }
}

fn code_of(r: &Response) -> i32 {
    if r.negative {
        EXIT_NEGATIVE
    } else {
        EXIT_OK
    }
}

pub(crate) fn envelope(cli: &Cli, body: Value) -> Value {
    let mut out = json!({
        "tool": "ordspace",
        "version": VERSION,
        "seed": cli.global.seed,
        "command": commands::name(&cli.command),
    });
    if let (Value::Object(o), Value::Object(b)) = (&mut out, body) {
        o.extend(b);
    }
    out
}
