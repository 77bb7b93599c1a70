//! `gkz`: JSON in, JSON out.
//!
//! Every operation reads one instance (a JSON object) from a file or standard
//! input and prints one report. `catalog` reads JSON lines, each naming its
//! operation under `"command"`, and prints one report per line in input order.

mod instance;
mod report;
mod verify;

use std::io::{self, BufWriter, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, ValueEnum};
use gkz_core::presentation::Mode;
use gkz_core::GkzError;
use rayon::prelude::*;
use serde_json::{json, Value};

use instance::{Instance, Options};
use report::{error_report, Op};

#[derive(Parser, Debug)]
#[command(
    name = "gkz",
    version,
    about = "Exact face combinatorics of A-hypergeometric systems"
)]
struct Cli {
    #[arg(value_enum)]
    command: Op,
    /// Instance file; JSON lines for `catalog`. Reads standard input when omitted.
    input: Option<PathBuf>,
    /// Support condition used by `restrict`.
    #[arg(long, value_parser = ["default", "as-printed"], default_value = "default")]
    mode: String,
    /// Cap on S-pairs processed by the Gröbner engine.
    #[arg(long, default_value_t = 10_000)]
    max_spairs: usize,
    /// Cap on Gröbner engine wall time, in seconds.
    #[arg(long, default_value_t = 30)]
    time_cap: u64,
    /// Hilbert basis candidates may have degree at most this multiple of the largest column degree.
    #[arg(long, default_value_t = 10)]
    hilbert_degree_cap: u32,
    /// Worker threads for `catalog`.
    #[arg(long, default_value_t = 1)]
    parallel: usize,
}

impl Cli {
    fn options(&self) -> Options {
        let mut o = Options {
            mode: self
                .mode
                .parse::<Mode>()
                .expect("clap restricts the values"),
            ..Options::default()
        };
        o.limits.max_spairs = self.max_spairs;
        o.limits.time_cap = Duration::from_secs(self.time_cap);
        o.normality.degree_cap_factor = self.hilbert_degree_cap;
        o
    }
}

fn read_input(path: &Option<PathBuf>) -> Result<String, GkzError> {
    let mut text = String::new();
    match path {
        Some(p) => {
            text = std::fs::read_to_string(p)
                .map_err(|e| GkzError::InvalidInput(format!("{}: {e}", p.display())))?
        }
        None => {
            io::stdin()
                .read_to_string(&mut text)
                .map_err(|e| GkzError::InvalidInput(format!("standard input: {e}")))?;
        }
    }
    Ok(text)
}

fn parse_json(text: &str) -> Result<Value, GkzError> {
    serde_json::from_str(text).map_err(|e| GkzError::InvalidInput(format!("malformed JSON: {e}")))
}

/// A report, or the error that prevented it, plus the process status it implies.
fn run_one(op: Op, value: &Value, defaults: &Options) -> (Value, i32) {
    let outcome = Instance::from_json(value, defaults).and_then(|inst| report::run(op, &inst));
    match outcome {
        Ok(v) => {
            let status = if op == Op::Verify && v["passed"] == json!(false) {
                4
            } else {
                0
            };
            (v, status)
        }
        Err(e) => (error_report(&e), e.exit_code()),
    }
}

fn catalog_line(number: usize, line: &str, defaults: &Options) -> Value {
    let mut value = match parse_json(line) {
        Ok(v) => v,
        Err(e) => return json!({ "line": number, "error": error_report(&e)["error"] }),
    };
    let command = value.as_object_mut().and_then(|m| m.remove("command"));
    let op = match command
        .as_ref()
        .and_then(Value::as_str)
        .map(|s| Op::from_str(s, false))
    {
        Some(Ok(op)) if op != Op::Catalog => op,
        _ => {
            let e = GkzError::InvalidInput(format!(
                "line needs a \"command\" naming an operation, found {command:?}"
            ));
            return json!({ "line": number, "error": error_report(&e)["error"] });
        }
    };
    let (report, _) = run_one(op, &value, defaults);
    let mut out = json!({ "line": number, "command": op.name() });
    match report.get("error") {
        Some(e) => out["error"] = e.clone(),
        None => out["report"] = report,
    }
    out
}

fn catalog(text: &str, defaults: &Options, parallel: usize) -> Result<(), GkzError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let emit = |out: &mut BufWriter<_>, v: &Value| -> Result<(), GkzError> {
        match writeln!(out, "{v}").and_then(|()| out.flush()) {
            Err(e) if e.kind() != io::ErrorKind::BrokenPipe => {
                Err(GkzError::Internal(format!("writing output: {e}")))
            }
            _ => Ok(()),
        }
    };
    if parallel <= 1 {
        for (number, line) in lines {
            emit(&mut out, &catalog_line(number, line, defaults))?;
        }
        return Ok(());
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(parallel)
        .build()
        .map_err(|e| GkzError::Internal(format!("thread pool: {e}")))?;
    let reports: Vec<Value> = pool.install(|| {
        lines
            .par_iter()
            .map(|&(number, line)| catalog_line(number, line, defaults))
            .collect()
    });
    for r in &reports {
        emit(&mut out, r)?;
    }
    Ok(())
}

/// Prints one compact JSON line; a closed pipe is not an error.
fn print(v: &Value) {
    let mut out = io::stdout().lock();
    let _ = writeln!(out, "{v}").and_then(|()| out.flush());
}

fn fail(e: &GkzError) -> ExitCode {
    eprintln!("gkz: {e}");
    print(&error_report(e));
    ExitCode::from(e.exit_code() as u8)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let defaults = cli.options();
    let text = match read_input(&cli.input) {
        Ok(t) => t,
        Err(e) => return fail(&e),
    };
    if cli.command == Op::Catalog {
        return match catalog(&text, &defaults, cli.parallel) {
            Ok(()) => ExitCode::SUCCESS,
            Err(e) => fail(&e),
        };
    }
    let value = match parse_json(&text) {
        Ok(v) => v,
        Err(e) => return fail(&e),
    };
    let (report, status) = run_one(cli.command, &value, &defaults);
    if let Some(e) = report.get("error") {
        eprintln!("gkz: {}", e["message"].as_str().unwrap_or_default());
    }
    print(&report);
    ExitCode::from(status as u8)
}
