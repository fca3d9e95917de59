mod args;
mod run;

use std::io::Write;
use std::process::ExitCode;
use std::time::Instant;

use clap::Parser;
use serde_json::{json, Map, Value};

use args::Cli;
use run::{dispatch, Exit, Inputs};

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { Exit::Input as u8 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let start = Instant::now();
    let mut inputs = Inputs::default();
    let (result, exit, oracle_diff, summary) = match dispatch(&cli.command, &cli.global, &mut inputs) {
        Ok(o) => (o.result, o.exit, o.oracle_diff, o.summary),
        Err(f) => (
            json!({"error": {"kind": f.kind(), "message": f.to_string()}}),
            f.exit(),
            None,
            format!("error: {f}"),
        ),
    };
    let elapsed = start.elapsed();

    let mut canonical = Map::new();
    canonical.insert("command".into(), json!(&argv[1..]));
    canonical.insert("input_digests".into(), json!(inputs.digests));
    canonical.insert("result".into(), result);
    canonical.insert("exit_code".into(), json!(exit as u8));
    if let Some(d) = oracle_diff {
        canonical.insert("oracle_diff".into(), d);
    }
    if exit == Exit::Assertion {
        canonical.insert("reproduction".into(), json!({"argv": &argv[1..], "inputs": inputs.values}));
    }
    let report = json!({
        "canonical": Value::Object(canonical),
        "timings": {"total_ms": elapsed.as_secs_f64() * 1e3},
    });
    let text = serde_json::to_string_pretty(&report).expect("JSON values serialize");
    let _ = writeln!(std::io::stdout().lock(), "{text}");
    if !cli.global.json_only {
        eprintln!("{summary}");
    }
    ExitCode::from(exit as u8)
}
