//! Corpus runner.
//!
//! Each `*.json` file in the directory is one case:
//!
//! ```json
//! { "args": ["gentle", "cycles", "@inputs/illustrative.quiver"],
//!   "exit": 0,
//!   "expect": { "cycles": [{ "display": "jfe" }, { "display": "kgh" }] } }
//! ```
//!
//! Arguments starting with `@` are paths relative to the case file. The
//! output must contain `expect`: object keys are matched recursively,
//! arrays element by element with equal length. On a nonzero `exit` the
//! structured diagnostic is matched instead.

use std::fs;
use std::path::Path;

use clap::Parser;
use serde::Deserialize;
use serde_json::{json, Value};

use crate::{execute, Cli, CliError, Output};

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct Case {
    #[serde(default)]
    description: String,
    args: Vec<String>,
    #[serde(default)]
    exit: i32,
    #[serde(default)]
    expect: Option<Value>,
}

enum Verdict {
    Pass,
    Fail(String),
    Error(String),
}

/// Whether `actual` contains everything in `expected`; on mismatch, the
/// JSON pointer of the first difference.
pub fn contains(actual: &Value, expected: &Value, at: &str) -> Result<(), String> {
    match (actual, expected) {
        (Value::Object(a), Value::Object(e)) => {
            for (k, v) in e {
                let here = format!("{at}/{k}");
                let got = a.get(k).ok_or_else(|| format!("{here}: missing"))?;
                contains(got, v, &here)?;
            }
            Ok(())
        }
        (Value::Array(a), Value::Array(e)) => {
            if a.len() != e.len() {
                return Err(format!("{at}: {} elements, expected {}", a.len(), e.len()));
            }
            for (k, (x, y)) in a.iter().zip(e).enumerate() {
                contains(x, y, &format!("{at}/{k}"))?;
            }
            Ok(())
        }
        (a, e) if a == e => Ok(()),
        (a, e) => Err(format!("{at}: got {a}, expected {e}")),
    }
}

fn run_case(path: &Path) -> Verdict {
    let text = match fs::read_to_string(path) {
        Ok(t) => t,
        Err(e) => return Verdict::Error(e.to_string()),
    };
    let case: Case = match serde_json::from_str(&text) {
        Ok(c) => c,
        Err(e) => return Verdict::Error(format!("bad case file: {e}")),
    };
    if case.args.first().map(String::as_str) == Some("corpus") {
        return Verdict::Error("cases may not run the corpus command".into());
    }
    let base = path.parent().unwrap_or(Path::new("."));
    let mut argv = vec!["singcat".to_string()];
    for a in &case.args {
        match a.strip_prefix('@') {
            Some(rel) => argv.push(base.join(rel).display().to_string()),
            None => argv.push(a.clone()),
        }
    }
    let (code, value) = match Cli::try_parse_from(&argv) {
        Err(e) => (2, json!({ "error": "usage", "message": e.to_string() })),
        Ok(cli) => match execute(&cli) {
            Ok(out) => (0, out.json),
            Err(e @ CliError::Io { .. }) => return Verdict::Error(e.to_string()),
            Err(e) => (1, e.to_json()),
        },
    };
    if code != case.exit {
        return Verdict::Fail(format!("exit {code}, expected {}: {value}", case.exit));
    }
    match contains(&value, case.expect.as_ref().unwrap_or(&json!({})), "") {
        Ok(()) => Verdict::Pass,
        Err(why) => Verdict::Fail(why),
    }
}

pub fn run(dir: &Path) -> Result<Output, CliError> {
    let entries = fs::read_dir(dir).map_err(|source| CliError::Io {
        path: dir.display().to_string(),
        source,
    })?;
    let mut files: Vec<_> = entries
        .filter_map(|e| e.ok().map(|e| e.path()))
        .filter(|p| p.extension().is_some_and(|x| x == "json"))
        .collect();
    files.sort();
    let (mut passed, mut failed, mut errors) = (0, 0, 0);
    let mut cases = Vec::new();
    let mut text = String::new();
    for f in &files {
        let name = f
            .file_stem()
            .unwrap_or_default()
            .to_string_lossy()
            .to_string();
        let description = fs::read_to_string(f)
            .ok()
            .and_then(|t| serde_json::from_str::<Case>(&t).ok())
            .map(|c| c.description)
            .unwrap_or_default();
        let (status, detail) = match run_case(f) {
            Verdict::Pass => {
                passed += 1;
                ("pass", String::new())
            }
            Verdict::Fail(d) => {
                failed += 1;
                ("fail", d)
            }
            Verdict::Error(d) => {
                errors += 1;
                ("error", d)
            }
        };
        text += &format!("{status:<5} {name}");
        if !detail.is_empty() {
            text += &format!(": {detail}");
        }
        text.push('\n');
        cases.push(json!({
            "case": name,
            "description": description,
            "status": status,
            "detail": detail,
        }));
    }
    text += &format!("{passed} passed, {failed} failed, {errors} errors\n");
    let mut out = Output::new(
        json!({
            "total": files.len(),
            "passed": passed,
            "failed": failed,
            "errors": errors,
            "cases": cases,
        }),
        text,
    );
    out.failed = failed + errors > 0;
    Ok(out)
}
