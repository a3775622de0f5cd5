//! Deterministic CSV and JSON rendering.
//!
//! CSV tables carry the exact header `m,n,count`, rows sorted ascending by
//! n then m, zero entries omitted, LF line endings. JSON output is a single
//! object `{schema_version, command, parameters, results}`; key order is
//! fixed and counts are emitted as (arbitrary-precision) JSON numbers, so
//! identical invocations produce byte-identical bytes.

use std::fmt::Write as _;
use std::fs;
use std::io::Write as _;
use std::path::Path;

use overrank_core::bivariate::RankTable;
use overrank_core::series::QSeries;
use overrank_core::verify::VerificationReport;
use overrank_core::BigInt;
use serde_json::{json, Map, Number, Value};

/// An exact integer as a JSON number of unlimited width.
fn integer(v: &BigInt) -> Value {
    Value::Number(Number::from_string_unchecked(v.to_string()))
}

pub fn table_csv(table: &RankTable) -> String {
    let mut out = String::from("m,n,count\n");
    for (m, n, count) in table.nonzero_entries() {
        writeln!(out, "{m},{n},{count}").expect("string write");
    }
    out
}

pub fn table_json(table: &RankTable) -> Value {
    let rows: Vec<Value> = table
        .nonzero_entries()
        .map(|(m, n, count)| json!({ "m": m, "n": n, "count": integer(count) }))
        .collect();
    json!({ "rows": rows })
}

pub fn series_csv(series: &QSeries) -> String {
    let rendered: Vec<String> = series.coeffs().iter().map(|c| c.to_string()).collect();
    rendered.join(",") + "\n"
}

pub fn series_json(series: &QSeries) -> Value {
    Value::Array(series.coeffs().iter().map(integer).collect())
}

fn violations_json(violations: &[overrank_core::verify::Violation]) -> Value {
    Value::Array(
        violations
            .iter()
            .map(|v| {
                json!({
                    "location": v.location,
                    "lhs": integer(&v.lhs),
                    "rhs": integer(&v.rhs),
                })
            })
            .collect(),
    )
}

pub fn report_json(report: &VerificationReport) -> Value {
    let mut bounds = Map::new();
    for (name, value) in &report.bounds {
        bounds.insert(name.clone(), json!(value));
    }
    json!({
        "check_id": report.check_id,
        "bounds": bounds,
        "passed": report.passed,
        "violations": violations_json(&report.violations),
        "expected_exceptions": violations_json(&report.expected_exceptions),
    })
}

pub fn reports_json(reports: &[VerificationReport]) -> Value {
    json!({
        "all_passed": reports.iter().all(|r| r.passed),
        "reports": reports.iter().map(report_json).collect::<Vec<_>>(),
    })
}

/// Summary view of verification reports: one line per check, detail counts
/// only. The JSON format carries the full violation records.
pub fn reports_csv(reports: &[VerificationReport]) -> String {
    let mut out = String::from("check_id,passed,violations,expected_exceptions\n");
    for r in reports {
        writeln!(
            out,
            "{},{},{},{}",
            r.check_id,
            r.passed,
            r.violations.len(),
            r.expected_exceptions.len()
        )
        .expect("string write");
    }
    out
}

/// The single top-level JSON object every command emits.
pub fn envelope(command: &str, parameters: Value, results: Value) -> String {
    let document = json!({
        "schema_version": 1,
        "command": command,
        "parameters": parameters,
        "results": results,
    });
    serde_json::to_string_pretty(&document).expect("serializable document") + "\n"
}

/// Write to the chosen destination; stdout when no path is given.
pub fn emit(text: &str, out: Option<&Path>) -> Result<(), String> {
    match out {
        Some(path) => {
            fs::write(path, text).map_err(|e| format!("cannot write {}: {e}", path.display()))
        }
        None => std::io::stdout()
            .write_all(text.as_bytes())
            .map_err(|e| format!("cannot write to standard output: {e}")),
    }
}
