//! The three subcommands. Each renders its full output into a string so the
//! text is emitted in canonical order.

use num_traits::Zero;
use serde_json::{json, Value};

use asm3_core::asm_numbers::{concentration_scan_for, formula_table, EnumTable};
use asm3_core::exact_algebra::{as_integer, rat};
use asm3_core::oracle::{dp_refined_enum, DP_LIMIT};
use asm3_core::{CheckReport, Rational};

use crate::parse::decimal;
use crate::suites::{self, Suite};
use crate::Format;

/// Digits after the point in `mass_decimal`.
const MASS_DIGITS: usize = 12;

pub struct Outcome {
    pub text: String,
    pub passed: bool,
}

impl Outcome {
    fn ok(text: String) -> Self {
        Self { text, passed: true }
    }
}

fn json_text(command: &str, params: Value, results: Vec<Value>) -> String {
    let doc = json!({ "command": command, "params": params, "results": results });
    let mut text = serde_json::to_string_pretty(&doc).expect("JSON values always serialize");
    text.push('\n');
    text
}

fn csv_text(header: &str, rows: impl IntoIterator<Item = String>) -> String {
    let mut text = format!("{header}\n");
    for row in rows {
        text.push_str(&row);
        text.push('\n');
    }
    text
}

fn sizes_json(n: &[usize]) -> Vec<String> {
    n.iter().map(usize::to_string).collect()
}

/// Table for one size: product formulas for `x ∈ {1, 2, 3}`, else the
/// transfer oracle.
fn one_table(n: usize, x: &Rational) -> Result<EnumTable, String> {
    let small = as_integer(x)
        .and_then(|v| u32::try_from(v).ok())
        .filter(|v| (1..=3).contains(v));
    match small {
        Some(k) => formula_table(n, k).map_err(|e| e.to_string()),
        None if n > DP_LIMIT => Err(format!(
            "x = {x} needs the brute-force oracle, which is limited to n <= {DP_LIMIT}"
        )),
        None => dp_refined_enum(n, x).map_err(|e| e.to_string()),
    }
}

pub fn table(n: &[usize], x: &Rational, format: Format) -> Result<Outcome, String> {
    if n.contains(&0) {
        return Err("n must be at least 1".into());
    }
    let tables = n
        .iter()
        .map(|&k| one_table(k, x))
        .collect::<Result<Vec<_>, _>>()?;
    let cells = tables.iter().flat_map(|t| {
        t.counts
            .iter()
            .enumerate()
            .map(move |(i, c)| (t.n, i + 1, c.to_string()))
    });
    let text = match format {
        Format::Csv => csv_text("n,r,value", cells.map(|(n, r, v)| format!("{n},{r},{v}"))),
        Format::Json => json_text(
            "table",
            json!({ "n": sizes_json(n), "x": x.to_string() }),
            cells
                .map(|(n, r, v)| json!({ "n": n.to_string(), "r": r.to_string(), "value": v }))
                .collect(),
        ),
    };
    Ok(Outcome::ok(text))
}

pub fn verify(suite: Suite, max_m: u32, max_n: usize, format: Format) -> Result<Outcome, String> {
    suites::validate(suite, max_n)?;
    let report: CheckReport = suites::run(suite, max_m, max_n);
    let text = match format {
        Format::Csv => report.entries.iter().map(|e| format!("{e}\n")).collect(),
        Format::Json => json_text(
            "verify",
            json!({
                "suite": suite.name(),
                "max_m": max_m.to_string(),
                "max_n": max_n.to_string(),
            }),
            report
                .entries
                .iter()
                .map(|e| {
                    json!({
                        "identity": e.identity,
                        "params": e.params,
                        "passed": e.passed,
                        "note": e.note,
                    })
                })
                .collect(),
        ),
    };
    Ok(Outcome {
        text,
        passed: report.all_passed(),
    })
}

pub fn scan(n: &[usize], epsilon: &Rational, x: u32, format: Format) -> Result<Outcome, String> {
    if *epsilon <= Rational::zero() || *epsilon >= rat(1, 2) {
        return Err(format!(
            "--epsilon must lie strictly between 0 and 1/2, got {epsilon}"
        ));
    }
    let masses = concentration_scan_for(x, n, epsilon).map_err(|e| e.to_string())?;
    let rows = masses
        .iter()
        .map(|(k, mass)| (k, mass.to_string(), decimal(mass, MASS_DIGITS)));
    let text = match format {
        Format::Csv => csv_text(
            "n,epsilon,mass_exact,mass_decimal",
            rows.map(|(k, exact, dec)| format!("{k},{epsilon},{exact},{dec}")),
        ),
        Format::Json => json_text(
            "scan",
            json!({ "n": sizes_json(n), "epsilon": epsilon.to_string(), "x": x.to_string() }),
            rows.map(|(k, exact, dec)| {
                json!({
                    "n": k.to_string(),
                    "epsilon": epsilon.to_string(),
                    "mass_exact": exact,
                    "mass_decimal": dec,
                })
            })
            .collect(),
        ),
    };
    Ok(Outcome::ok(text))
}
