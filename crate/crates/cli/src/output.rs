//! CSV rendering. Numbers use Rust's shortest round-trip formatting, `inf`
//! stands for an infinite exponent and `-` for a missing field.

use std::fmt::Write;

use bombieri_core::compare::SignScanReport;
use bombieri_core::verify::{Case, CorpusRun};

pub const COMPUTE_HEADER: &str = "bound_id,p,flavor,lhs,rhs,margin";
pub const VERIFY_HEADER: &str = "trial,seed,dim,n,field,bound_id,p,flavor,lhs,rhs,margin,pass";
pub const SCAN_HEADER: &str = "b,p,f";

pub fn num(x: f64) -> String {
    if x.is_infinite() {
        if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        format!("{x:?}")
    }
}

fn opt_num(x: Option<f64>) -> String {
    x.map_or_else(|| "-".into(), num)
}

fn case_fields(c: &Case<f64>) -> String {
    format!(
        "{},{},{},{},{},{}",
        c.kind.id(),
        opt_num(c.p),
        c.flavor.map_or("-", |f| f.as_str()),
        num(c.lhs),
        num(c.rhs),
        num(c.margin)
    )
}

pub fn compute_csv(cases: &[Case<f64>]) -> String {
    let mut out = String::with_capacity(64 * (cases.len() + 1));
    out.push_str(COMPUTE_HEADER);
    out.push('\n');
    for c in cases {
        out.push_str(&case_fields(c));
        out.push('\n');
    }
    out
}

pub fn verify_csv(run: &CorpusRun<f64>) -> String {
    let mut out = String::with_capacity(96 * (run.n_cases() + 1));
    out.push_str(VERIFY_HEADER);
    out.push('\n');
    for e in &run.entries {
        let prefix = format!(
            "{},{},{},{},{}",
            e.trial, e.spec.seed, e.spec.dim, e.spec.n, e.spec.field
        );
        for c in &e.report.cases {
            let _ = writeln!(out, "{prefix},{},{}", case_fields(c), c.pass);
        }
    }
    out
}

pub fn scan_summary(report: &SignScanReport<f64>) -> String {
    format!(
        "# n_positive={},n_negative={},n_zero={},min=({},{},{}),max=({},{},{})",
        report.n_positive,
        report.n_negative,
        report.n_zero,
        num(report.min_cell.b),
        num(report.min_cell.p),
        num(report.min_cell.value),
        num(report.max_cell.b),
        num(report.max_cell.p),
        num(report.max_cell.value),
    )
}

pub fn scan_csv(report: &SignScanReport<f64>) -> String {
    let mut out = String::with_capacity(48 * (report.len() + 2));
    out.push_str(SCAN_HEADER);
    out.push('\n');
    for cell in report.cells() {
        let _ = writeln!(out, "{},{},{}", num(cell.b), num(cell.p), num(cell.value));
    }
    out.push_str(&scan_summary(report));
    out.push('\n');
    out
}
