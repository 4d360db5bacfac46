//! Plain-text rendering of solver traces and property reports.

use std::collections::BTreeSet;
use std::fmt::Write;

use teneig::{DenseTensor, EigenResult, PropertyReport, ReducibilityReport};

fn fixed(v: f64) -> String {
    format!("{v:.4}")
}

/// Four decimals, switching to scientific notation below 1e-3 so the small
/// gap and residual columns stay readable.
fn adaptive(v: f64) -> String {
    if v != 0.0 && v.abs() < 1e-3 {
        format!("{v:.4e}")
    } else {
        format!("{v:.4}")
    }
}

/// One row per iteration with the columns k, lower bound, upper bound,
/// estimate, gap and residual. An empty trace renders the header only.
pub fn render_trace(result: &EigenResult) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "{:>4}  {:>12}  {:>12}  {:>12}  {:>12}  {:>12}",
        "k", "lower", "upper", "lambda", "gap", "residual"
    )
    .unwrap();
    for record in &result.trace {
        writeln!(
            out,
            "{:>4}  {:>12}  {:>12}  {:>12}  {:>12}  {:>12}",
            record.k,
            fixed(record.lower),
            fixed(record.upper),
            fixed(record.estimate),
            adaptive(record.gap),
            adaptive(record.residual),
        )
        .unwrap();
    }
    out
}

/// Single summary line with iteration count, wall time and the final
/// bounds row. The time is informational only.
pub fn render_summary(result: &EigenResult, cpu_seconds: f64) -> String {
    match result.trace.last() {
        Some(last) => format!(
            "iterations = {}  cpu(s) = {:.3}  lower = {}  upper = {}  lambda = {}  gap = {}  residual = {}",
            result.iterations,
            cpu_seconds,
            fixed(last.lower),
            fixed(last.upper),
            fixed(result.lambda),
            adaptive(last.gap),
            adaptive(last.residual),
        ),
        None => format!("iterations = 0  cpu(s) = {cpu_seconds:.3}"),
    }
}

pub fn render_eig(result: &EigenResult) -> String {
    let components: Vec<String> = result
        .eigenvector
        .as_slice()
        .iter()
        .map(|v| fixed(*v))
        .collect();
    format!(
        "lambda = {}\neigenvector = [{}]\niterations = {}\nconverged = {}",
        fixed(result.lambda),
        components.join(", "),
        result.iterations,
        result.converged,
    )
}

fn yes_no(v: bool) -> &'static str {
    if v {
        "yes"
    } else {
        "no"
    }
}

fn render_index_set(set: &BTreeSet<usize>) -> String {
    let one_based: Vec<String> = set.iter().map(|i| (i + 1).to_string()).collect();
    format!("{{{}}}", one_based.join(", "))
}

/// Structural verdicts for the `check` subcommand. The reducing set is
/// printed 1-based.
pub fn render_check(tensor: &DenseTensor, report: &ReducibilityReport) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "essentially nonnegative: {}",
        yes_no(tensor.is_essentially_nonnegative())
    )
    .unwrap();
    writeln!(out, "nonnegative: {}", yes_no(tensor.is_nonnegative())).unwrap();
    writeln!(out, "symmetric: {}", yes_no(tensor.is_symmetric())).unwrap();
    if report.irreducible {
        write!(out, "structure: irreducible").unwrap();
    } else {
        write!(out, "structure: reducible").unwrap();
        if let Some(witness) = &report.witness {
            write!(out, "\nreducing set: {}", render_index_set(witness)).unwrap();
        }
    }
    out
}

pub fn render_report(report: &PropertyReport) -> String {
    let mut out = format!(
        "{}: {}  samples = {}  max violation = {:.3e}  tolerance = {:.3e}",
        report.name,
        if report.pass { "pass" } else { "FAIL" },
        report.samples,
        report.max_violation,
        report.tolerance,
    );
    if let Some(note) = &report.note {
        write!(out, "\n  note: {note}").unwrap();
    }
    for witness in &report.witnesses {
        write!(out, "\n  witness: {witness}").unwrap();
    }
    out
}
