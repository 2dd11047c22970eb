//! Rendering of battery reports.

use serde::Serialize;

use super::{BatteryReport, TheoremVerdict};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Summary {
    pub consistent: usize,
    pub inconsistent: usize,
    pub skipped: usize,
    pub corpus_errors: usize,
}

impl Summary {
    pub fn of(report: &BatteryReport) -> Self {
        let count = |want: Option<bool>| {
            report
                .verdicts
                .iter()
                .filter(|v| v.consistent == want)
                .count()
        };
        Summary {
            consistent: count(Some(true)),
            inconsistent: count(Some(false)),
            skipped: count(None),
            corpus_errors: report.errors.len(),
        }
    }
}

/// One JSON record per verdict, then a summary record.
pub fn render_json_lines(report: &BatteryReport) -> String {
    let mut out = String::new();
    for v in &report.verdicts {
        out.push_str(&serde_json::to_string(v).expect("verdicts serialize"));
        out.push('\n');
    }
    let summary = serde_json::json!({ "summary": report.summary() });
    out.push_str(&summary.to_string());
    out.push('\n');
    out
}

fn flag(b: Option<bool>) -> &'static str {
    match b {
        Some(true) => "true",
        Some(false) => "false",
        None => "-",
    }
}

fn status(v: &TheoremVerdict) -> String {
    match (&v.skipped, v.consistent) {
        (Some(reason), _) => format!("skipped ({reason})"),
        (None, Some(true)) => "consistent".into(),
        _ => "INCONSISTENT".into(),
    }
}

pub fn render_human(report: &BatteryReport) -> String {
    let ring_width = report
        .verdicts
        .iter()
        .map(|v| v.ring.len())
        .max()
        .unwrap_or(4)
        .max(4);
    let mut out = format!(
        "{:<10} {:<ring_width$} {:<5} {:<5} {:<11} status\n",
        "result", "ring", "lhs", "rhs", "kind"
    );
    for v in &report.verdicts {
        let kind = match v.kind {
            super::Kind::Iff => "iff",
            super::Kind::Implication => "implication",
        };
        out.push_str(&format!(
            "{:<10} {:<ring_width$} {:<5} {:<5} {:<11} {}\n",
            v.result_id.as_str(),
            v.ring,
            flag(v.lhs),
            flag(v.rhs),
            kind,
            status(v)
        ));
        if v.is_inconsistent() {
            for (key, value) in &v.witnesses {
                out.push_str(&format!("    {key} = {value}\n"));
            }
        }
    }
    let s = report.summary();
    out.push_str(&format!(
        "\n{} consistent, {} inconsistent, {} skipped, {} corpus errors\n",
        s.consistent, s.inconsistent, s.skipped, s.corpus_errors
    ));
    out
}
