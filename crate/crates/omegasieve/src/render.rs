//! Rendering for traces and audit reports: text tables, JSON, and CSV.
//!
//! Machine formats are stable byte-for-byte: JSON comes from typed structs
//! with fixed field order, so parsing a document and re-rendering it
//! reproduces the input exactly.

use serde::{Deserialize, Serialize};

use crate::audit::AuditReport;
use crate::engine::StageSnapshot;
use crate::natset::{CardClass, NatSet};

/// One trace record: the four-column view of a snapshot.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceRow {
    pub alpha: String,
    pub outcome: crate::engine::StepOutcome,
    pub b: String,
    pub card: String,
}

impl TraceRow {
    pub fn from_snapshot(snapshot: &StageSnapshot) -> TraceRow {
        TraceRow {
            alpha: snapshot.alpha.to_string(),
            outcome: snapshot.outcome,
            b: summarize_natset(&snapshot.b_set),
            card: card_text(snapshot.b_set.card()),
        }
    }
}

pub fn card_text(card: CardClass) -> String {
    match card {
        CardClass::Finite(n) => n.to_string(),
        CardClass::CountablyInfinite => "inf".to_string(),
    }
}

/// Compact display: runs of three or more consecutive naturals collapse
/// to `a..b`, so co-finite stage sets stay one screen wide.
pub fn summarize_natset(s: &NatSet) -> String {
    fn runs(values: &[u64]) -> String {
        let mut pieces = Vec::new();
        let mut i = 0;
        while i < values.len() {
            let mut j = i;
            while j + 1 < values.len() && values[j + 1] == values[j] + 1 {
                j += 1;
            }
            if j - i >= 2 {
                pieces.push(format!("{}..{}", values[i], values[j]));
                i = j + 1;
            } else {
                pieces.push(values[i].to_string());
                i += 1;
            }
        }
        pieces.join(",")
    }
    match s {
        NatSet::Finite(members) => format!("{{{}}}", runs(members)),
        NatSet::CoFinite(excluded) if excluded.is_empty() => "N".to_string(),
        NatSet::CoFinite(excluded) => format!("N\\{{{}}}", runs(excluded)),
    }
}

/// Aligned text table over the four trace columns.
pub fn trace_text(rows: &[TraceRow]) -> String {
    let header = ["alpha", "outcome", "B", "card"];
    let cells: Vec<[String; 4]> = rows
        .iter()
        .map(|r| {
            [
                r.alpha.clone(),
                r.outcome.to_string(),
                r.b.clone(),
                r.card.clone(),
            ]
        })
        .collect();
    let mut widths = header.map(str::len);
    for row in &cells {
        for (w, cell) in widths.iter_mut().zip(row) {
            *w = (*w).max(cell.len());
        }
    }
    let mut out = String::new();
    let emit = |out: &mut String, row: [&str; 4]| {
        for (i, (cell, w)) in row.iter().zip(widths).enumerate() {
            if i > 0 {
                out.push_str("  ");
            }
            out.push_str(cell);
            if i + 1 < row.len() {
                out.extend(std::iter::repeat_n(' ', w - cell.len()));
            }
        }
        out.push('\n');
    };
    emit(&mut out, header);
    for row in &cells {
        emit(&mut out, [&row[0], &row[1], &row[2], &row[3]]);
    }
    out
}

/// One compact JSON object per row, newline-terminated.
pub fn trace_json_lines(rows: &[TraceRow]) -> String {
    let mut out = String::new();
    for row in rows {
        out.push_str(&serde_json::to_string(row).expect("trace rows serialize"));
        out.push('\n');
    }
    out
}

pub fn trace_csv(rows: &[TraceRow]) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["alpha", "outcome", "b", "card"])
        .expect("writing to memory cannot fail");
    for row in rows {
        writer
            .write_record([&row.alpha, &row.outcome.to_string(), &row.b, &row.card])
            .expect("writing to memory cannot fail");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

/// Pretty JSON document, newline-terminated.
pub fn audit_json(report: &AuditReport) -> String {
    let mut out = serde_json::to_string_pretty(report).expect("reports serialize");
    out.push('\n');
    out
}

pub fn audit_text(report: &AuditReport) -> String {
    let mut out = format!(
        "claim audit: horizon {}, seed {}, window {}\n\n",
        report.config.horizon, report.config.seed, report.config.window
    );
    let claim_width = report
        .verdicts
        .iter()
        .map(|v| v.claim.as_str().len())
        .max()
        .unwrap_or(0);
    for v in &report.verdicts {
        out.push_str(&format!(
            "{:width$}  {}\n",
            v.claim.as_str(),
            v.status,
            width = claim_width
        ));
        out.push_str(&format!(
            "{:width$}  range: {}\n",
            "",
            v.checked_range,
            width = claim_width
        ));
        if let Some(witness) = &v.witness {
            out.push_str(&format!(
                "{:width$}  witness: {}\n",
                "",
                serde_json::to_string(witness).expect("witnesses serialize"),
                width = claim_width
            ));
        }
    }
    out.push_str(&format!(
        "\nsummary: {} verified, {} not reproduced, {} vacuous\n",
        report.summary.verified, report.summary.not_reproduced, report.summary.vacuous
    ));
    out
}

pub fn audit_csv(report: &AuditReport) -> String {
    let mut writer = csv::Writer::from_writer(Vec::new());
    writer
        .write_record(["claim", "status", "checked_range", "witness"])
        .expect("writing to memory cannot fail");
    for v in &report.verdicts {
        let witness = v
            .witness
            .as_ref()
            .map(|w| serde_json::to_string(w).expect("witnesses serialize"))
            .unwrap_or_default();
        writer
            .write_record([
                v.claim.as_str(),
                &v.status.to_string(),
                &v.checked_range,
                &witness,
            ])
            .expect("writing to memory cannot fail");
    }
    String::from_utf8(writer.into_inner().expect("in-memory writer")).expect("csv is utf-8")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{simulate_steps, Strategy};

    fn ns(text: &str) -> NatSet {
        text.parse().expect("test set parses")
    }

    #[test]
    fn summaries_compress_runs() {
        assert_eq!(summarize_natset(&ns("N")), "N");
        assert_eq!(summarize_natset(&ns("{}")), "{}");
        assert_eq!(summarize_natset(&ns("{1,2}")), "{1,2}");
        assert_eq!(summarize_natset(&ns("{1,2,3}")), "{1..3}");
        assert_eq!(
            summarize_natset(&ns("N\\{0,1,2,3,7,9,10,11}")),
            "N\\{0..3,7,9..11}"
        );
    }

    #[test]
    fn trace_rows_round_trip_as_json_lines() {
        let snaps = simulate_steps(&Strategy::MinChoice, &NatSet::full(), 5).unwrap();
        let rows: Vec<TraceRow> = snaps.iter().map(TraceRow::from_snapshot).collect();
        let text = trace_json_lines(&rows);
        let mut rebuilt = String::new();
        for line in text.lines() {
            let row: TraceRow = serde_json::from_str(line).unwrap();
            rebuilt.push_str(&serde_json::to_string(&row).unwrap());
            rebuilt.push('\n');
        }
        assert_eq!(rebuilt, text);
        assert!(text.starts_with(
            "{\"alpha\":\"0\",\"outcome\":{\"kind\":\"deducted\",\"value\":0},\"b\":\"N\",\"card\":\"inf\"}"
        ));
    }

    #[test]
    fn trace_table_alignment() {
        let snaps = simulate_steps(&Strategy::MinChoice, &NatSet::full(), 3).unwrap();
        let rows: Vec<TraceRow> = snaps.iter().map(TraceRow::from_snapshot).collect();
        let table = trace_text(&rows);
        let lines: Vec<&str> = table.lines().collect();
        assert_eq!(lines.len(), 4);
        assert!(lines[0].starts_with("alpha  outcome"));
        assert!(lines[1].contains("deduct 0"));
        assert!(lines[3].contains("N\\{0,1}"));
    }

    #[test]
    fn trace_csv_shape() {
        let snaps = simulate_steps(&Strategy::MinChoice, &ns("{0,1,2}"), 10).unwrap();
        let rows: Vec<TraceRow> = snaps.iter().map(TraceRow::from_snapshot).collect();
        let text = trace_csv(&rows);
        let mut lines = text.lines();
        assert_eq!(lines.next(), Some("alpha,outcome,b,card"));
        assert_eq!(lines.next(), Some("0,deduct 0,{0..2},3"));
    }
}
