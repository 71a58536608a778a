//! Line-delimited verification records and their aggregation.
//!
//! A sweep emits one JSON record per check and a summary record closing each
//! triple, so long runs stream and interrupted output is still parseable.
//! Timing is opt-in: without it, identical invocations produce byte-identical
//! reports.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CheckRecord {
    pub s: usize,
    pub k: usize,
    pub n: usize,
    pub id: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub reason: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub witness: Option<serde_json::Value>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TripleSummary {
    pub s: usize,
    pub k: usize,
    pub n: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
    pub tool_version: String,
    /// The pipeline is seedless; recorded so consumers can rely on replays.
    pub deterministic: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase")]
pub enum Record {
    Check(CheckRecord),
    Summary(TripleSummary),
}

/// All records produced for one parameter triple.
#[derive(Clone, Debug, PartialEq)]
pub struct TripleReport {
    pub checks: Vec<CheckRecord>,
    pub summary: TripleSummary,
}

impl TripleReport {
    pub fn any_failed(&self) -> bool {
        self.summary.fail > 0
    }

    pub fn records(&self) -> Vec<Record> {
        let mut records: Vec<Record> = self.checks.iter().cloned().map(Record::Check).collect();
        records.push(Record::Summary(self.summary.clone()));
        records
    }

    pub fn to_jsonl(&self) -> String {
        let mut out = String::new();
        for record in self.records() {
            out.push_str(&serde_json::to_string(&record).expect("records serialize"));
            out.push('\n');
        }
        out
    }
}

/// Parses JSON-lines records, reporting the 1-based line of the first defect.
pub fn parse_records(text: &str) -> Result<Vec<Record>> {
    let mut records = Vec::new();
    for (index, raw) in text.lines().enumerate() {
        let line = index + 1;
        if raw.trim().is_empty() {
            continue;
        }
        let record: Record = serde_json::from_str(raw).map_err(|e| Error::Parse {
            line,
            message: format!("invalid record: {e}"),
        })?;
        records.push(record);
    }
    Ok(records)
}

/// A pass/fail matrix: one row per triple, one column per check id.
#[derive(Clone, Debug, Default, PartialEq, Serialize)]
pub struct SummaryTable {
    /// Column order: first appearance across the inputs.
    pub check_ids: Vec<String>,
    /// Rows sorted with failing triples first, then by (s, k, n).
    pub rows: Vec<SummaryRow>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct SummaryRow {
    pub s: usize,
    pub k: usize,
    pub n: usize,
    /// One status per check id, None when the check never ran.
    pub statuses: Vec<Option<Status>>,
}

pub fn aggregate(records: &[Record]) -> SummaryTable {
    let mut check_ids: Vec<String> = Vec::new();
    let mut cells: BTreeMap<(usize, usize, usize), BTreeMap<String, Status>> = BTreeMap::new();
    for record in records {
        if let Record::Check(check) = record {
            if !check_ids.contains(&check.id) {
                check_ids.push(check.id.clone());
            }
            cells
                .entry((check.s, check.k, check.n))
                .or_default()
                .insert(check.id.clone(), check.status);
        }
    }
    let mut rows: Vec<SummaryRow> = cells
        .into_iter()
        .map(|((s, k, n), statuses)| SummaryRow {
            s,
            k,
            n,
            statuses: check_ids
                .iter()
                .map(|id| statuses.get(id).copied())
                .collect(),
        })
        .collect();
    rows.sort_by_key(|row| {
        let failed = row.statuses.iter().any(|s| matches!(s, Some(Status::Fail)));
        (!failed, row.s, row.k, row.n)
    });
    SummaryTable { check_ids, rows }
}

impl SummaryTable {
    /// Legend plus a compact matrix; deterministic layout.
    pub fn render_text(&self) -> String {
        let mut out = String::new();
        if self.rows.is_empty() {
            out.push_str("no checks\n");
            return out;
        }
        for (index, id) in self.check_ids.iter().enumerate() {
            let _ = writeln!(out, "c{:<3} {id}", index + 1);
        }
        let _ = write!(out, "{:<16}", "triple");
        for index in 1..=self.check_ids.len() {
            let _ = write!(out, " c{index:<3}");
        }
        out.push('\n');
        for row in &self.rows {
            let label = format!("s={} k={} n={}", row.s, row.k, row.n);
            let _ = write!(out, "{label:<16}");
            for status in &row.statuses {
                let symbol = match status {
                    Some(Status::Pass) => "ok",
                    Some(Status::Fail) => "FAIL",
                    Some(Status::Skipped) => "-",
                    None => ".",
                };
                let _ = write!(out, " {symbol:<4}");
            }
            out.push('\n');
        }
        out
    }
}
