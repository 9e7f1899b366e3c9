//! Report rendering and parsing: aligned tables, RFC-quoted CSV, and JSON.
//!
//! CSV and JSON outputs round-trip: parsing an emitted file reproduces the
//! report values exactly. In CSV the violation list is flattened to
//! `group: detail` pairs joined by `"; "`; group names never contain a
//! colon, so the split is unambiguous.

use group_census::verifier::{CheckStatus, VerdictReport, Violation};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum, Default)]
pub enum Format {
    #[default]
    Table,
    Csv,
    Json,
}

pub const CSV_HEADER: &str = "check_id,status,groups_checked,violations,notes";

fn csv_quote(field: &str) -> String {
    if field.contains([',', '"', '\n', ';']) {
        format!("\"{}\"", field.replace('"', "\"\""))
    } else {
        field.to_string()
    }
}

fn violations_to_field(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(|v| format!("{}: {}", v.group, v.detail))
        .collect::<Vec<_>>()
        .join("; ")
}

fn violations_from_field(field: &str) -> Vec<Violation> {
    if field.is_empty() {
        return Vec::new();
    }
    field
        .split("; ")
        .map(|part| match part.split_once(": ") {
            Some((group, detail)) => Violation {
                group: group.to_string(),
                detail: detail.to_string(),
            },
            None => Violation {
                group: part.to_string(),
                detail: String::new(),
            },
        })
        .collect()
}

/// Render reports in the requested format.
pub fn format_report(reports: &[VerdictReport], format: Format) -> String {
    match format {
        Format::Table => format_table(reports),
        Format::Csv => format_csv(reports),
        Format::Json => serde_json::to_string_pretty(reports).expect("reports serialize"),
    }
}

fn format_table(reports: &[VerdictReport]) -> String {
    let headers = ["check_id", "status", "groups", "violations", "notes"];
    let rows: Vec<[String; 5]> = reports
        .iter()
        .map(|r| {
            [
                r.check_id.clone(),
                r.status.to_string(),
                r.groups_checked.to_string(),
                violations_to_field(&r.violations),
                r.notes.clone(),
            ]
        })
        .collect();
    let mut widths: Vec<usize> = headers.iter().map(|h| h.len()).collect();
    for row in &rows {
        for (w, cell) in widths.iter_mut().zip(row.iter()) {
            *w = (*w).max(cell.len().min(60));
        }
    }
    let mut out = String::new();
    let fmt_row = |cells: &[String]| -> String {
        cells
            .iter()
            .enumerate()
            .map(|(i, c)| format!("{:width$}", c, width = widths[i]))
            .collect::<Vec<_>>()
            .join("  ")
            .trim_end()
            .to_string()
    };
    out.push_str(&fmt_row(&headers.map(String::from)));
    out.push('\n');
    out.push_str(&fmt_row(
        &widths.iter().map(|w| "-".repeat(*w)).collect::<Vec<_>>(),
    ));
    out.push('\n');
    for row in &rows {
        out.push_str(&fmt_row(row));
        out.push('\n');
    }
    out
}

fn format_csv(reports: &[VerdictReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for r in reports {
        let fields = [
            csv_quote(&r.check_id),
            csv_quote(&r.status.to_string()),
            r.groups_checked.to_string(),
            csv_quote(&violations_to_field(&r.violations)),
            csv_quote(&r.notes),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

/// Split one CSV line honoring quotes.
fn split_csv_line(line: &str) -> Vec<String> {
    let mut fields = Vec::new();
    let mut field = String::new();
    let mut chars = line.chars().peekable();
    let mut quoted = false;
    while let Some(c) = chars.next() {
        match c {
            '"' if quoted => {
                if chars.peek() == Some(&'"') {
                    chars.next();
                    field.push('"');
                } else {
                    quoted = false;
                }
            }
            '"' if field.is_empty() => quoted = true,
            ',' if !quoted => {
                fields.push(std::mem::take(&mut field));
            }
            c => field.push(c),
        }
    }
    fields.push(field);
    fields
}

/// Parse CSV emitted by [`format_report`] back into reports.
pub fn parse_csv_report(text: &str) -> Result<Vec<VerdictReport>, String> {
    let mut lines = text.lines();
    match lines.next() {
        Some(h) if h == CSV_HEADER => {}
        other => return Err(format!("bad csv header: {other:?}")),
    }
    let mut reports = Vec::new();
    for line in lines {
        if line.is_empty() {
            continue;
        }
        let fields = split_csv_line(line);
        if fields.len() != 5 {
            return Err(format!("expected 5 fields, got {}: {line}", fields.len()));
        }
        let status = match fields[1].as_str() {
            "pass" => CheckStatus::Pass,
            "fail" => CheckStatus::Fail,
            "vacuous" => CheckStatus::Vacuous,
            other => return Err(format!("unknown status '{other}'")),
        };
        reports.push(VerdictReport {
            check_id: fields[0].clone(),
            status,
            groups_checked: fields[2]
                .parse()
                .map_err(|e| format!("groups_checked: {e}"))?,
            violations: violations_from_field(&fields[3]),
            notes: fields[4].clone(),
        });
    }
    Ok(reports)
}

/// Parse JSON emitted by [`format_report`] back into reports.
pub fn parse_json_report(text: &str) -> Result<Vec<VerdictReport>, String> {
    serde_json::from_str(text).map_err(|e| e.to_string())
}

/// Key-value rows as an aligned two-column table.
pub fn format_kv_table(rows: &[(&str, String)]) -> String {
    let width = rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
    rows.iter()
        .map(|(k, v)| format!("{k:width$}  {v}"))
        .collect::<Vec<_>>()
        .join("\n")
}
