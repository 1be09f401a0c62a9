//! Rendering of listings, verification reports and polynomials as JSON, CSV or a table.

use std::str::FromStr;

use anyhow::Result;
use hooklab::verify::VerificationReport;
use serde::Serialize;

use crate::enumerate::{self, Listing};
use crate::GrothOutput;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
    Table,
}

impl FromStr for Format {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            "table" => Ok(Format::Table),
            _ => Err(format!("unknown format '{s}' (expected json, csv or table)")),
        }
    }
}

fn json<T: Serialize>(v: &T) -> Result<String> {
    Ok(serde_json::to_string_pretty(v)? + "\n")
}

fn csv_rows(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<String> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for r in rows {
        w.write_record(&r)?;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

/// Left-aligned columns separated by two spaces.
fn aligned(header: &[&str], rows: &[Vec<String>]) -> String {
    let mut widths: Vec<usize> = header.iter().map(|h| h.chars().count()).collect();
    for r in rows {
        for (w, cell) in widths.iter_mut().zip(r) {
            *w = (*w).max(cell.chars().count());
        }
    }
    let line = |cells: Vec<&str>| -> String {
        let padded: Vec<String> =
            cells.iter().zip(&widths).map(|(c, &w)| format!("{c}{}", " ".repeat(w - c.chars().count()))).collect();
        padded.join("  ").trim_end().to_string() + "\n"
    };
    let mut out = line(header.to_vec());
    for r in rows {
        out.push_str(&line(r.iter().map(String::as_str).collect()));
    }
    out
}

pub fn listing(l: &Listing, format: Format) -> Result<String> {
    match format {
        Format::Json => json(l),
        Format::Csv => csv_rows(&["shape", "family", "count"], [vec![l.shape.clone(), l.family.into(), l.count.to_string()]]),
        Format::Table => enumerate::table(l),
    }
}

#[derive(Serialize)]
struct ReportSet<'a> {
    total: usize,
    passed: usize,
    failed: usize,
    reports: &'a [VerificationReport],
}

fn d_text(r: &VerificationReport) -> String {
    r.d.map(|d| d.to_string()).unwrap_or_default()
}

/// Reports in the given order; callers pass them sorted.
pub fn reports(rs: &[VerificationReport], format: Format) -> Result<String> {
    let passed = rs.iter().filter(|r| r.pass).count();
    match format {
        Format::Json => json(&ReportSet { total: rs.len(), passed, failed: rs.len() - passed, reports: rs }),
        Format::Csv => csv_rows(
            &["identity", "shape", "d", "mode", "pass"],
            rs.iter().map(|r| vec![r.identity.clone(), r.shape.clone(), d_text(r), r.mode.to_string(), r.pass.to_string()]),
        ),
        Format::Table => {
            let rows: Vec<Vec<String>> = rs
                .iter()
                .map(|r| {
                    let detail = r.error.clone().or_else(|| r.note.clone()).unwrap_or_default();
                    vec![
                        r.identity.clone(),
                        r.shape.clone(),
                        d_text(r),
                        r.mode.to_string(),
                        if r.pass { "pass".into() } else { "FAIL".into() },
                        detail,
                    ]
                })
                .collect();
            let mut out = aligned(&["identity", "shape", "d", "mode", "result", "detail"], &rows);
            out.push_str(&format!("{passed}/{} passed\n", rs.len()));
            Ok(out)
        }
    }
}

pub fn groth(g: &GrothOutput, format: Format) -> Result<String> {
    match format {
        Format::Json => json(g),
        Format::Csv => csv_rows(
            &["perm", "mode", "beta", "y_zero"],
            [vec![g.perm.clone(), g.mode.clone(), g.beta.clone(), g.y_zero.to_string()]],
        ),
        Format::Table => Ok(format!("{} {} (beta = {}): {}\n", g.mode, g.perm, g.beta, g.value)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn aligns_columns() {
        let out = aligned(&["a", "bb"], &[vec!["xyz".into(), "1".into()]]);
        assert_eq!(out, "a    bb\nxyz  1\n");
    }

    #[test]
    fn formats_parse() {
        assert_eq!("csv".parse::<Format>().unwrap(), Format::Csv);
        assert!("xml".parse::<Format>().is_err());
    }
}
