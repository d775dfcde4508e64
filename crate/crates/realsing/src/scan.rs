//! Grid scans written as CSV.

use std::io::{self, Write};

use rayon::prelude::*;
use realsing_core::{analyze, ChiConvention, FamilyParams};
use serde::Serialize;

use crate::grid::Grid;

/// One CSV row. Column order is the field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ScanRow {
    pub p: String,
    pub q: String,
    pub r: String,
    pub delta: String,
    pub a: String,
    pub b: String,
    pub genus: String,
    pub e0: String,
    pub node_weight: String,
    pub det: String,
    #[serde(rename = "K_integral")]
    pub k_integral: bool,
    pub predicted_integral: bool,
    pub agree: bool,
    pub congruence_value: Option<u8>,
}

#[derive(Debug, Clone)]
pub struct ScanOutput {
    pub rows: Vec<ScanRow>,
    pub skipped: usize,
}

pub fn scan_row(fp: FamilyParams) -> realsing_core::Result<ScanRow> {
    let run = analyze(fp, ChiConvention::Paper)?;
    let fp = &run.params;
    Ok(ScanRow {
        p: fp.p.to_string(),
        q: fp.q.to_string(),
        r: fp.r.to_string(),
        delta: fp.delta.to_string(),
        a: fp.a.to_string(),
        b: fp.b.to_string(),
        genus: run.seifert.genus.to_string(),
        e0: format!("{}/{}", run.seifert.e0.numer(), run.seifert.e0.denom()),
        node_weight: run.graph.vertices()[0].weight.to_string(),
        det: run.determinant.to_string(),
        k_integral: run.canonical.integral,
        predicted_integral: run.verdict.predicted_integral,
        agree: run.verdict.agree,
        congruence_value: run.congruence.value,
    })
}

/// Analyzes every valid triple of the grid in parallel; rows keep the
/// grid's lexicographic order.
pub fn scan(grid: &Grid) -> realsing_core::Result<ScanOutput> {
    let (triples, skipped) = grid.triples();
    let rows = triples.into_par_iter().map(scan_row).collect::<Result<Vec<_>, _>>()?;
    Ok(ScanOutput { rows, skipped })
}

impl ScanOutput {
    /// Header, rows, then a `# skipped=N` footer line.
    pub fn write_csv<W: Write>(&self, out: W) -> io::Result<()> {
        let mut w = csv::Writer::from_writer(out);
        for row in &self.rows {
            w.serialize(row)?;
        }
        if self.rows.is_empty() {
            w.write_record(HEADER)?;
        }
        let mut out = w.into_inner().map_err(|e| e.into_error())?;
        writeln!(out, "# skipped={}", self.skipped)
    }
}

pub const HEADER: [&str; 14] = [
    "p",
    "q",
    "r",
    "delta",
    "a",
    "b",
    "genus",
    "e0",
    "node_weight",
    "det",
    "K_integral",
    "predicted_integral",
    "agree",
    "congruence_value",
];
