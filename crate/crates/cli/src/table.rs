//! The regression table of published bounds.

use std::fmt::Write;

use rayon::prelude::*;
use serde::Serialize;
use skewbound::{bound, Atom, BoundReport, ManifoldData};

use crate::report::ReportJson;
use crate::{status, Checked, CliError};

/// Each manifold with the lower bound stated for it in the literature.
pub const PUBLISHED_ROWS: &[(&str, u32)] = &[
    ("RP(2)", 7),
    ("RP(4)", 15),
    ("RP(8)", 31),
    ("RP(16)", 63),
    ("RP(1)xRP(2)xRP(4)", 23),
    ("RP(2)xRP(4)", 21),
    ("CP(1)", 5),
    ("CP(2)", 13),
    ("CP(4)", 29),
    ("CP(1)xCP(2)xCP(4)", 45),
    ("G(2,4)", 13),
    ("G(2,6)", 29),
    ("G(2,5)", 21),
    ("G(2,7)", 29),
    ("G(3,6)", 31),
    ("G(3,8)", 43),
    ("G(3,7)", 43),
    ("G~(2,4)", 13),
    ("G~(2,6)", 25),
    ("G~(2,5)", 17),
    ("G~(2,7)", 29),
    ("G~(2,8)", 33),
    ("G~(3,7)", 41),
    ("G~(3,13)", 89),
];

#[derive(Debug, Clone)]
pub struct TableRow {
    pub expected: u32,
    pub report: BoundReport,
}

impl TableRow {
    pub fn pass(&self) -> bool {
        self.report.lower_bound == self.expected
    }
}

#[derive(Serialize)]
struct RowJson {
    #[serde(flatten)]
    report: ReportJson,
    expected: u32,
    status: &'static str,
}

/// Computes every row concurrently; rows come back in table order.
pub fn compute_rows() -> Result<Vec<TableRow>, CliError> {
    PUBLISHED_ROWS
        .par_iter()
        .map(|&(expr, expected)| {
            let atoms: Vec<Atom> = crate::parse(expr)?.factors;
            let report = bound::bound(&ManifoldData::from_atoms(&atoms)?)?;
            Ok(TableRow { expected, report })
        })
        .collect()
}

pub fn paper_table(json: bool) -> Result<Checked, CliError> {
    let rows = compute_rows()?;
    let mut text = String::new();
    if !json {
        writeln!(
            text,
            "{:<20} {:>4} {:>5} {:>6} {:>9}  status  witness",
            "manifold", "n", "kmax", "bound", "expected"
        )
        .unwrap();
    }
    for row in &rows {
        let r = &row.report;
        if json {
            let line = RowJson {
                report: ReportJson::from(r),
                expected: row.expected,
                status: status(row.pass()),
            };
            text.push_str(&serde_json::to_string(&line).expect("plain struct serializes"));
            text.push('\n');
        } else {
            writeln!(
                text,
                "{:<20} {:>4} {:>5} {:>6} {:>9}  {}    {}",
                r.label,
                r.dimension,
                r.kmax,
                r.lower_bound,
                row.expected,
                status(row.pass()),
                r.witness_text
            )
            .unwrap();
        }
    }
    let all_pass = rows.iter().all(TableRow::pass);
    Ok(Checked { text, all_pass })
}
