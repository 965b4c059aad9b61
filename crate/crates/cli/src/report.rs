//! `compute`: the bound report as a text table or a flat JSON object.

use std::fmt::Write;

use serde::Serialize;
use skewbound::{bound, steenrod, BoundReport, ManifoldData};

use crate::{manifold, parse, CliError};

#[derive(Debug, Clone, Copy, Default)]
pub struct ComputeOptions {
    pub json: bool,
    pub classes: bool,
    pub steenrod: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ReportJson {
    pub label: String,
    pub dimension: u32,
    pub alpha: u32,
    pub kmax: u32,
    pub witness: String,
    pub lower_bound: u32,
    pub generic_lower: u32,
    pub massey_cap: u32,
    pub conjectured_upper: u32,
    pub literature_upper: u32,
    pub source_of_best_lower: String,
}

impl From<&BoundReport> for ReportJson {
    fn from(r: &BoundReport) -> Self {
        Self {
            label: r.label.clone(),
            dimension: r.dimension,
            alpha: r.alpha,
            kmax: r.kmax,
            witness: r.witness_text.clone(),
            lower_bound: r.lower_bound,
            generic_lower: r.generic_lower,
            massey_cap: r.massey_cap,
            conjectured_upper: r.conjectured_upper,
            literature_upper: r.literature_upper,
            source_of_best_lower: r.source_of_best_lower().to_string(),
        }
    }
}

pub fn compute(text: &str, opts: ComputeOptions) -> Result<String, CliError> {
    let m = manifold(&parse(text)?)?;
    let report = bound::bound(&m)?;
    if opts.json {
        let json =
            serde_json::to_string(&ReportJson::from(&report)).expect("plain struct serializes");
        return Ok(json + "\n");
    }
    let mut out = render_report(&report);
    if opts.classes || opts.steenrod {
        out.push_str(&render_classes(&m, opts.steenrod)?);
    }
    Ok(out)
}

pub fn render_report(r: &BoundReport) -> String {
    let best = if r.source_of_best_lower() == skewbound::BoundSource::Method {
        "method"
    } else {
        "generic closed bound is stronger"
    };
    let rows = [
        ("manifold", r.label.clone()),
        ("dimension", r.dimension.to_string()),
        ("alpha", r.alpha.to_string()),
        ("kmax", r.kmax.to_string()),
        ("witness", r.witness_text.clone()),
        (
            "lower bound",
            format!("{}  (2n + 2kmax + 1)", r.lower_bound),
        ),
        (
            "generic lower",
            format!("{}  (2n + 2, closed)", r.generic_lower),
        ),
        ("best lower", format!("{}  [{best}]", r.best_lower())),
        ("massey cap", format!("{}  (n - alpha)", r.massey_cap)),
        ("conjectured upper", r.conjectured_upper.to_string()),
        ("literature upper", r.literature_upper.to_string()),
    ];
    let mut out = String::new();
    for (k, v) in rows {
        writeln!(out, "{k:<18} {v}").unwrap();
    }
    out
}

/// Nonzero dual components in normal form, optionally with `Sq^1` and `Sq^2`.
fn render_classes(m: &ManifoldData, squares: bool) -> Result<String, CliError> {
    let ring = bound::test_ring(m)?;
    let dual = bound::dual_class(m)?;
    let table = ring.table();
    let mut out = String::from("dual classes:\n");
    for (d, c) in dual.components() {
        let c = ring.normal_form(c);
        if d == 0 || c.is_zero() {
            continue;
        }
        writeln!(out, "  wbar{d} = {}", c.display(table)).unwrap();
        if squares {
            for i in 1..=2 {
                let s = steenrod::sq(i, &c, &ring)?;
                writeln!(out, "    Sq^{i} = {}", s.display(table)).unwrap();
            }
        }
    }
    Ok(out)
}
