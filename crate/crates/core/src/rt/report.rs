use num_traits::{Signed, ToPrimitive};
use serde::Serialize;

use super::formulas::{eval_formula, FormulaId, Q};
use crate::constructions::{ConstructionKind, ConstructionReport};
use crate::error::{Error, Result};

/// One construction against its closed form. Values are finite-n data, not
/// estimates of the limit.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CompareRow {
    pub construction: String,
    pub n: usize,
    pub edges: usize,
    pub delta: Option<String>,
    pub density: f64,
    pub density_exact: String,
    pub formula: String,
    pub formula_value: f64,
    pub gap: f64,
    pub gap_exact: String,
    pub alpha_over_n: Option<f64>,
    pub freeness: String,
}

fn widen(r: num_rational::Ratio<i64>) -> Q {
    Q::new(*r.numer() as i128, *r.denom() as i128)
}

pub fn formula_for(report: &ConstructionReport) -> Result<FormulaId> {
    let delta = || {
        report
            .delta
            .map(widen)
            .ok_or_else(|| Error::Precondition(format!("{} report carries no δ", report.kind.name())))
    };
    Ok(match report.kind {
        ConstructionKind::K3K3 => FormulaId::RhoK3K3 { delta: delta()? },
        ConstructionKind::K3K4 => FormulaId::RhoK3K4 { delta: delta()? },
        ConstructionKind::K3K5 => FormulaId::RhoK3K5 { delta: delta()? },
        ConstructionKind::K3K6 => FormulaId::K3K6Lower { delta: delta()? },
        ConstructionKind::Thm12Odd { s } => FormulaId::Thm12Odd { s },
        ConstructionKind::Thm12Even { s } => FormulaId::Thm12Even { s },
    })
}

pub fn compare_report(reports: &[ConstructionReport]) -> Result<Vec<CompareRow>> {
    reports
        .iter()
        .map(|r| {
            let f = formula_for(r)?;
            let value = eval_formula(&f)?;
            let formula = value.exact.expect("closed forms are rational");
            let n = r.n() as i128;
            let density = Q::new(r.actual_edges as i128, (n * n).max(1));
            let gap = (density - formula).abs();
            Ok(CompareRow {
                construction: r.kind.name(),
                n: r.n(),
                edges: r.actual_edges,
                delta: r.delta.map(|d| d.to_string()),
                density: density.to_f64().unwrap_or(f64::NAN),
                density_exact: density.to_string(),
                formula: f.name(),
                formula_value: value.value,
                gap: gap.to_f64().unwrap_or(f64::NAN),
                gap_exact: gap.to_string(),
                alpha_over_n: r.alpha.as_ref().map(|a| a.value as f64 / r.n().max(1) as f64),
                freeness: match r.is_free() {
                    None => "unchecked",
                    Some(true) => "free",
                    Some(false) => "violated",
                }
                .into(),
            })
        })
        .collect()
}

pub const COMPARE_HEADER: &str =
    "construction,n,edges,delta,density,density_exact,formula,formula_value,gap,gap_exact,alpha_over_n,freeness";

pub fn rows_to_csv(rows: &[CompareRow]) -> String {
    let mut w = csv::WriterBuilder::new().has_headers(false).from_writer(Vec::new());
    for row in rows {
        w.serialize(row).expect("in-memory csv");
    }
    let body = String::from_utf8(w.into_inner().expect("in-memory csv")).expect("utf8");
    format!("{COMPARE_HEADER}\n{body}")
}
