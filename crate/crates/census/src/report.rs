//! Exponent fits of family counts and the per-family summary.

use dirichlet::{half_decade_grid, tauberian_fit};
use serde::Serialize;

use crate::family::family_spec;
use crate::{count_family_grid, unimplemented, CensusError, CensusOptions};

/// Largest accepted `|a_hat - 1/a(H)|` for a consistent verdict.
pub const A_TOLERANCE: f64 = 0.05;
/// Largest accepted `|w_hat - b(H)|` for a consistent verdict.
pub const B_TOLERANCE: f64 = 1.0;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Consistent,
    Inconsistent,
    /// Too few nonzero counts past the first decade to fit.
    InsufficientData,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CountReport {
    pub label: String,
    pub grid: Vec<u64>,
    pub counts: Vec<u64>,
    pub a_hat: Option<f64>,
    pub w_hat: Option<f64>,
    /// `1/a(H)`.
    pub a_conj: f64,
    /// `b(H)`.
    pub b_conj: usize,
    pub verdict: Verdict,
}

/// `X = 10^(k/2)` for `k = 8..=18`.
pub fn default_grid() -> Vec<u64> {
    half_decade_grid(8, 18)
}

fn invariants(label: &str) -> Result<(String, usize, usize), CensusError> {
    let entry = lattice_groups::lookup(label).ok_or_else(|| CensusError::UnknownFamily(label.to_string()))?;
    let a = entry.group.a_invariant().expect("nontrivial group");
    let b = entry.group.b_invariant().expect("nontrivial group");
    Ok((entry.label.clone(), a, b))
}

/// Fits counts already computed on `grid`. The first decade of the grid is
/// left out of the regression.
pub fn fit_counts(label: &str, grid: &[u64], counts: &[u64]) -> Result<CountReport, CensusError> {
    let (label, a, b) = invariants(label)?;
    let a_conj = 1.0 / a as f64;
    let start = grid.first().copied().unwrap_or(0).saturating_mul(10);
    let (xs, ys): (Vec<f64>, Vec<f64>) = grid
        .iter()
        .zip(counts)
        .filter(|(&x, &c)| x >= start && c > 0)
        .map(|(&x, &c)| (x as f64, c as f64))
        .unzip();
    let fit = tauberian_fit(&xs, &ys).ok();
    let verdict = match &fit {
        None => Verdict::InsufficientData,
        Some(f) if (f.a_hat - a_conj).abs() <= A_TOLERANCE && (f.w_hat - b as f64).abs() <= B_TOLERANCE => {
            Verdict::Consistent
        }
        Some(_) => Verdict::Inconsistent,
    };
    Ok(CountReport {
        label,
        grid: grid.to_vec(),
        counts: counts.to_vec(),
        a_hat: fit.as_ref().map(|f| f.a_hat),
        w_hat: fit.as_ref().map(|f| f.w_hat),
        a_conj,
        b_conj: b,
        verdict,
    })
}

pub fn fit_family(label: &str, grid: &[u64]) -> Result<CountReport, CensusError> {
    fit_family_with(label, grid, &CensusOptions::default())
}

pub fn fit_family_with(label: &str, grid: &[u64], options: &CensusOptions) -> Result<CountReport, CensusError> {
    let counts = count_family_grid(label, grid, options)?;
    fit_counts(label, grid, &counts)
}

/// `N(X; H) / X^(1/a(H))` along the report's grid.
pub fn lower_bound_ratios(report: &CountReport) -> Vec<f64> {
    report.grid.iter().zip(&report.counts).map(|(&x, &c)| c as f64 / (x as f64).powf(report.a_conj)).collect()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SummaryRow {
    pub label: String,
    pub group: &'static str,
    pub a: usize,
    pub b: usize,
    pub implemented: bool,
    /// Why the family is not counted, when it is not.
    pub note: Option<String>,
    pub a_hat: Option<f64>,
    pub w_hat: Option<f64>,
}

/// One row per nontrivial catalog entry, without fits.
pub fn summary_table() -> Vec<SummaryRow> {
    summary_table_with(&[])
}

/// As [`summary_table`], filling in fitted values from `reports`.
pub fn summary_table_with(reports: &[CountReport]) -> Vec<SummaryRow> {
    lattice_groups::catalog()
        .iter()
        .filter(|e| e.label != lattice_groups::TRIVIAL_LABEL)
        .map(|e| {
            let implemented = family_spec(&e.label).is_some();
            let note = if implemented {
                (e.label == "H_{12,c}").then(|| "counted from imported sextic fields only".to_string())
            } else {
                Some(unimplemented(&e.label).to_string())
            };
            let fit = reports.iter().find(|r| r.label == e.label);
            SummaryRow {
                label: e.label.clone(),
                group: e.iso_label,
                a: e.group.a_invariant().expect("nontrivial group"),
                b: e.group.b_invariant().expect("nontrivial group"),
                implemented,
                note,
                a_hat: fit.and_then(|r| r.a_hat),
                w_hat: fit.and_then(|r| r.w_hat),
            }
        })
        .collect()
}
