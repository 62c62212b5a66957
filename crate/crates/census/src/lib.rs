//! Torus counts `N(X; H)` for the families with an explicit field-counting
//! bijection, exponent fits against `(1/a(H), b(H))`, and summary tables.

mod count;
mod enumerate;
mod family;
mod import;
mod report;

use disc_calculus::ConductorError;
use dirichlet::DirichletError;
use fields::FieldRecord;

pub use count::third_quadratic;
pub use enumerate::conductors_by_enumeration;
pub use family::{family_spec, implemented_labels, Constituent, FieldKind, RoleSymmetry, Shape, TorusFamilySpec};
pub use report::{
    default_grid, fit_counts, fit_family, fit_family_with, lower_bound_ratios, summary_table, summary_table_with,
    CountReport, SummaryRow, Verdict, A_TOLERANCE, B_TOLERANCE,
};

#[derive(Debug, thiserror::Error)]
pub enum CensusError {
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("{label} is not counted: {reason}")]
    Unimplemented { label: String, reason: String },
    #[error("{0} is counted from imported sextic fields; none were supplied")]
    NeedsImport(String),
    #[error("{label}: imported row {row}: {reason}")]
    BadImport { label: String, row: String, reason: String },
    #[error("bad grid: {0}")]
    BadGrid(String),
    #[error("{label}: X = {x} needs {kind} fields beyond the configured bound {bound}")]
    BoundExceeded { label: String, x: u64, kind: &'static str, bound: u64 },
    #[error(transparent)]
    Conductor(#[from] ConductorError),
    #[error(transparent)]
    Fit(#[from] DirichletError),
}

pub(crate) fn unimplemented(label: &str) -> CensusError {
    match lattice_groups::lookup(label) {
        None => CensusError::UnknownFamily(label.to_string()),
        Some(entry) => {
            let reason = match entry.iso_label {
                "D4" | "A4" | "S4" | "D4×C2" | "A4×C2" | "S4×C2" | "D6×C2" => {
                    "needs D4, A4 or S4 constituent fields, which are not enumerated here"
                }
                "D6" => "needs dihedral sextic fields; only H_{12,c} is counted, from imported data",
                _ => "no explicit counting bijection is implemented for this family",
            };
            CensusError::Unimplemented { label: entry.label.clone(), reason: reason.to_string() }
        }
    }
}

/// Limits on the fields listed one by one. Cyclic cubic and quartic fields
/// are swept by conductor up to `sqrt(X)` and need no limit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Largest `|d|` of an explicitly listed quadratic field.
    pub quadratic: u64,
    /// Largest `|D3|` of an enumerated non-Galois cubic field.
    pub s3_cubic: u64,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { quadratic: fields::defaults::QUADRATIC, s3_cubic: fields::defaults::S3_CUBIC }
    }
}

/// Bounds plus the imported fields used by import-backed families.
#[derive(Debug, Clone, Default)]
pub struct CensusOptions {
    pub bounds: Bounds,
    pub import: Option<Vec<FieldRecord>>,
}

/// `N(X; H)`: tori of family `label` with conductor at most `x`.
pub fn count_family(label: &str, x: u64) -> Result<u64, CensusError> {
    Ok(count_family_grid(label, &[x], &CensusOptions::default())?[0])
}

fn check_bound(label: &str, x: u64, kind: &'static str, needed: u64, bound: u64) -> Result<(), CensusError> {
    if needed > bound {
        return Err(CensusError::BoundExceeded { label: label.to_string(), x, kind, bound });
    }
    Ok(())
}

/// `N(X; H)` at every point of a nondecreasing grid.
pub fn count_family_grid(label: &str, grid: &[u64], options: &CensusOptions) -> Result<Vec<u64>, CensusError> {
    let spec = family_spec(label).ok_or_else(|| unimplemented(label))?;
    let label = spec.label.as_str();
    if grid.is_empty() || grid.windows(2).any(|w| w[1] < w[0]) {
        return Err(CensusError::BadGrid("grid must be nonempty and nondecreasing".into()));
    }
    let x = *grid.last().unwrap();
    let b = &options.bounds;
    let isqrt = arith::isqrt;
    // The largest field each shape lists explicitly.
    match spec.shape {
        Shape::Biquadratic(_) | Shape::QuadraticPairProduct { .. } | Shape::SexticLcmSquare => {
            check_bound(label, x, "quadratic", isqrt(x), b.quadratic)?
        }
        Shape::QuadraticPairSquare => check_bound(label, x, "quadratic", isqrt(x / 3), b.quadratic)?,
        Shape::S3Cubic { with_resolvent } => {
            check_bound(label, x, "S3 cubic", if with_resolvent { x / 3 } else { x }, b.s3_cubic)?
        }
        _ => {}
    }
    Ok(match spec.shape {
        Shape::QuadraticPower(k) => count::quadratic_power(grid, k),
        Shape::CyclicCubic => count::cyclic_cubic(grid),
        Shape::CyclicQuartic { absolute } => count::cyclic_quartic(grid, absolute),
        Shape::QuadraticPairSquare => count::quadratic_pairs_square(grid),
        Shape::QuadraticPairProduct { ordered } => count::quadratic_pairs_product(grid, ordered),
        Shape::Biquadratic(sym) => count::biquadratic(grid, sym.per_field()),
        Shape::SexticLcmSquare => count::sextic_lcm_square(grid),
        Shape::SexticProduct => count::sextic_product(grid),
        Shape::SexticLcmCube => count::sextic_lcm_cube(grid),
        Shape::S3Cubic { with_resolvent } => count::s3_cubic(grid, with_resolvent),
        Shape::QuadraticQuartic => count::quadratic_quartic_pairs(grid),
        Shape::ImportedSextic => {
            let records = options.import.as_deref().ok_or_else(|| CensusError::NeedsImport(label.to_string()))?;
            import::imported_sextic(label, grid, records)?
        }
    })
}
