//! Families counted from imported field tables.

use fields::{FieldRecord, Provenance};
use num_traits::ToPrimitive;

use crate::count::{bucket, cumulate};
use crate::CensusError;

/// `(D6, D3, D2)` of an imported dihedral sextic. Rows list the quadratic
/// subfield first: `subfield_discs = "D2;D3"`.
pub(crate) fn sextic_roles(label: &str, record: &FieldRecord) -> Result<(i128, i128, i128), CensusError> {
    let bad = |reason: &str| CensusError::BadImport {
        label: label.to_string(),
        row: record.label(),
        reason: reason.to_string(),
    };
    let Provenance::Imported { subfield_discs, .. } = &record.provenance else {
        return Err(bad("not an imported row"));
    };
    let [d2, d3] = subfield_discs.as_slice() else {
        return Err(bad("expected exactly two subfield discriminants, quadratic first"));
    };
    let (Some(d2), Some(d3)) = (d2.to_i128(), d3.to_i128()) else {
        return Err(bad("subfield discriminant out of range"));
    };
    let d6 = record.disc_i128().ok_or_else(|| bad("discriminant out of range"))?;
    if !i64::try_from(d2).is_ok_and(arith::quadratic::is_fundamental) {
        return Err(bad("first subfield discriminant is not fundamental"));
    }
    if d3 == 0 || d6 % (d3 * d2) != 0 {
        return Err(bad("D2 D3 does not divide D6"));
    }
    Ok((d6, d3, d2))
}

/// Imported sextics with `|D6 / (D3 D2)| <= X`.
pub(crate) fn imported_sextic(label: &str, grid: &[u64], records: &[FieldRecord]) -> Result<Vec<u64>, CensusError> {
    let mut hist = vec![0; grid.len()];
    for r in records.iter().filter(|r| r.degree == 6) {
        let (d6, d3, d2) = sextic_roles(label, r)?;
        bucket(&mut hist, grid, (d6 / (d3 * d2)).unsigned_abs(), 1);
    }
    Ok(cumulate(hist))
}
