//! Discriminant relations among the subfields of small Galois closures.

use arith::quadratic::{fundamental_of, is_fundamental};
use arith::FactoredInt;
use fields::FieldRecord;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RelationError {
    #[error("the two quadratic fields coincide (d = {0})")]
    Degenerate(i64),
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("discriminant {0} is a square: the cubic field is cyclic")]
    CyclicInput(FactoredInt),
    #[error("quartic discriminant {d4} over cubic discriminant {d3} is not a square")]
    InconsistentPair { d4: FactoredInt, d3: FactoredInt },
}

/// Third quadratic subfield of `Q(sqrt d1, sqrt d2)` and the discriminant of
/// the biquadratic field.
pub fn v4_complete(d1: i64, d2: i64) -> Result<(i64, FactoredInt), RelationError> {
    for d in [d1, d2] {
        if !is_fundamental(d) {
            return Err(RelationError::NotFundamental(d));
        }
    }
    if d1 == d2 {
        return Err(RelationError::Degenerate(d1));
    }
    let d3 = fundamental_of(d1 as i128 * d2 as i128) as i64;
    let f = |n: i64| FactoredInt::from_i64(n).expect("nonzero");
    Ok((d3, f(d1).mul(&f(d2)).mul(&f(d3))))
}

/// Quadratic resolvent discriminant and sextic closure discriminant of a
/// non-Galois cubic field of discriminant `disc3`.
pub fn s3_closure_disc_of(disc3: &FactoredInt) -> Result<(i64, FactoredInt), RelationError> {
    if disc3.is_square() {
        return Err(RelationError::CyclicInput(disc3.clone()));
    }
    let squarefree = FactoredInt::from_parts(disc3.is_negative(), disc3.factors().iter().map(|(&p, &e)| (p, e % 2)));
    let core = squarefree.to_i128().expect("squarefree part fits");
    let d2 = fundamental_of(core) as i64;
    let d6 = disc3.pow(2).mul(&FactoredInt::from_i64(d2).expect("nonzero"));
    Ok((d2, d6))
}

pub fn s3_closure_disc(cubic: &FieldRecord) -> Result<(i64, FactoredInt), RelationError> {
    s3_closure_disc_of(&cubic.disc)
}

/// Discriminants attached to an A4 quartic of discriminant `d4` with cyclic
/// cubic resolvent of discriminant `d3`: the sextic subfield and the closure.
pub fn a4_relations(d4: &FactoredInt, d3: &FactoredInt) -> Result<(FactoredInt, FactoredInt), RelationError> {
    let inconsistent = || RelationError::InconsistentPair { d4: d4.clone(), d3: d3.clone() };
    if !d3.is_square() {
        return Err(inconsistent());
    }
    match d4.checked_div(d3) {
        Some(q) if q.is_square() => {}
        _ => return Err(inconsistent()),
    }
    let d6 = d4.mul(d3);
    let dl = d4.pow(2).mul(&d6);
    Ok((d6, dl))
}

/// Discriminant of the sextic field attached to an S4 quartic and its cubic
/// resolvent.
pub fn s4_sextic_disc(d4: &FactoredInt, d3: &FactoredInt) -> FactoredInt {
    d4.mul(d3)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fi(n: i64) -> FactoredInt {
        FactoredInt::from_i64(n).unwrap()
    }

    #[test]
    fn biquadratic_completion() {
        assert_eq!(v4_complete(5, 8).unwrap(), (40, fi(1600)));
        assert_eq!(v4_complete(-3, -4).unwrap(), (12, fi(144)));
        assert_eq!(v4_complete(-4, -4), Err(RelationError::Degenerate(-4)));
        assert_eq!(v4_complete(9, 5), Err(RelationError::NotFundamental(9)));
    }

    #[test]
    fn closure_discriminants() {
        assert_eq!(s3_closure_disc_of(&fi(-23)).unwrap(), (-23, fi(-12167)));
        assert_eq!(s3_closure_disc_of(&fi(148)).unwrap(), (37, fi(148 * 148 * 37)));
        assert!(matches!(s3_closure_disc_of(&fi(49)), Err(RelationError::CyclicInput(_))));
    }

    #[test]
    fn a4_pairs() {
        assert_eq!(a4_relations(&fi(196), &fi(49)).unwrap(), (fi(196 * 49), fi(196 * 196 * 196 * 49)));
        assert_eq!(a4_relations(&fi(49), &fi(49)).unwrap(), (fi(49 * 49), fi(49).pow(4)));
        assert!(a4_relations(&fi(50), &fi(49)).is_err());
    }
}
