//! Reference path: build every torus of a family from its constituent fields
//! and evaluate the conductor through the generic formula table. Slow, but
//! independent of the closed forms in `count`.

use std::collections::BTreeSet;

use arith::{gcd, isqrt, FactoredInt};
use disc_calculus::{bindings, conductor_eval, Bindings};
use fields::{enum_cubic_s3, enum_cyclic_cubic, enum_cyclic_quartic, enum_quadratic, FieldRecord, Provenance, Signature};

use crate::count::{cubic_conductors, third_quadratic};
use crate::family::{family_spec, RoleSymmetry, Shape};
use crate::import::sextic_roles;
use crate::CensusError;

fn fi(n: i128) -> FactoredInt {
    FactoredInt::from_i128(n).expect("nonzero discriminant")
}

fn quadratics(bound: u64) -> Vec<i64> {
    enum_quadratic(bound).map(|r| r.disc_i128().unwrap() as i64).collect()
}

/// Cyclic quartics with `D4/D2 <= x` as `(D4, D2)`.
fn quartics(x: u64) -> Vec<(i128, i64)> {
    let bound = x.saturating_mul(isqrt(x) + 1);
    enum_cyclic_quartic(bound)
        .filter_map(|r| match r.provenance {
            Provenance::CyclicQuartic { conductor, quadratic_disc, .. } if conductor * conductor <= x => {
                Some((r.disc_i128().unwrap(), quadratic_disc))
            }
            _ => None,
        })
        .collect()
}

fn biquadratic_bindings(x: u64, symmetry: RoleSymmetry) -> Vec<Bindings> {
    let discs = quadratics(x);
    let mut fields = BTreeSet::new();
    for (i, &a) in discs.iter().enumerate() {
        for &b in &discs[i + 1..] {
            let c = third_quadratic(a, b);
            if c.unsigned_abs() <= x {
                let mut t = [a, b, c];
                t.sort();
                fields.insert(t);
            }
        }
    }
    let mut out = Vec::new();
    for [a, b, c] in fields {
        let orders = [[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
        let assignments: BTreeSet<[i64; 3]> = orders.iter().map(|o| symmetry.canonical(*o)).collect();
        for [d1, d2, d3] in assignments {
            out.push(bindings([
                ("D_1", fi(d1 as i128)),
                ("D_2", fi(d2 as i128)),
                ("D_3", fi(d3 as i128)),
                ("D_L", fi(d1 as i128 * d2 as i128 * d3 as i128)),
            ]));
        }
    }
    out
}

fn sextic_bindings(x: u64) -> Vec<Bindings> {
    let mut out = Vec::new();
    let conductors = cubic_conductors(isqrt(x));
    for d in quadratics(x) {
        let da = d.unsigned_abs() as i128;
        for &(f, fields) in &conductors {
            let g = gcd(d.unsigned_abs(), f) as i128;
            let f = f as i128;
            // Conductor-discriminant: characters 1, chi2, chi3 twice, chi2 chi3 twice.
            let d6 = da * f * f * (da * f / g).pow(2);
            for _ in 0..fields {
                out.push(bindings([("D_2", fi(d as i128)), ("D_3", fi(f * f)), ("D_6", fi(d6))]));
            }
        }
    }
    out
}

fn s3_bindings(x: u64) -> Vec<Bindings> {
    let mut out = Vec::new();
    for sig in [Signature::Negative, Signature::Positive] {
        for r in enum_cubic_s3(x, sig) {
            let d3 = r.disc_i128().unwrap();
            let d2 = arith::quadratic::fundamental_of(d3);
            out.push(bindings([("D_3", fi(d3)), ("D_2", fi(d2)), ("D_6", fi(d3 * d3 * d2))]));
        }
    }
    out
}

fn tori(shape: Shape, x: u64, import: Option<&[FieldRecord]>, label: &str) -> Result<Vec<Bindings>, CensusError> {
    let quad_l = |discs: Vec<i64>| discs.into_iter().map(|d| bindings([("D_L", fi(d as i128))])).collect();
    Ok(match shape {
        Shape::QuadraticPower(_) => quad_l(quadratics(x)),
        Shape::CyclicCubic => enum_cyclic_cubic(x).map(|r| bindings([("D_L", r.disc.clone())])).collect(),
        Shape::CyclicQuartic { .. } => quartics(x)
            .into_iter()
            .map(|(d4, d2)| bindings([("D_4", fi(d4)), ("D_2", fi(d2 as i128))]))
            .collect(),
        Shape::QuadraticPairSquare | Shape::QuadraticPairProduct { ordered: true } => {
            biquadratic_bindings(x, RoleSymmetry::Ordered)
        }
        Shape::QuadraticPairProduct { ordered: false } => biquadratic_bindings(x, RoleSymmetry::SwapSecondThird),
        Shape::Biquadratic(sym) => biquadratic_bindings(x, sym),
        Shape::SexticLcmSquare | Shape::SexticProduct | Shape::SexticLcmCube => sextic_bindings(x),
        Shape::S3Cubic { .. } => s3_bindings(x),
        Shape::QuadraticQuartic => {
            let discs = quadratics(x);
            let mut out = Vec::new();
            for (d4, d2p) in quartics(x) {
                for &d2 in discs.iter().filter(|&&d| d != d2p) {
                    out.push(bindings([("D_2", fi(d2 as i128)), ("D_4'", fi(d4)), ("D_2'", fi(d2p as i128))]));
                }
            }
            out
        }
        Shape::ImportedSextic => {
            let records = import.ok_or_else(|| CensusError::NeedsImport(label.to_string()))?;
            let mut out = Vec::new();
            for r in records.iter().filter(|r| r.degree == 6) {
                let (d6, d3, d2) = sextic_roles(label, r)?;
                out.push(bindings([("D_1", fi(d6)), ("D_4", fi(d3)), ("D_6", fi(d2))]));
            }
            out
        }
    })
}

/// Sorted conductors of every torus of `label` with conductor at most `x`, built
/// field by field. Meant for small `x`.
pub fn conductors_by_enumeration(
    label: &str,
    x: u64,
    import: Option<&[FieldRecord]>,
) -> Result<Vec<u128>, CensusError> {
    let spec = family_spec(label).ok_or_else(|| crate::unimplemented(label))?;
    let mut out = Vec::new();
    for b in tori(spec.shape, x, import, &spec.label)? {
        let c = conductor_eval(&spec.label, &b)?;
        match c.to_i128() {
            Some(v) if v <= x as i128 => out.push(v as u128),
            _ => {}
        }
    }
    out.sort();
    Ok(out)
}
