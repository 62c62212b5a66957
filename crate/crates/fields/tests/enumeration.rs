use std::collections::HashMap;

use arith::quadratic::fundamental_discriminants;
use fields::{
    enum_cubic_s3, enum_cyclic_cubic, enum_cyclic_quartic, enum_quadratic, quad_class_group, BinaryCubicForm,
    GaloisLabel, Provenance, Signature,
};

fn discs(records: impl Iterator<Item = fields::FieldRecord>) -> Vec<i128> {
    records.map(|r| r.disc_i128().unwrap()).collect()
}

#[test]
fn quadratic_small_bounds() {
    assert!(enum_quadratic(2).next().is_none());
    let d: Vec<i128> = discs(enum_quadratic(10));
    assert_eq!(d, vec![-3, -4, 5, -7, -8, 8]);
}

#[test]
fn cyclic_cubic_conductors() {
    let records: Vec<_> = enum_cyclic_cubic(63 * 63).collect();
    let per_disc = |n: i128| records.iter().filter(|r| r.disc_i128() == Some(n)).count();
    assert_eq!(per_disc(49), 1);
    assert_eq!(per_disc(81), 1);
    assert_eq!(per_disc(3969), 2);
    assert_eq!(records[0].disc_i128(), Some(49));
    assert!(records.iter().all(|r| r.galois_label == GaloisLabel::C3));
}

// Discriminants of the first non-Galois cubic fields, each once.
const FIRST_COMPLEX: &[i128] = &[
    -23, -31, -44, -59, -76, -83, -87, -104, -107, -108, -116, -135, -139, -140, -152, -172, -175, -199, -200, -204,
];
const FIRST_REAL: &[i128] =
    &[148, 229, 257, 316, 321, 404, 469, 473, 564, 568, 621, 697, 733, 756, 761, 785, 788, 837, 892, 940];

#[test]
fn smallest_noncyclic_cubics() {
    let neg = discs(enum_cubic_s3(204, Signature::Negative));
    assert_eq!(neg, FIRST_COMPLEX);
    let pos = discs(enum_cubic_s3(940, Signature::Positive));
    assert_eq!(pos, FIRST_REAL);
}

#[test]
fn cubic_records_carry_reduced_forms() {
    for sig in [Signature::Negative, Signature::Positive] {
        for r in enum_cubic_s3(20_000, sig) {
            let Provenance::CubicForm(form) = r.provenance else { panic!("missing form") };
            assert_eq!(form.canonical(), form);
            let d = form.disc();
            assert!(d.rem_euclid(4) <= 1, "{d}");
            assert!(!arith::is_square(d));
            assert_eq!(r.disc_i128(), Some(d));
        }
    }
}

#[test]
fn cubic_forms_are_pairwise_inequivalent() {
    let forms: Vec<BinaryCubicForm> = enum_cubic_s3(5_000, Signature::Negative)
        .chain(enum_cubic_s3(5_000, Signature::Positive))
        .map(|r| match r.provenance {
            Provenance::CubicForm(f) => f,
            _ => unreachable!(),
        })
        .collect();
    let moves = [[[1, 1], [0, 1]], [[0, -1], [1, 0]], [[2, 1], [1, 1]], [[1, 0], [-3, 1]]];
    let mut seen = std::collections::HashSet::new();
    for f in &forms {
        for m in &moves {
            assert_eq!(f.substitute(m).canonical(), *f);
        }
        assert!(seen.insert(*f));
    }
}

#[test]
fn reflection_identity_up_to_5000() {
    let mut cubic_count: HashMap<i128, u64> = HashMap::new();
    for r in enum_cubic_s3(5000, Signature::Negative)
        .chain(enum_cubic_s3(5000, Signature::Positive))
        .chain(enum_cyclic_cubic(5000))
    {
        *cubic_count.entry(r.disc_i128().unwrap()).or_default() += 1;
    }
    let mut checked = 0;
    for d in fundamental_discriminants(5000) {
        let h3 = quad_class_group(d).unwrap().h_p(3).unwrap();
        let fields = cubic_count.get(&(d as i128)).copied().unwrap_or(0);
        assert_eq!((h3 - 1) / 2, fields, "d = {d}");
        checked += 1;
    }
    assert!(checked > 3000);
}

#[test]
fn cyclic_quartics() {
    let records: Vec<_> = enum_cyclic_quartic(2197).collect();
    let d: Vec<i128> = discs(records.iter().cloned());
    // Conductor 16 carries two: the real subfield of Q(zeta_16) and an imaginary one.
    assert_eq!(d, vec![125, 1125, 2000, 2048, 2048, 2197]);
    assert_eq!(records[0].subfield_discs(), vec![5.into()]);
    assert!(enum_cyclic_quartic(124).next().is_none());
}
