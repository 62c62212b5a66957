//! Quadratic, cyclic cubic and cyclic quartic fields, all read off from
//! conductors and characters.

use arith::quadratic::fundamental_discriminants;
use arith::sieve::SpfSieve;
use arith::{isqrt, FactoredInt};

use crate::record::{FieldRecord, GaloisLabel, Provenance};

/// Quadratic fields with `|d| <= bound`, ordered by `|d|`, negative first.
pub fn enum_quadratic(bound: u64) -> impl Iterator<Item = FieldRecord> {
    fundamental_discriminants(bound).into_iter().map(|d| FieldRecord {
        degree: 2,
        galois_label: GaloisLabel::C2,
        disc: FactoredInt::from_i64(d).expect("nonzero"),
        provenance: Provenance::Quadratic { d },
    })
}

/// Factors `n` as `9^e * (distinct primes = 1 mod 3)` when it is a cyclic
/// cubic conductor, returning its prime support.
pub fn cubic_conductor_primes(n: u64, sieve: &SpfSieve) -> Option<Vec<u64>> {
    if n < 7 {
        return None;
    }
    let mut primes = Vec::new();
    for (p, e) in sieve.factor(n as usize) {
        let ok = if p == 3 { e == 2 } else { e == 1 && p % 3 == 1 };
        if !ok {
            return None;
        }
        primes.push(p as u64);
    }
    Some(primes)
}

/// Number of cyclic cubic fields of conductor `f` (zero if `f` is not a
/// conductor).
pub fn cyclic_cubic_multiplicity(f: u64, sieve: &SpfSieve) -> u32 {
    cubic_conductor_primes(f, sieve).map_or(0, |ps| 1 << (ps.len() - 1))
}

/// Cyclic cubic fields with `f^2 <= bound`, by conductor.
pub fn enum_cyclic_cubic(bound: u64) -> impl Iterator<Item = FieldRecord> {
    let fmax = isqrt(bound);
    let sieve = SpfSieve::new(fmax as usize);
    let mut out = Vec::new();
    for f in 7..=fmax {
        let Some(primes) = cubic_conductor_primes(f, &sieve) else { continue };
        let disc = FactoredInt::from_parts(false, primes.iter().map(|&p| (p, if p == 3 { 4 } else { 2 })));
        for index in 0..1u32 << (primes.len() - 1) {
            out.push(FieldRecord {
                degree: 3,
                galois_label: GaloisLabel::C3,
                disc: disc.clone(),
                provenance: Provenance::CyclicCubic { conductor: f, index },
            });
        }
    }
    out.into_iter()
}

/// Local data of an order-4 character at one prime.
#[derive(Clone, Copy)]
struct LocalChoice {
    /// Contribution to the conductor of the character's square.
    square_conductor: u64,
    /// Number of local characters with this shape.
    count: u32,
    order_four: bool,
}

fn local_choices(p: u64, e: u32) -> Vec<LocalChoice> {
    let quadratic = |count| LocalChoice { square_conductor: 1, count, order_four: false };
    match (p, e) {
        (2, 2) => vec![quadratic(1)],
        (2, 3) => vec![quadratic(2)],
        // The order-4 characters mod 16 square to the even character mod 8.
        (2, 4) => vec![LocalChoice { square_conductor: 8, count: 4, order_four: true }],
        (2, _) => Vec::new(),
        (_, 1) if p % 4 == 1 => vec![quadratic(1), LocalChoice { square_conductor: p, count: 2, order_four: true }],
        (_, 1) => vec![quadratic(1)],
        _ => Vec::new(),
    }
}

/// Cyclic quartic fields of conductor `f`, as `(quadratic subfield disc,
/// number of fields)` pairs.
pub fn cyclic_quartic_shapes(f: u64, sieve: &SpfSieve) -> Vec<(u64, u32)> {
    let mut acc: Vec<(u64, u32, bool)> = vec![(1, 1, false)];
    for (p, e) in sieve.factor(f as usize) {
        let choices = local_choices(p as u64, e);
        if choices.is_empty() {
            return Vec::new();
        }
        acc = acc
            .iter()
            .flat_map(|&(sq, n, four)| {
                choices.iter().map(move |c| (sq * c.square_conductor, n * c.count, four || c.order_four))
            })
            .collect();
    }
    let mut shapes: Vec<(u64, u32)> = Vec::new();
    for (sq, n, four) in acc {
        if !four {
            continue;
        }
        // Characters come in conjugate pairs, one field per pair.
        match shapes.iter_mut().find(|(d, _)| *d == sq) {
            Some(slot) => slot.1 += n / 2,
            None => shapes.push((sq, n / 2)),
        }
    }
    shapes.sort_unstable();
    shapes
}

/// Cyclic quartic fields with `f(chi)^2 f(chi^2) <= bound`.
pub fn enum_cyclic_quartic(bound: u64) -> impl Iterator<Item = FieldRecord> {
    let fmax = isqrt(bound / 5);
    let sieve = SpfSieve::new(fmax.max(1) as usize);
    let mut out = Vec::new();
    for f in 5..=fmax {
        for (d2, count) in cyclic_quartic_shapes(f, &sieve) {
            let Some(disc) = (f as u128 * f as u128).checked_mul(d2 as u128) else { continue };
            if disc > bound as u128 {
                continue;
            }
            let factored = FactoredInt::from_i128(disc as i128).expect("nonzero");
            for index in 0..count {
                out.push(FieldRecord {
                    degree: 4,
                    galois_label: GaloisLabel::C4,
                    disc: factored.clone(),
                    provenance: Provenance::CyclicQuartic { conductor: f, quadratic_disc: d2 as i64, index },
                });
            }
        }
    }
    out.sort_by(|a, b| a.sort_key().cmp(&b.sort_key()));
    out.into_iter()
}
