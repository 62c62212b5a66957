//! Closed-form and sweep counters, one per counting shape. Every counter
//! takes a nondecreasing grid and returns the count at each grid point.

use arith::quadratic::{fundamental_discriminants, fundamental_multiplicity, FundamentalCounter};
use arith::sieve::SpfSieve;
use arith::{gcd, icbrt, iroot, isqrt};
use fields::{cubic_conductor_primes, cyclic_quartic_shapes, enum_cubic_s3, FieldRecord, Signature};
use rayon::prelude::*;

/// `#{d fundamental : |d| <= y}` with a small prefix table in front of the
/// Mobius counter.
pub(crate) struct QuadCount {
    prefix: Vec<u32>,
    counter: FundamentalCounter,
}

const PREFIX_LIMIT: u64 = 1 << 22;

impl QuadCount {
    pub(crate) fn new(max_y: u64) -> Self {
        let t = max_y.min(PREFIX_LIMIT) as usize;
        let mut prefix = Vec::with_capacity(t + 1);
        let mut acc = 0u32;
        for m in fundamental_multiplicity(t) {
            acc += m as u32;
            prefix.push(acc);
        }
        QuadCount { prefix, counter: FundamentalCounter::new(max_y.max(1)) }
    }

    pub(crate) fn q(&self, y: u64) -> u64 {
        match self.prefix.get(y as usize) {
            Some(&c) => c as u64,
            None => self.counter.count(y),
        }
    }
}

/// Adds `weight` to the first grid bucket that admits `value`.
pub(crate) fn bucket(hist: &mut [u64], grid: &[u64], value: u128, weight: u64) {
    let k = grid.partition_point(|&x| (x as u128) < value);
    if k < hist.len() {
        hist[k] += weight;
    }
}

pub(crate) fn cumulate(mut hist: Vec<u64>) -> Vec<u64> {
    for i in 1..hist.len() {
        hist[i] += hist[i - 1];
    }
    hist
}

fn merge(mut a: Vec<u64>, b: Vec<u64>) -> Vec<u64> {
    a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
    a
}

fn max_of(grid: &[u64]) -> u64 {
    grid.last().copied().unwrap_or(0)
}

/// Quadratic fields with `|d|^k <= X`.
pub(crate) fn quadratic_power(grid: &[u64], k: u32) -> Vec<u64> {
    let qc = QuadCount::new(iroot(max_of(grid), k));
    grid.iter().map(|&x| qc.q(iroot(x, k))).collect()
}

/// Cyclic cubic conductors up to `fmax` with their field counts.
pub(crate) fn cubic_conductors(fmax: u64) -> Vec<(u64, u64)> {
    let sieve = SpfSieve::new(fmax.max(1) as usize);
    (7..=fmax)
        .filter_map(|f| cubic_conductor_primes(f, &sieve).map(|ps| (f, 1u64 << (ps.len() - 1))))
        .collect()
}

/// Cyclic cubic fields with `f^2 <= X`.
pub(crate) fn cyclic_cubic(grid: &[u64]) -> Vec<u64> {
    let conductors = cubic_conductors(isqrt(max_of(grid)));
    let mut hist = vec![0; grid.len()];
    for &(f, m) in &conductors {
        bucket(&mut hist, grid, (f as u128).pow(2), m);
    }
    cumulate(hist)
}

/// Cyclic quartic fields as `(conductor, quadratic subfield disc, count)`.
pub(crate) fn quartic_shapes(fmax: u64) -> Vec<(u64, u64, u64)> {
    let sieve = SpfSieve::new(fmax.max(1) as usize);
    (5..=fmax)
        .flat_map(|f| cyclic_quartic_shapes(f, &sieve).into_iter().map(move |(d2, n)| (f, d2, n as u64)))
        .collect()
}

/// Cyclic quartic fields with `D4/D2 = f^2 <= X`, or with `D4 <= X` when
/// `absolute`.
pub(crate) fn cyclic_quartic(grid: &[u64], absolute: bool) -> Vec<u64> {
    let x = max_of(grid);
    let fmax = if absolute { isqrt(x / 5) } else { isqrt(x) };
    let mut hist = vec![0; grid.len()];
    for (f, d2, n) in quartic_shapes(fmax) {
        let v = (f as u128).pow(2) * if absolute { d2 as u128 } else { 1 };
        bucket(&mut hist, grid, v, n);
    }
    cumulate(hist)
}

/// Ordered pairs of quadratic fields `(A, B)` with `|D_A| |D_B| <= X`,
/// including `A = B`. Dirichlet hyperbola over the Mobius counter.
fn ordered_products(qc: &QuadCount, mult: &[u8], x: u64) -> u64 {
    let s = isqrt(x);
    let head: u64 = (3..=s as usize)
        .into_par_iter()
        .filter(|&a| mult[a] != 0)
        .map(|a| mult[a] as u64 * qc.q(x / a as u64))
        .sum();
    let qs = qc.q(s);
    2 * head - qs * qs
}

/// Pairs of distinct quadratic fields with `|D_A| |D_B| <= X`.
pub(crate) fn quadratic_pairs_product(grid: &[u64], ordered: bool) -> Vec<u64> {
    let x = max_of(grid);
    let qc = QuadCount::new(x);
    let mult = fundamental_multiplicity(isqrt(x) as usize);
    grid.iter()
        .map(|&x| {
            let distinct = ordered_products(&qc, &mult, x) - qc.q(isqrt(x));
            if ordered {
                distinct
            } else {
                distinct / 2
            }
        })
        .collect()
}

/// Ordered pairs of distinct quadratic fields with `|D_A| |D_B|^2 <= X`.
pub(crate) fn quadratic_pairs_square(grid: &[u64]) -> Vec<u64> {
    let x = max_of(grid);
    let qc = QuadCount::new(x / 9);
    let bmax = isqrt(x / 3);
    let mult = fundamental_multiplicity(bmax as usize);
    grid.iter()
        .map(|&x| {
            let all: u64 = (3..=isqrt(x / 3) as usize)
                .into_par_iter()
                .filter(|&b| mult[b] != 0)
                .map(|b| mult[b] as u64 * qc.q(x / (b as u64 * b as u64)))
                .sum();
            all - qc.q(icbrt(x))
        })
        .collect()
}

/// Discriminant of the third quadratic subfield of `Q(sqrt a, sqrt b)`.
pub fn third_quadratic(a: i64, b: i64) -> i64 {
    let g = gcd(a.unsigned_abs(), b.unsigned_abs()) as i64;
    let q = (a / g) * (b / g);
    match q.rem_euclid(4) {
        0 | 1 => q,
        _ => 4 * q,
    }
}

/// Position of a fundamental discriminant in the `|d|`-then-sign order.
fn order_key(d: i64) -> (u64, bool) {
    (d.unsigned_abs(), d > 0)
}

/// Biquadratic fields with `D1 D2 D3 <= X`, each counted `per_field` times.
pub(crate) fn biquadratic(grid: &[u64], per_field: u64) -> Vec<u64> {
    let x = max_of(grid);
    let discs = fundamental_discriminants(isqrt(x / 3));
    let heads = discs.partition_point(|&a| (a.unsigned_abs() as u128).pow(3) <= x as u128);
    let hist = discs[..heads]
        .par_iter()
        .enumerate()
        .fold(
            || vec![0u64; grid.len()],
            |mut hist, (i, &a)| {
                let a_abs = a.unsigned_abs() as u128;
                for &b in &discs[i + 1..] {
                    let b_abs = b.unsigned_abs() as u128;
                    if a_abs * b_abs * b_abs > x as u128 {
                        break;
                    }
                    let c = third_quadratic(a, b);
                    // Count each field once, from its two smallest members.
                    if order_key(c) <= order_key(b) {
                        continue;
                    }
                    bucket(&mut hist, grid, a_abs * b_abs * c.unsigned_abs() as u128, per_field);
                }
                hist
            },
        )
        .reduce(|| vec![0u64; grid.len()], merge);
    cumulate(hist)
}

/// Cyclic sextic fields `(d, f)` with `lcm(|d|, f)^2 <= X`.
pub(crate) fn sextic_lcm_square(grid: &[u64]) -> Vec<u64> {
    let y_grid: Vec<u64> = grid.iter().map(|&x| isqrt(x)).collect();
    let y = max_of(&y_grid);
    let mult = fundamental_multiplicity(y as usize);
    let sieve = SpfSieve::new(y.max(1) as usize);
    let conductors = cubic_conductors(y);
    let hist = conductors
        .par_iter()
        .fold(
            || vec![0u64; grid.len()],
            |mut hist, &(f, fields)| {
                let rad: Vec<u64> = sieve.factor(f as usize).into_iter().map(|(p, _)| p as u64).collect();
                // g = gcd(|d|, f) runs over squarefree divisors of f; then
                // |d| = g t with gcd(t, f/g) = 1 and lcm = t f.
                for mask in 0..1u32 << rad.len() {
                    let g: u64 = rad.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, p)| p).product();
                    let cofactor = f / g;
                    for t in 1..=y / f {
                        let m = mult[(g * t) as usize];
                        if m != 0 && gcd(t, cofactor) == 1 {
                            bucket(&mut hist, &y_grid, (t * f) as u128, m as u64 * fields);
                        }
                    }
                }
                hist
            },
        )
        .reduce(|| vec![0u64; grid.len()], merge);
    cumulate(hist)
}

/// Cyclic sextic fields with `|d| f^2 <= X`.
pub(crate) fn sextic_product(grid: &[u64]) -> Vec<u64> {
    let x = max_of(grid);
    let qc = QuadCount::new(x / 49);
    let conductors = cubic_conductors(isqrt(x / 3));
    grid.iter()
        .map(|&x| {
            conductors
                .iter()
                .take_while(|(f, _)| 3 * f * f <= x)
                .map(|&(f, m)| m * qc.q(x / (f * f)))
                .sum()
        })
        .collect()
}

/// Cyclic sextic fields with `lcm(|d|^3, |d| f^2) <= X`.
pub(crate) fn sextic_lcm_cube(grid: &[u64]) -> Vec<u64> {
    dirichlet::counts_at(&dirichlet::c6_quotients(max_of(grid)), grid)
}

/// Non-Galois cubic fields with `|D3| <= X`, or `|D2 D3| <= X` when
/// `with_resolvent`.
pub(crate) fn s3_cubic(grid: &[u64], with_resolvent: bool) -> Vec<u64> {
    let x = max_of(grid);
    let bound = if with_resolvent { x / 3 } else { x };
    let mut hist = vec![0; grid.len()];
    for sig in [Signature::Negative, Signature::Positive] {
        for record in enum_cubic_s3(bound, sig) {
            bucket(&mut hist, grid, s3_value(&record, with_resolvent), 1);
        }
    }
    cumulate(hist)
}

pub(crate) fn s3_value(record: &FieldRecord, with_resolvent: bool) -> u128 {
    let d3 = record.disc_i128().expect("cubic discriminants fit in 128 bits");
    let d2 = arith::quadratic::fundamental_of(d3);
    d3.unsigned_abs() * if with_resolvent { d2.unsigned_abs() } else { 1 }
}

/// Pairs `(L2, L4')` with `L2` distinct from the quadratic subfield `L2'`
/// of the cyclic quartic `L4'`, and `|D2| D4'/D2' <= X`.
pub(crate) fn quadratic_quartic_pairs(grid: &[u64]) -> Vec<u64> {
    let x = max_of(grid);
    let qc = QuadCount::new(x / 25);
    let shapes = quartic_shapes(isqrt(x / 3));
    grid.iter()
        .map(|&x| {
            let all: u64 = shapes.iter().filter(|(f, _, _)| 3 * f * f <= x).map(|&(f, _, n)| n * qc.q(x / (f * f))).sum();
            let same: u64 = shapes.iter().filter(|&&(f, d2, _)| (f * f) as u128 * d2 as u128 <= x as u128).map(|s| s.2).sum();
            all - same
        })
        .collect()
}
