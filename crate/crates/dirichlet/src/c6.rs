//! The Dirichlet series of `D6/D3 = lcm(D2^3, D2 D3)` over cyclic sextic
//! fields, once as a combination of Euler products and once by enumeration.

use fields::{enum_cyclic_cubic, enum_quadratic};

use crate::coeffs::CoefficientVector;
use crate::euler::{expand_euler, series, DirichletError};

/// `(h g1 - g2(3s) - g3 + 1) / 2`, returned over denominator 2.
pub fn lemma42_rhs(n: usize) -> Result<CoefficientVector, DirichletError> {
    let h = expand_euler(&series::h(), n)?;
    let g1 = expand_euler(&series::g1(), n)?;
    let g2 = expand_euler(&series::g2(), n)?;
    let g3 = expand_euler(&series::g3(), n)?;
    let num = h.convolve(&g1).sub(&g2.dilate(3)).sub(&g3).add(&CoefficientVector::one(n));
    Ok(CoefficientVector::from_numerators(num.numerators().to_vec(), 2))
}

/// `lcm(|D2|^3, |D2| D3)` for every cyclic sextic field with value at most
/// `bound`, sorted.
pub fn c6_quotients(bound: u64) -> Vec<u64> {
    let quad: Vec<u64> =
        enum_quadratic(arith::icbrt(bound)).filter_map(|r| r.abs_disc()).map(|d| d as u64).collect();
    let cubic: Vec<u64> = enum_cyclic_cubic(bound / 3).filter_map(|r| r.abs_disc()).map(|d| d as u64).collect();
    let mut out = Vec::new();
    for &d2 in &quad {
        for &d3 in cubic.iter().take_while(|&&d3| d2 as u128 * d3 as u128 <= bound as u128) {
            let v = lcm(d2 * d2 * d2, d2 * d3);
            if v <= bound {
                out.push(v);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Number of cyclic sextic fields with `D6/D3 = n`, for `n <= N`.
pub fn census_c6(n: usize) -> CoefficientVector {
    let mut num = vec![0i64; n + 1];
    for v in c6_quotients(n as u64) {
        num[v as usize] += 1;
    }
    CoefficientVector::from_numerators(num, 1)
}

/// `#{v in sorted values : v <= x}` for each `x` of `grid`.
pub fn counts_at(sorted: &[u64], grid: &[u64]) -> Vec<u64> {
    grid.iter().map(|&x| sorted.partition_point(|&v| v <= x) as u64).collect()
}

fn lcm(a: u64, b: u64) -> u64 {
    a / arith::gcd(a, b) * b
}
