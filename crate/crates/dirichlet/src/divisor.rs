//! Partial sums of powers of the divisor function.

use arith::sieve::primes_up_to;
use arith::isqrt;
use rayon::prelude::*;

/// Exponent `t` in `sum tau(n)^t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum DivisorExponent {
    Integer(u32),
    Real(f64),
}

impl DivisorExponent {
    /// `log 3 / log 2`, for which `2^t = 3`.
    pub fn log2_of_3() -> Self {
        DivisorExponent::Real(3f64.ln() / 2f64.ln())
    }

    pub fn value(self) -> f64 {
        match self {
            DivisorExponent::Integer(k) => k as f64,
            DivisorExponent::Real(t) => t,
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct DivisorSum {
    pub x: u64,
    /// Exact value for integer exponents.
    pub exact: Option<u128>,
    pub value: f64,
    /// `value / (X (log X)^(2^t - 1))`.
    pub ratio: f64,
}

const BLOCK: u64 = 1 << 18;

/// `tau(n)` for `n` in `lo..hi`, by trial division with the given primes
/// (which must cover `sqrt(hi)`).
fn tau_block(lo: u64, hi: u64, primes: &[u64]) -> Vec<u32> {
    let len = (hi - lo) as usize;
    let mut rest: Vec<u64> = (lo..hi).collect();
    let mut tau = vec![1u32; len];
    for &p in primes {
        if p * p >= hi {
            break;
        }
        let first = lo.div_ceil(p) * p;
        let mut m = first;
        while m < hi {
            let i = (m - lo) as usize;
            let mut e = 0;
            while rest[i].is_multiple_of(p) {
                rest[i] /= p;
                e += 1;
            }
            tau[i] *= e + 1;
            m += p;
        }
    }
    for (t, r) in tau.iter_mut().zip(&rest) {
        if *r > 1 {
            *t *= 2;
        }
    }
    tau
}

/// `sum_{n <= X} tau(n)^t` for every exponent in `ts` and every `X` in the
/// increasing `grid`, in one sweep. Indexed `[exponent][grid point]`.
pub fn divisor_power_sums(ts: &[DivisorExponent], grid: &[u64]) -> Vec<Vec<DivisorSum>> {
    assert!(grid.windows(2).all(|w| w[0] < w[1]) && grid.first().is_some_and(|&x| x >= 1));
    let top = *grid.last().expect("nonempty grid");
    let primes = primes_up_to(isqrt(top) + 1);
    let blocks: Vec<(u64, u64)> = (0..top.div_ceil(BLOCK)).map(|b| (1 + b * BLOCK, (1 + (b + 1) * BLOCK).min(top + 1))).collect();
    // Per block, per exponent: (exact, float) sums split at grid points.
    let per_block: Vec<Vec<Vec<(u128, f64)>>> = blocks
        .par_iter()
        .map(|&(lo, hi)| {
            let tau = tau_block(lo, hi, &primes);
            ts.iter()
                .map(|&t| {
                    let mut parts = vec![(0u128, 0f64); grid.len() + 1];
                    let mut g = grid.partition_point(|&x| x < lo);
                    for (i, &d) in tau.iter().enumerate() {
                        let n = lo + i as u64;
                        while g < grid.len() && grid[g] < n {
                            g += 1;
                        }
                        let slot = &mut parts[g];
                        match t {
                            DivisorExponent::Integer(k) => slot.0 += (d as u128).pow(k),
                            DivisorExponent::Real(r) => slot.1 += (d as f64).powf(r),
                        }
                    }
                    parts
                })
                .collect()
        })
        .collect();
    ts.iter()
        .enumerate()
        .map(|(ti, &t)| {
            let mut exact = 0u128;
            let mut float = 0f64;
            let mut out = Vec::with_capacity(grid.len());
            for (gi, &x) in grid.iter().enumerate() {
                for block in &per_block {
                    exact += block[ti][gi].0;
                    float += block[ti][gi].1;
                }
                let value = match t {
                    DivisorExponent::Integer(_) => exact as f64,
                    DivisorExponent::Real(_) => float,
                };
                let xf = x as f64;
                let denom = xf * xf.ln().powf(2f64.powf(t.value()) - 1.0);
                out.push(DivisorSum {
                    x,
                    exact: matches!(t, DivisorExponent::Integer(_)).then_some(exact),
                    value,
                    ratio: value / denom,
                });
            }
            out
        })
        .collect()
}

/// `sum_{n <= X} tau(n)^t` and its ratio to `X (log X)^(2^t - 1)`.
pub fn divisor_power_sum(t: DivisorExponent, x: u64) -> DivisorSum {
    divisor_power_sums(&[t], &[x]).remove(0).remove(0)
}
