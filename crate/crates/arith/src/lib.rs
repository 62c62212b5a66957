//! Exact integer helpers shared by the rest of the workspace: factored
//! integers, small sieves and fundamental discriminants.

mod factored;
pub mod quadratic;
pub mod sieve;

pub use factored::{FactorError, FactoredInt};

/// Floor of the square root.
pub fn isqrt(n: u64) -> u64 {
    num_integer::Roots::sqrt(&n)
}

/// Floor of the cube root.
pub fn icbrt(n: u64) -> u64 {
    num_integer::Roots::cbrt(&n)
}

/// Floor of the `k`-th root of a nonnegative real, corrected so that
/// `r^k <= x < (r+1)^k` holds exactly for integral `x`.
pub fn iroot(x: u64, k: u32) -> u64 {
    num_integer::Roots::nth_root(&x, k)
}

pub fn is_square(n: i128) -> bool {
    if n < 0 {
        return false;
    }
    let r = num_integer::Roots::sqrt(&(n as u128));
    r * r == n as u128
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}

pub fn lcm(a: u64, b: u64) -> u64 {
    num_integer::lcm(a, b)
}
