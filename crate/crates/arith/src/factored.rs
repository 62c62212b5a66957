use std::collections::BTreeMap;
use std::fmt;

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FactorError {
    #[error("zero has no factorization")]
    Zero,
    #[error("prime factor {0} does not fit in 64 bits")]
    LargePrime(String),
}

/// A nonzero integer stored as a sign and its prime factorization.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FactoredInt {
    sign: i8,
    factors: BTreeMap<u64, u32>,
}

impl FactoredInt {
    pub fn one() -> Self {
        FactoredInt { sign: 1, factors: BTreeMap::new() }
    }

    /// Builds from explicit parts. Exponent-zero entries are dropped; keys are
    /// trusted to be prime.
    pub fn from_parts(negative: bool, factors: impl IntoIterator<Item = (u64, u32)>) -> Self {
        let mut out = FactoredInt { sign: if negative { -1 } else { 1 }, factors: BTreeMap::new() };
        for (p, e) in factors {
            if e > 0 {
                *out.factors.entry(p).or_insert(0) += e;
            }
        }
        out
    }

    pub fn from_i64(n: i64) -> Result<Self, FactorError> {
        Self::from_i128(n as i128)
    }

    pub fn from_i128(n: i128) -> Result<Self, FactorError> {
        if n == 0 {
            return Err(FactorError::Zero);
        }
        let m = n.unsigned_abs();
        let mut factors = BTreeMap::new();
        if m > 1 {
            if let Ok(small) = u64::try_from(m) {
                for (p, e) in num_prime::nt_funcs::factorize64(small) {
                    factors.insert(p, e as u32);
                }
            } else {
                for (p, e) in num_prime::nt_funcs::factorize128(m) {
                    let p = u64::try_from(p).map_err(|_| FactorError::LargePrime(p.to_string()))?;
                    factors.insert(p, e as u32);
                }
            }
        }
        Ok(FactoredInt { sign: if n < 0 { -1 } else { 1 }, factors })
    }

    pub fn from_bigint(n: &BigInt) -> Result<Self, FactorError> {
        if n.is_zero() {
            return Err(FactorError::Zero);
        }
        if let Some(small) = n.to_i128() {
            return Self::from_i128(small);
        }
        let m: BigUint = n.abs().to_biguint().expect("absolute value");
        let mut factors = BTreeMap::new();
        for (p, e) in num_prime::nt_funcs::factorize(m) {
            let p = p.to_u64().ok_or_else(|| FactorError::LargePrime(p.to_string()))?;
            factors.insert(p, e as u32);
        }
        Ok(FactoredInt { sign: if n.sign() == Sign::Minus { -1 } else { 1 }, factors })
    }

    pub fn prime_power(p: u64, e: u32) -> Self {
        Self::from_parts(false, [(p, e)])
    }

    pub fn is_negative(&self) -> bool {
        self.sign < 0
    }

    pub fn signum(&self) -> i8 {
        self.sign
    }

    pub fn is_one(&self) -> bool {
        self.sign > 0 && self.factors.is_empty()
    }

    pub fn abs(&self) -> Self {
        FactoredInt { sign: 1, factors: self.factors.clone() }
    }

    pub fn negate(&self) -> Self {
        FactoredInt { sign: -self.sign, factors: self.factors.clone() }
    }

    pub fn valuation(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.factors.keys().copied()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut out = self.clone();
        out.sign *= other.sign;
        for (&p, &e) in &other.factors {
            *out.factors.entry(p).or_insert(0) += e;
        }
        out
    }

    /// Exact quotient, or `None` when `other` does not divide `self`.
    pub fn checked_div(&self, other: &Self) -> Option<Self> {
        let mut out = self.clone();
        out.sign *= other.sign;
        for (&p, &e) in &other.factors {
            let have = out.factors.get(&p).copied().unwrap_or(0);
            if have < e {
                return None;
            }
            if have == e {
                out.factors.remove(&p);
            } else {
                out.factors.insert(p, have - e);
            }
        }
        Some(out)
    }

    pub fn pow(&self, k: u32) -> Self {
        FactoredInt {
            sign: if k.is_multiple_of(2) { 1 } else { self.sign },
            factors: self.factors.iter().filter(|_| k > 0).map(|(&p, &e)| (p, e * k)).collect(),
        }
    }

    /// Least common multiple of the absolute values.
    pub fn lcm(&self, other: &Self) -> Self {
        let mut out = self.abs();
        for (&p, &e) in &other.factors {
            let slot = out.factors.entry(p).or_insert(0);
            *slot = (*slot).max(e);
        }
        out
    }

    /// Greatest common divisor of the absolute values.
    pub fn gcd(&self, other: &Self) -> Self {
        let factors = self
            .factors
            .iter()
            .filter_map(|(&p, &e)| {
                let m = e.min(other.valuation(p));
                (m > 0).then_some((p, m))
            })
            .collect();
        FactoredInt { sign: 1, factors }
    }

    pub fn is_square(&self) -> bool {
        self.sign > 0 && self.factors.values().all(|e| e % 2 == 0)
    }

    pub fn to_bigint(&self) -> BigInt {
        let mut acc = BigInt::one();
        for (&p, &e) in &self.factors {
            acc *= num_traits::pow(BigInt::from(p), e as usize);
        }
        if self.sign < 0 {
            -acc
        } else {
            acc
        }
    }

    pub fn to_i128(&self) -> Option<i128> {
        let mut acc: i128 = 1;
        for (&p, &e) in &self.factors {
            for _ in 0..e {
                acc = acc.checked_mul(p as i128)?;
            }
        }
        Some(acc * self.sign as i128)
    }
}

impl fmt::Display for FactoredInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_bigint())
    }
}
