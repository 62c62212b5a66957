//! Tame ramification data and discriminant valuations of composita.
//!
//! The inputs are trusted to be linearly disjoint with Galois closures meeting
//! only in Q; no test of that hypothesis is attempted.

use std::collections::{BTreeMap, BTreeSet};

use num_integer::Integer;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RamificationError {
    #[error("cycle type {cycles:?} does not partition degree {degree}")]
    BadCycleType { degree: u32, cycles: Vec<u32> },
    #[error("p = {0} is wild for one of the inputs")]
    WildPrime(u64),
}

/// Cycle type of a generator of tame inertia at each ramified prime, acting
/// on the embeddings of a field of the given degree. Primes not listed are
/// unramified (cycle type `1^degree`).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RamificationProfile {
    degree: u32,
    cycles: BTreeMap<u64, Vec<u32>>,
    wild: BTreeSet<u64>,
}

impl RamificationProfile {
    pub fn unramified(degree: u32) -> Self {
        RamificationProfile { degree, cycles: BTreeMap::new(), wild: BTreeSet::new() }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn with_cycles(mut self, p: u64, cycles: Vec<u32>) -> Result<Self, RamificationError> {
        if cycles.contains(&0) || cycles.iter().sum::<u32>() != self.degree {
            return Err(RamificationError::BadCycleType { degree: self.degree, cycles });
        }
        if cycles.iter().all(|&c| c == 1) {
            self.cycles.remove(&p);
        } else {
            self.cycles.insert(p, cycles);
        }
        Ok(self)
    }

    /// Marks `p` as wildly ramified.
    pub fn with_wild(mut self, p: u64) -> Self {
        self.wild.insert(p);
        self
    }

    pub fn cycles_at(&self, p: u64) -> Vec<u32> {
        self.cycles.get(&p).cloned().unwrap_or_else(|| vec![1; self.degree as usize])
    }

    /// Wild if declared so, or if `p` divides a cycle length.
    pub fn is_wild_at(&self, p: u64) -> bool {
        self.wild.contains(&p) || self.cycles_at(p).iter().any(|&c| (c as u64).is_multiple_of(p))
    }

    /// Tame discriminant valuation: degree minus the number of cycles.
    pub fn disc_valuation(&self, p: u64) -> u32 {
        self.degree - self.cycles_at(p).len() as u32
    }

    pub fn ramified_primes(&self) -> impl Iterator<Item = u64> + '_ {
        self.cycles.keys().copied()
    }
}

/// `v_p` of the compositum discriminant: `m1 m2 - sum gcd(c_k, d_l)`.
pub fn compositum_valuation(
    prof1: &RamificationProfile,
    prof2: &RamificationProfile,
    p: u64,
) -> Result<u64, RamificationError> {
    if prof1.is_wild_at(p) || prof2.is_wild_at(p) {
        return Err(RamificationError::WildPrime(p));
    }
    let (c, d) = (prof1.cycles_at(p), prof2.cycles_at(p));
    let overlap: u64 = c.iter().flat_map(|&x| d.iter().map(move |&y| x.gcd(&y) as u64)).sum();
    Ok(prof1.degree as u64 * prof2.degree as u64 - overlap)
}

/// `v1 m2 + v2 m1 - v1 v2`, defined when the orders of the two inertia
/// generators are coprime. `None` otherwise.
pub fn coprime_compositum_valuation(
    prof1: &RamificationProfile,
    prof2: &RamificationProfile,
    p: u64,
) -> Result<Option<u64>, RamificationError> {
    if prof1.is_wild_at(p) || prof2.is_wild_at(p) {
        return Err(RamificationError::WildPrime(p));
    }
    let order = |c: Vec<u32>| c.into_iter().fold(1u32, |acc, x| acc.lcm(&x));
    if order(prof1.cycles_at(p)).gcd(&order(prof2.cycles_at(p))) != 1 {
        return Ok(None);
    }
    let (v1, v2) = (prof1.disc_valuation(p) as u64, prof2.disc_valuation(p) as u64);
    let (m1, m2) = (prof1.degree as u64, prof2.degree as u64);
    Ok(Some(v1 * m2 + v2 * m1 - v1 * v2))
}
