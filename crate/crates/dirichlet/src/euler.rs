//! Euler products with finitely many terms per local factor.

use arith::sieve::SpfSieve;
use rayon::prelude::*;

use crate::coeffs::CoefficientVector;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrimePredicate {
    All,
    /// `p mod modulus` lies in `residues`.
    Congruent { modulus: u64, residues: Vec<u64> },
    Prime(u64),
}

impl PrimePredicate {
    pub fn congruent(modulus: u64, residues: &[u64]) -> Self {
        PrimePredicate::Congruent { modulus, residues: residues.to_vec() }
    }

    pub fn matches(&self, p: u64) -> bool {
        match self {
            PrimePredicate::All => true,
            PrimePredicate::Congruent { modulus, residues } => residues.contains(&(p % modulus)),
            PrimePredicate::Prime(q) => p == *q,
        }
    }
}

/// `1 + sum c_k p^(-e_k s)` for the primes matching `predicate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactor {
    pub predicate: PrimePredicate,
    /// `(e, c)` pairs with `e >= 1`; the constant term 1 is implicit.
    pub terms: Vec<(u32, i64)>,
}

impl EulerFactor {
    pub fn new(predicate: PrimePredicate, terms: &[(u32, i64)]) -> Self {
        assert!(terms.iter().all(|&(e, _)| e >= 1), "the constant term is implicit");
        EulerFactor { predicate, terms: terms.to_vec() }
    }

    fn coefficient(&self, e: u32) -> i64 {
        self.terms.iter().filter(|&&(k, _)| k == e).map(|&(_, c)| c).sum()
    }
}

/// A product of Euler factors; primes claimed by no factor contribute 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EulerFactorSpec {
    pub name: String,
    pub factors: Vec<EulerFactor>,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DirichletError {
    #[error("{name}: p = {prime} is claimed by more than one factor")]
    OverlappingPredicates { name: String, prime: u64 },
    #[error("N must be at least 1")]
    EmptyRange,
    #[error("degenerate fit grid: {0}")]
    DegenerateGrid(String),
    #[error("unknown series {0}")]
    UnknownSeries(String),
}

impl EulerFactorSpec {
    pub fn new(name: &str, factors: Vec<EulerFactor>) -> Self {
        EulerFactorSpec { name: name.to_string(), factors }
    }

    /// The factor claiming `p`, if any; errors when several do.
    fn factor_for(&self, p: u64) -> Result<Option<&EulerFactor>, DirichletError> {
        let mut hits = self.factors.iter().filter(|f| f.predicate.matches(p));
        let first = hits.next();
        if hits.next().is_some() {
            return Err(DirichletError::OverlappingPredicates { name: self.name.clone(), prime: p });
        }
        Ok(first)
    }

    /// Coefficient of `p^(-e s)` in the local factor at `p`.
    pub fn local(&self, p: u64, e: u32) -> Result<i64, DirichletError> {
        Ok(match (e, self.factor_for(p)?) {
            (0, _) => 1,
            (_, Some(f)) => f.coefficient(e),
            (_, None) => 0,
        })
    }
}

const CHUNK: usize = 1 << 16;

/// Exact coefficients `a_1..a_N` of the Euler product.
pub fn expand_euler(spec: &EulerFactorSpec, n: usize) -> Result<CoefficientVector, DirichletError> {
    if n == 0 {
        return Err(DirichletError::EmptyRange);
    }
    let sieve = SpfSieve::new(n);
    // Local coefficient tables per prime, checked for overlaps up front.
    let max_e = usize::BITS - n.leading_zeros();
    let mut local = vec![Vec::new(); n + 1];
    for p in (2..=n).filter(|&p| sieve.is_prime(p)) {
        let f = spec.factor_for(p as u64)?;
        local[p] = (0..=max_e).map(|e| if e == 0 { 1 } else { f.map_or(0, |f| f.coefficient(e)) }).collect();
    }
    let mut num = vec![0i64; n + 1];
    num[1..].par_chunks_mut(CHUNK).enumerate().for_each(|(block, out)| {
        let start = 1 + block * CHUNK;
        for (i, slot) in out.iter_mut().enumerate() {
            let mut m = start + i;
            let mut acc = 1i64;
            while m > 1 && acc != 0 {
                let (p, e, rest) = sieve.split(m);
                acc *= local[p][e as usize];
                m = rest;
            }
            *slot = acc;
        }
    });
    Ok(CoefficientVector::from_numerators(num, 1))
}

/// The named series used by the C6 identity and the mod-7 product.
pub mod series {
    use super::{EulerFactor, EulerFactorSpec, PrimePredicate};

    fn prime(p: u64, terms: &[(u32, i64)]) -> EulerFactor {
        EulerFactor::new(PrimePredicate::Prime(p), terms)
    }

    fn congruent(m: u64, r: &[u64], terms: &[(u32, i64)]) -> EulerFactor {
        EulerFactor::new(PrimePredicate::congruent(m, r), terms)
    }

    /// Local factors at 2 and 3 of the C6 series.
    pub fn h() -> EulerFactorSpec {
        EulerFactorSpec::new("h", vec![prime(2, &[(6, 1), (9, 2)]), prime(3, &[(3, 1), (4, 2), (5, 2)])])
    }

    pub fn g1() -> EulerFactorSpec {
        EulerFactorSpec::new("g1", vec![congruent(6, &[1], &[(2, 2), (3, 3)]), congruent(6, &[5], &[(3, 1)])])
    }

    /// `1 + sum over quadratic fields of |D|^(-s)`.
    pub fn g2() -> EulerFactorSpec {
        EulerFactorSpec::new("g2", vec![prime(2, &[(2, 1), (3, 2)]), congruent(2, &[1], &[(1, 1)])])
    }

    /// `1 + 2 sum over cyclic cubic fields of D^(-s)`.
    pub fn g3() -> EulerFactorSpec {
        EulerFactorSpec::new("g3", vec![prime(3, &[(4, 2)]), congruent(6, &[1], &[(2, 2)])])
    }

    /// `prod_{p = +-1 mod 7} (1 + 3 p^(-s))`.
    pub fn mod7_pair() -> EulerFactorSpec {
        EulerFactorSpec::new("mod7_pair", vec![congruent(7, &[1, 6], &[(1, 3)])])
    }

    pub fn by_name(name: &str) -> Option<EulerFactorSpec> {
        Some(match name {
            "h" => h(),
            "g1" => g1(),
            "g2" => g2(),
            "g3" => g3(),
            "lemma25" | "mod7_pair" => mod7_pair(),
            _ => return None,
        })
    }
}
