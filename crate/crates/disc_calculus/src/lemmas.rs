//! Discriminant identities among the subfields of a fixed Galois closure,
//! checked prime by prime on a bundle of discriminants.

use std::fmt;

use crate::expr::{Bindings, EvalError, Monomial};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// Biquadratic: `D_L D_K^2 = D_K1 D_K2 D_K3`.
    Biquadratic,
    /// S3 closure: `D_L D_K^2 = D_L3^2 D_L2`.
    S3Closure,
    /// A4 closure, three equations.
    A4Closure,
    /// S4 sextic: `D_L6 D_K = D_L4 D_L3`.
    S4Sextic,
    /// Conductor chains for the A4 x C2 and S4 families.
    ChainA,
    ChainB,
    ChainC,
    ChainD,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::Biquadratic,
        Identity::S3Closure,
        Identity::A4Closure,
        Identity::S4Sextic,
        Identity::ChainA,
        Identity::ChainB,
        Identity::ChainC,
        Identity::ChainD,
    ];

    /// Accepts the command-line names `22a`..`22d` and `3.2`..`3.5`.
    pub fn parse(name: &str) -> Option<Identity> {
        Some(match name.trim() {
            "22a" => Identity::Biquadratic,
            "22b" => Identity::S3Closure,
            "22c" => Identity::A4Closure,
            "22d" => Identity::S4Sextic,
            "3.2" => Identity::ChainA,
            "3.3" => Identity::ChainB,
            "3.4" => Identity::ChainC,
            "3.5" => Identity::ChainD,
            _ => return None,
        })
    }

    pub fn name(self) -> &'static str {
        match self {
            Identity::Biquadratic => "22a",
            Identity::S3Closure => "22b",
            Identity::A4Closure => "22c",
            Identity::S4Sextic => "22d",
            Identity::ChainA => "3.2",
            Identity::ChainB => "3.3",
            Identity::ChainC => "3.4",
            Identity::ChainD => "3.5",
        }
    }

    /// Chains of expressions that must all be equal.
    fn chains(self) -> &'static [&'static [&'static str]] {
        match self {
            Identity::Biquadratic => &[&["L K^2", "K1 K2 K3"]],
            Identity::S3Closure => &[&["L K^2", "L3^2 L2"]],
            Identity::A4Closure => &[&["L K^3", "L4^3 L3"], &["L6 K", "L4 L3"], &["L K^2", "L6 L4^2"]],
            Identity::S4Sextic => &[&["L6 K", "L4 L3"]],
            Identity::ChainA => &[&["6 / 3", "8 / 4 2", "12 4 2 / 8 6'"]],
            Identity::ChainB => &[&["6 / 3", "4", "12 4 2 / 8 6"]],
            Identity::ChainC => &[&["6'' / 3", "8 / 4 2", "12 / 6 4"]],
            Identity::ChainD => &[&["6 / 3", "8 / 4 2", "12 4 2' / 8' 6'"]],
        }
    }

    /// The field-discriminant identities hold with signs; the conductor chains
    /// are compared in absolute value.
    fn signed(self) -> bool {
        matches!(self, Identity::Biquadratic | Identity::S3Closure | Identity::A4Closure | Identity::S4Sextic)
    }

    /// Role names the identity reads. `K` is optional and defaults to 1 (base
    /// field Q).
    pub fn roles(self) -> Vec<String> {
        let mut out: Vec<String> = Vec::new();
        for chain in self.chains() {
            for m in chain.iter().map(|t| Monomial::parse(t)) {
                for r in m.roles() {
                    if !out.iter().any(|o| o == r) {
                        out.push(r.to_string());
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A disagreement between two sides: at a prime, or in sign when `prime` is
/// `None`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub left: String,
    pub right: String,
    pub prime: Option<u64>,
    pub left_value: i64,
    pub right_value: i64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LemmaReport {
    pub identity: Identity,
    pub holds: bool,
    pub residuals: Vec<Residual>,
}

fn sign_of(m: &Monomial, b: &Bindings) -> i64 {
    m.terms
        .iter()
        .filter(|(r, e)| e % 2 != 0 && b.get(r).is_some_and(|d| d.is_negative()))
        .fold(1, |s, _| -s)
}

/// Checks every equation of `identity` on `bundle`.
pub fn verify_lemma_bundle(bundle: &Bindings, identity: Identity) -> Result<LemmaReport, EvalError> {
    let mut b = bundle.clone();
    if identity.signed() {
        b.entry("K".to_string()).or_insert_with(arith::FactoredInt::one);
    }
    let mut residuals = Vec::new();
    for chain in identity.chains() {
        let sides: Vec<Monomial> = chain.iter().map(|t| Monomial::parse(t)).collect();
        let head = &sides[0];
        let head_vals = head.valuations(&b)?;
        for other in &sides[1..] {
            let vals = other.valuations(&b)?;
            let primes: std::collections::BTreeSet<u64> = head_vals.keys().chain(vals.keys()).copied().collect();
            for p in primes {
                let (l, r) = (head_vals.get(&p).copied().unwrap_or(0), vals.get(&p).copied().unwrap_or(0));
                if l != r {
                    residuals.push(Residual {
                        left: head.to_string(),
                        right: other.to_string(),
                        prime: Some(p),
                        left_value: l,
                        right_value: r,
                    });
                }
            }
            if identity.signed() {
                let (l, r) = (sign_of(head, &b), sign_of(other, &b));
                if l != r {
                    residuals.push(Residual {
                        left: head.to_string(),
                        right: other.to_string(),
                        prime: None,
                        left_value: l,
                        right_value: r,
                    });
                }
            }
        }
    }
    Ok(LemmaReport { identity, holds: residuals.is_empty(), residuals })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::bindings;
    use arith::FactoredInt;

    fn fi(n: i64) -> FactoredInt {
        FactoredInt::from_i64(n).unwrap()
    }

    #[test]
    fn all_ones_bundles_hold() {
        for id in Identity::ALL {
            let b: Bindings = id.roles().into_iter().map(|r| (r, FactoredInt::one())).collect();
            assert!(verify_lemma_bundle(&b, id).unwrap().holds, "{id}");
        }
    }

    #[test]
    fn perturbation_is_localized() {
        let mut b: Bindings = Identity::ChainD.roles().into_iter().map(|r| (r, FactoredInt::one())).collect();
        b.insert("8".into(), fi(13));
        let report = verify_lemma_bundle(&b, Identity::ChainD).unwrap();
        assert!(!report.holds);
        assert!(report.residuals.iter().all(|r| r.prime == Some(13)));
    }

    #[test]
    fn biquadratic_signs() {
        let b = bindings([("L", fi(144)), ("K1", fi(-3)), ("K2", fi(-4)), ("K3", fi(12))]);
        assert!(verify_lemma_bundle(&b, Identity::Biquadratic).unwrap().holds);
        let flipped = bindings([("L", fi(-144)), ("K1", fi(-3)), ("K2", fi(-4)), ("K3", fi(12))]);
        let report = verify_lemma_bundle(&flipped, Identity::Biquadratic).unwrap();
        assert_eq!(report.residuals.len(), 1);
        assert_eq!(report.residuals[0].prime, None);
    }

    #[test]
    fn missing_role() {
        let b = bindings([("L", fi(144))]);
        assert_eq!(verify_lemma_bundle(&b, Identity::Biquadratic), Err(EvalError::MissingRole("K1".into())));
    }
}
