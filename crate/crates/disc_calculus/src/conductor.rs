//! Artin conductors of the rank-3 tori, family by family.
//!
//! Roles name the discriminants of the fields attached to a family: `L` is the
//! splitting field, digits are subfields by degree (`2'`, `6''` for second and
//! third choices) and `K`, `K1`, `M2`, ... follow the naming of the octic and
//! quartic families. Several families admit more than one way of writing the
//! conductor; every bound form is evaluated and they must agree.

use std::sync::OnceLock;

use arith::FactoredInt;
use lattice_groups::normalize_label;

use crate::expr::{Bindings, EvalError, Term};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ConductorError {
    #[error("unknown family {0}")]
    UnknownFamily(String),
    #[error("role {0} is not bound")]
    MissingRole(String),
    #[error("{expr} is not integral at p = {prime}; the input discriminants are inconsistent")]
    NonIntegralQuotient { expr: String, prime: u64 },
    #[error("{family}: {first} gives {a} but {second} gives {b}")]
    Inconsistent { family: String, first: String, a: Box<FactoredInt>, second: String, b: Box<FactoredInt> },
}

impl From<EvalError> for ConductorError {
    fn from(e: EvalError) -> Self {
        match e {
            EvalError::MissingRole(r) => ConductorError::MissingRole(r),
            EvalError::NonIntegralQuotient { expr, prime } => ConductorError::NonIntegralQuotient { expr, prime },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConductorExpression {
    pub family_label: String,
    /// Equivalent forms; the first is the primary one.
    pub forms: Vec<Term>,
}

impl ConductorExpression {
    /// Roles of the primary form.
    pub fn required_roles(&self) -> Vec<&str> {
        self.forms[0].roles()
    }
}

const TABLE: &[(&str, &[&str])] = &[
    ("1", &[""]),
    ("2,a", &["L^2"]),
    ("2,b", &["L"]),
    ("2,c", &["L^2"]),
    ("2,d", &["L"]),
    ("2,e", &["L^3"]),
    ("3,a", &["L"]),
    ("3,b", &["L"]),
    ("4,a", &["4 / 2"]),
    ("4,b", &["4"]),
    ("4,c", &["4 / 2"]),
    ("4,d", &["4"]),
    ("4,e", &["1 3^2"]),
    ("4,f", &["L", "1 2 3"]),
    ("4,g", &["2 3"]),
    ("4,h", &["L", "1 2 3"]),
    ("4,i", &["L / 1", "2 3"]),
    ("4,j", &["1 2"]),
    ("4,k", &["1 3^2"]),
    ("4,l", &["L", "1 2 3"]),
    ("4,m", &["2 3"]),
    ("4,n", &["L", "1 2 3"]),
    ("4,o", &["2 3"]),
    ("6,a", &["6 / 2 3", "lcm(2^2, 3)"]),
    ("6,b", &["2 3"]),
    ("6,c", &["lcm(2^3, 2 3)", "6 / 3"]),
    ("6,d", &["lcm(2^3, 2 3)", "6 / 3"]),
    ("6,e", &["2 3"]),
    ("6,f", &["3"]),
    ("6,g", &["2 3"]),
    ("6,h", &["3"]),
    ("6,i", &["2 3"]),
    ("6,j", &["3"]),
    ("8,a", &["2 4' / 2'"]),
    ("8,b", &["L / 4 2''", "2 4' / 2'"]),
    ("8,c", &["K K1 K2"]),
    ("8,d", &["K1 M13 / K13", "K K1 K2"]),
    ("8,e", &["M13 M / K13 K3 K2", "K K1 K2"]),
    ("8,f", &["L / K12 M3", "K K1 K2"]),
    ("8,g", &["K M2 / K2"]),
    ("8,h", &["M2 / K2"]),
    ("8,i", &["M2"]),
    ("8,j", &["K1 M2 / K2", "M1"]),
    ("8,k", &["L / K1 M2", "K M2 / K2"]),
    ("8,l", &["M2 / K2"]),
    ("8,m", &["M2"]),
    ("8,n", &["L / M2 K", "M1"]),
    ("12,a", &["2' 6 / 3 2"]),
    ("12,b", &["1 7 / 4 6"]),
    ("12,c", &["3 / 4 8", "1 / 4 6"]),
    ("12,d", &["2 6 / 4 7", "4 6"]),
    ("12,e", &["4 8"]),
    ("12,f", &["1 / 4"]),
    ("12,g", &["3 6 / 4 8", "1 / 4"]),
    ("12,h", &["1 / 4"]),
    ("12,i", &["6 / 3", "4"]),
    ("12,j", &["4"]),
    ("12,k", &["L / 6 4", "4"]),
    ("16,a", &["2'' 4' / 2'"]),
    ("16,b", &["8 / 4 2", "2'' 4' / 2'"]),
    ("24,a", &["6 / 3"]),
    ("24,b", &["8 / 4 2"]),
    ("24,c", &["12 4 2 / 8 6'"]),
    ("24,d", &["2' 6 / 3 2"]),
    ("24,e", &["6'' / 3"]),
    ("24,f", &["6 / 3"]),
    ("24,g", &["8 / 4 2"]),
    ("24,h", &["4"]),
    ("24,i", &["12 / 6 4"]),
    ("24,j", &["12 4 2 / 8 6"]),
    ("48,a", &["6 / 3"]),
    ("48,b", &["8 / 4 2"]),
    ("48,c", &["12 4 2' / 8' 6'"]),
];

/// Conductor expressions for the trivial group and all 72 nontrivial families.
pub fn conductor_table() -> &'static [ConductorExpression] {
    static CELL: OnceLock<Vec<ConductorExpression>> = OnceLock::new();
    CELL.get_or_init(|| {
        TABLE
            .iter()
            .map(|(key, forms)| ConductorExpression {
                family_label: format!("H_{{{key}}}"),
                forms: forms.iter().map(|f| Term::parse(f)).collect(),
            })
            .collect()
    })
}

pub fn conductor_expression(label: &str) -> Option<&'static ConductorExpression> {
    let want = normalize_label(label)?;
    conductor_table().iter().find(|e| e.family_label == want)
}

/// Conductor of a torus in family `label` from the discriminants of its fields.
///
/// Signs are ignored: every form is evaluated on absolute values. Forms whose
/// roles are all bound are evaluated and must agree; at least one form must be
/// fully bound.
pub fn conductor_eval(label: &str, bindings: &Bindings) -> Result<FactoredInt, ConductorError> {
    let expr = conductor_expression(label).ok_or_else(|| ConductorError::UnknownFamily(label.to_string()))?;
    let mut first: Option<(&Term, FactoredInt)> = None;
    for form in expr.forms.iter().filter(|f| f.is_bound(bindings)) {
        let value = form.eval(bindings)?;
        match &first {
            None => first = Some((form, value)),
            Some((t, a)) if *a != value => {
                return Err(ConductorError::Inconsistent {
                    family: expr.family_label.clone(),
                    first: t.to_string(),
                    a: Box::new(a.clone()),
                    second: form.to_string(),
                    b: Box::new(value),
                })
            }
            Some(_) => {}
        }
    }
    match first {
        Some((_, v)) => Ok(v),
        None => {
            let missing = expr.forms[0].roles().into_iter().find(|r| !bindings.contains_key(*r)).unwrap_or_default();
            Err(ConductorError::MissingRole(missing.to_string()))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::expr::bindings;

    fn fi(n: i64) -> FactoredInt {
        FactoredInt::from_i64(n).unwrap()
    }

    #[test]
    fn table_covers_catalog() {
        assert_eq!(conductor_table().len(), 73);
        for entry in lattice_groups::catalog() {
            assert!(conductor_expression(&entry.label).is_some(), "{}", entry.label);
        }
    }

    #[test]
    fn lcm_and_quotient_forms_agree() {
        // C6 field with D2 = -3, D3 = 49: D6 = D2^3 D3^2 = -27 * 2401.
        let b = bindings([("D_2", fi(-3)), ("D_3", fi(49)), ("D_6", fi(-27 * 2401))]);
        assert_eq!(conductor_eval("H_{6,c}", &b).unwrap(), fi(27 * 49));
        let bad = bindings([("D_2", fi(-3)), ("D_3", fi(49)), ("D_6", fi(-27 * 49))]);
        assert!(matches!(conductor_eval("H_{6,c}", &bad), Err(ConductorError::Inconsistent { .. })));
    }
}
