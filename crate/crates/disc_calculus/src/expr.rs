//! Formal products of discriminant roles, evaluated prime by prime.

use std::collections::BTreeMap;
use std::fmt;

use arith::FactoredInt;

/// Discriminants bound to role names, keyed by [`role_key`].
pub type Bindings = BTreeMap<String, FactoredInt>;

/// Canonical key of a role name: `D_{K_1}`, `D_K1` and `K1` all map to `K1`.
pub fn role_key(name: &str) -> String {
    let s = name.trim();
    let s = s.strip_prefix("D_").or_else(|| s.strip_prefix('D')).unwrap_or(s);
    s.chars().filter(|c| !matches!(c, '{' | '}' | '_' | ' ')).collect()
}

/// Builds [`Bindings`] from `(role, value)` pairs, normalizing the role names.
pub fn bindings<'a>(pairs: impl IntoIterator<Item = (&'a str, FactoredInt)>) -> Bindings {
    pairs.into_iter().map(|(k, v)| (role_key(k), v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EvalError {
    #[error("role {0} is not bound")]
    MissingRole(String),
    #[error("{expr} is not integral at p = {prime}")]
    NonIntegralQuotient { expr: String, prime: u64 },
}

/// `prod role^e` with integer (possibly negative) exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Monomial {
    pub terms: Vec<(String, i32)>,
}

impl Monomial {
    /// Parses `"2 4' / 2'"`, `"L^2"` or `"1 3^2"`; roles after `/` are divided.
    /// The empty string is the constant 1.
    pub fn parse(text: &str) -> Monomial {
        let mut terms: Vec<(String, i32)> = Vec::new();
        let mut sign = 1;
        for tok in text.split_whitespace() {
            if tok == "/" {
                sign = -1;
                continue;
            }
            let (role, exp) = match tok.split_once('^') {
                Some((r, e)) => (r, e.parse::<i32>().expect("exponent")),
                None => (tok, 1),
            };
            let key = role_key(role);
            match terms.iter_mut().find(|(r, _)| *r == key) {
                Some(slot) => slot.1 += sign * exp,
                None => terms.push((key, sign * exp)),
            }
        }
        terms.retain(|(_, e)| *e != 0);
        Monomial { terms }
    }

    pub fn roles(&self) -> impl Iterator<Item = &str> {
        self.terms.iter().map(|(r, _)| r.as_str())
    }

    /// Signed exponent of every prime in `prod |D_role|^e`.
    pub fn valuations(&self, b: &Bindings) -> Result<BTreeMap<u64, i64>, EvalError> {
        let mut out = BTreeMap::new();
        for (role, e) in &self.terms {
            let d = b.get(role).ok_or_else(|| EvalError::MissingRole(role.clone()))?;
            for (&p, &v) in d.factors() {
                *out.entry(p).or_insert(0) += *e as i64 * v as i64;
            }
        }
        out.retain(|_, v| *v != 0);
        Ok(out)
    }

    /// The absolute value of the product; errors when a prime ends up with a
    /// negative exponent.
    pub fn eval(&self, b: &Bindings) -> Result<FactoredInt, EvalError> {
        let vals = self.valuations(b)?;
        if let Some((&prime, _)) = vals.iter().find(|(_, v)| **v < 0) {
            return Err(EvalError::NonIntegralQuotient { expr: self.to_string(), prime });
        }
        Ok(FactoredInt::from_parts(false, vals.into_iter().map(|(p, v)| (p, v as u32))))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let part = |f: &mut fmt::Formatter<'_>, positive: bool| -> Result<bool, fmt::Error> {
            let mut any = false;
            for (r, e) in self.terms.iter().filter(|(_, e)| (*e > 0) == positive) {
                if any {
                    write!(f, "*")?;
                }
                write!(f, "D_{r}")?;
                if e.abs() != 1 {
                    write!(f, "^{}", e.abs())?;
                }
                any = true;
            }
            Ok(any)
        };
        if !part(f, true)? {
            write!(f, "1")?;
        }
        if self.terms.iter().any(|(_, e)| *e < 0) {
            write!(f, "/(")?;
            part(f, false)?;
            write!(f, ")")?;
        }
        Ok(())
    }
}

/// One way of writing a conductor: a plain product or an lcm of two products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Term {
    Product(Monomial),
    Lcm(Monomial, Monomial),
}

impl Term {
    /// `"lcm(2^3, 2 3)"` or a monomial.
    pub fn parse(text: &str) -> Term {
        let t = text.trim();
        if let Some(inner) = t.strip_prefix("lcm(").and_then(|s| s.strip_suffix(')')) {
            let (x, y) = inner.split_once(',').expect("lcm of two monomials");
            Term::Lcm(Monomial::parse(x), Monomial::parse(y))
        } else {
            Term::Product(Monomial::parse(t))
        }
    }

    pub fn roles(&self) -> Vec<&str> {
        match self {
            Term::Product(m) => m.roles().collect(),
            Term::Lcm(x, y) => x.roles().chain(y.roles()).collect(),
        }
    }

    pub fn is_bound(&self, b: &Bindings) -> bool {
        self.roles().iter().all(|r| b.contains_key(*r))
    }

    pub fn eval(&self, b: &Bindings) -> Result<FactoredInt, EvalError> {
        match self {
            Term::Product(m) => m.eval(b),
            Term::Lcm(x, y) => Ok(x.eval(b)?.lcm(&y.eval(b)?)),
        }
    }
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Term::Product(m) => write!(f, "{m}"),
            Term::Lcm(x, y) => write!(f, "lcm({x}, {y})"),
        }
    }
}
