//! Exact Dirichlet coefficients of Euler products and of the cyclic sextic
//! conductor series, with exponent fits for their partial sums.

mod c6;
mod coeffs;
mod divisor;
mod euler;
mod fit;

pub use c6::{c6_quotients, census_c6, counts_at, lemma42_rhs};
pub use coeffs::CoefficientVector;
pub use divisor::{divisor_power_sum, divisor_power_sums, DivisorExponent, DivisorSum};
pub use euler::{expand_euler, series, DirichletError, EulerFactor, EulerFactorSpec, PrimePredicate};
pub use fit::{half_decade_grid, tauberian_fit, tauberian_fit_fixed_w, PartialSumFit};

/// Coefficients of a named series: an Euler product from [`series`] or the
/// combination `lemma42`.
pub fn named_series(name: &str, n: usize) -> Result<CoefficientVector, DirichletError> {
    if name == "lemma42" {
        return lemma42_rhs(n);
    }
    let spec = series::by_name(name).ok_or_else(|| DirichletError::UnknownSeries(name.to_string()))?;
    expand_euler(&spec, n)
}
