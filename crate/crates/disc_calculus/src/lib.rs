//! Discriminant and conductor calculus for the tori of rank 3: per-family
//! conductor formulas, relations between subfield discriminants, tame
//! compositum valuations, and a maximal-order oracle.

mod conductor;
mod expr;
mod generators;
mod lemmas;
mod maximal_order;
mod ramification;
mod relations;

pub use arith::FactoredInt;
pub use conductor::{conductor_eval, conductor_expression, conductor_table, ConductorError, ConductorExpression};
pub use expr::{bindings, role_key, Bindings, EvalError, Monomial, Term};
pub use generators::{biquadratic_polynomial, closure_polynomial};
pub use lemmas::{verify_lemma_bundle, Identity, LemmaReport, Residual};
pub use maximal_order::{
    maximal_order_disc, maximal_order_disc_bounded, poly_disc, MaximalOrderError, DEFAULT_HEIGHT_BOUND, MAX_DEGREE,
};
pub use ramification::{compositum_valuation, coprime_compositum_valuation, RamificationError, RamificationProfile};
pub use relations::{a4_relations, s3_closure_disc, s3_closure_disc_of, s4_sextic_disc, v4_complete, RelationError};
