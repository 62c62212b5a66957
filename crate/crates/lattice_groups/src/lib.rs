//! Finite subgroups of GL3(Z) and their Malle-type invariants.
//!
//! `a(H)` is the least rank of `h - I` over nonidentity `h`; `b(H)` counts the
//! orbits of conjugacy classes attaining it under the power maps `h -> h^k`
//! with `k` coprime to the exponent of `H`.

mod catalog;
mod fingerprint;
mod group;
mod iso;
mod matrix;

pub use catalog::{catalog, lookup, normalize_label, CatalogEntry, TRIVIAL_LABEL};
pub use fingerprint::{fingerprint, Fingerprint};
pub use group::{generate_group, ConjugacyClass, CyclotomicOrbit, GroupError, MatrixGroup, MAX_ORDER};
pub use iso::{iso_type, known_labels};
pub use matrix::{invariant_factors, rank, IntMatrix};

/// `a(H)` for a group.
pub fn a_invariant(h: &MatrixGroup) -> Result<usize, GroupError> {
    h.a_invariant()
}

/// `b(H)` for a group.
pub fn b_invariant(h: &MatrixGroup) -> Result<usize, GroupError> {
    h.b_invariant()
}

pub fn conjugacy_classes(h: &MatrixGroup) -> Vec<ConjugacyClass> {
    h.conjugacy_classes()
}
