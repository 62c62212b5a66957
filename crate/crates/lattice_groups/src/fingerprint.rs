//! Invariants that separate the catalog classes without deciding integral
//! conjugacy directly.

use num_bigint::BigInt;

use crate::group::MatrixGroup;
use crate::matrix::{invariant_factors, IntMatrix};

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ClassSummary {
    pub size: usize,
    pub element_order: usize,
    pub trace: BigInt,
    pub rank: usize,
    /// Invariant factors of `h - I` over the integers.
    pub elementary: Vec<BigInt>,
    /// Invariant factors of `h + I`.
    pub elementary_plus: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Fingerprint {
    pub order: usize,
    pub iso_label: Option<&'static str>,
    pub a: Option<usize>,
    pub b: Option<usize>,
    pub fixed_dimension: usize,
    /// Sorted per-class data; the traces alone are the natural character.
    pub classes: Vec<ClassSummary>,
    /// Invariant factors of the augmentation image `sum (g - I) Z^3`.
    pub coinvariants: Vec<BigInt>,
    /// The same for the transposed (dual) action.
    pub dual_coinvariants: Vec<BigInt>,
    /// Sorted coinvariants of every subgroup generated by an ordered pair.
    pub pair_coinvariants: Vec<Vec<BigInt>>,
}

fn stacked(gens: &[IntMatrix]) -> Vec<Vec<BigInt>> {
    (0..3)
        .map(|i| gens.iter().flat_map(|g| g.minus_identity().rows()[i].to_vec()).collect())
        .collect()
}

pub fn fingerprint(h: &MatrixGroup) -> Fingerprint {
    let mut classes: Vec<ClassSummary> = h
        .conjugacy_classes()
        .into_iter()
        .map(|c| {
            let rows_of = |m: &IntMatrix| -> Vec<Vec<BigInt>> { m.rows().iter().map(|r| r.to_vec()).collect() };
            let minus = rows_of(&c.representative.minus_identity());
            let plus = rows_of(&c.representative.neg_mul().minus_identity());
            ClassSummary {
                size: c.members.len(),
                element_order: h.element_order(&c.representative),
                trace: c.representative.trace(),
                rank: c.rank_defect,
                elementary: invariant_factors(&minus),
                elementary_plus: invariant_factors(&plus),
            }
        })
        .collect();
    classes.sort();
    let gens = h.generators();
    let duals: Vec<IntMatrix> = gens.iter().map(|g| g.transpose()).collect();
    let elems = h.elements();
    let mut pair_coinvariants: Vec<Vec<BigInt>> = elems
        .iter()
        .flat_map(|x| elems.iter().map(move |y| invariant_factors(&stacked(&[x.clone(), y.clone()]))))
        .collect();
    pair_coinvariants.sort();
    Fingerprint {
        order: h.order(),
        iso_label: h.iso_label,
        a: h.a_invariant().ok(),
        b: h.b_invariant().ok(),
        fixed_dimension: h.fixed_dimension(),
        classes,
        coinvariants: if gens.is_empty() { Vec::new() } else { invariant_factors(&stacked(gens)) },
        dual_coinvariants: if gens.is_empty() { Vec::new() } else { invariant_factors(&stacked(&duals)) },
        pair_coinvariants,
    }
}
