use std::collections::{BTreeMap, BTreeSet};

use num_traits::Signed;

use crate::iso::iso_type;
use crate::matrix::IntMatrix;

/// Largest order of a finite subgroup of GL3(Z).
pub const MAX_ORDER: usize = 48;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GroupError {
    #[error("generator {0} has determinant other than +1 or -1")]
    NonUnimodular(Box<IntMatrix>),
    #[error("closure exceeded {MAX_ORDER} elements; the generators do not span a finite group")]
    NotFinite,
    #[error("the invariant is undefined for the trivial group")]
    TrivialGroup,
    #[error("no known isomorphism type matches order {order}")]
    Unrecognized { order: usize },
}

#[derive(Clone, Debug)]
pub struct MatrixGroup {
    /// Sorted by the row-major entry order, identity included.
    elements: Vec<IntMatrix>,
    generators: Vec<IntMatrix>,
    pub label: String,
    pub iso_label: Option<&'static str>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ConjugacyClass {
    pub representative: IntMatrix,
    pub members: Vec<IntMatrix>,
    /// Rank of `h - I` over the rationals, shared by all members.
    pub rank_defect: usize,
}

/// A set of conjugacy classes closed under the power maps `h -> h^k`,
/// `k` coprime to the exponent. Stores indices into `conjugacy_classes`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicOrbit {
    pub classes: Vec<usize>,
    pub rank_defect: usize,
}

/// Closure of `gens` under multiplication.
pub fn generate_group(gens: &[IntMatrix]) -> Result<MatrixGroup, GroupError> {
    for g in gens {
        if !g.is_unimodular() {
            return Err(GroupError::NonUnimodular(Box::new(g.clone())));
        }
    }
    let mut seen: BTreeSet<IntMatrix> = BTreeSet::new();
    let mut frontier = vec![IntMatrix::identity()];
    seen.insert(IntMatrix::identity());
    while let Some(x) = frontier.pop() {
        for g in gens {
            let y = x.mul(g);
            if seen.insert(y.clone()) {
                if seen.len() > MAX_ORDER {
                    return Err(GroupError::NotFinite);
                }
                frontier.push(y);
            }
        }
    }
    let mut group = MatrixGroup {
        elements: seen.into_iter().collect(),
        generators: gens.to_vec(),
        label: String::new(),
        iso_label: None,
    };
    group.iso_label = iso_type(&group).ok();
    Ok(group)
}

impl MatrixGroup {
    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn elements(&self) -> &[IntMatrix] {
        &self.elements
    }

    pub fn generators(&self) -> &[IntMatrix] {
        &self.generators
    }

    pub fn contains(&self, m: &IntMatrix) -> bool {
        self.elements.binary_search(m).is_ok()
    }

    pub fn index_of(&self, m: &IntMatrix) -> Option<usize> {
        self.elements.binary_search(m).ok()
    }

    pub fn is_abelian(&self) -> bool {
        self.generators.iter().all(|a| self.generators.iter().all(|b| a.mul(b) == b.mul(a)))
    }

    pub fn center_size(&self) -> usize {
        self.elements.iter().filter(|z| self.generators.iter().all(|g| z.mul(g) == g.mul(z))).count()
    }

    pub fn element_order(&self, m: &IntMatrix) -> usize {
        let mut k = 1;
        let mut acc = m.clone();
        while !acc.is_identity() {
            acc = acc.mul(m);
            k += 1;
            assert!(k <= MAX_ORDER, "element of infinite order in a finite group");
        }
        k
    }

    pub fn exponent(&self) -> usize {
        self.elements.iter().map(|e| self.element_order(e)).fold(1, num_integer::lcm)
    }

    pub fn max_abs_entry(&self) -> i64 {
        self.elements.iter().map(|e| e.max_abs_entry()).max().map(|b| i64::try_from(b.abs()).unwrap()).unwrap_or(0)
    }

    /// Conjugacy classes, ordered by the index of their smallest member.
    pub fn conjugacy_classes(&self) -> Vec<ConjugacyClass> {
        let inverses: Vec<IntMatrix> = self.elements.iter().map(|g| g.inverse().expect("unimodular")).collect();
        let mut assigned = vec![false; self.order()];
        let mut out = Vec::new();
        for (i, h) in self.elements.iter().enumerate() {
            if assigned[i] {
                continue;
            }
            let members: BTreeSet<IntMatrix> =
                self.elements.iter().zip(&inverses).map(|(g, gi)| g.mul(h).mul(gi)).collect();
            for m in &members {
                assigned[self.index_of(m).expect("closed under conjugation")] = true;
            }
            out.push(ConjugacyClass {
                representative: h.clone(),
                members: members.into_iter().collect(),
                rank_defect: h.minus_identity().rank(),
            });
        }
        out
    }

    /// Orbits of the power maps on the conjugacy classes.
    pub fn cyclotomic_orbits(&self, classes: &[ConjugacyClass]) -> Vec<CyclotomicOrbit> {
        let exp = self.exponent();
        let class_of: BTreeMap<&IntMatrix, usize> =
            classes.iter().enumerate().flat_map(|(i, c)| c.members.iter().map(move |m| (m, i))).collect();
        let units: Vec<usize> = (1..exp.max(2)).filter(|&k| num_integer::gcd(k, exp) == 1).collect();
        let mut orbit_id = vec![usize::MAX; classes.len()];
        let mut out = Vec::new();
        for start in 0..classes.len() {
            if orbit_id[start] != usize::MAX {
                continue;
            }
            let rep = &classes[start].representative;
            let mut members = BTreeSet::new();
            for &k in &units {
                let mut p = IntMatrix::identity();
                for _ in 0..k {
                    p = p.mul(rep);
                }
                members.insert(class_of[&p]);
            }
            members.insert(start);
            for &m in &members {
                orbit_id[m] = out.len();
            }
            out.push(CyclotomicOrbit { classes: members.into_iter().collect(), rank_defect: classes[start].rank_defect });
        }
        out
    }

    /// Minimal rank of `h - I` over nonidentity `h`.
    pub fn a_invariant(&self) -> Result<usize, GroupError> {
        self.elements
            .iter()
            .filter(|h| !h.is_identity())
            .map(|h| h.minus_identity().rank())
            .min()
            .ok_or(GroupError::TrivialGroup)
    }

    /// Number of power-map orbits of classes attaining the minimal rank.
    pub fn b_invariant(&self) -> Result<usize, GroupError> {
        let a = self.a_invariant()?;
        let classes = self.conjugacy_classes();
        Ok(self.cyclotomic_orbits(&classes).iter().filter(|o| o.rank_defect == a).count())
    }

    /// Dimension of the subspace fixed by every element.
    pub fn fixed_dimension(&self) -> usize {
        let rows: Vec<Vec<num_bigint::BigInt>> = self
            .generators
            .iter()
            .flat_map(|g| g.minus_identity().rows().iter().map(|r| r.to_vec()).collect::<Vec<_>>())
            .collect();
        3 - crate::matrix::rank(rows)
    }
}
