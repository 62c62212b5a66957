//! Abstract isomorphism type of a small matrix group.
//!
//! Every finite subgroup of GL3(Z) is one of eighteen abstract groups, and
//! those are told apart by order, commutativity, element-order counts and
//! center size.

use crate::group::{GroupError, MatrixGroup};

struct Signature {
    label: &'static str,
    order: usize,
    abelian: bool,
    /// (element order, count) pairs, identity included.
    orders: &'static [(usize, usize)],
    center: usize,
}

const KNOWN: &[Signature] = &[
    Signature { label: "1", order: 1, abelian: true, orders: &[(1, 1)], center: 1 },
    Signature { label: "C2", order: 2, abelian: true, orders: &[(1, 1), (2, 1)], center: 2 },
    Signature { label: "C3", order: 3, abelian: true, orders: &[(1, 1), (3, 2)], center: 3 },
    Signature { label: "C4", order: 4, abelian: true, orders: &[(1, 1), (2, 1), (4, 2)], center: 4 },
    Signature { label: "C2×C2", order: 4, abelian: true, orders: &[(1, 1), (2, 3)], center: 4 },
    Signature { label: "C6", order: 6, abelian: true, orders: &[(1, 1), (2, 1), (3, 2), (6, 2)], center: 6 },
    Signature { label: "S3", order: 6, abelian: false, orders: &[(1, 1), (2, 3), (3, 2)], center: 1 },
    Signature { label: "C4×C2", order: 8, abelian: true, orders: &[(1, 1), (2, 3), (4, 4)], center: 8 },
    Signature { label: "C2×C2×C2", order: 8, abelian: true, orders: &[(1, 1), (2, 7)], center: 8 },
    Signature { label: "D4", order: 8, abelian: false, orders: &[(1, 1), (2, 5), (4, 2)], center: 2 },
    Signature { label: "C6×C2", order: 12, abelian: true, orders: &[(1, 1), (2, 3), (3, 2), (6, 6)], center: 12 },
    Signature { label: "D6", order: 12, abelian: false, orders: &[(1, 1), (2, 7), (3, 2), (6, 2)], center: 2 },
    Signature { label: "A4", order: 12, abelian: false, orders: &[(1, 1), (2, 3), (3, 8)], center: 1 },
    Signature { label: "D4×C2", order: 16, abelian: false, orders: &[(1, 1), (2, 11), (4, 4)], center: 4 },
    Signature { label: "A4×C2", order: 24, abelian: false, orders: &[(1, 1), (2, 7), (3, 8), (6, 8)], center: 2 },
    Signature { label: "D6×C2", order: 24, abelian: false, orders: &[(1, 1), (2, 15), (3, 2), (6, 6)], center: 4 },
    Signature { label: "S4", order: 24, abelian: false, orders: &[(1, 1), (2, 9), (3, 8), (4, 6)], center: 1 },
    Signature {
        label: "S4×C2",
        order: 48,
        abelian: false,
        orders: &[(1, 1), (2, 19), (3, 8), (4, 12), (6, 8)],
        center: 2,
    },
];

/// Labels of every recognized abstract type.
pub fn known_labels() -> impl Iterator<Item = &'static str> {
    KNOWN.iter().map(|s| s.label)
}

pub fn iso_type(group: &MatrixGroup) -> Result<&'static str, GroupError> {
    let order = group.order();
    let mut counts: Vec<(usize, usize)> = Vec::new();
    for e in group.elements() {
        let o = group.element_order(e);
        match counts.iter_mut().find(|(k, _)| *k == o) {
            Some(slot) => slot.1 += 1,
            None => counts.push((o, 1)),
        }
    }
    counts.sort_unstable();
    let abelian = group.is_abelian();
    let center = group.center_size();
    KNOWN
        .iter()
        .find(|s| s.order == order && s.abelian == abelian && s.orders == counts.as_slice() && s.center == center)
        .map(|s| s.label)
        .ok_or(GroupError::Unrecognized { order })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn signatures_are_consistent() {
        for s in KNOWN {
            assert_eq!(s.orders.iter().map(|(_, c)| c).sum::<usize>(), s.order, "{}", s.label);
            assert_eq!(s.order % s.center, 0);
        }
        for (i, a) in KNOWN.iter().enumerate() {
            for b in &KNOWN[i + 1..] {
                assert!(
                    (a.order, a.abelian, a.orders, a.center) != (b.order, b.abelian, b.orders, b.center),
                    "{} and {} collide",
                    a.label,
                    b.label
                );
            }
        }
    }
}
