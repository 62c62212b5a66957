use lattice_groups::{catalog, fingerprint, generate_group, IntMatrix};
use proptest::prelude::*;

/// A unimodular matrix as a product of elementary row operations.
fn unimodular() -> impl Strategy<Value = IntMatrix> {
    prop::collection::vec((0usize..3, 0usize..3, -2i64..=2, any::<bool>()), 1..6).prop_map(|ops| {
        let mut m = IntMatrix::identity();
        for (i, j, k, flip) in ops {
            let mut e = [0i64; 9];
            for d in 0..3 {
                e[4 * d] = 1;
            }
            if i != j {
                e[3 * i + j] = k;
            }
            if flip {
                e[4 * i] = -1;
            }
            m = m.mul(&IntMatrix::from_flat(e));
        }
        m
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn conjugation_preserves_invariants(pick in 1usize..73, p in unimodular()) {
        let entry = &catalog()[pick];
        let p_inv = p.inverse().unwrap();
        let gens: Vec<IntMatrix> = entry.generators.iter().map(|g| p.mul(g).mul(&p_inv)).collect();
        let h = generate_group(&gens).unwrap();
        prop_assert_eq!(h.order(), entry.group.order());
        prop_assert_eq!(h.a_invariant().unwrap(), entry.group.a_invariant().unwrap());
        prop_assert_eq!(h.b_invariant().unwrap(), entry.group.b_invariant().unwrap());
        prop_assert_eq!(fingerprint(&h), fingerprint(&entry.group));
    }

    #[test]
    fn words_in_generators_stay_in_the_group(pick in 1usize..73, word in prop::collection::vec(0usize..8, 0..20)) {
        let entry = &catalog()[pick];
        let gens = &entry.generators;
        let m = word.iter().fold(IntMatrix::identity(), |m, &i| m.mul(&gens[i % gens.len()]));
        prop_assert!(entry.group.contains(&m));
    }
}
