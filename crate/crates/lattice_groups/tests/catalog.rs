use std::collections::BTreeSet;

use lattice_groups::{catalog, fingerprint, generate_group, lookup, IntMatrix};

/// (label, order, a, b) for the 72 nontrivial classes.
const REFERENCE: &[(&str, usize, usize, usize)] = &[
    ("2,a", 2, 2, 1),
    ("2,b", 2, 1, 1),
    ("2,c", 2, 2, 1),
    ("2,d", 2, 1, 1),
    ("2,e", 2, 3, 1),
    // An order-3 element fixes a line, so h - I has rank 2.
    ("3,a", 3, 2, 1),
    ("3,b", 3, 2, 1),
    ("4,a", 4, 2, 2),
    ("4,b", 4, 2, 1),
    ("4,c", 4, 2, 2),
    ("4,d", 4, 2, 1),
    ("4,e", 4, 1, 1),
    ("4,f", 4, 2, 3),
    ("4,g", 4, 1, 2),
    ("4,h", 4, 2, 3),
    ("4,i", 4, 1, 2),
    ("4,j", 4, 1, 2),
    ("4,k", 4, 1, 1),
    ("4,l", 4, 2, 3),
    ("4,m", 4, 1, 2),
    ("4,n", 4, 2, 3),
    ("4,o", 4, 1, 2),
    ("6,a", 6, 2, 3),
    ("6,b", 6, 1, 1),
    ("6,c", 6, 2, 1),
    ("6,d", 6, 2, 1),
    ("6,e", 6, 2, 2),
    ("6,f", 6, 1, 1),
    ("6,g", 6, 2, 2),
    ("6,h", 6, 1, 1),
    ("6,i", 6, 2, 2),
    ("6,j", 6, 1, 1),
    ("8,a", 8, 1, 1),
    ("8,b", 8, 1, 1),
    ("8,c", 8, 1, 3),
    ("8,d", 8, 1, 3),
    ("8,e", 8, 1, 3),
    ("8,f", 8, 1, 3),
    ("8,g", 8, 2, 4),
    ("8,h", 8, 1, 2),
    ("8,i", 8, 1, 1),
    ("8,j", 8, 1, 1),
    ("8,k", 8, 2, 4),
    ("8,l", 8, 1, 2),
    ("8,m", 8, 1, 1),
    ("8,n", 8, 1, 1),
    ("12,a", 12, 1, 1),
    ("12,b", 12, 2, 5),
    ("12,c", 12, 1, 2),
    ("12,d", 12, 1, 2),
    ("12,e", 12, 1, 2),
    ("12,f", 12, 1, 1),
    ("12,g", 12, 1, 1),
    ("12,h", 12, 1, 1),
    ("12,i", 12, 2, 2),
    ("12,j", 12, 2, 2),
    ("12,k", 12, 2, 2),
    ("16,a", 16, 1, 3),
    ("16,b", 16, 1, 3),
    ("24,a", 24, 1, 1),
    ("24,b", 24, 1, 1),
    ("24,c", 24, 1, 1),
    ("24,d", 24, 1, 3),
    ("24,e", 24, 2, 4),
    ("24,f", 24, 1, 1),
    ("24,g", 24, 2, 4),
    ("24,h", 24, 1, 1),
    ("24,i", 24, 2, 4),
    ("24,j", 24, 1, 1),
    ("48,a", 48, 1, 2),
    ("48,b", 48, 1, 2),
    ("48,c", 48, 1, 2),
];

#[test]
fn catalog_has_73_entries_in_reference_order() {
    let cat = catalog();
    assert_eq!(cat.len(), 73);
    assert_eq!(cat[0].group.order(), 1);
    assert_eq!(cat[0].iso_label, "1");
    for (entry, (key, ..)) in cat[1..].iter().zip(REFERENCE) {
        assert_eq!(entry.label, format!("H_{{{key}}}"));
    }
}

#[test]
fn reference_invariants() {
    let mut mismatches = Vec::new();
    for (key, order, a, b) in REFERENCE {
        let e = lookup(&format!("H_{{{key}}}")).unwrap();
        let got = (e.group.order(), e.group.a_invariant().unwrap(), e.group.b_invariant().unwrap());
        if got != (*order, *a, *b) {
            mismatches.push(format!("{key}: got {got:?}, want {:?}", (order, a, b)));
        }
    }
    assert!(mismatches.is_empty(), "{mismatches:#?}");
}

#[test]
fn iso_labels_match_headers() {
    for e in &catalog()[1..] {
        assert_eq!(e.group.iso_label, Some(e.iso_label), "{}", e.label);
    }
    assert_eq!(lookup("H_{24,d}").unwrap().iso_label, "D6×C2");
    assert_eq!(lookup("H_6_e").unwrap().group.iso_label, Some("S3"));
    assert_eq!(lookup("8g").unwrap().group.iso_label, Some("D4"));
}

#[test]
fn orders_divide_48_and_entries_stay_small() {
    for e in catalog() {
        assert!([1, 2, 3, 4, 6, 8, 12, 16, 24, 48].contains(&e.group.order()), "{}", e.label);
        assert!(e.group.max_abs_entry() <= 2, "{}", e.label);
        for g in &e.generators {
            assert!(e.group.contains(g));
        }
    }
}

#[test]
fn fingerprints_are_pairwise_distinct() {
    let prints: Vec<_> = catalog().iter().map(|e| fingerprint(&e.group)).collect();
    let distinct: BTreeSet<_> = prints.iter().collect();
    assert_eq!(distinct.len(), 73);
}

#[test]
fn only_minus_identity_has_a_three() {
    for e in &catalog()[1..] {
        let is_neg = e.group.order() == 2 && e.group.contains(&IntMatrix::neg_identity());
        assert_eq!(e.group.a_invariant().unwrap() == 3, is_neg, "{}", e.label);
    }
}

#[test]
fn class_structure_examples() {
    let s3 = &lookup("H_{6,e}").unwrap().group;
    let mut sizes: Vec<usize> = s3.conjugacy_classes().iter().map(|c| c.members.len()).collect();
    sizes.sort();
    assert_eq!(sizes, vec![1, 2, 3]);
    assert_eq!(lookup("H_{24,e}").unwrap().group.conjugacy_classes().len(), 5);
    let abelian = &lookup("H_{8,c}").unwrap().group;
    assert!(abelian.conjugacy_classes().iter().all(|c| c.members.len() == 1));
    assert_eq!(generate_group(&lookup("H_{48,a}").unwrap().generators).unwrap().order(), 48);
}

#[test]
fn orbits_partition_classes() {
    for e in catalog() {
        let classes = e.group.conjugacy_classes();
        assert_eq!(classes.iter().map(|c| c.members.len()).sum::<usize>(), e.group.order());
        let orbits = e.group.cyclotomic_orbits(&classes);
        let mut all: Vec<usize> = orbits.iter().flat_map(|o| o.classes.iter().copied()).collect();
        all.sort();
        assert_eq!(all, (0..classes.len()).collect::<Vec<_>>(), "{}", e.label);
        for o in &orbits {
            assert!(o.classes.iter().all(|&c| classes[c].rank_defect == o.rank_defect));
        }
    }
}
