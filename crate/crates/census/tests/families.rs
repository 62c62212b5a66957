use census::{
    conductors_by_enumeration, count_family, count_family_grid, family_spec, implemented_labels, third_quadratic,
    CensusError, CensusOptions, Shape,
};
use lattice_groups::{lookup, IntMatrix, MatrixGroup};
use proptest::prelude::*;

const SMALL_GRID: [u64; 5] = [50, 200, 700, 1500, 3000];

fn by_enumeration(label: &str, grid: &[u64]) -> Vec<u64> {
    let values = conductors_by_enumeration(label, *grid.last().unwrap(), None).unwrap();
    grid.iter().map(|&x| values.partition_point(|&v| v <= x as u128) as u64).collect()
}

#[test]
fn fast_counts_match_field_enumeration() {
    for label in implemented_labels() {
        if label == "H_{12,c}" {
            continue;
        }
        let fast = count_family_grid(&label, &SMALL_GRID, &CensusOptions::default()).unwrap();
        assert_eq!(fast, by_enumeration(&label, &SMALL_GRID), "{label}");
    }
}

#[test]
fn small_values() {
    // -3, -4, 5, -7, 8, -8
    assert_eq!(count_family("H_{2,b}", 10).unwrap(), 6);
    // |d|^2 <= 100: the same six fields
    assert_eq!(count_family("H_{2,a}", 100).unwrap(), 6);
    // conductors 7 and 9
    assert_eq!(count_family("H_{3,a}", 81).unwrap(), 2);
    assert_eq!(count_family("H_{3,a}", 80).unwrap(), 1);
}

#[test]
fn sextic_lcm_cube_matches_c6_series() {
    let series = dirichlet::census_c6(10_000);
    assert_eq!(series.denominator(), 1);
    let total: i64 = series.numerators().iter().sum();
    assert_eq!(count_family("H_{6,c}", 10_000).unwrap() as i64, total);
    assert_eq!(count_family("H_{6,c}", 10_000).unwrap(), count_family("H_{6,d}", 10_000).unwrap());
}

#[test]
fn pair_square_by_inclusion_exclusion() {
    // Ordered distinct pairs (A, B) with |D_A| |D_B|^2 <= X, listed directly.
    let x = 20_000u64;
    let discs: Vec<u64> = arith::quadratic::fundamental_discriminants(x / 9).iter().map(|d| d.unsigned_abs()).collect();
    let mut direct = 0;
    for (i, &a) in discs.iter().enumerate() {
        for (j, &b) in discs.iter().enumerate() {
            if i != j && a * b * b <= x {
                direct += 1;
            }
        }
    }
    assert_eq!(count_family("H_{4,e}", x).unwrap(), direct);
}

#[test]
fn unknown_and_uncounted_families() {
    assert!(matches!(count_family("H_{99,z}", 10), Err(CensusError::UnknownFamily(_))));
    match count_family("H_{8,g}", 10) {
        Err(CensusError::Unimplemented { label, reason }) => {
            assert_eq!(label, "H_{8,g}");
            assert!(!reason.is_empty());
        }
        other => panic!("{other:?}"),
    }
    assert!(matches!(count_family("H_{12,c}", 10), Err(CensusError::NeedsImport(_))));
}

#[test]
fn bad_grids_are_rejected() {
    let opts = CensusOptions::default();
    assert!(matches!(count_family_grid("H_{2,b}", &[], &opts), Err(CensusError::BadGrid(_))));
    assert!(matches!(count_family_grid("H_{2,b}", &[10, 5], &opts), Err(CensusError::BadGrid(_))));
}

#[test]
fn bounds_are_enforced() {
    let mut opts = CensusOptions::default();
    opts.bounds.s3_cubic = 1000;
    assert!(matches!(count_family_grid("H_{6,f}", &[2000], &opts), Err(CensusError::BoundExceeded { .. })));
    assert!(count_family_grid("H_{6,f}", &[1000], &opts).is_ok());
    opts.bounds.quadratic = 30;
    assert!(matches!(count_family_grid("H_{4,g}", &[1000], &opts), Err(CensusError::BoundExceeded { .. })));
}

#[test]
fn conductors_use_only_constituent_roles() {
    for label in implemented_labels() {
        let spec = family_spec(&label).unwrap();
        assert!(spec.conductor_is_bound(), "{label}: {:?}", spec.bound_roles());
    }
}

#[test]
fn labels_normalize() {
    assert_eq!(family_spec("4e").unwrap().label, "H_{4,e}");
    assert_eq!(count_family("2b", 10).unwrap(), 6);
}

// Multiplicities: tori with a given Galois splitting field are the
// automorphisms of H modulo those induced by its normalizer in GL_3(Z).

fn index_table(h: &MatrixGroup) -> Vec<Vec<usize>> {
    let el = h.elements();
    el.iter().map(|a| el.iter().map(|b| h.index_of(&a.mul(b)).unwrap()).collect()).collect()
}

fn generator_indices(h: &MatrixGroup) -> Vec<usize> {
    h.generators().iter().map(|g| h.index_of(g).unwrap()).collect()
}

/// Extends generator images to a map on all of `H`, if it is a bijective homomorphism.
fn extend(table: &[Vec<usize>], identity: usize, gens: &[usize], images: &[usize]) -> Option<Vec<usize>> {
    let n = table.len();
    let mut map = vec![usize::MAX; n];
    map[identity] = identity;
    let mut queue = vec![identity];
    while let Some(x) = queue.pop() {
        for (&g, &img) in gens.iter().zip(images) {
            let y = table[x][g];
            let fy = table[map[x]][img];
            if map[y] == usize::MAX {
                map[y] = fy;
                queue.push(y);
            } else if map[y] != fy {
                return None;
            }
        }
    }
    // Check the homomorphism property on all pairs and bijectivity.
    let mut seen = vec![false; n];
    for &v in &map {
        if v == usize::MAX || std::mem::replace(&mut seen[v], true) {
            return None;
        }
    }
    for a in 0..n {
        for b in 0..n {
            if map[table[a][b]] != table[map[a]][map[b]] {
                return None;
            }
        }
    }
    Some(map)
}

fn automorphism_count(h: &MatrixGroup) -> usize {
    let table = index_table(h);
    let identity = h.index_of(&IntMatrix::identity()).unwrap();
    let gens = generator_indices(h);
    let n = table.len();
    let mut count = 0;
    let mut images = vec![0; gens.len()];
    loop {
        if extend(&table, identity, &gens, &images).is_some() {
            count += 1;
        }
        let mut k = 0;
        while k < images.len() {
            images[k] += 1;
            if images[k] < n {
                break;
            }
            images[k] = 0;
            k += 1;
        }
        if k == images.len() {
            return count;
        }
    }
}

type M3 = [[i64; 3]; 3];

fn to_small(m: &IntMatrix) -> M3 {
    let mut out = [[0; 3]; 3];
    for (i, row) in m.rows().iter().enumerate() {
        for (j, e) in row.iter().enumerate() {
            out[i][j] = i64::try_from(e).unwrap();
        }
    }
    out
}

fn mul(a: &M3, b: &M3) -> M3 {
    let mut out = [[0; 3]; 3];
    for i in 0..3 {
        for j in 0..3 {
            out[i][j] = (0..3).map(|k| a[i][k] * b[k][j]).sum();
        }
    }
    out
}

fn det(m: &M3) -> i64 {
    m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
}

/// Size of the image of `{P in GL_3(Z) : P H P^-1 = H}` in `Aut(H)`, searching
/// `P` with entries in `-2..=2`. `P H = H' P` avoids inverting `P`.
fn normalizer_image(h: &MatrixGroup) -> usize {
    let elements: Vec<M3> = h.elements().iter().map(to_small).collect();
    let gens: Vec<M3> = h.generators().iter().map(to_small).collect();
    let position = |m: &M3| elements.iter().position(|e| e == m);
    let mut induced = std::collections::BTreeSet::new();
    for code in 0..5usize.pow(9) {
        let mut p = [[0i64; 3]; 3];
        let mut c = code;
        for v in p.iter_mut().flatten() {
            *v = (c % 5) as i64 - 2;
            c /= 5;
        }
        if det(&p).abs() != 1 {
            continue;
        }
        let image_of = |g: &M3| {
            let pg = mul(&p, g);
            elements.iter().position(|e| mul(e, &p) == pg)
        };
        if gens.iter().any(|g| image_of(g).is_none()) {
            continue;
        }
        let perm: Vec<usize> = elements.iter().map(|g| image_of(g).unwrap()).collect();
        debug_assert!(perm.iter().all(|&i| position(&elements[i]).is_some()));
        induced.insert(perm);
    }
    induced.len()
}

#[test]
fn multiplicities_follow_the_normalizer() {
    for label in implemented_labels() {
        let h = &lookup(&label).unwrap().group;
        let aut = automorphism_count(h);
        let image = normalizer_image(h);
        assert_eq!(aut % image, 0, "{label}");
        let shape = family_spec(&label).unwrap().shape;
        assert_eq!((aut / image) as u64, shape.per_galois_field(), "{label}: |Aut| = {aut}, image {image}");
    }
}

#[test]
fn automorphism_counts_of_small_groups() {
    for (label, aut) in [("H_{2,a}", 1), ("H_{3,a}", 2), ("H_{4,a}", 2), ("H_{4,e}", 6), ("H_{6,a}", 2), ("H_{6,e}", 6)] {
        assert_eq!(automorphism_count(&lookup(label).unwrap().group), aut, "{label}");
    }
}

#[test]
fn every_fit_shape_is_covered() {
    let shapes: Vec<Shape> = implemented_labels().iter().map(|l| family_spec(l).unwrap().shape).collect();
    assert!(shapes.contains(&Shape::ImportedSextic));
    assert!(shapes.contains(&Shape::QuadraticQuartic));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn counts_are_monotone(x in 1u64..5_000, dx in 0u64..5_000, pick in 0usize..64) {
        let labels: Vec<String> = implemented_labels().into_iter().filter(|l| l != "H_{12,c}").collect();
        let label = &labels[pick % labels.len()];
        let counts = count_family_grid(label, &[x, x + dx], &CensusOptions::default()).unwrap();
        prop_assert!(counts[0] <= counts[1]);
    }

    #[test]
    fn third_quadratic_is_the_product_class(i in 0usize..600, j in 0usize..600) {
        let discs = arith::quadratic::fundamental_discriminants(1000);
        let (a, b) = (discs[i % discs.len()], discs[j % discs.len()]);
        prop_assume!(a != b);
        let c = third_quadratic(a, b);
        prop_assert!(arith::quadratic::is_fundamental(c));
        prop_assert_eq!(c as i128, arith::quadratic::fundamental_of(a as i128 * b as i128));
        prop_assert_eq!(third_quadratic(a, c), b);
    }
}
