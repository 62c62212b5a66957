use arith::quadratic::is_fundamental;
use dirichlet::{
    census_c6, expand_euler, lemma42_rhs, named_series, series, CoefficientVector, DirichletError, EulerFactor,
    EulerFactorSpec, PrimePredicate,
};
use fields::{enum_cyclic_cubic, enum_quadratic};
use proptest::prelude::*;

#[test]
fn named_coefficients() {
    for name in ["h", "g1", "g2", "g3", "lemma25"] {
        assert_eq!(named_series(name, 10).unwrap().integer(1), Some(1), "{name}");
    }
    assert_eq!(named_series("g2", 100).unwrap().integer(8), Some(2));
    // 3969 = 3^4 7^2: local coefficients 2 and 2.
    assert_eq!(named_series("g3", 4000).unwrap().integer(3969), Some(4));
    assert!(matches!(named_series("zeta", 10), Err(DirichletError::UnknownSeries(_))));
}

#[test]
fn overlapping_predicates_are_rejected() {
    let spec = EulerFactorSpec::new(
        "bad",
        vec![
            EulerFactor::new(PrimePredicate::congruent(2, &[1]), &[(1, 1)]),
            EulerFactor::new(PrimePredicate::Prime(5), &[(1, 2)]),
        ],
    );
    assert_eq!(
        expand_euler(&spec, 10),
        Err(DirichletError::OverlappingPredicates { name: "bad".into(), prime: 5 })
    );
    assert!(expand_euler(&spec, 4).is_ok());
}

#[test]
fn tripled_argument_lives_on_cubes() {
    let g2 = named_series("g2", 100_000).unwrap().dilate(3);
    for n in g2.range() {
        if g2.numerator(n) != 0 {
            let r = (n as f64).cbrt().round() as usize;
            assert_eq!(r * r * r, n);
        }
    }
    assert_eq!(g2.integer(512), Some(2));
}

#[test]
fn combination_constant_term_cancels() {
    let rhs = lemma42_rhs(10_000).unwrap();
    assert_eq!(rhs.numerator(1), 0);
    for n in rhs.range() {
        let a = rhs.integer(n).expect("integral coefficient");
        assert!(a >= 0, "a_{n} = {a}");
    }
    let total: i64 = rhs.range().map(|n| rhs.integer(n).unwrap()).sum();
    let census = census_c6(10_000);
    assert_eq!(total, census.range().map(|n| census.numerator(n)).sum::<i64>());
}

#[test]
fn smallest_sextic_quotient() {
    // Quadratic discriminants and cyclic cubic conductors up to 50, listed
    // directly: conductors are 9 and the primes 1 mod 3.
    let quad: Vec<i64> = (-50..=50).filter(|&d| is_fundamental(d)).map(|d: i64| d.abs()).collect();
    let conductors = [7i64, 9, 13, 19, 31, 37, 43];
    let lcm = |a: i64, b: i64| a / num_gcd(a, b) * b;
    let brute = quad.iter().flat_map(|&d| conductors.iter().map(move |&f| lcm(d * d * d, d * f * f))).min().unwrap();
    let census = census_c6(5000);
    assert_eq!(census.numerator(1), 0);
    let first = census.range().find(|&n| census.numerator(n) != 0).unwrap();
    assert_eq!(first as i64, brute);
    assert_eq!(first, 243);
}

fn num_gcd(a: i64, b: i64) -> i64 {
    if b == 0 {
        a
    } else {
        num_gcd(b, a % b)
    }
}

#[test]
fn euler_product_equals_census() {
    let n = 100_000;
    let rhs = lemma42_rhs(n).unwrap();
    let census = census_c6(n);
    assert_eq!(rhs.first_difference(&census), None);
}

#[test]
fn quadratic_and_cubic_series_count_fields() {
    let n = 1_000_000;
    let g2 = named_series("g2", n).unwrap().sub(&CoefficientVector::one(n));
    let mut quad = vec![0i64; n + 1];
    for r in enum_quadratic(n as u64) {
        quad[r.abs_disc().unwrap() as usize] += 1;
    }
    assert!(g2.same_values(&CoefficientVector::from_numerators(quad, 1)));

    let g3 = named_series("g3", n).unwrap().sub(&CoefficientVector::one(n));
    let g3 = CoefficientVector::from_numerators(g3.numerators().to_vec(), 2);
    let mut cubic = vec![0i64; n + 1];
    for r in enum_cyclic_cubic(n as u64) {
        cubic[r.abs_disc().unwrap() as usize] += 1;
    }
    assert!(g3.same_values(&CoefficientVector::from_numerators(cubic, 1)));
}

fn coprime_pair(n: usize) -> impl Strategy<Value = (usize, usize)> {
    (1..=n / 2)
        .prop_flat_map(move |a| (Just(a), 1..=n / a))
        .prop_filter("coprime", |&(a, b)| arith::gcd(a as u64, b as u64) == 1)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10_000))]
    #[test]
    fn euler_products_are_multiplicative((m, k) in coprime_pair(200_000)) {
        use std::sync::OnceLock;
        static TABLES: OnceLock<Vec<CoefficientVector>> = OnceLock::new();
        let tables = TABLES.get_or_init(|| {
            [series::h(), series::g1(), series::g2(), series::g3(), series::mod7_pair()]
                .iter()
                .map(|s| expand_euler(s, 200_000).unwrap())
                .collect()
        });
        for t in tables {
            prop_assert_eq!(t.numerator(m * k), t.numerator(m) * t.numerator(k));
        }
    }
}
