use arith::quadratic::{fundamental_discriminants, fundamental_of, is_fundamental, FundamentalCounter};
use arith::sieve::SpfSieve;
use arith::{icbrt, isqrt, FactoredInt};
use proptest::prelude::*;

#[test]
fn counter_matches_the_list() {
    let discs = fundamental_discriminants(20_000);
    let counter = FundamentalCounter::new(20_000);
    for y in [1, 2, 3, 4, 5, 8, 100, 999, 5_000, 20_000] {
        let listed = discs.iter().filter(|d| d.unsigned_abs() <= y).count() as u64;
        assert_eq!(counter.count(y), listed, "y = {y}");
    }
}

proptest! {
    #[test]
    fn factored_round_trip(n in any::<i64>().prop_filter("nonzero", |&n| n != 0)) {
        let f = FactoredInt::from_i64(n).unwrap();
        prop_assert_eq!(f.to_i128(), Some(n as i128));
        prop_assert_eq!(f.is_negative(), n < 0);
    }

    #[test]
    fn factored_products(a in 1i64..1_000_000, b in -1_000_000i64..1_000_000) {
        prop_assume!(b != 0);
        let (fa, fb) = (FactoredInt::from_i64(a).unwrap(), FactoredInt::from_i64(b).unwrap());
        prop_assert_eq!(fa.mul(&fb).to_i128(), Some(a as i128 * b as i128));
        let g = fa.gcd(&fb).to_i128().unwrap();
        let l = fa.lcm(&fb).to_i128().unwrap();
        prop_assert_eq!(g * l, (a as i128 * b as i128).abs());
        prop_assert_eq!(fa.mul(&fb).checked_div(&fb), Some(fa));
    }

    #[test]
    fn roots_bracket(n in any::<u64>()) {
        let r = isqrt(n) as u128;
        prop_assert!(r * r <= n as u128 && (r + 1) * (r + 1) > n as u128);
        let c = icbrt(n) as u128;
        prop_assert!(c.pow(3) <= n as u128 && (c + 1).pow(3) > n as u128);
    }

    #[test]
    fn fundamental_part(n in -10_000_000i128..10_000_000) {
        prop_assume!(n != 0);
        let d = fundamental_of(n);
        if d != 1 {
            prop_assert!(is_fundamental(d as i64));
        }
        // same square class
        prop_assert!(arith::is_square(n * d));
    }

    #[test]
    fn sieve_factors_multiply_back(n in 2usize..200_000) {
        let sieve = SpfSieve::new(200_000);
        let product: usize = sieve.factor(n).into_iter().map(|(p, e)| p.pow(e)).product();
        prop_assert_eq!(product, n);
    }
}
