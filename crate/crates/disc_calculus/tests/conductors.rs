use disc_calculus::{bindings, conductor_eval, conductor_table, ConductorError, FactoredInt};
use proptest::prelude::*;

fn fi(n: i64) -> FactoredInt {
    FactoredInt::from_i64(n).unwrap()
}

#[test]
fn single_field_conductor() {
    let b = bindings([("D_L", fi(5))]);
    assert_eq!(conductor_eval("H_{2,e}", &b).unwrap(), fi(125));
    assert_eq!(conductor_eval("H_2_b", &b).unwrap(), fi(5));
}

#[test]
fn cyclic_sextic_quotient() {
    // Q(sqrt -3) with the conductor-7 cubic: D6 = D2^3 D3^2.
    let (d2, d3) = (fi(-3), fi(49));
    let d6 = d2.pow(3).mul(&d3.pow(2));
    let b = bindings([("D_6", d6), ("D_2", d2), ("D_3", d3)]);
    assert_eq!(conductor_eval("H_{6,a}", &b).unwrap(), fi(9 * 49));
    assert_eq!(conductor_eval("H_{6,c}", &b).unwrap(), fi(27 * 49));
    assert_eq!(conductor_eval("H_{6,d}", &b).unwrap(), fi(27 * 49));
}

#[test]
fn lcm_node_needs_no_sextic() {
    // Conductor 9 cubic and Q(sqrt -3) share the prime 3.
    let b = bindings([("D_2", fi(-3)), ("D_3", fi(81))]);
    assert_eq!(conductor_eval("H_{6,c}", &b).unwrap(), fi(243));
}

#[test]
fn biquadratic_bundle() {
    let b = bindings([("D_1", fi(-3)), ("D_2", fi(-4)), ("D_3", fi(12))]);
    assert_eq!(conductor_eval("H_{4,f}", &b).unwrap(), fi(144));
    let with_l = bindings([("D_L", fi(144)), ("D_1", fi(-3)), ("D_2", fi(-4)), ("D_3", fi(12))]);
    assert_eq!(conductor_eval("H_{4,f}", &with_l).unwrap(), fi(144));
    let wrong = bindings([("D_L", fi(145)), ("D_1", fi(-3)), ("D_2", fi(-4)), ("D_3", fi(12))]);
    assert!(matches!(conductor_eval("H_{4,f}", &wrong), Err(ConductorError::Inconsistent { .. })));
}

#[test]
fn errors() {
    assert_eq!(conductor_eval("H_{4,e}", &bindings([("D_1", fi(5))])), Err(ConductorError::MissingRole("3".into())));
    let b = bindings([("D_4", fi(5)), ("D_2", fi(8))]);
    assert!(matches!(conductor_eval("H_{4,a}", &b), Err(ConductorError::NonIntegralQuotient { prime: 2, .. })));
    assert!(matches!(conductor_eval("H_{5,a}", &b), Err(ConductorError::UnknownFamily(_))));
}

#[test]
fn every_family_evaluates_on_ones() {
    for expr in conductor_table() {
        let b = expr.forms.iter().flat_map(|f| f.roles()).map(|r| (r, FactoredInt::one()));
        let b = bindings(b);
        assert!(conductor_eval(&expr.family_label, &b).unwrap().is_one(), "{}", expr.family_label);
    }
}

fn odd_squarefree() -> impl Strategy<Value = i64> {
    (1i64..2000).prop_filter("squarefree", |n| (2..=45).all(|p| n % (p * p) != 0))
}

proptest! {
    #[test]
    fn product_families_are_multiplicative(x in odd_squarefree(), y in odd_squarefree()) {
        prop_assume!(num_integer::Integer::gcd(&x, &y) == 1);
        for family in ["H_{4,g}", "H_{4,j}", "H_{6,b}", "H_{4,e}"] {
            let roles = &disc_calculus::conductor_expression(family).unwrap().forms[0];
            let names = roles.roles();
            let b = bindings([(names[0], fi(x)), (names[1], fi(y))]);
            let c = conductor_eval(family, &b).unwrap();
            let only_x = conductor_eval(family, &bindings([(names[0], fi(x)), (names[1], FactoredInt::one())])).unwrap();
            let only_y = conductor_eval(family, &bindings([(names[0], FactoredInt::one()), (names[1], fi(y))])).unwrap();
            for p in c.primes() {
                prop_assert_eq!(c.valuation(p), only_x.valuation(p) + only_y.valuation(p));
            }
        }
    }
}
