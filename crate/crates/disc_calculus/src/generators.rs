//! Defining polynomials (lowest degree first) for fields used as inputs to
//! [`crate::maximal_order_disc`].

use fields::BinaryCubicForm;
use num_bigint::BigInt;

/// Minimal polynomial of a difference of two roots of the cubic form. For an
/// irreducible form with non-square discriminant this generates the sextic
/// Galois closure.
pub fn closure_polynomial(form: &BinaryCubicForm) -> Vec<BigInt> {
    let big = |x: i64| BigInt::from(x);
    // a * theta is a root of x^3 + A x^2 + B x + C.
    let (a, b, c, d) = (big(form.a), big(form.b), big(form.c), big(form.d));
    let (ca, cb, cc) = (b, &a * &c, &a * &a * &d);
    // Tripled depressed cubic x^3 + p x + q.
    let p = BigInt::from(9) * &cb - BigInt::from(3) * &ca * &ca;
    let q = BigInt::from(2) * &ca * &ca * &ca - BigInt::from(9) * &ca * &cb + BigInt::from(27) * &cc;
    let zero = BigInt::from(0);
    vec![
        BigInt::from(4) * &p * &p * &p + BigInt::from(27) * &q * &q,
        zero.clone(),
        BigInt::from(9) * &p * &p,
        zero.clone(),
        BigInt::from(6) * &p,
        zero,
        BigInt::from(1),
    ]
}

/// Minimal polynomial of `sqrt(d1) + sqrt(d2)`.
pub fn biquadratic_polynomial(d1: i64, d2: i64) -> Vec<BigInt> {
    let (d1, d2) = (BigInt::from(d1), BigInt::from(d2));
    let diff = &d1 - &d2;
    vec![&diff * &diff, BigInt::from(0), BigInt::from(-2) * (d1 + d2), BigInt::from(0), BigInt::from(1)]
}
