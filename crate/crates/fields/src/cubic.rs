//! Integral binary cubic forms and the cubic fields they parametrize.
//!
//! A cubic field of discriminant `D` corresponds to a unique GL2(Z)-class of
//! irreducible forms of discriminant `D` that are maximal at every prime.
//! Enumeration walks a box containing one reduced representative per class
//! and keeps those that are irreducible, maximal and canonical.

use std::cmp::Ordering;

use arith::{iroot, isqrt, FactoredInt};
use rayon::prelude::*;

use crate::record::{FieldRecord, GaloisLabel, Provenance};

/// The form `a x^3 + b x^2 y + c x y^2 + d y^3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryCubicForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
    pub d: i64,
}

/// A 2x2 substitution `(x, y) -> (m00 x + m01 y, m10 x + m11 y)`.
pub type Substitution = [[i64; 2]; 2];

/// Positive definite or indefinite binary quadratic form `(P, Q, R)`.
type Quad = (i128, i128, i128);

/// Sign of the discriminant to enumerate.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Signature {
    /// Totally real, `D > 0`.
    Positive,
    /// One real place, `D < 0`.
    Negative,
}

impl BinaryCubicForm {
    pub fn new(a: i64, b: i64, c: i64, d: i64) -> Self {
        BinaryCubicForm { a, b, c, d }
    }

    fn wide(&self) -> [i128; 4] {
        [self.a as i128, self.b as i128, self.c as i128, self.d as i128]
    }

    pub fn disc(&self) -> i128 {
        let [a, b, c, d] = self.wide();
        b * b * c * c - 4 * a * c * c * c - 4 * b * b * b * d - 27 * a * a * d * d + 18 * a * b * c * d
    }

    pub fn eval(&self, x: i128, y: i128) -> i128 {
        let [a, b, c, d] = self.wide();
        ((a * x + b * y) * x + c * y * y) * x + d * y * y * y
    }

    /// Partial derivatives at `(x, y)`.
    fn gradient(&self, x: i128, y: i128) -> (i128, i128) {
        let [a, b, c, d] = self.wide();
        (3 * a * x * x + 2 * b * x * y + c * y * y, b * x * x + 2 * c * x * y + 3 * d * y * y)
    }

    /// The Hessian covariant `(b^2 - 3ac, bc - 9ad, c^2 - 3bd)`; its
    /// discriminant is `-3 D`.
    pub fn hessian(&self) -> (i128, i128, i128) {
        let [a, b, c, d] = self.wide();
        (b * b - 3 * a * c, b * c - 9 * a * d, c * c - 3 * b * d)
    }

    pub fn negate(&self) -> Self {
        BinaryCubicForm::new(-self.a, -self.b, -self.c, -self.d)
    }

    /// `F(m00 x + m01 y, m10 x + m11 y)`.
    pub fn substitute(&self, m: &Substitution) -> Self {
        let [a, b, c, d] = self.wide();
        let (p, q) = (m[0][0] as i128, m[0][1] as i128);
        let (r, s) = (m[1][0] as i128, m[1][1] as i128);
        // Expand each monomial x^i y^(3-i) with x = p X + q Y, y = r X + s Y.
        let mut out = [0i128; 4];
        let terms = [(a, 3), (b, 2), (c, 1), (d, 0)];
        for (coef, i) in terms {
            let mut poly = [coef, 0, 0, 0];
            // After step k the polynomial has degree k.
            for k in 0..3 {
                let (u, v) = if k < i { (p, q) } else { (r, s) };
                let mut next = [0i128; 4];
                for j in 0..=k {
                    next[j] += poly[j] * u;
                    next[j + 1] += poly[j] * v;
                }
                poly = next;
            }
            for j in 0..4 {
                out[j] += poly[j];
            }
        }
        let narrow = |v: i128| i64::try_from(v).expect("cubic form coefficient overflow");
        BinaryCubicForm::new(narrow(out[0]), narrow(out[1]), narrow(out[2]), narrow(out[3]))
    }

    /// No linear factor over the rationals.
    pub fn is_irreducible(&self) -> bool {
        if self.a == 0 || self.d == 0 {
            return false;
        }
        let a = self.a.unsigned_abs();
        for root in real_roots(self) {
            for q in divisors(a) {
                let guess = (root * q as f64).round();
                if !guess.is_finite() || guess.abs() > 1e15 {
                    continue;
                }
                let p = guess as i128;
                for cand in [p - 1, p, p + 1] {
                    if self.eval(cand, q as i128) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    /// Whether the cubic ring of the form is maximal at `p`.
    pub fn is_maximal_at(&self, p: u64) -> bool {
        let pp = p as i128;
        let [a, b, c, d] = self.wide();
        if [a, b, c, d].iter().all(|v| v.rem_euclid(pp) == 0) {
            return false;
        }
        // A double root (x0 : y0) mod p gives an overorder exactly when the
        // form vanishes to second order there for some (equivalently every) lift.
        let points = std::iter::once((1i128, 0i128)).chain((0..pp).map(|x| (x, 1)));
        for (x, y) in points {
            if self.eval(x, y).rem_euclid(pp) != 0 {
                continue;
            }
            let (gx, gy) = self.gradient(x, y);
            if gx.rem_euclid(pp) != 0 || gy.rem_euclid(pp) != 0 {
                continue;
            }
            return self.eval(x, y).rem_euclid(pp * pp) != 0;
        }
        true
    }

    /// Maximal at every prime whose square divides the discriminant.
    pub fn is_maximal(&self) -> bool {
        let disc = self.disc();
        if disc == 0 {
            return false;
        }
        let f = FactoredInt::from_i128(disc).expect("nonzero");
        f.factors().iter().filter(|(_, &e)| e >= 2).all(|(&p, _)| self.is_maximal_at(p))
    }

    /// Reduced for negative discriminant: the complex root `w` of `F(x, 1)`
    /// lies in `0 < Re w < 1/2`, `|w| > 1`. The boundary would force a
    /// rational root, so irreducible classes have exactly one such form.
    pub fn is_reduced_negative(&self) -> bool {
        let [a, b, c, d] = self.wide();
        a > 0
            && a * d - b * c > 0
            && self.eval(-a - b, a) < 0
            && self.eval(a - b, a) > 0
            && d * self.eval(-d, a) < 0
    }

    /// Reduced for positive discriminant: `a > 0` and the Hessian satisfies
    /// `|Q| <= P <= R`.
    pub fn has_reduced_hessian(&self) -> bool {
        let (p, q, r) = self.hessian();
        self.a > 0 && q.abs() <= p && p <= r
    }

    /// Canonical representative of the GL2(Z)-class.
    pub fn canonical(&self) -> BinaryCubicForm {
        if self.disc() < 0 {
            canonical_negative(self)
        } else {
            canonical_positive(self)
        }
    }
}

fn divisors(n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut i = 1;
    while i * i <= n {
        if n.is_multiple_of(i) {
            out.push(i);
            if i * i != n {
                out.push(n / i);
            }
        }
        i += 1;
    }
    out
}

/// Real roots of `F(x, 1)`, polished by Newton steps.
fn real_roots(f: &BinaryCubicForm) -> Vec<f64> {
    let (a, b, c, d) = (f.a as f64, f.b as f64, f.c as f64, f.d as f64);
    let poly = |x: f64| ((a * x + b) * x + c) * x + d;
    let deriv = |x: f64| (3.0 * a * x + 2.0 * b) * x + c;
    // Depressed cubic t^3 + pt + q with x = t - b/(3a).
    let shift = b / (3.0 * a);
    let p = (3.0 * a * c - b * b) / (3.0 * a * a);
    let q = (2.0 * b * b * b - 9.0 * a * b * c + 27.0 * a * a * d) / (27.0 * a * a * a);
    let disc = -(4.0 * p * p * p + 27.0 * q * q);
    let mut roots = if disc > 0.0 {
        let m = 2.0 * (-p / 3.0).sqrt();
        let theta = (3.0 * q / (p * m)).clamp(-1.0, 1.0).acos() / 3.0;
        (0..3).map(|k| m * (theta - 2.0 * std::f64::consts::PI * k as f64 / 3.0).cos() - shift).collect()
    } else {
        let s = (q * q / 4.0 + p * p * p / 27.0).max(0.0).sqrt();
        vec![(-q / 2.0 + s).cbrt() + (-q / 2.0 - s).cbrt() - shift]
    };
    for r in roots.iter_mut() {
        for _ in 0..4 {
            let dv = deriv(*r);
            if dv == 0.0 {
                break;
            }
            let step = poly(*r) / dv;
            if !step.is_finite() {
                break;
            }
            *r -= step;
        }
    }
    roots
}

fn apply_quad(h: Quad, m: &Substitution) -> Quad {
    let (p, q, r) = h;
    let (a, b) = (m[0][0] as i128, m[0][1] as i128);
    let (c, d) = (m[1][0] as i128, m[1][1] as i128);
    (p * a * a + q * a * c + r * c * c, 2 * p * a * b + q * (a * d + b * c) + 2 * r * c * d, p * b * b + q * b * d + r * d * d)
}

fn compose(m1: &Substitution, m2: &Substitution) -> Substitution {
    let mut out = [[0i64; 2]; 2];
    for i in 0..2 {
        for j in 0..2 {
            out[i][j] = m1[i][0] * m2[0][j] + m1[i][1] * m2[1][j];
        }
    }
    out
}

/// Gauss reduction of a positive definite form, returning the substitution
/// `M` with `h o M` reduced.
fn reduce_definite(mut h: Quad) -> (Quad, Substitution) {
    let mut m: Substitution = [[1, 0], [0, 1]];
    loop {
        let (p, q, _) = h;
        if q.abs() > p {
            // x -> x + k y with k nearest to -q / 2p.
            let k = (-q).div_euclid(2 * p) + i128::from((-q).rem_euclid(2 * p) * 2 >= 2 * p);
            let t: Substitution = [[1, k as i64], [0, 1]];
            h = apply_quad(h, &t);
            m = compose(&m, &t);
            continue;
        }
        if h.2 < h.0 {
            let s: Substitution = [[0, -1], [1, 0]];
            h = apply_quad(h, &s);
            m = compose(&m, &s);
            continue;
        }
        return (h, m);
    }
}

fn small_substitutions() -> &'static [Substitution] {
    use std::sync::OnceLock;
    static CELL: OnceLock<Vec<Substitution>> = OnceLock::new();
    CELL.get_or_init(|| {
        let mut out = Vec::new();
        for e in 0..81i64 {
            let v = [e % 3 - 1, (e / 3) % 3 - 1, (e / 9) % 3 - 1, (e / 27) - 1];
            let m: Substitution = [[v[0], v[1]], [v[2], v[3]]];
            if (m[0][0] * m[1][1] - m[0][1] * m[1][0]).abs() == 1 {
                out.push(m);
            }
        }
        out
    })
}

fn positive_leading(f: BinaryCubicForm) -> BinaryCubicForm {
    if f.a < 0 {
        f.negate()
    } else {
        f
    }
}

/// Lexicographically least form with `a > 0` among those whose Hessian is
/// reduced. Equivalent reduced definite forms differ by substitutions with
/// entries in `{-1, 0, 1}`, so a fixed finite search suffices.
fn canonical_positive(f: &BinaryCubicForm) -> BinaryCubicForm {
    let (h0, m) = reduce_definite(f.hessian());
    let f0 = f.substitute(&m);
    let is_reduced = |h: Quad| h.1.abs() <= h.0 && h.0 <= h.2;
    small_substitutions()
        .iter()
        .filter(|s| is_reduced(apply_quad(h0, s)))
        .map(|s| positive_leading(f0.substitute(s)))
        .min()
        .expect("identity is always admissible")
}

/// Moves the complex root into the reduced domain by the usual modular
/// steps. Each step is chosen from exact sign tests; floating point only
/// sizes the translations.
fn canonical_negative(f: &BinaryCubicForm) -> BinaryCubicForm {
    let mut g = positive_leading(*f);
    for _ in 0..10_000 {
        let [a, b, c, d] = g.wide();
        let step: Substitution = if g.eval(-a - b, a) >= 0 || g.eval(a - b, a) <= 0 {
            // |Re w| >= 1/2: x -> x + k y sends w to w - k.
            let k = complex_root(&g).0.round() as i64;
            let k = if k != 0 { k } else if g.eval(-a - b, a) >= 0 { 1 } else { -1 };
            [[1, k], [0, 1]]
        } else if d * g.eval(-d, a) >= 0 {
            // |w| <= 1: w -> -1/w.
            [[0, -1], [1, 0]]
        } else if a * d - b * c <= 0 {
            // Re w <= 0: w -> -conj(w).
            [[-1, 0], [0, 1]]
        } else {
            return g;
        };
        g = positive_leading(g.substitute(&step));
    }
    panic!("reduction of {f:?} did not converge")
}

/// Real part and squared modulus of the complex root of `F(x, 1)`.
fn complex_root(f: &BinaryCubicForm) -> (f64, f64) {
    let theta = real_roots(f)[0];
    let (a, b, d) = (f.a as f64, f.b as f64, f.d as f64);
    let re = (-b / a - theta) / 2.0;
    let norm = -d / (a * theta);
    (re, norm)
}

/// Irreducible maximal forms, one per cubic field, with `0 < |D| <= bound`
/// and the sign of `D` fixed by `signature`.
pub fn reduced_forms(bound: u64, signature: Signature) -> Vec<BinaryCubicForm> {
    let a_max = match signature {
        Signature::Negative => iroot(16 * bound / 27, 4),
        Signature::Positive => iroot(16 * bound / 729, 4),
    };
    let mut forms: Vec<BinaryCubicForm> = (1..=a_max as i64)
        .into_par_iter()
        .flat_map_iter(|a| match signature {
            Signature::Negative => forms_negative(bound, a),
            Signature::Positive => forms_positive(bound, a),
        })
        .collect();
    forms.sort_by(|x, y| {
        let key = |f: &BinaryCubicForm| f.disc().unsigned_abs();
        key(x).cmp(&key(y)).then_with(|| x.cmp(y))
    });
    forms
}

fn accept(f: &BinaryCubicForm) -> bool {
    f.is_irreducible() && f.is_maximal()
}

fn forms_positive(bound: u64, a: i64) -> Vec<BinaryCubicForm> {
    let x = bound as i128;
    let sqrt_x = isqrt(bound) as i128;
    let b_max = (3 * a) / 2 + iroot(bound, 4) as i64 + 1;
    let a_w = a as i128;
    let mut out = Vec::new();
    for b in -b_max..=b_max {
        let b_w = b as i128;
        // 0 < P = b^2 - 3ac <= sqrt(X).
        let c_lo = div_ceil(b_w * b_w - sqrt_x, 3 * a_w);
        let c_hi = (b_w * b_w - 1).div_euclid(3 * a_w);
        for c in c_lo..=c_hi {
            let p = b_w * b_w - 3 * a_w * c;
            // |Q| = |bc - 9ad| <= P.
            let d_lo = div_ceil(b_w * c - p, 9 * a_w);
            let d_hi = (b_w * c + p).div_euclid(9 * a_w);
            for d in d_lo..=d_hi {
                let f = BinaryCubicForm::new(a, b, c as i64, d as i64);
                let disc = f.disc();
                if disc <= 0 || disc > x || arith::is_square(disc) || !f.has_reduced_hessian() {
                    continue;
                }
                if accept(&f) && f.canonical() == f {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn forms_negative(bound: u64, a: i64) -> Vec<BinaryCubicForm> {
    let x = bound as f64;
    let af = a as f64;
    let a4 = af.powi(4);
    let w_max = (x / (4.0 * a4)).cbrt();
    let u_max = (x / (3.0 * a4)).powf(0.25);
    let b_max = (1.5 * af + (x / 3.0).powf(0.25)).floor() as i64 + 1;
    let d_max = (af * (u_max + 0.5) * (w_max + 0.25)).ceil() as i64 + 1;
    let aw = a as i128;
    let mut out = Vec::new();
    for b in -b_max..=b_max {
        // The real root is u - s/2 and w = -s/2 + i sqrt(w) with s in (-1, 0),
        // so b = a (3s/2 - u) confines u to (-3/2 - b/a, -b/a).
        let bf = b as f64;
        let u_lo = (-1.5 - bf / af).max(-u_max);
        let u_hi = (-bf / af).min(u_max);
        if u_lo > u_hi + 1e-9 {
            continue;
        }
        let c_lo = (af * (0.75 + u_lo.min(0.0))).floor() as i64 - 1;
        let c_hi = (af * (w_max + 0.75 + u_hi.max(0.0))).ceil() as i64 + 1;
        for c in c_lo..=c_hi {
            let (bw, cw) = (b as i128, c as i128);
            // D(d) = -27a^2 d^2 + (18abc - 4b^3) d + (b^2c^2 - 4ac^3) >= -X.
            let qa = -27.0 * af * af;
            let qb = (18 * aw * bw * cw - 4 * bw * bw * bw) as f64;
            let qc = (bw * bw * cw * cw - 4 * aw * cw * cw * cw) as f64 + x;
            let delta = qb * qb - 4.0 * qa * qc;
            if delta < 0.0 {
                continue;
            }
            let r1 = (-qb + delta.sqrt()) / (2.0 * qa);
            let r2 = (-qb - delta.sqrt()) / (2.0 * qa);
            let lo = (r1.min(r2).floor() as i64 - 1).max(-d_max);
            let hi = (r1.max(r2).ceil() as i64 + 1).min(d_max);
            for d in lo..=hi {
                let f = BinaryCubicForm::new(a, b, c, d);
                let disc = f.disc();
                if disc >= 0 || disc < -(bound as i128) || !f.is_reduced_negative() {
                    continue;
                }
                if accept(&f) {
                    out.push(f);
                }
            }
        }
    }
    out
}

fn div_ceil(n: i128, d: i128) -> i128 {
    -((-n).div_euclid(d))
}

/// Non-cyclic cubic fields with `0 < +-D <= bound`, one record per field,
/// each carrying its canonical reduced form.
pub fn enum_cubic_s3(bound: u64, signature: Signature) -> impl Iterator<Item = FieldRecord> {
    reduced_forms(bound, signature).into_iter().map(|form| FieldRecord {
        degree: 3,
        galois_label: GaloisLabel::S3Cubic,
        disc: FactoredInt::from_i128(form.disc()).expect("nonzero"),
        provenance: Provenance::CubicForm(form),
    })
}

/// Orders forms by absolute discriminant then coefficients.
pub fn compare_forms(x: &BinaryCubicForm, y: &BinaryCubicForm) -> Ordering {
    x.disc().unsigned_abs().cmp(&y.disc().unsigned_abs()).then_with(|| x.cmp(y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn disc_and_hessian() {
        let f = BinaryCubicForm::new(1, 0, -1, -1);
        assert_eq!(f.disc(), -23);
        let (p, q, r) = f.hessian();
        assert_eq!(q * q - 4 * p * r, -3 * f.disc());
    }

    #[test]
    fn substitution_preserves_disc() {
        let f = BinaryCubicForm::new(2, -3, 5, 7);
        for m in small_substitutions() {
            assert_eq!(f.substitute(m).disc(), f.disc());
        }
        assert_eq!(f.substitute(&[[1, 0], [0, 1]]), f);
    }

    #[test]
    fn reducible_forms_are_caught() {
        // (2x - y)(x^2 + y^2)
        let f = BinaryCubicForm::new(2, -1, 2, -1);
        assert!(!f.is_irreducible());
        assert!(BinaryCubicForm::new(1, 0, -1, -1).is_irreducible());
    }

    #[test]
    fn maximality() {
        // x^3 - 2y^3 times 4 in y: x^3 - 16 y^3 has index 2 over Z[2^(1/3)].
        assert!(BinaryCubicForm::new(1, 0, 0, -2).is_maximal());
        assert!(!BinaryCubicForm::new(1, 0, 0, -16).is_maximal());
        assert!(!BinaryCubicForm::new(2, 2, 4, 6).is_maximal_at(2));
    }

    #[test]
    fn canonical_is_class_invariant() {
        for f in [BinaryCubicForm::new(1, 0, -1, -1), BinaryCubicForm::new(1, -1, -3, 1)] {
            let c = f.canonical();
            for m in [[[2, 1], [1, 1]], [[1, 3], [0, 1]], [[0, 1], [1, 0]], [[-1, 2], [1, -3]]] {
                assert_eq!(f.substitute(&m).canonical(), c, "{f:?} under {m:?}");
            }
        }
    }
}
