//! Class groups of quadratic fields via binary quadratic forms.
//!
//! For `d < 0` the classes are the reduced positive definite forms. For
//! `d > 0` they are the cycles of reduced indefinite forms under the
//! reduction operator `rho`, which is proper equivalence, so the group
//! obtained is the narrow class group.

use std::collections::HashMap;

use arith::quadratic::is_fundamental;
use arith::isqrt;
use num_integer::Integer;

/// Largest `|d|` accepted by [`quad_class_group`].
pub const DEFAULT_CLASS_GROUP_BOUND: u64 = 100_000_000;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ClassGroupError {
    #[error("{0} is not a fundamental discriminant")]
    NotFundamental(i64),
    #[error("|{d}| exceeds the configured bound {bound}")]
    BoundExceeded { d: i64, bound: u64 },
}

/// The form `a x^2 + b x y + c y^2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct QuadForm {
    pub a: i64,
    pub b: i64,
    pub c: i64,
}

impl QuadForm {
    pub fn new(a: i64, b: i64, c: i64) -> Self {
        QuadForm { a, b, c }
    }

    pub fn disc(&self) -> i64 {
        self.b * self.b - 4 * self.a * self.c
    }

    /// Principal form of discriminant `d`.
    pub fn principal(d: i64) -> Self {
        let b = d.rem_euclid(2);
        QuadForm::new(1, b, (b * b - d) / 4)
    }

    /// Inverse class: `(a, -b, c)`.
    pub fn inverse(&self) -> Self {
        QuadForm::new(self.a, -self.b, self.c)
    }

    /// Composite of two primitive forms of the same discriminant (not reduced).
    pub fn compose(&self, other: &QuadForm) -> QuadForm {
        let d = self.disc();
        assert_eq!(d, other.disc(), "composition needs equal discriminants");
        let (a1, b1, _) = (self.a, self.b, self.c);
        let (a2, b2, c2) = (other.a, other.b, other.c);
        let s = (b1 + b2) / 2;
        // u a1 + v a2 + w s = e = gcd(a1, a2, s)
        let g12 = a1.extended_gcd(&a2);
        let g = g12.gcd.extended_gcd(&s);
        let (e, v, w) = (g.gcd, g.x * g12.y, g.y);
        let (e, v, w) = if e < 0 { (-e, -v, -w) } else { (e, v, w) };
        let a3 = (a1 as i128 * a2 as i128 / (e as i128 * e as i128)) as i64;
        let b3 = b2 as i128 + 2 * (a2 / e) as i128 * (v as i128 * (s - b2) as i128 - w as i128 * c2 as i128);
        let b3 = b3.rem_euclid(2 * a3.unsigned_abs() as i128) as i64;
        let num = b3 as i128 * b3 as i128 - d as i128;
        assert!(num % (4 * a3 as i128) == 0, "composition lost integrality");
        QuadForm::new(a3, b3, (num / (4 * a3 as i128)) as i64)
    }

    /// Reduction of a positive definite form.
    pub fn reduce_definite(&self) -> QuadForm {
        let (mut a, mut b, mut c) = (self.a, self.b, self.c);
        loop {
            if b > a || b <= -a {
                // b -> b mod 2a into (-a, a]
                let r = b.rem_euclid(2 * a);
                let nb = if r > a { r - 2 * a } else { r };
                c += (nb * nb - b * b) / (4 * a);
                b = nb;
                continue;
            }
            if a > c {
                std::mem::swap(&mut a, &mut c);
                b = -b;
                continue;
            }
            if a == c && b < 0 {
                b = -b;
            }
            return QuadForm::new(a, b, c);
        }
    }

    /// Reduced indefinite: `|sqrt(d) - 2|a|| < b < sqrt(d)`.
    pub fn is_reduced_indefinite(&self) -> bool {
        let d = self.disc();
        let s = isqrt(d as u64) as i64;
        let twice_a = 2 * self.a.abs();
        self.b > 0 && self.b <= s && (twice_a + self.b).pow(2) > d && (twice_a - self.b <= 0 || (twice_a - self.b).pow(2) < d)
    }

    /// One step of indefinite reduction.
    pub fn rho(&self) -> QuadForm {
        let d = self.disc();
        let s = isqrt(d as u64) as i64;
        let c = self.c;
        let m = 2 * c.abs();
        let target = (-self.b).rem_euclid(m);
        let b = if c.abs() > s {
            // representative in (-|c|, |c|]
            if target > c.abs() {
                target - m
            } else {
                target
            }
        } else {
            // representative in (s - 2|c|, s]
            let lo = s - m + 1;
            lo + (target - lo).rem_euclid(m)
        };
        QuadForm::new(c, b, (b * b - d) / (4 * c))
    }

    pub fn reduce_indefinite(&self) -> QuadForm {
        let mut f = *self;
        while !f.is_reduced_indefinite() {
            f = f.rho();
        }
        f
    }
}

/// Class number and small torsion of a quadratic field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ClassGroupData {
    pub d: i64,
    /// Class number, narrow when `d > 0`.
    pub h: u64,
    /// `(p, h_p)` for `p` in {2, 3}.
    pub p_torsion: Vec<(u64, u64)>,
}

impl ClassGroupData {
    pub fn h_p(&self, p: u64) -> Option<u64> {
        self.p_torsion.iter().find(|(q, _)| *q == p).map(|&(_, n)| n)
    }
}

/// The form class group as an explicit finite set with a reduction map.
pub struct FormClassGroup {
    d: i64,
    /// One reduced representative per class.
    reps: Vec<QuadForm>,
    /// Reduced form to class index (every reduced form of a cycle when `d > 0`).
    index: HashMap<QuadForm, usize>,
}

impl FormClassGroup {
    pub fn new(d: i64) -> Self {
        if d < 0 {
            let reps = reduced_definite_forms(d);
            let index = reps.iter().enumerate().map(|(i, f)| (*f, i)).collect();
            FormClassGroup { d, reps, index }
        } else {
            let mut reps = Vec::new();
            let mut index = HashMap::new();
            for f in reduced_indefinite_forms(d) {
                if index.contains_key(&f) {
                    continue;
                }
                let id = reps.len();
                reps.push(f);
                let mut g = f;
                loop {
                    index.insert(g, id);
                    g = g.rho();
                    if g == f {
                        break;
                    }
                }
            }
            FormClassGroup { d, reps, index }
        }
    }

    pub fn disc(&self) -> i64 {
        self.d
    }

    pub fn order(&self) -> usize {
        self.reps.len()
    }

    pub fn representatives(&self) -> &[QuadForm] {
        &self.reps
    }

    /// Class index of an arbitrary primitive form of this discriminant.
    pub fn class_of(&self, f: &QuadForm) -> usize {
        let r = if self.d < 0 { f.reduce_definite() } else { f.reduce_indefinite() };
        self.index[&r]
    }

    pub fn identity(&self) -> usize {
        self.class_of(&QuadForm::principal(self.d))
    }

    pub fn mul(&self, i: usize, j: usize) -> usize {
        self.class_of(&self.reps[i].compose(&self.reps[j]))
    }

    pub fn pow(&self, i: usize, k: u32) -> usize {
        let mut acc = self.identity();
        for _ in 0..k {
            acc = self.mul(acc, i);
        }
        acc
    }

    /// Number of classes killed by `n`.
    pub fn torsion(&self, n: u32) -> u64 {
        let e = self.identity();
        (0..self.order()).filter(|&i| self.pow(i, n) == e).count() as u64
    }
}

fn reduced_definite_forms(d: i64) -> Vec<QuadForm> {
    let n = d.unsigned_abs() as i64;
    let mut out = Vec::new();
    let mut a = 1;
    while 3 * a * a <= n {
        for b in -a + 1..=a {
            if (b * b - d) % (4 * a) != 0 {
                continue;
            }
            let c = (b * b - d) / (4 * a);
            if c < a || (a == c && b < 0) {
                continue;
            }
            if a.gcd(&b).gcd(&c) == 1 {
                out.push(QuadForm::new(a, b, c));
            }
        }
        a += 1;
    }
    out
}

fn reduced_indefinite_forms(d: i64) -> Vec<QuadForm> {
    let s = isqrt(d as u64) as i64;
    let mut out = Vec::new();
    for b in (1..=s).filter(|b| (b - d).rem_euclid(2) == 0) {
        let ac = (b * b - d) / 4;
        let m = ac.abs();
        let mut a = 1;
        while a * a <= m {
            if m % a == 0 {
                for aa in [a, m / a] {
                    for sa in [aa, -aa] {
                        let f = QuadForm::new(sa, b, ac / sa);
                        if f.is_reduced_indefinite() && sa.gcd(&b).gcd(&f.c) == 1 && !out.contains(&f) {
                            out.push(f);
                        }
                    }
                }
            }
            a += 1;
        }
    }
    out.sort();
    out
}

/// Class group data of the quadratic field of discriminant `d`.
pub fn quad_class_group(d: i64) -> Result<ClassGroupData, ClassGroupError> {
    quad_class_group_bounded(d, DEFAULT_CLASS_GROUP_BOUND)
}

pub fn quad_class_group_bounded(d: i64, bound: u64) -> Result<ClassGroupData, ClassGroupError> {
    if !is_fundamental(d) {
        return Err(ClassGroupError::NotFundamental(d));
    }
    if d.unsigned_abs() > bound {
        return Err(ClassGroupError::BoundExceeded { d, bound });
    }
    let group = FormClassGroup::new(d);
    Ok(ClassGroupData { d, h: group.order() as u64, p_torsion: vec![(2, group.torsion(2)), (3, group.torsion(3))] })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_class_numbers() {
        let h = |d| quad_class_group(d).unwrap().h;
        assert_eq!(h(-3), 1);
        assert_eq!(h(-4), 1);
        assert_eq!(h(-23), 3);
        assert_eq!(h(-47), 5);
        assert_eq!(h(-84), 4);
        assert_eq!(h(5), 1);
        // Q(sqrt 3): wide class number 1, narrow 2.
        assert_eq!(h(12), 2);
        assert_eq!(h(229), 3);
    }

    #[test]
    fn torsion_counts() {
        let g = quad_class_group(-23).unwrap();
        assert_eq!(g.h_p(3), Some(3));
        assert_eq!(g.h_p(2), Some(1));
        assert_eq!(quad_class_group(-84).unwrap().h_p(2), Some(4));
        assert_eq!(quad_class_group(-3299).unwrap().h_p(3), Some(9));
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(quad_class_group(8 * 9), Err(ClassGroupError::NotFundamental(72)));
        assert!(matches!(quad_class_group_bounded(-23, 10), Err(ClassGroupError::BoundExceeded { .. })));
    }
}
