use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// A 3x3 integer matrix, ordered by its row-major entry tuple.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct IntMatrix {
    rows: [[BigInt; 3]; 3],
}

impl IntMatrix {
    pub fn new(rows: [[i64; 3]; 3]) -> Self {
        IntMatrix { rows: rows.map(|r| r.map(BigInt::from)) }
    }

    /// Row-major convenience constructor.
    pub fn from_flat(e: [i64; 9]) -> Self {
        Self::new([[e[0], e[1], e[2]], [e[3], e[4], e[5]], [e[6], e[7], e[8]]])
    }

    pub fn from_big(rows: [[BigInt; 3]; 3]) -> Self {
        IntMatrix { rows }
    }

    pub fn diag(a: i64, b: i64, c: i64) -> Self {
        Self::new([[a, 0, 0], [0, b, 0], [0, 0, c]])
    }

    pub fn identity() -> Self {
        Self::diag(1, 1, 1)
    }

    pub fn neg_identity() -> Self {
        Self::diag(-1, -1, -1)
    }

    pub fn entry(&self, i: usize, j: usize) -> &BigInt {
        &self.rows[i][j]
    }

    pub fn rows(&self) -> &[[BigInt; 3]; 3] {
        &self.rows
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        let rows = std::array::from_fn(|i| {
            std::array::from_fn(|j| (0..3).map(|k| &self.rows[i][k] * &other.rows[k][j]).sum())
        });
        IntMatrix { rows }
    }

    pub fn transpose(&self) -> IntMatrix {
        IntMatrix { rows: std::array::from_fn(|i| std::array::from_fn(|j| self.rows[j][i].clone())) }
    }

    pub fn det(&self) -> BigInt {
        let r = &self.rows;
        &r[0][0] * (&r[1][1] * &r[2][2] - &r[1][2] * &r[2][1]) - &r[0][1] * (&r[1][0] * &r[2][2] - &r[1][2] * &r[2][0])
            + &r[0][2] * (&r[1][0] * &r[2][1] - &r[1][1] * &r[2][0])
    }

    pub fn is_unimodular(&self) -> bool {
        self.det().abs().is_one()
    }

    /// Inverse of a unimodular matrix (adjugate times the determinant).
    pub fn inverse(&self) -> Option<IntMatrix> {
        let d = self.det();
        if !d.abs().is_one() {
            return None;
        }
        let r = &self.rows;
        let cof = |i: usize, j: usize| {
            let (a, b) = ((i + 1) % 3, (i + 2) % 3);
            let (c, e) = ((j + 1) % 3, (j + 2) % 3);
            &r[a][c] * &r[b][e] - &r[a][e] * &r[b][c]
        };
        let rows = std::array::from_fn(|i| std::array::from_fn(|j| cof(j, i) * &d));
        Some(IntMatrix { rows })
    }

    pub fn trace(&self) -> BigInt {
        &self.rows[0][0] + &self.rows[1][1] + &self.rows[2][2]
    }

    /// `-self`.
    pub fn neg_mul(&self) -> IntMatrix {
        IntMatrix { rows: self.rows.clone().map(|r| r.map(|e| -e)) }
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity()
    }

    pub fn minus_identity(&self) -> IntMatrix {
        let mut out = self.clone();
        for i in 0..3 {
            out.rows[i][i] -= 1;
        }
        out
    }

    pub fn max_abs_entry(&self) -> BigInt {
        self.rows.iter().flatten().map(|e| e.abs()).max().unwrap_or_default()
    }

    /// Rank over the rationals.
    pub fn rank(&self) -> usize {
        rank(self.rows.iter().map(|r| r.to_vec()).collect())
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> =
            self.rows.iter().map(|r| r.iter().map(|e| e.to_string()).collect::<Vec<_>>().join(",")).collect();
        write!(f, "[{}]", rows.join(";"))
    }
}

/// Rank of an integer matrix by fraction-free (Bareiss) elimination.
pub fn rank(mut m: Vec<Vec<BigInt>>) -> usize {
    let nrows = m.len();
    if nrows == 0 {
        return 0;
    }
    let ncols = m[0].len();
    let mut prev = BigInt::one();
    let mut r = 0;
    for c in 0..ncols {
        let Some(piv) = (r..nrows).find(|&i| !m[i][c].is_zero()) else { continue };
        m.swap(r, piv);
        for i in r + 1..nrows {
            for j in c + 1..ncols {
                let v = &m[r][c] * &m[i][j] - &m[i][c] * &m[r][j];
                m[i][j] = v / &prev;
            }
            m[i][c] = BigInt::zero();
        }
        prev = m[r][c].clone();
        r += 1;
        if r == nrows {
            break;
        }
    }
    r
}

fn det_sub(m: &[Vec<BigInt>], rows: &[usize], cols: &[usize]) -> BigInt {
    match rows.len() {
        1 => m[rows[0]][cols[0]].clone(),
        2 => &m[rows[0]][cols[0]] * &m[rows[1]][cols[1]] - &m[rows[0]][cols[1]] * &m[rows[1]][cols[0]],
        k => {
            let mut acc = BigInt::zero();
            for (t, &c) in cols.iter().enumerate() {
                let rest: Vec<usize> = cols.iter().copied().filter(|&x| x != c).collect();
                let term = &m[rows[0]][c] * det_sub(m, &rows[1..k], &rest);
                if t % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    if k == 0 {
        return vec![Vec::new()];
    }
    if n < k {
        return Vec::new();
    }
    let mut out = subsets(n - 1, k);
    for mut s in subsets(n - 1, k - 1) {
        s.push(n - 1);
        out.push(s);
    }
    out
}

/// Invariant factors of an integer matrix (nonzero ones only), computed as
/// quotients of determinantal divisors.
pub fn invariant_factors(m: &[Vec<BigInt>]) -> Vec<BigInt> {
    let nrows = m.len();
    let ncols = if nrows == 0 { 0 } else { m[0].len() };
    let mut out = Vec::new();
    let mut prev = BigInt::one();
    for k in 1..=nrows.min(ncols) {
        let mut g = BigInt::zero();
        for rs in subsets(nrows, k) {
            for cs in subsets(ncols, k) {
                g = g.gcd(&det_sub(m, &rs, &cs));
                if g.is_one() {
                    break;
                }
            }
            if g.is_one() {
                break;
            }
        }
        if g.is_zero() {
            break;
        }
        out.push(&g / &prev);
        prev = g;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_roundtrip() {
        let a = IntMatrix::from_flat([1, 1, 0, -2, -1, -1, 0, 0, 1]);
        let inv = a.inverse().unwrap();
        assert!(a.mul(&inv).is_identity());
        assert!(IntMatrix::diag(2, 1, 1).inverse().is_none());
    }

    #[test]
    fn ranks() {
        assert_eq!(IntMatrix::identity().minus_identity().rank(), 0);
        assert_eq!(IntMatrix::neg_identity().minus_identity().rank(), 3);
        assert_eq!(IntMatrix::from_flat([0, 1, 0, 0, 0, 1, 1, 0, 0]).minus_identity().rank(), 2);
    }

    #[test]
    fn smith_factors() {
        let m = IntMatrix::from_flat([0, 0, 0, 0, -1, -1, 0, 1, -2]);
        let rows: Vec<Vec<BigInt>> = m.rows().iter().map(|r| r.to_vec()).collect();
        assert_eq!(invariant_factors(&rows), vec![BigInt::from(1), BigInt::from(3)]);
    }
}
