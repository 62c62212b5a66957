//! Discriminant of the ring of integers of `Q[x]/(f)` for small monic `f`.
//!
//! Starting from `Z[x]/(f)`, each prime `p` with `p^2 | disc(f)` is treated
//! with the Round 2 enlargement: compute the `p`-radical of the current order
//! and replace the order by the ring of multipliers of the radical until it
//! stops growing. Each growth step of index `p^k` divides the discriminant by
//! `p^(2k)`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use arith::FactorError;
use arith::FactoredInt;

/// Largest degree accepted.
pub const MAX_DEGREE: usize = 8;

/// Default bound on the absolute value of the coefficients.
pub const DEFAULT_HEIGHT_BOUND: u64 = 1 << 40;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum MaximalOrderError {
    #[error("polynomial is not monic")]
    NotMonic,
    #[error("degree {0} is outside 1..={MAX_DEGREE}")]
    DegreeOutOfRange(usize),
    #[error("coefficient {coefficient} exceeds the height bound {bound}")]
    HeightExceeded { coefficient: BigInt, bound: u64 },
    #[error("polynomial is reducible (factor with coefficients {0:?})")]
    Reducible(Vec<BigInt>),
    #[error(transparent)]
    Factor(#[from] FactorError),
}

/// `maximal_order_disc_bounded` with [`DEFAULT_HEIGHT_BOUND`].
pub fn maximal_order_disc<T: Clone + Into<BigInt>>(coeffs: &[T]) -> Result<FactoredInt, MaximalOrderError> {
    maximal_order_disc_bounded(coeffs, DEFAULT_HEIGHT_BOUND)
}

/// Field discriminant of the root field of the monic polynomial with
/// coefficients `coeffs`, lowest degree first.
pub fn maximal_order_disc_bounded<T: Clone + Into<BigInt>>(
    coeffs: &[T],
    bound: u64,
) -> Result<FactoredInt, MaximalOrderError> {
    let f: Vec<BigInt> = coeffs.iter().cloned().map(Into::into).collect();
    let n = f.len().saturating_sub(1);
    if n == 0 || n > MAX_DEGREE {
        return Err(MaximalOrderError::DegreeOutOfRange(n));
    }
    if !f[n].is_one() {
        return Err(MaximalOrderError::NotMonic);
    }
    if let Some(c) = f.iter().find(|c| c.abs() > BigInt::from(bound)) {
        return Err(MaximalOrderError::HeightExceeded { coefficient: c.clone(), bound });
    }
    let disc = poly_disc(&f);
    if disc.is_zero() {
        return Err(MaximalOrderError::Reducible(Vec::new()));
    }
    if let Some(g) = find_factor(&f) {
        return Err(MaximalOrderError::Reducible(g));
    }
    let mut result = FactoredInt::from_bigint(&disc)?;
    let candidates: Vec<u64> = result.factors().iter().filter(|(_, &e)| e >= 2).map(|(&p, _)| p).collect();
    let mut order = Order::equation_order(&f);
    for p in candidates {
        let growth = order.make_p_maximal(p);
        if growth > 0 {
            let divisor = FactoredInt::prime_power(p, 2 * growth);
            result = result.checked_div(&divisor).expect("index squared divides the discriminant");
        }
    }
    Ok(result)
}

/// Discriminant of a monic polynomial: `(-1)^(n(n-1)/2) Res(f, f')`.
pub fn poly_disc(f: &[BigInt]) -> BigInt {
    let n = f.len() - 1;
    if n == 1 {
        return BigInt::one();
    }
    let df: Vec<BigInt> = (1..=n).map(|i| &f[i] * BigInt::from(i)).collect();
    let res = resultant(f, &df);
    if (n * (n - 1) / 2) % 2 == 1 {
        -res
    } else {
        res
    }
}

/// Resultant via the Sylvester determinant (Bareiss elimination).
fn resultant(f: &[BigInt], g: &[BigInt]) -> BigInt {
    let (m, k) = (f.len() - 1, g.len() - 1);
    let size = m + k;
    let mut a = vec![vec![BigInt::zero(); size]; size];
    for i in 0..k {
        for (j, c) in f.iter().rev().enumerate() {
            a[i][i + j] = c.clone();
        }
    }
    for i in 0..m {
        for (j, c) in g.iter().rev().enumerate() {
            a[k + i][i + j] = c.clone();
        }
    }
    bareiss_det(a)
}

fn bareiss_det(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(i) => {
                    a.swap(k, i);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

/// Looks for a monic integer factor of degree at most `n/2` by grouping
/// numerical roots; candidates are confirmed by exact division.
fn find_factor(f: &[BigInt]) -> Option<Vec<BigInt>> {
    let n = f.len() - 1;
    if n < 2 {
        return None;
    }
    let roots = roots(f);
    for size in 1..=n / 2 {
        for subset in subsets(n, size) {
            let mut prod = vec![Complex64::new(1.0, 0.0)];
            for &i in &subset {
                let mut next = vec![Complex64::new(0.0, 0.0); prod.len() + 1];
                for (j, c) in prod.iter().enumerate() {
                    next[j + 1] += c;
                    next[j] -= c * roots[i];
                }
                prod = next;
            }
            let near_integral = prod.iter().all(|c| {
                let tol = 1e-6 * c.norm().max(1.0);
                c.im.abs() < tol && (c.re - c.re.round()).abs() < tol
            });
            if !near_integral {
                continue;
            }
            let g: Vec<BigInt> = prod.iter().map(|c| BigInt::from(c.re.round() as i64)).collect();
            if divides(&g, f) {
                return Some(g);
            }
        }
    }
    None
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).map(|m| (0..n).filter(|i| m >> i & 1 == 1).collect()).collect()
}

/// Exact test that the monic `g` divides `f`.
fn divides(g: &[BigInt], f: &[BigInt]) -> bool {
    let mut r = f.to_vec();
    let dg = g.len() - 1;
    for top in (dg..r.len()).rev() {
        let c = r[top].clone();
        if c.is_zero() {
            continue;
        }
        for (i, gi) in g.iter().enumerate() {
            r[top - dg + i] -= &c * gi;
        }
    }
    r[..dg].iter().all(Zero::is_zero)
}

/// All complex roots by the Aberth iteration.
fn roots(f: &[BigInt]) -> Vec<Complex64> {
    let n = f.len() - 1;
    let c: Vec<f64> = f.iter().map(|x| x.to_f64().unwrap_or(f64::MAX)).collect();
    let radius = 1.0 + c[..n].iter().fold(0.0f64, |m, x| m.max(x.abs()));
    let eval = |z: Complex64| {
        let mut v = Complex64::new(0.0, 0.0);
        let mut d = Complex64::new(0.0, 0.0);
        for &a in c.iter().rev() {
            d = d * z + v;
            v = v * z + a;
        }
        (v, d)
    };
    let mut z: Vec<Complex64> =
        (0..n).map(|k| Complex64::from_polar(radius, 0.4 + std::f64::consts::TAU * k as f64 / n as f64)).collect();
    for _ in 0..2000 {
        let mut moved = 0.0f64;
        for i in 0..n {
            let (v, d) = eval(z[i]);
            if v.norm() == 0.0 {
                continue;
            }
            let ratio = v / d;
            let repulsion: Complex64 = (0..n).filter(|&j| j != i).map(|j| 1.0 / (z[i] - z[j])).sum();
            let step = ratio / (1.0 - ratio * repulsion);
            z[i] -= step;
            moved = moved.max(step.norm() / z[i].norm().max(1.0));
        }
        if moved < 1e-13 {
            break;
        }
    }
    z
}

/// An order in `Q[x]/(f)` given by a basis in power-basis coordinates.
struct Order {
    f: Vec<BigInt>,
    basis: Scaled,
}

impl Order {
    fn equation_order(f: &[BigInt]) -> Order {
        let n = f.len() - 1;
        let num = (0..n).map(|i| (0..n).map(|j| BigInt::from((i == j) as u8)).collect()).collect();
        Order { f: f.to_vec(), basis: Scaled { num, den: BigInt::one() } }
    }

    fn degree(&self) -> usize {
        self.f.len() - 1
    }

    /// Product in `Z[x]/(f)`.
    fn mul_integral(&self, a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
        let n = self.degree();
        let mut prod = vec![BigInt::zero(); 2 * n - 1];
        for (i, x) in a.iter().enumerate().filter(|(_, x)| !x.is_zero()) {
            for (j, y) in b.iter().enumerate() {
                prod[i + j] += x * y;
            }
        }
        for top in (n..prod.len()).rev() {
            let c = std::mem::replace(&mut prod[top], BigInt::zero());
            if c.is_zero() {
                continue;
            }
            for i in 0..n {
                prod[top - n + i] -= &c * &self.f[i];
            }
        }
        prod.truncate(n);
        prod
    }

    /// Structure constants: `b_i b_j = sum_k t[i][j][k] b_k`.
    fn multiplication_table(&self) -> Vec<Vec<Vec<BigInt>>> {
        // With B = N/D, B^-1 = D N^-1 and coordinates are (N_i N_j) N^-1 / D.
        let basis = &self.basis;
        let inv = inverse(&basis.num);
        let den = &basis.den * &inv.den;
        let n = self.degree();
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        let prod = self.mul_integral(&basis.num[i], &basis.num[j]);
                        inv.apply(&prod).into_iter().map(|c| exact_div(&c, &den)).collect()
                    })
                    .collect()
            })
            .collect()
    }

    /// Enlarges the order until it is `p`-maximal; returns `k` with the total
    /// index equal to `p^k`.
    fn make_p_maximal(&mut self, p: u64) -> u32 {
        let n = self.degree();
        let mut growth = 0;
        loop {
            let table = self.multiplication_table();
            let tp: Vec<Vec<Vec<u64>>> =
                table.iter().map(|row| row.iter().map(|v| v.iter().map(|c| mod_p(c, p)).collect()).collect()).collect();

            // Radical of O/pO: kernel of x -> x^q with q = p^j >= n.
            let mut q: u128 = p as u128;
            while q < n as u128 {
                q *= p as u128;
            }
            let frob: Vec<Vec<u64>> = (0..n).map(|i| pow_mod(&unit(n, i), q, &tp, p)).collect();
            let radical = rref(left_kernel(&frob, p), p);
            let ideal = lattice_rows(&radical, n, p);

            // Multipliers: y with y * I contained in p I.
            let ideal_inv = inverse(&ideal);
            let mut cond = vec![Vec::with_capacity(n * n); n];
            for (i, row) in cond.iter_mut().enumerate() {
                for beta in &ideal {
                    let mut v = vec![BigInt::zero(); n];
                    for (l, bl) in beta.iter().enumerate().filter(|(_, b)| !b.is_zero()) {
                        for (k, t) in table[i][l].iter().enumerate() {
                            v[k] += bl * t;
                        }
                    }
                    for c in ideal_inv.apply(&v) {
                        row.push(mod_p(&exact_div(&c, &ideal_inv.den), p));
                    }
                }
            }
            let kernel = rref(left_kernel(&cond, p), p);
            if kernel.is_empty() {
                return growth;
            }
            growth += kernel.len() as u32;
            let new_rows = lattice_rows(&kernel, n, p);
            let num: Vec<Vec<BigInt>> = new_rows
                .iter()
                .map(|r| {
                    let mut acc = vec![BigInt::zero(); n];
                    for (c, b) in r.iter().zip(&self.basis.num).filter(|(c, _)| !c.is_zero()) {
                        for (a, x) in acc.iter_mut().zip(b) {
                            *a += c * x;
                        }
                    }
                    acc
                })
                .collect();
            let basis = Scaled { num, den: &self.basis.den * BigInt::from(p) }.normalized();
            self.basis = basis;
        }
    }
}

/// A rational matrix written as an integer matrix over one denominator.
struct Scaled {
    num: Vec<Vec<BigInt>>,
    den: BigInt,
}

impl Scaled {
    /// Removes the common factor of all entries and the denominator.
    fn normalized(mut self) -> Scaled {
        let g = self.num.iter().flatten().fold(self.den.clone(), |acc, x| acc.gcd(x));
        if !g.is_one() {
            for x in self.num.iter_mut().flatten() {
                *x /= &g;
            }
            self.den /= &g;
        }
        self
    }

    /// `v * num`, still to be divided by `den`.
    fn apply(&self, v: &[BigInt]) -> Vec<BigInt> {
        let mut out = vec![BigInt::zero(); self.num[0].len()];
        for (x, row) in v.iter().zip(&self.num).filter(|(x, _)| !x.is_zero()) {
            for (o, y) in out.iter_mut().zip(row) {
                *o += x * y;
            }
        }
        out
    }
}

fn exact_div(c: &BigInt, den: &BigInt) -> BigInt {
    let (q, r) = c.div_rem(den);
    assert!(r.is_zero(), "expected an integral coordinate, got {c}/{den}");
    q
}

fn mod_p(c: &BigInt, p: u64) -> u64 {
    let m = c % BigInt::from(p);
    let m = if m.is_negative() { m + BigInt::from(p) } else { m };
    m.to_u64().expect("residue fits")
}

fn unit(n: usize, i: usize) -> Vec<u64> {
    (0..n).map(|j| (i == j) as u64).collect()
}

fn mul_mod(a: u64, b: u64, p: u64) -> u64 {
    (a as u128 * b as u128 % p as u128) as u64
}

/// Product of two elements of `O/pO` in basis coordinates.
fn mul_coords(x: &[u64], y: &[u64], tp: &[Vec<Vec<u64>>], p: u64) -> Vec<u64> {
    let n = x.len();
    let mut out = vec![0u64; n];
    for i in 0..n {
        if x[i] == 0 {
            continue;
        }
        for j in 0..n {
            if y[j] == 0 {
                continue;
            }
            let s = mul_mod(x[i], y[j], p);
            for k in 0..n {
                out[k] = (out[k] + mul_mod(s, tp[i][j][k], p)) % p;
            }
        }
    }
    out
}

/// `x^e` for `e >= 1`.
fn pow_mod(x: &[u64], mut e: u128, tp: &[Vec<Vec<u64>>], p: u64) -> Vec<u64> {
    let mut acc: Option<Vec<u64>> = None;
    let mut base = x.to_vec();
    while e > 0 {
        if e & 1 == 1 {
            acc = Some(match acc {
                None => base.clone(),
                Some(a) => mul_coords(&a, &base, tp, p),
            });
        }
        e >>= 1;
        if e > 0 {
            base = mul_coords(&base, &base, tp, p);
        }
    }
    acc.expect("positive exponent")
}

fn inv_mod(a: u64, p: u64) -> u64 {
    let (mut r0, mut r1) = (p as i128, a as i128);
    let (mut s0, mut s1) = (0i128, 1i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    s0.rem_euclid(p as i128) as u64
}

/// Reduced row echelon form over `F_p`, zero rows dropped.
#[allow(clippy::needless_range_loop)]
fn rref(mut rows: Vec<Vec<u64>>, p: u64) -> Vec<Vec<u64>> {
    let cols = rows.first().map_or(0, Vec::len);
    let mut r = 0;
    for c in 0..cols {
        let Some(piv) = (r..rows.len()).find(|&i| rows[i][c] != 0) else { continue };
        rows.swap(r, piv);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = mul_mod(*x, inv, p);
        }
        for i in 0..rows.len() {
            if i != r && rows[i][c] != 0 {
                let factor = rows[i][c];
                for j in 0..cols {
                    let sub = mul_mod(factor, rows[r][j], p);
                    rows[i][j] = (rows[i][j] + p - sub) % p;
                }
            }
        }
        r += 1;
    }
    rows.truncate(r);
    rows
}

/// Basis of `{c : c M = 0}` over `F_p`.
fn left_kernel(m: &[Vec<u64>], p: u64) -> Vec<Vec<u64>> {
    let rows = m.len();
    let cols = m.first().map_or(0, Vec::len);
    let transposed: Vec<Vec<u64>> = (0..cols).map(|j| (0..rows).map(|i| m[i][j]).collect()).collect();
    let reduced = rref(transposed, p);
    let pivots: Vec<usize> =
        reduced.iter().map(|row| row.iter().position(|&x| x != 0).expect("nonzero row")).collect();
    (0..rows)
        .filter(|c| !pivots.contains(c))
        .map(|free| {
            let mut v = vec![0u64; rows];
            v[free] = 1;
            for (row, &pc) in reduced.iter().zip(&pivots) {
                v[pc] = (p - row[free]) % p;
            }
            v
        })
        .collect()
}

/// Integer basis of `pZ^n + span(rows)` for `rows` in reduced echelon form.
fn lattice_rows(rows: &[Vec<u64>], n: usize, p: u64) -> Vec<Vec<BigInt>> {
    let pivots: Vec<usize> = rows.iter().map(|r| r.iter().position(|&x| x != 0).expect("nonzero row")).collect();
    let mut out: Vec<Vec<BigInt>> = rows.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    for j in (0..n).filter(|j| !pivots.contains(j)) {
        let mut v = vec![BigInt::zero(); n];
        v[j] = BigInt::from(p);
        out.push(v);
    }
    out
}

/// Inverse of a nonsingular integer matrix by fraction-free Gauss-Jordan
/// elimination, with each row divided by its content as it goes.
#[allow(clippy::needless_range_loop)]
fn inverse(m: &[Vec<BigInt>]) -> Scaled {
    let n = m.len();
    let mut a: Vec<Vec<BigInt>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..n).map(|j| BigInt::from((i == j) as u8)));
            r
        })
        .collect();
    for c in 0..n {
        let piv = (c..n).find(|&i| !a[i][c].is_zero()).expect("singular basis");
        a.swap(c, piv);
        for i in 0..n {
            if i == c || a[i][c].is_zero() {
                continue;
            }
            let (x, y) = (a[c][c].clone(), a[i][c].clone());
            let g = x.gcd(&y);
            let (x, y) = (&x / &g, &y / &g);
            for j in 0..2 * n {
                let v = &a[i][j] * &x - &a[c][j] * &y;
                a[i][j] = v;
            }
            let content = a[i].iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
            if !content.is_one() {
                for v in a[i].iter_mut() {
                    *v /= &content;
                }
            }
        }
    }
    let den = (0..n).fold(BigInt::one(), |acc, i| acc.lcm(&a[i][i]));
    // lcm is nonnegative, so the signs of the pivots move into the rows.
    let num = (0..n)
        .map(|i| {
            let scale = &den / &a[i][i];
            a[i][n..].iter().map(|v| v * &scale).collect()
        })
        .collect();
    Scaled { num, den }
}
