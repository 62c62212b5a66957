use std::ops::Range;

/// Dirichlet coefficients `a_1..a_N` stored as integer numerators over a
/// common denominator (1, or 2 for series carrying a factor 1/2).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoefficientVector {
    /// `num[n]` for `n` in `0..=N`; `num[0]` is unused and zero.
    num: Vec<i64>,
    den: i64,
}

impl CoefficientVector {
    pub fn from_numerators(num: Vec<i64>, den: i64) -> Self {
        assert!(!num.is_empty() && num[0] == 0, "index 0 must be present and zero");
        assert!(den > 0);
        CoefficientVector { num, den }
    }

    pub fn zeros(n: usize) -> Self {
        CoefficientVector { num: vec![0; n + 1], den: 1 }
    }

    /// The series `1`.
    pub fn one(n: usize) -> Self {
        let mut out = Self::zeros(n);
        if n >= 1 {
            out.num[1] = 1;
        }
        out
    }

    pub fn len(&self) -> usize {
        self.num.len() - 1
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn denominator(&self) -> i64 {
        self.den
    }

    pub fn numerator(&self, n: usize) -> i64 {
        self.num[n]
    }

    pub fn numerators(&self) -> &[i64] {
        &self.num
    }

    /// `a_n` when it is an integer.
    pub fn integer(&self, n: usize) -> Option<i64> {
        (self.num[n] % self.den == 0).then(|| self.num[n] / self.den)
    }

    /// Same rational value at every `n <= min(len)`.
    pub fn same_values(&self, other: &Self) -> bool {
        self.first_difference(other).is_none()
    }

    pub fn first_difference(&self, other: &Self) -> Option<usize> {
        let n = self.len().min(other.len());
        (1..=n).find(|&i| self.num[i] * other.den != other.num[i] * self.den)
    }

    /// Divides the denominator out when every coefficient allows it.
    pub fn reduced(mut self) -> Self {
        if self.den != 1 && self.num.iter().all(|x| x % self.den == 0) {
            for x in self.num.iter_mut() {
                *x /= self.den;
            }
            self.den = 1;
        }
        self
    }

    pub fn scaled_denominator(&self, den: i64) -> Self {
        assert!(den % self.den == 0);
        let k = den / self.den;
        CoefficientVector { num: self.num.iter().map(|x| x * k).collect(), den }
    }

    pub fn add(&self, other: &Self) -> Self {
        self.combine(other, 1)
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.combine(other, -1)
    }

    fn combine(&self, other: &Self, sign: i64) -> Self {
        let den = num_lcm(self.den, other.den);
        let (a, b) = (self.scaled_denominator(den), other.scaled_denominator(den));
        let n = a.len().min(b.len());
        let num = (0..=n).map(|i| a.num[i] + sign * b.num[i]).collect();
        CoefficientVector { num, den }
    }

    /// Dirichlet convolution truncated at the shorter length.
    pub fn convolve(&self, other: &Self) -> Self {
        let n = self.len().min(other.len());
        let mut num = vec![0i64; n + 1];
        for i in (1..=n).filter(|&i| self.num[i] != 0) {
            for j in 1..=n / i {
                num[i * j] += self.num[i] * other.num[j];
            }
        }
        CoefficientVector { num, den: self.den * other.den }
    }

    /// Coefficients of `F(k s)`: the value at `n` moves to `n^k`.
    pub fn dilate(&self, k: u32) -> Self {
        let n = self.len();
        let mut num = vec![0i64; n + 1];
        for i in 1..=n {
            match i.checked_pow(k) {
                Some(m) if m <= n => num[m] = self.num[i],
                _ => break,
            }
        }
        CoefficientVector { num, den: self.den }
    }

    /// `sum_{n <= x} a_n` as a numerator over the denominator.
    pub fn partial_sum_numerator(&self, x: usize) -> i64 {
        self.num[1..=x.min(self.len())].iter().sum()
    }

    /// Partial sums at every `x` in `grid`, as exact rationals converted to `f64`.
    pub fn partial_sums(&self, grid: &[usize]) -> Vec<f64> {
        let mut out = Vec::with_capacity(grid.len());
        let mut acc = 0i64;
        let mut pos = 1;
        for &x in grid {
            let x = x.min(self.len());
            while pos <= x {
                acc += self.num[pos];
                pos += 1;
            }
            out.push(acc as f64 / self.den as f64);
        }
        out
    }

    pub fn range(&self) -> Range<usize> {
        1..self.len() + 1
    }
}

fn num_lcm(a: i64, b: i64) -> i64 {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}
