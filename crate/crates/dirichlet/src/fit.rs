//! Log-log regression of partial sums against `X^a (log X)^(w-1)`.

use crate::euler::DirichletError;

#[derive(Debug, Clone, PartialEq)]
pub struct PartialSumFit {
    pub grid: Vec<f64>,
    pub sums: Vec<f64>,
    pub a_hat: f64,
    pub w_hat: f64,
    pub r2: f64,
}

/// Geometric grid `10^(k/2)` for `k` in `k_lo..=k_hi`.
pub fn half_decade_grid(k_lo: u32, k_hi: u32) -> Vec<u64> {
    (k_lo..=k_hi).map(|k| (10f64.powf(k as f64 / 2.0)).round() as u64).collect()
}

fn check_grid(grid: &[f64], sums: &[f64], min_len: usize) -> Result<(), DirichletError> {
    let bad = |m: &str| Err(DirichletError::DegenerateGrid(m.to_string()));
    if grid.len() != sums.len() {
        return bad("grid and sums differ in length");
    }
    if grid.len() < min_len {
        return bad("need at least four grid points");
    }
    if grid.windows(2).any(|w| w[1] <= w[0]) {
        return bad("grid not strictly increasing");
    }
    if grid[0] <= std::f64::consts::E {
        return bad("grid must start above e so that log log X > 0");
    }
    if sums.iter().any(|&s| s <= 0.0 || !s.is_finite()) {
        return bad("partial sums must be positive");
    }
    Ok(())
}

/// Least squares for `log S = a log X + (w - 1) log log X + c`.
pub fn tauberian_fit(grid: &[f64], sums: &[f64]) -> Result<PartialSumFit, DirichletError> {
    check_grid(grid, sums, 4)?;
    let rows: Vec<[f64; 3]> = grid.iter().map(|&x| [x.ln(), x.ln().ln(), 1.0]).collect();
    let y: Vec<f64> = sums.iter().map(|s| s.ln()).collect();
    let beta = least_squares(&rows, &y).ok_or_else(|| DirichletError::DegenerateGrid("singular design".into()))?;
    Ok(PartialSumFit {
        grid: grid.to_vec(),
        sums: sums.to_vec(),
        a_hat: beta[0],
        w_hat: beta[1] + 1.0,
        r2: r_squared(&rows, &y, &beta),
    })
}

/// Same model with the log power held at `w`.
pub fn tauberian_fit_fixed_w(grid: &[f64], sums: &[f64], w: f64) -> Result<PartialSumFit, DirichletError> {
    check_grid(grid, sums, 3)?;
    let rows: Vec<[f64; 2]> = grid.iter().map(|&x| [x.ln(), 1.0]).collect();
    let y: Vec<f64> = grid.iter().zip(sums).map(|(x, s)| s.ln() - (w - 1.0) * x.ln().ln()).collect();
    let beta = least_squares(&rows, &y).ok_or_else(|| DirichletError::DegenerateGrid("singular design".into()))?;
    Ok(PartialSumFit {
        grid: grid.to_vec(),
        sums: sums.to_vec(),
        a_hat: beta[0],
        w_hat: w,
        r2: r_squared(&rows, &y, &beta),
    })
}

/// Normal equations solved by Gaussian elimination with partial pivoting.
#[allow(clippy::needless_range_loop)]
fn least_squares<const K: usize>(rows: &[[f64; K]], y: &[f64]) -> Option<[f64; K]> {
    let mut a = [[0.0f64; K]; K];
    let mut b = [0.0f64; K];
    for (r, &yi) in rows.iter().zip(y) {
        for i in 0..K {
            b[i] += r[i] * yi;
            for j in 0..K {
                a[i][j] += r[i] * r[j];
            }
        }
    }
    let scale = a.iter().flatten().fold(0.0f64, |m, x| m.max(x.abs()));
    for c in 0..K {
        let piv = (c..K).max_by(|&i, &j| a[i][c].abs().total_cmp(&a[j][c].abs()))?;
        if a[piv][c].abs() <= 1e-12 * scale {
            return None;
        }
        a.swap(c, piv);
        b.swap(c, piv);
        for i in c + 1..K {
            let f = a[i][c] / a[c][c];
            for j in c..K {
                a[i][j] -= f * a[c][j];
            }
            b[i] -= f * b[c];
        }
    }
    let mut x = [0.0f64; K];
    for i in (0..K).rev() {
        let s: f64 = (i + 1..K).map(|j| a[i][j] * x[j]).sum();
        x[i] = (b[i] - s) / a[i][i];
    }
    Some(x)
}

fn r_squared<const K: usize>(rows: &[[f64; K]], y: &[f64], beta: &[f64; K]) -> f64 {
    let mean = y.iter().sum::<f64>() / y.len() as f64;
    let total: f64 = y.iter().map(|v| (v - mean).powi(2)).sum();
    let resid: f64 = rows
        .iter()
        .zip(y)
        .map(|(r, v)| (v - r.iter().zip(beta).map(|(a, b)| a * b).sum::<f64>()).powi(2))
        .sum();
    if total == 0.0 {
        1.0
    } else {
        1.0 - resid / total
    }
}
