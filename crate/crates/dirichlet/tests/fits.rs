use dirichlet::{
    divisor_power_sum, divisor_power_sums, half_decade_grid, tauberian_fit, DirichletError, DivisorExponent,
};

fn grid() -> Vec<f64> {
    half_decade_grid(2, 18).into_iter().map(|x| x as f64).collect()
}

#[test]
fn linear_sums() {
    let g = grid();
    let fit = tauberian_fit(&g, &g).unwrap();
    assert!((fit.a_hat - 1.0).abs() < 1e-3);
    assert!((fit.w_hat - 1.0).abs() < 1e-3);
}

#[test]
fn synthetic_recovery() {
    let g = grid();
    for a in [0.5, 1.0] {
        for w in [1.0, 2.0, 3.0] {
            let sums: Vec<f64> = g.iter().map(|x: &f64| x.powf(a) * x.ln().powf(w - 1.0)).collect();
            let fit = tauberian_fit(&g, &sums).unwrap();
            assert!((fit.a_hat - a).abs() < 0.01 && (fit.w_hat - w).abs() < 0.01, "{a} {w}: {fit:?}");
        }
    }
}

#[test]
fn degenerate_grids() {
    let short = [10.0, 100.0, 1000.0];
    assert!(matches!(tauberian_fit(&short, &short), Err(DirichletError::DegenerateGrid(_))));
    let unordered = [10.0, 1000.0, 100.0, 10000.0];
    assert!(matches!(tauberian_fit(&unordered, &[1.0; 4]), Err(DirichletError::DegenerateGrid(_))));
    let g = [10.0, 100.0, 1000.0, 10000.0];
    assert!(matches!(tauberian_fit(&g, &[1.0, 0.0, 2.0, 3.0]), Err(DirichletError::DegenerateGrid(_))));
}

#[test]
fn divisor_sums() {
    // 1 + 2 + 2 + 3 + 2 + 4 + 2 + 4 + 3 + 4
    assert_eq!(divisor_power_sum(DivisorExponent::Integer(1), 10).exact, Some(27));
    assert_eq!(divisor_power_sum(DivisorExponent::Integer(0), 12345).exact, Some(12345));
    assert_eq!(divisor_power_sum(DivisorExponent::Integer(2), 10).exact, Some(1 + 4 + 4 + 9 + 4 + 16 + 4 + 16 + 9 + 16));
    // Dirichlet hyperbola: sum floor(X / k).
    let x = 1_000_000u64;
    let hyperbola: u64 = (1..=x).map(|k| x / k).sum();
    assert_eq!(divisor_power_sum(DivisorExponent::Integer(1), x).exact, Some(hyperbola as u128));
    let t = DivisorExponent::log2_of_3();
    let direct: f64 = (1..=1000u64).map(|n| ((1..=n).filter(|d| n % d == 0).count() as f64).powf(t.value())).sum();
    assert!((divisor_power_sum(t, 1000).value - direct).abs() < 1e-9 * direct);
}

#[test]
fn divisor_ratio_is_slowly_varying() {
    let grid: Vec<u64> = (4..=7).map(|k| 10u64.pow(k)).collect();
    let sums = divisor_power_sums(&[DivisorExponent::Integer(1)], &grid).remove(0);
    let ratios: Vec<f64> = sums.iter().map(|s| s.ratio).collect();
    let (lo, hi) = ratios.iter().fold((f64::MAX, 0.0f64), |(l, h), &r| (l.min(r), h.max(r)));
    assert!(hi / lo < 1.5, "{ratios:?}");
}
