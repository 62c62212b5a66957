//! The acceptance criteria, each run in-process and reported as one line.

use std::collections::BTreeMap;
use std::time::{Duration, Instant};

use arith::quadratic::fundamental_discriminants;
use census::fit_family;
use dirichlet::{
    c6_quotients, census_c6, counts_at, divisor_power_sums, half_decade_grid, lemma42_rhs, named_series,
    tauberian_fit, tauberian_fit_fixed_w, CoefficientVector, DivisorExponent,
};
use disc_calculus::{
    biquadratic_polynomial, bindings, closure_polynomial, compositum_valuation, coprime_compositum_valuation,
    maximal_order_disc, s3_closure_disc, v4_complete, verify_lemma_bundle, FactoredInt, Identity,
    RamificationProfile,
};
use fields::{enum_cubic_s3, enum_cyclic_cubic, enum_quadratic, quad_class_group, Provenance, Signature};
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

pub const ALL: [u8; 10] = [1, 2, 3, 4, 5, 6, 7, 8, 9, 10];
pub const QUICK: [u8; 4] = [1, 2, 5, 8];

/// Largest accepted `|w_hat - 1|` for a count with no logarithmic factor.
pub const NO_LOG_TOLERANCE: f64 = 0.5;

#[derive(Debug, Clone, Serialize)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    #[serde(skip)]
    pub elapsed: Duration,
    #[serde(skip)]
    pub budget: Option<Duration>,
}

impl Outcome {
    pub fn within_budget(&self) -> bool {
        self.budget.is_none_or(|b| self.elapsed <= b)
    }

    pub fn line(&self) -> String {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let budget = match self.budget {
            Some(b) => format!(", budget {} s", b.as_secs()),
            None => String::new(),
        };
        format!(
            "criterion {:>2} [{status}] {}: {} ({:.1} s{budget})",
            self.id,
            self.name,
            self.detail,
            self.elapsed.as_secs_f64()
        )
    }
}

pub fn name(id: u8) -> &'static str {
    match id {
        1 => "invariant table",
        2 => "sextic series identity",
        3 => "sextic quotient exponent",
        4 => "family fits",
        5 => "reflection cross-oracle",
        6 => "closure discriminants",
        7 => "Euler products vs enumeration",
        8 => "tame compositum formulas",
        9 => "mod-7 product exponent",
        10 => "divisor power sums",
        _ => "unknown",
    }
}

fn budget(id: u8) -> Option<Duration> {
    let secs = match id {
        1 => 5,
        2 | 5 => 120,
        3 | 6 => 300,
        _ => return None,
    };
    Some(Duration::from_secs(secs))
}

/// Runs criterion `id` (1..=10).
pub fn run(id: u8) -> Outcome {
    let start = Instant::now();
    let (passed, detail) = match id {
        1 => invariant_table(),
        2 => sextic_identity(),
        3 => sextic_exponent(),
        4 => family_fits(),
        5 => reflection(),
        6 => closure_discriminants(),
        7 => euler_vs_enumeration(),
        8 => tame_formulas(),
        9 => mod7_exponent(),
        10 => divisor_sums(),
        _ => (false, format!("no criterion {id}")),
    };
    Outcome { id, name: name(id), passed, detail, elapsed: start.elapsed(), budget: budget(id) }
}

/// `(label key, a, b)` in the reference table for the 72 nontrivial classes.
const REFERENCE: [(&str, usize, usize); 72] = [
    ("2,a", 2, 1), ("2,b", 1, 1), ("2,c", 2, 1), ("2,d", 1, 1), ("2,e", 3, 1),
    ("3,a", 1, 1), ("3,b", 1, 1),
    ("4,a", 2, 2), ("4,b", 2, 1), ("4,c", 2, 2), ("4,d", 2, 1), ("4,e", 1, 1), ("4,f", 2, 3),
    ("4,g", 1, 2), ("4,h", 2, 3), ("4,i", 1, 2), ("4,j", 1, 2), ("4,k", 1, 1), ("4,l", 2, 3),
    ("4,m", 1, 2), ("4,n", 2, 3), ("4,o", 1, 2),
    ("6,a", 2, 3), ("6,b", 1, 1), ("6,c", 2, 1), ("6,d", 2, 1), ("6,e", 2, 2), ("6,f", 1, 1),
    ("6,g", 2, 2), ("6,h", 1, 1), ("6,i", 2, 2), ("6,j", 1, 1),
    ("8,a", 1, 1), ("8,b", 1, 1), ("8,c", 1, 3), ("8,d", 1, 3), ("8,e", 1, 3), ("8,f", 1, 3),
    ("8,g", 2, 4), ("8,h", 1, 2), ("8,i", 1, 1), ("8,j", 1, 1), ("8,k", 2, 4), ("8,l", 1, 2),
    ("8,m", 1, 1), ("8,n", 1, 1),
    ("12,a", 1, 1), ("12,b", 2, 5), ("12,c", 1, 2), ("12,d", 1, 2), ("12,e", 1, 2), ("12,f", 1, 1),
    ("12,g", 1, 1), ("12,h", 1, 1), ("12,i", 2, 2), ("12,j", 2, 2), ("12,k", 2, 2),
    ("16,a", 1, 3), ("16,b", 1, 3),
    ("24,a", 1, 1), ("24,b", 1, 1), ("24,c", 1, 1), ("24,d", 1, 3), ("24,e", 2, 4), ("24,f", 1, 1),
    ("24,g", 2, 4), ("24,h", 1, 1), ("24,i", 2, 4), ("24,j", 1, 1),
    ("48,a", 1, 2), ("48,b", 1, 2), ("48,c", 1, 2),
];

fn invariant_table() -> (bool, String) {
    let mut differ = Vec::new();
    for (key, a, b) in REFERENCE {
        let label = format!("H_{{{key}}}");
        let Some(entry) = lattice_groups::lookup(&label) else {
            differ.push(format!("{label} missing"));
            continue;
        };
        let got = (entry.group.a_invariant(), entry.group.b_invariant());
        match got {
            (Ok(ga), Ok(gb)) if (ga, gb) == (a, b) => {}
            (Ok(ga), Ok(gb)) => differ.push(format!("{label} computed ({ga}, {gb}) reference ({a}, {b})")),
            _ => differ.push(format!("{label} has no invariants")),
        }
    }
    let matched = REFERENCE.len() - differ.len();
    let mut detail = format!("{matched}/{} rows match", REFERENCE.len());
    if !differ.is_empty() {
        detail.push_str(&format!("; {}", differ.join("; ")));
    }
    (differ.is_empty(), detail)
}

const SEXTIC_N: usize = 100_000;

fn sextic_identity() -> (bool, String) {
    let census = census_c6(SEXTIC_N);
    match lemma42_rhs(SEXTIC_N) {
        Err(e) => (false, e.to_string()),
        Ok(rhs) => match rhs.first_difference(&census) {
            None => (true, format!("all {SEXTIC_N} coefficients agree")),
            Some(n) => (false, format!("first difference at n = {n}")),
        },
    }
}

fn fit_on(grid: &[u64], counts: &[u64]) -> Result<(f64, f64, f64), String> {
    let xs: Vec<f64> = grid.iter().map(|&x| x as f64).collect();
    let ys: Vec<f64> = counts.iter().map(|&c| c as f64).collect();
    let free = tauberian_fit(&xs, &ys).map_err(|e| e.to_string())?;
    let fixed = tauberian_fit_fixed_w(&xs, &ys, 1.0).map_err(|e| e.to_string())?;
    Ok((free.a_hat, free.w_hat, fixed.a_hat))
}

fn sextic_exponent() -> (bool, String) {
    // X from 1e5 to 1e9, the whole range used for the fit.
    let grid = half_decade_grid(10, 18);
    let counts = counts_at(&c6_quotients(*grid.last().unwrap()), &grid);
    match fit_on(&grid, &counts) {
        Err(e) => (false, e),
        Ok((a, w, a_fixed)) => {
            let passed = (0.47..=0.53).contains(&a) && (w - 1.0).abs() <= NO_LOG_TOLERANCE;
            let detail = format!(
                "a_hat = {a:.4} (want [0.47, 0.53]), w_hat = {w:.3} (want 1 +- {NO_LOG_TOLERANCE}); \
                 with w fixed at 1, a_hat = {a_fixed:.4}; N(1e9) = {}",
                counts.last().unwrap()
            );
            (passed, detail)
        }
    }
}

fn family_fits() -> (bool, String) {
    let grid = census::default_grid();
    let mut parts = Vec::new();
    let mut passed = true;
    for (label, lo, hi, b) in [("H_{4,e}", 0.95, 1.05, None), ("H_{6,a}", 0.45, 0.55, Some(3.0)), ("H_{8,a}", 0.95, 1.05, None)] {
        match fit_family(label, &grid) {
            Err(e) => {
                passed = false;
                parts.push(format!("{label}: {e}"));
            }
            Ok(r) => {
                let (a, w) = (r.a_hat.unwrap_or(f64::NAN), r.w_hat.unwrap_or(f64::NAN));
                let mut ok = (lo..=hi).contains(&a);
                let mut part = format!("{label} a_hat = {a:.4} in [{lo}, {hi}]");
                if let Some(b) = b {
                    // w_hat estimates b itself under the fitted model; the
                    // shifted reading w_hat + 1 is shown alongside.
                    ok &= (w - b).abs() <= 1.0;
                    part.push_str(&format!(", w_hat = {w:.3} vs b = {b} (w_hat + 1 = {:.3})", w + 1.0));
                }
                passed &= ok;
                parts.push(part);
            }
        }
    }
    (passed, parts.join("; "))
}

const REFLECTION_BOUND: u64 = 5000;

fn reflection() -> (bool, String) {
    let mut cubic_count: BTreeMap<i128, u64> = BTreeMap::new();
    for sig in [Signature::Negative, Signature::Positive] {
        for r in enum_cubic_s3(REFLECTION_BOUND, sig) {
            *cubic_count.entry(r.disc_i128().unwrap()).or_default() += 1;
        }
    }
    for r in enum_cyclic_cubic(REFLECTION_BOUND) {
        *cubic_count.entry(r.disc_i128().unwrap()).or_default() += 1;
    }
    let discs = fundamental_discriminants(REFLECTION_BOUND);
    let mismatches: Vec<String> = discs
        .par_iter()
        .filter_map(|&d| {
            let h3 = match quad_class_group(d) {
                Ok(g) => g.h_p(3).unwrap_or(0),
                Err(e) => return Some(format!("{d}: {e}")),
            };
            let fields = cubic_count.get(&(d as i128)).copied().unwrap_or(0);
            ((h3 - 1) / 2 != fields).then(|| format!("{d}: (h3 - 1)/2 = {}, fields = {fields}", (h3 - 1) / 2))
        })
        .collect();
    let detail = format!("{} discriminants, {} mismatches", discs.len(), mismatches.len());
    match mismatches.first() {
        None => (true, detail),
        Some(first) => (false, format!("{detail}; first {first}")),
    }
}

fn closure_discriminants() -> (bool, String) {
    let mut checked = 0;
    let mut failures = Vec::new();
    for sig in [Signature::Negative, Signature::Positive] {
        let mut cubics: Vec<_> = enum_cubic_s3(2000, sig).collect();
        cubics.sort_by_key(|r| r.abs_disc());
        for rec in cubics.iter().take(20) {
            let Provenance::CubicForm(form) = &rec.provenance else { continue };
            checked += 1;
            let expected = s3_closure_disc(rec).map(|(_, d6)| d6);
            let actual = maximal_order_disc(&closure_polynomial(form));
            match (expected, actual) {
                (Ok(e), Ok(a)) if e == a => {}
                (e, a) => failures.push(format!("{}: {:?} vs {:?}", rec.label(), e.ok(), a.ok())),
            }
        }
    }
    let passed = checked == 40 && failures.is_empty();
    let mut detail = format!("{checked} cubics, {} disagreements", failures.len());
    if let Some(f) = failures.first() {
        detail.push_str(&format!("; first {f}"));
    }
    (passed, detail)
}

const EULER_N: usize = 1_000_000;

fn euler_vs_enumeration() -> (bool, String) {
    let one = CoefficientVector::one(EULER_N);
    let (Ok(g2), Ok(g3)) = (named_series("g2", EULER_N), named_series("g3", EULER_N)) else {
        return (false, "series expansion failed".into());
    };
    let mut quad = vec![0i64; EULER_N + 1];
    for r in enum_quadratic(EULER_N as u64) {
        quad[r.abs_disc().unwrap() as usize] += 1;
    }
    let mut cubic = vec![0i64; EULER_N + 1];
    for r in enum_cyclic_cubic(EULER_N as u64) {
        cubic[r.abs_disc().unwrap() as usize] += 1;
    }
    let quad_diff = g2.sub(&one).first_difference(&CoefficientVector::from_numerators(quad, 1));
    let g3_half = CoefficientVector::from_numerators(g3.sub(&one).numerators().to_vec(), 2);
    let cubic_diff = g3_half.first_difference(&CoefficientVector::from_numerators(cubic, 1));
    let describe = |d: Option<usize>| d.map_or("agree".to_string(), |n| format!("differ at n = {n}"));
    (
        quad_diff.is_none() && cubic_diff.is_none(),
        format!("n <= {EULER_N}: quadratic {}, cyclic cubic {}", describe(quad_diff), describe(cubic_diff)),
    )
}

const PROFILE_PAIRS: usize = 1000;
const TAME_PRIMES: [u64; 8] = [5, 7, 11, 13, 17, 19, 23, 29];

/// A degree in `2..=6` and a random cycle type for it.
fn random_profile(rng: &mut impl Rng, p: u64) -> RamificationProfile {
    let degree = rng.gen_range(2..=6u32);
    let mut cycles = Vec::new();
    let mut left = degree;
    while left > 0 {
        // Tame: no cycle length divisible by p.
        let c = loop {
            let c = rng.gen_range(1..=left);
            if u64::from(c) % p != 0 {
                break c;
            }
        };
        cycles.push(c);
        left -= c;
    }
    RamificationProfile::unramified(degree).with_cycles(p, cycles).expect("cycles partition the degree")
}

fn tame_formulas() -> (bool, String) {
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0x7a3e_2024);
    let (mut applicable, mut disagree) = (0, Vec::new());
    for _ in 0..PROFILE_PAIRS {
        let p = TAME_PRIMES[rng.gen_range(0..TAME_PRIMES.len())];
        let (a, b) = (random_profile(&mut rng, p), random_profile(&mut rng, p));
        let general = compositum_valuation(&a, &b, p);
        let special = coprime_compositum_valuation(&a, &b, p);
        match (general, special) {
            (Ok(g), Ok(Some(s))) => {
                applicable += 1;
                if g != s {
                    disagree.push(format!("{:?} {:?} at {p}: {g} vs {s}", a.cycles_at(p), b.cycles_at(p)));
                }
            }
            (Ok(_), Ok(None)) => {}
            (g, s) => disagree.push(format!("error at {p}: {g:?} {s:?}")),
        }
    }
    let discs = fundamental_discriminants(60);
    let mut pairs = 0;
    let mut biquadratic_failures = Vec::new();
    for (i, &d1) in discs.iter().enumerate() {
        for &d2 in &discs[i + 1..] {
            pairs += 1;
            let (Ok((d3, _)), Ok(dl)) = (v4_complete(d1, d2), maximal_order_disc(&biquadratic_polynomial(d1, d2)))
            else {
                biquadratic_failures.push(format!("({d1}, {d2}): no discriminant"));
                continue;
            };
            let fi = |d: i64| FactoredInt::from_i64(d).expect("nonzero");
            let bundle = bindings([("L", dl), ("K1", fi(d1)), ("K2", fi(d2)), ("K3", fi(d3))]);
            match verify_lemma_bundle(&bundle, Identity::Biquadratic) {
                Ok(r) if r.holds => {}
                other => biquadratic_failures.push(format!("({d1}, {d2}): {other:?}")),
            }
        }
    }
    let passed = applicable > 0 && disagree.is_empty() && biquadratic_failures.is_empty();
    let mut detail = format!(
        "{PROFILE_PAIRS} profile pairs, {applicable} coprime, {} disagreements; {pairs} biquadratic fields, {} failures",
        disagree.len(),
        biquadratic_failures.len()
    );
    if let Some(f) = disagree.first().or(biquadratic_failures.first()) {
        detail.push_str(&format!("; first {f}"));
    }
    (passed, detail)
}

const MOD7_N: usize = 10_000_000;

fn mod7_exponent() -> (bool, String) {
    let series = match named_series("lemma25", MOD7_N) {
        Ok(s) => s,
        Err(e) => return (false, e.to_string()),
    };
    // Grid from 10 to N with the first decade dropped.
    let grid: Vec<usize> = half_decade_grid(4, 14).into_iter().map(|x| x as usize).collect();
    let sums = series.partial_sums(&grid);
    let xs: Vec<f64> = grid.iter().map(|&x| x as f64).collect();
    match tauberian_fit(&xs, &sums) {
        Err(e) => (false, e.to_string()),
        Ok(fit) => (
            (0.95..=1.05).contains(&fit.a_hat),
            format!("a_hat = {:.4} in [0.95, 1.05], w_hat = {:.3}, N = {MOD7_N}", fit.a_hat, fit.w_hat),
        ),
    }
}

fn divisor_sums() -> (bool, String) {
    let grid = half_decade_grid(8, 16);
    let ts = [DivisorExponent::Integer(1), DivisorExponent::Integer(2), DivisorExponent::log2_of_3()];
    let sums = divisor_power_sums(&ts, &grid);
    let mut passed = true;
    let mut parts = Vec::new();
    for (t, row) in ts.iter().zip(&sums) {
        let (lo, hi) = row.iter().fold((f64::MAX, 0f64), |(lo, hi), s| (lo.min(s.ratio), hi.max(s.ratio)));
        let spread = hi / lo;
        passed &= spread < 3.0;
        parts.push(format!("t = {:.4}: ratio in [{lo:.4}, {hi:.4}], spread {spread:.3}", t.value()));
    }
    (passed, parts.join("; "))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn reference_rows_cover_the_catalog() {
        let labels: Vec<String> = REFERENCE.iter().map(|(k, ..)| format!("H_{{{k}}}")).collect();
        let catalog: Vec<&str> = lattice_groups::catalog()[1..].iter().map(|e| e.label.as_str()).collect();
        assert_eq!(labels, catalog);
    }
}
