//! One function per subcommand.

use std::path::{Path, PathBuf};

use census::{count_family_grid, fit_counts, implemented_labels, CensusOptions};
use dirichlet::{named_series, tauberian_fit};
use disc_calculus::{role_key, verify_lemma_bundle, Bindings, FactoredInt, Identity};
use fields::{
    enum_cubic_s3, enum_cyclic_cubic, enum_cyclic_quartic, enum_quadratic, import_fields_csv, write_fields_csv,
    FieldRecord, Signature, LMFDB_NF_V1,
};
use rayon::prelude::*;
use serde::Serialize;

use crate::acceptance;
use crate::config::{Config, FieldKind, GridSpec};
use crate::output::{Header, Sink};
use crate::CliError;

pub(crate) struct Context {
    header: Header,
    config: Config,
    out: Option<PathBuf>,
}

impl Context {
    pub(crate) fn new(args: &[String], config: Config, out: Option<PathBuf>) -> Self {
        Context { header: Header::new(args, &config), config, out }
    }

    /// A command-specific output flag such as `--report` wins over `--out`.
    pub(crate) fn with_out(&self, out: Option<PathBuf>) -> Context {
        Context {
            header: self.header.clone(),
            config: self.config.clone(),
            out: out.or_else(|| self.out.clone()),
        }
    }

    fn sink(&self) -> Sink {
        Sink { path: self.out.as_deref().map(|p| self.config.output_path(p)) }
    }

    fn imports(&self) -> Result<Option<Vec<FieldRecord>>, CliError> {
        if self.config.imports.is_empty() {
            return Ok(None);
        }
        let mut records = Vec::new();
        for path in &self.config.imports {
            records.extend(import_fields_csv(path, LMFDB_NF_V1)?);
        }
        Ok(Some(records))
    }
}

fn csv_bytes(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<Vec<u8>, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header)?;
    for row in rows {
        w.write_record(row)?;
    }
    w.into_inner().map_err(|e| CliError::Failed(e.to_string()))
}

pub(crate) fn groups_table(ctx: &Context) -> Result<(), CliError> {
    let mut rows = Vec::new();
    for e in lattice_groups::catalog().iter().filter(|e| e.label != lattice_groups::TRIVIAL_LABEL) {
        let invariants = e.group.a_invariant().and_then(|a| Ok((a, e.group.b_invariant()?)));
        let (a, b) = invariants.map_err(|err| CliError::Failed(format!("{}: {err}", e.label)))?;
        rows.push(vec![e.label.clone(), e.group.order().to_string(), e.iso_label.to_string(), a.to_string(), b.to_string()]);
    }
    ctx.sink().csv(&ctx.header, &csv_bytes(&["label", "order", "iso", "a", "b"], rows)?)
}

pub(crate) fn fields_enum(ctx: &Context, kind: FieldKind) -> Result<(), CliError> {
    let bound = ctx.config.bounds.get(kind);
    let mut records: Vec<FieldRecord> = match kind {
        FieldKind::Quadratic => enum_quadratic(bound).collect(),
        FieldKind::CyclicCubic => enum_cyclic_cubic(bound).collect(),
        FieldKind::S3Cubic => {
            enum_cubic_s3(bound, Signature::Negative).chain(enum_cubic_s3(bound, Signature::Positive)).collect()
        }
        FieldKind::CyclicQuartic => enum_cyclic_quartic(bound).collect(),
    };
    records.sort_by_cached_key(|r| (r.abs_disc(), r.disc_i128(), r.label()));
    let mut body = Vec::new();
    write_fields_csv(&mut body, records)?;
    ctx.sink().csv(&ctx.header, &body)
}

#[derive(Serialize)]
struct ResidualRecord {
    left: String,
    right: String,
    prime: Option<u64>,
    left_value: i64,
    right_value: i64,
}

#[derive(Serialize)]
struct BundleFailure {
    row: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<String>,
    residuals: Vec<ResidualRecord>,
}

#[derive(Serialize)]
struct IdentityReport {
    lemma: &'static str,
    rows: usize,
    holding: usize,
    failures: Vec<BundleFailure>,
}

fn read_bundles(input: &Path, identity: Identity) -> Result<Vec<Bindings>, CliError> {
    let file = std::fs::File::open(input).map_err(|e| CliError::io(input, e))?;
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(file);
    let roles: Vec<String> = reader.headers()?.iter().map(role_key).collect();
    let missing: Vec<String> =
        identity.roles().iter().map(|r| role_key(r)).filter(|r| r != "K" && !roles.contains(r)).collect();
    if !missing.is_empty() {
        return Err(CliError::Usage(format!("{}: no column for roles {}", input.display(), missing.join(", "))));
    }
    let mut bundles = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row?;
        let mut b = Bindings::new();
        for (role, cell) in roles.iter().zip(row.iter()) {
            if cell.is_empty() {
                continue;
            }
            let bad = || CliError::Usage(format!("{}: row {}: bad {role} value {cell}", input.display(), i + 1));
            let n: i128 = cell.parse().map_err(|_| bad())?;
            b.insert(role.clone(), FactoredInt::from_i128(n).map_err(|_| bad())?);
        }
        bundles.push(b);
    }
    Ok(bundles)
}

pub(crate) fn verify_identities(ctx: &Context, lemma: &str, input: &Path) -> Result<(), CliError> {
    let identity = Identity::parse(lemma).ok_or_else(|| CliError::Usage(format!("unknown lemma {lemma}")))?;
    let bundles = read_bundles(input, identity)?;
    let failures: Vec<BundleFailure> = bundles
        .par_iter()
        .enumerate()
        .filter_map(|(i, b)| match verify_lemma_bundle(b, identity) {
            Ok(r) if r.holds => None,
            Ok(r) => Some(BundleFailure {
                row: i + 1,
                error: None,
                residuals: r
                    .residuals
                    .into_iter()
                    .map(|x| ResidualRecord {
                        left: x.left,
                        right: x.right,
                        prime: x.prime,
                        left_value: x.left_value,
                        right_value: x.right_value,
                    })
                    .collect(),
            }),
            Err(e) => Some(BundleFailure { row: i + 1, error: Some(e.to_string()), residuals: Vec::new() }),
        })
        .collect();
    let report = IdentityReport {
        lemma: identity.name(),
        rows: bundles.len(),
        holding: bundles.len() - failures.len(),
        failures,
    };
    ctx.sink().json(&ctx.header, &report)?;
    if report.failures.is_empty() {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{} fails on {} of {} bundles", identity, report.failures.len(), report.rows)))
    }
}

fn format_coefficient(num: i64, den: i64) -> String {
    let g = arith::gcd(num.unsigned_abs(), den.unsigned_abs()) as i64;
    let (num, den) = (num / g, den / g);
    if den == 1 {
        num.to_string()
    } else {
        format!("{num}/{den}")
    }
}

fn parse_coefficient(s: &str) -> Option<f64> {
    match s.split_once('/') {
        Some((n, d)) => Some(n.trim().parse::<i64>().ok()? as f64 / d.trim().parse::<i64>().ok()? as f64),
        None => Some(s.trim().parse::<i64>().ok()? as f64),
    }
}

/// Nonzero coefficients, then a row for `n = N` so the range survives.
pub(crate) fn dirichlet_expand(ctx: &Context, series: &str, n: u64) -> Result<(), CliError> {
    let n = usize::try_from(n).map_err(|_| CliError::Usage(format!("--N {n} is too large")))?;
    if n == 0 {
        return Err(CliError::Usage("--N must be positive".into()));
    }
    let coeffs = named_series(series, n)?;
    let den = coeffs.denominator();
    let rows = (1..=n)
        .filter(|&k| k == n || coeffs.numerator(k) != 0)
        .map(|k| vec![k.to_string(), format_coefficient(coeffs.numerator(k), den)]);
    ctx.sink().csv(&ctx.header, &csv_bytes(&["n", "coefficient"], rows)?)
}

#[derive(Serialize)]
struct SeriesFit {
    n_max: u64,
    grid: Vec<u64>,
    sums: Vec<f64>,
    a_hat: f64,
    w_hat: f64,
    r2: f64,
}

pub(crate) fn dirichlet_fit(ctx: &Context, input: &Path) -> Result<(), CliError> {
    let file = std::fs::File::open(input).map_err(|e| CliError::io(input, e))?;
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).trim(csv::Trim::All).from_reader(file);
    let mut terms = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row = row?;
        let bad = || CliError::Usage(format!("{}: row {}: expected n,coefficient", input.display(), i + 1));
        let n: u64 = row.get(0).and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let c = row.get(1).and_then(parse_coefficient).ok_or_else(bad)?;
        terms.push((n, c));
    }
    terms.sort_by_key(|t| t.0);
    let n_max = terms.last().map_or(0, |t| t.0);
    let mut grid = match ctx.config.grid.clone().unwrap_or(GridSpec::Default) {
        GridSpec::Default => {
            // From 10, with the first decade left out.
            let full = GridSpec::Default.resolve(2, 40);
            full.into_iter().filter(|&x| x >= 100).collect()
        }
        spec => spec.resolve(2, 40),
    };
    grid.retain(|&x| x <= n_max);
    let mut sums = Vec::with_capacity(grid.len());
    let (mut acc, mut pos) = (0.0, 0);
    for &x in &grid {
        while pos < terms.len() && terms[pos].0 <= x {
            acc += terms[pos].1;
            pos += 1;
        }
        sums.push(acc);
    }
    // A log-scale fit needs positive sums; sparse series start at zero.
    let first = sums.iter().position(|&s| s > 0.0).unwrap_or(sums.len());
    grid.drain(..first);
    sums.drain(..first);
    let xs: Vec<f64> = grid.iter().map(|&x| x as f64).collect();
    let fit = tauberian_fit(&xs, &sums)?;
    let report = SeriesFit { n_max, grid, sums, a_hat: fit.a_hat, w_hat: fit.w_hat, r2: fit.r2 };
    ctx.sink().json(&ctx.header, &report)
}

/// The count grid: the requested spec cut at `X` (with `X` itself as the
/// last point), or `X` alone when no grid was asked for.
fn count_grid(config: &Config, x: Option<u64>) -> Result<Vec<u64>, CliError> {
    let mut grid = match (&config.grid, x) {
        (None, Some(x)) => vec![x],
        (None, None) => census::default_grid(),
        (Some(spec), _) => spec.resolve(8, 18),
    };
    if let Some(x) = x {
        grid.retain(|&g| g <= x);
        if grid.last() != Some(&x) {
            grid.push(x);
        }
    }
    if grid.is_empty() {
        return Err(CliError::Usage("empty count grid".into()));
    }
    Ok(grid)
}

fn census_options(ctx: &Context) -> Result<CensusOptions, CliError> {
    Ok(CensusOptions { bounds: ctx.config.census_bounds(), import: ctx.imports()? })
}

pub(crate) fn count_one(ctx: &Context, label: &str, x: Option<u64>) -> Result<(), CliError> {
    let grid = count_grid(&ctx.config, x)?;
    let counts = count_family_grid(label, &grid, &census_options(ctx)?)?;
    ctx.sink().json(&ctx.header, &fit_counts(label, &grid, &counts)?)
}

#[derive(Serialize)]
struct FamilyError {
    label: String,
    error: String,
}

pub(crate) fn count_all(ctx: &Context, x: Option<u64>) -> Result<(), CliError> {
    let grid = count_grid(&ctx.config, x)?;
    let options = census_options(ctx)?;
    let results: Vec<_> = implemented_labels()
        .into_par_iter()
        .map(|label| {
            let report = count_family_grid(&label, &grid, &options).and_then(|c| fit_counts(&label, &grid, &c));
            (label, report)
        })
        .collect();
    let mut reports = Vec::new();
    let mut errors = Vec::new();
    for (label, r) in results {
        match r {
            Ok(r) => reports.push(r),
            Err(e) => errors.push(FamilyError { label, error: e.to_string() }),
        }
    }
    let body = serde_json::json!({ "reports": reports, "errors": errors });
    ctx.sink().json(&ctx.header, &body)
}

pub(crate) fn accept(ctx: &Context, quick: bool) -> Result<(), CliError> {
    let ids: &[u8] = if quick { &acceptance::QUICK } else { &acceptance::ALL };
    let outcomes: Vec<_> = ids
        .iter()
        .map(|&id| {
            let o = acceptance::run(id);
            eprintln!("{}", o.line());
            o
        })
        .collect();
    let failed = outcomes.iter().filter(|o| !o.passed).count();
    let body = serde_json::json!({ "passed": failed == 0, "criteria": outcomes });
    ctx.sink().json(&ctx.header, &body)?;
    if failed == 0 {
        Ok(())
    } else {
        Err(CliError::Failed(format!("{failed} of {} criteria failed", outcomes.len())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coefficients_round_trip() {
        assert_eq!(format_coefficient(6, 2), "3");
        assert_eq!(format_coefficient(-3, 2), "-3/2");
        assert_eq!(parse_coefficient("-3/2"), Some(-1.5));
        assert_eq!(parse_coefficient("7"), Some(7.0));
        assert_eq!(parse_coefficient("x"), None);
    }

    #[test]
    fn grids_end_at_x() {
        let mut c = Config::default();
        assert_eq!(count_grid(&c, Some(500)).unwrap(), vec![500]);
        c.grid = Some(GridSpec::Default);
        let g = count_grid(&c, Some(50_000)).unwrap();
        assert_eq!(g, vec![10_000, 31_623, 50_000]);
    }
}
