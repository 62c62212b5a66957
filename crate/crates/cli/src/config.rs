//! Settings from a `key=value` file, overridden by flags.

use std::path::{Path, PathBuf};

use serde::Serialize;

use crate::CliError;

/// Enumeration limits per field kind.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FieldBounds {
    pub quadratic: u64,
    pub cyclic_cubic: u64,
    pub s3_cubic: u64,
    pub cyclic_quartic: u64,
}

impl Default for FieldBounds {
    fn default() -> Self {
        FieldBounds {
            quadratic: fields::defaults::QUADRATIC,
            cyclic_cubic: fields::defaults::CYCLIC_CUBIC,
            s3_cubic: fields::defaults::S3_CUBIC,
            cyclic_quartic: fields::defaults::CYCLIC_QUARTIC,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum FieldKind {
    Quadratic,
    CyclicCubic,
    S3Cubic,
    CyclicQuartic,
}

impl FieldKind {
    pub fn parse(s: &str) -> Option<FieldKind> {
        Some(match s {
            "quad" | "quadratic" => FieldKind::Quadratic,
            "c3" | "cyclic_cubic" => FieldKind::CyclicCubic,
            "s3" | "s3_cubic" => FieldKind::S3Cubic,
            "c4" | "cyclic_quartic" => FieldKind::CyclicQuartic,
            _ => return None,
        })
    }
}

impl FieldBounds {
    pub fn get(&self, kind: FieldKind) -> u64 {
        match kind {
            FieldKind::Quadratic => self.quadratic,
            FieldKind::CyclicCubic => self.cyclic_cubic,
            FieldKind::S3Cubic => self.s3_cubic,
            FieldKind::CyclicQuartic => self.cyclic_quartic,
        }
    }

    pub fn set(&mut self, kind: FieldKind, value: u64) {
        match kind {
            FieldKind::Quadratic => self.quadratic = value,
            FieldKind::CyclicCubic => self.cyclic_cubic = value,
            FieldKind::S3Cubic => self.s3_cubic = value,
            FieldKind::CyclicQuartic => self.cyclic_quartic = value,
        }
    }
}

/// Fit grid: explicit points, or every `10^(k/2)` in a range.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GridSpec {
    /// The command's default grid.
    Default,
    Points(Vec<u64>),
    /// `10^(k/2)` with `lo <= 10^(k/2) <= hi`.
    HalfDecades { lo: u64, hi: u64 },
}

impl GridSpec {
    /// `default`, `1e4..1e9`, or a comma list `1000,1e4,5e4`.
    pub fn parse(s: &str) -> Result<GridSpec, CliError> {
        let s = s.trim();
        if s == "default" {
            return Ok(GridSpec::Default);
        }
        if let Some((lo, hi)) = s.split_once("..") {
            let (lo, hi) = (parse_count(lo)?, parse_count(hi)?);
            if lo == 0 || hi < lo {
                return Err(CliError::Usage(format!("bad grid range {s}")));
            }
            return Ok(GridSpec::HalfDecades { lo, hi });
        }
        let points = s.split(',').map(parse_count).collect::<Result<Vec<_>, _>>()?;
        if points.is_empty() || points.windows(2).any(|w| w[1] <= w[0]) {
            return Err(CliError::Usage(format!("grid points must increase: {s}")));
        }
        Ok(GridSpec::Points(points))
    }

    /// Resolves against a command default of `10^(k/2)` for `k_lo..=k_hi`.
    pub fn resolve(&self, k_lo: u32, k_hi: u32) -> Vec<u64> {
        match self {
            GridSpec::Default => dirichlet::half_decade_grid(k_lo, k_hi),
            GridSpec::Points(p) => p.clone(),
            GridSpec::HalfDecades { lo, hi } => {
                dirichlet::half_decade_grid(0, 40).into_iter().filter(|x| lo <= x && x <= hi).collect()
            }
        }
    }
}

/// Integer from `12345`, `1e8` or `5e4`.
pub fn parse_count(s: &str) -> Result<u64, CliError> {
    let s = s.trim().replace('_', "");
    let bad = || CliError::Usage(format!("not a positive integer: {s}"));
    if let Some((m, e)) = s.split_once(['e', 'E']) {
        let m: u64 = m.parse().map_err(|_| bad())?;
        let e: u32 = e.parse().map_err(|_| bad())?;
        return 10u64.checked_pow(e).and_then(|p| p.checked_mul(m)).ok_or_else(bad);
    }
    s.parse().map_err(|_| bad())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Config {
    pub bounds: FieldBounds,
    pub imports: Vec<PathBuf>,
    /// `None` when no grid was asked for.
    pub grid: Option<GridSpec>,
    /// Relative output paths resolve here.
    #[serde(skip)]
    pub out_dir: Option<PathBuf>,
    #[serde(skip)]
    pub workers: usize,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            bounds: FieldBounds::default(),
            imports: Vec::new(),
            grid: None,
            out_dir: None,
            workers: std::thread::available_parallelism().map_or(1, |n| n.get()),
        }
    }
}

/// Environment override for the output directory.
pub const OUT_DIR_ENV: &str = "TORI_OUT_DIR";

impl Config {
    pub fn load(path: &Path) -> Result<Config, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
        let mut config = Config::default();
        for (n, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (key, value) = line
                .split_once('=')
                .ok_or_else(|| CliError::Usage(format!("{}:{}: expected key=value", path.display(), n + 1)))?;
            config.set(key.trim(), value.trim())?;
        }
        Ok(config)
    }

    /// Applies one setting. Keys: `bound.<kind>`, `import`, `grid`, `out_dir`, `workers`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        match key {
            "import" => self.imports.push(PathBuf::from(value)),
            "grid" => self.grid = Some(GridSpec::parse(value)?),
            "out_dir" => self.out_dir = Some(PathBuf::from(value)),
            "workers" => {
                let n = parse_count(value)? as usize;
                if n == 0 {
                    return Err(CliError::Usage("workers must be at least 1".into()));
                }
                self.workers = n;
            }
            _ => {
                let kind = key
                    .strip_prefix("bound.")
                    .and_then(FieldKind::parse)
                    .ok_or_else(|| CliError::Usage(format!("unknown config key {key}")))?;
                self.set_bound(kind, value)?;
            }
        }
        Ok(())
    }

    pub fn set_bound(&mut self, kind: FieldKind, value: &str) -> Result<(), CliError> {
        let v = parse_count(value)?;
        if v == 0 {
            return Err(CliError::Usage("bounds must be positive".into()));
        }
        self.bounds.set(kind, v);
        Ok(())
    }

    /// Where an `--out` path lands: absolute paths as given, relative ones
    /// under the environment override or `out_dir`.
    pub fn output_path(&self, out: &Path) -> PathBuf {
        if out.is_absolute() {
            return out.to_path_buf();
        }
        match std::env::var_os(OUT_DIR_ENV).map(PathBuf::from).or_else(|| self.out_dir.clone()) {
            Some(dir) => dir.join(out),
            None => out.to_path_buf(),
        }
    }

    pub fn census_bounds(&self) -> census::Bounds {
        census::Bounds { quadratic: self.bounds.quadratic, s3_cubic: self.bounds.s3_cubic }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn counts() {
        assert_eq!(parse_count("1e8").unwrap(), 100_000_000);
        assert_eq!(parse_count("5e4").unwrap(), 50_000);
        assert_eq!(parse_count("1_000").unwrap(), 1000);
        assert!(parse_count("1.5e3").is_err());
        assert!(parse_count("1e30").is_err());
    }

    #[test]
    fn grids() {
        assert_eq!(GridSpec::parse("1e4..1e5").unwrap().resolve(0, 0), vec![10_000, 31_623, 100_000]);
        assert_eq!(GridSpec::parse("10,100").unwrap(), GridSpec::Points(vec![10, 100]));
        assert!(GridSpec::parse("100,10").is_err());
        assert_eq!(GridSpec::Default.resolve(2, 4), vec![10, 32, 100]);
    }

    #[test]
    fn settings() {
        let mut c = Config::default();
        c.set("bound.s3", "1e6").unwrap();
        c.set("workers", "3").unwrap();
        assert_eq!(c.bounds.s3_cubic, 1_000_000);
        assert_eq!(c.workers, 3);
        assert!(c.set("workers", "0").is_err());
        assert!(c.set("bound.octic", "5").is_err());
    }
}
