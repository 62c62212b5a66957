//! Output files: a header line naming the tool version and a hash of the
//! invocation, then CSV or JSON.

use std::io::Write;
use std::path::PathBuf;

use serde::Serialize;
use sha2::{Digest, Sha256};

use crate::config::Config;
use crate::CliError;

pub const VERSION: &str = env!("CARGO_PKG_VERSION");

/// Flags that change where or how fast output is produced, not what it is.
const NEUTRAL_FLAGS: [&str; 3] = ["--workers", "--out", "--config"];

/// SHA-256 of the effective invocation: the arguments without
/// [`NEUTRAL_FLAGS`], plus the resolved settings.
pub fn invocation_hash(args: &[String], config: &Config) -> String {
    let mut kept = Vec::new();
    let mut skip_value = false;
    for a in args {
        if std::mem::take(&mut skip_value) {
            continue;
        }
        if NEUTRAL_FLAGS.contains(&a.as_str()) {
            skip_value = true;
        } else if !NEUTRAL_FLAGS.iter().any(|f| a.starts_with(&format!("{f}="))) {
            kept.push(a.as_str());
        }
    }
    let key = serde_json::json!({ "args": kept, "config": config });
    let digest = Sha256::digest(key.to_string().as_bytes());
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

#[derive(Debug, Clone)]
pub struct Header {
    pub version: &'static str,
    pub invocation: String,
}

impl Header {
    pub fn new(args: &[String], config: &Config) -> Self {
        Header { version: VERSION, invocation: invocation_hash(args, config) }
    }

    pub fn line(&self) -> String {
        format!("tori {} invocation sha256:{}", self.version, self.invocation)
    }
}

/// Destination of one output: a file, or standard output.
pub struct Sink {
    pub path: Option<PathBuf>,
}

impl Sink {
    pub fn write(&self, bytes: &[u8]) -> Result<(), CliError> {
        match &self.path {
            Some(p) => {
                if let Some(dir) = p.parent().filter(|d| !d.as_os_str().is_empty()) {
                    std::fs::create_dir_all(dir).map_err(|e| CliError::io(dir, e))?;
                }
                std::fs::write(p, bytes).map_err(|e| CliError::io(p, e))
            }
            None => std::io::stdout().write_all(bytes).map_err(|e| CliError::io("<stdout>", e)),
        }
    }

    /// CSV body behind a `# header` comment line.
    pub fn csv(&self, header: &Header, body: &[u8]) -> Result<(), CliError> {
        let mut out = format!("# {}\n", header.line()).into_bytes();
        out.extend_from_slice(body);
        self.write(&out)
    }

    /// JSON object whose first key is `header`.
    pub fn json<T: Serialize>(&self, header: &Header, value: &T) -> Result<(), CliError> {
        let mut obj = serde_json::Map::new();
        obj.insert("header".into(), header.line().into());
        match serde_json::to_value(value).map_err(CliError::Json)? {
            serde_json::Value::Object(m) => obj.extend(m),
            other => {
                obj.insert("data".into(), other);
            }
        }
        let mut text = serde_json::to_string_pretty(&serde_json::Value::Object(obj)).map_err(CliError::Json)?;
        text.push('\n');
        self.write(text.as_bytes())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        s.split_whitespace().map(String::from).collect()
    }

    #[test]
    fn hash_ignores_workers_and_out() {
        let c = Config::default();
        let base = invocation_hash(&args("count --family 4e --X 1e6"), &c);
        assert_eq!(base, invocation_hash(&args("--workers 7 count --family 4e --X 1e6 --out r.json"), &c));
        assert_eq!(base, invocation_hash(&args("count --workers=2 --family 4e --X 1e6"), &c));
        assert_ne!(base, invocation_hash(&args("count --family 4e --X 1e7"), &c));
        let mut other = c.clone();
        other.bounds.s3_cubic = 5;
        assert_ne!(base, invocation_hash(&args("count --family 4e --X 1e6"), &other));
        assert_eq!(base.len(), 64);
    }
}
