//! Ingestion of externally computed field tables.

use std::path::Path;

use arith::FactoredInt;
use num_bigint::BigInt;

use crate::record::{FieldRecord, GaloisLabel, Provenance};

/// The only schema understood so far.
pub const LMFDB_NF_V1: &str = "lmfdb-nf-v1";
pub const LMFDB_NF_V1_HEADER: [&str; 5] = ["label", "degree", "galois_label", "disc", "subfield_discs"];

#[derive(Debug, thiserror::Error)]
pub enum ImportError {
    #[error("schema mismatch: {0}")]
    SchemaMismatch(String),
    #[error("row {row}: invalid discriminant {value:?}: {reason}")]
    InvalidDiscriminant { row: usize, value: String, reason: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

fn mismatch(msg: impl Into<String>) -> ImportError {
    ImportError::SchemaMismatch(msg.into())
}

/// Reads a field table; lines starting with `#` are ignored.
pub fn import_fields_csv(path: impl AsRef<Path>, schema_label: &str) -> Result<Vec<FieldRecord>, ImportError> {
    let file = std::fs::File::open(path)?;
    read_fields_csv(file, schema_label)
}

pub fn read_fields_csv(input: impl std::io::Read, schema_label: &str) -> Result<Vec<FieldRecord>, ImportError> {
    if schema_label != LMFDB_NF_V1 {
        return Err(mismatch(format!("unknown schema {schema_label:?}")));
    }
    let mut reader = csv::ReaderBuilder::new().comment(Some(b'#')).has_headers(true).from_reader(input);
    let header = reader.headers().map_err(|e| mismatch(e.to_string()))?;
    if header.iter().collect::<Vec<_>>() != LMFDB_NF_V1_HEADER {
        return Err(mismatch(format!("header {:?}, expected {:?}", header, LMFDB_NF_V1_HEADER)));
    }
    let mut out = Vec::new();
    for (i, row) in reader.records().enumerate() {
        let row_no = i + 1;
        let row = row.map_err(|e| mismatch(format!("row {row_no}: {e}")))?;
        let degree: u32 = row[1].trim().parse().map_err(|_| mismatch(format!("row {row_no}: degree {:?}", &row[1])))?;
        if degree == 0 {
            return Err(mismatch(format!("row {row_no}: degree 0")));
        }
        let bad_disc = |reason: &str| ImportError::InvalidDiscriminant {
            row: row_no,
            value: row[3].to_string(),
            reason: reason.to_string(),
        };
        let disc: BigInt = row[3].trim().parse().map_err(|_| bad_disc("not an integer"))?;
        let factored = FactoredInt::from_bigint(&disc).map_err(|e| bad_disc(&e.to_string()))?;
        // A discriminant is 0 or 1 mod 4 (Stickelberger).
        let residue = ((&disc % 4u32) + 4u32) % 4u32;
        if residue != BigInt::from(0) && residue != BigInt::from(1) {
            return Err(bad_disc("not 0 or 1 mod 4"));
        }
        if factored.to_bigint() != disc {
            return Err(bad_disc("factorization does not reproduce the value"));
        }
        let subfield_discs = row[4]
            .split(';')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| s.parse::<BigInt>().map_err(|_| mismatch(format!("row {row_no}: subfield disc {s:?}"))))
            .collect::<Result<Vec<_>, _>>()?;
        out.push(FieldRecord {
            degree,
            galois_label: GaloisLabel::parse(row[2].trim()),
            disc: factored,
            provenance: Provenance::Imported { label: row[0].to_string(), subfield_discs },
        });
    }
    Ok(out)
}

/// Writes records in the import schema, so exports round-trip.
pub fn write_fields_csv<W: std::io::Write>(
    out: W,
    records: impl IntoIterator<Item = FieldRecord>,
) -> Result<(), csv::Error> {
    let mut writer = csv::WriterBuilder::new().from_writer(out);
    writer.write_record(LMFDB_NF_V1_HEADER)?;
    for r in records {
        let subs: Vec<String> = r.subfield_discs().iter().map(|d| d.to_string()).collect();
        writer.write_record([
            r.label(),
            r.degree.to_string(),
            r.galois_label.to_string(),
            r.disc.to_bigint().to_string(),
            subs.join(";"),
        ])?;
    }
    writer.flush()?;
    Ok(())
}
