use std::fmt;

use arith::FactoredInt;
use num_bigint::BigInt;

use crate::cubic::BinaryCubicForm;

/// Galois type of a field as carried on records and in CSV files.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GaloisLabel {
    C2,
    C3,
    S3Cubic,
    C4,
    V4,
    C6,
    S3Sextic,
    Imported(String),
}

impl GaloisLabel {
    pub fn parse(s: &str) -> GaloisLabel {
        match s {
            "C2" => GaloisLabel::C2,
            "C3" => GaloisLabel::C3,
            "S3-cubic" => GaloisLabel::S3Cubic,
            "C4" => GaloisLabel::C4,
            "V4" => GaloisLabel::V4,
            "C6" => GaloisLabel::C6,
            "S3-sextic" => GaloisLabel::S3Sextic,
            other => GaloisLabel::Imported(other.strip_prefix("imported:").unwrap_or(other).to_string()),
        }
    }
}

impl fmt::Display for GaloisLabel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GaloisLabel::C2 => f.write_str("C2"),
            GaloisLabel::C3 => f.write_str("C3"),
            GaloisLabel::S3Cubic => f.write_str("S3-cubic"),
            GaloisLabel::C4 => f.write_str("C4"),
            GaloisLabel::V4 => f.write_str("V4"),
            GaloisLabel::C6 => f.write_str("C6"),
            GaloisLabel::S3Sextic => f.write_str("S3-sextic"),
            GaloisLabel::Imported(s) => write!(f, "imported:{s}"),
        }
    }
}

/// How a record was constructed.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Provenance {
    /// Quadratic field of fundamental discriminant `d`.
    Quadratic { d: i64 },
    /// One of the `2^(omega(f) - 1)` cyclic cubic fields of conductor `f`.
    CyclicCubic { conductor: u64, index: u32 },
    /// Cubic field attached to a reduced, maximal binary cubic form.
    CubicForm(BinaryCubicForm),
    /// Cyclic quartic field cut out by a conjugate pair of order-4
    /// characters of the given conductor.
    CyclicQuartic { conductor: u64, quadratic_disc: i64, index: u32 },
    /// Row of an imported table.
    Imported { label: String, subfield_discs: Vec<BigInt> },
}

/// A number field known by its degree, Galois type and discriminant.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldRecord {
    pub degree: u32,
    pub galois_label: GaloisLabel,
    pub disc: FactoredInt,
    pub provenance: Provenance,
}

impl FieldRecord {
    /// Absolute discriminant, or `None` past 128 bits.
    pub fn abs_disc(&self) -> Option<u128> {
        self.disc.to_i128().map(|d| d.unsigned_abs())
    }

    /// Signed discriminant, or `None` past 128 bits.
    pub fn disc_i128(&self) -> Option<i128> {
        self.disc.to_i128()
    }

    /// Stable text label, also used as the `label` column on export.
    pub fn label(&self) -> String {
        match &self.provenance {
            Provenance::Quadratic { d } => format!("quad:{d}"),
            Provenance::CyclicCubic { conductor, index } => format!("c3:{conductor}:{index}"),
            Provenance::CubicForm(form) => format!("s3:{},{},{},{}", form.a, form.b, form.c, form.d),
            Provenance::CyclicQuartic { conductor, quadratic_disc, index } => {
                format!("c4:{conductor}:{quadratic_disc}:{index}")
            }
            Provenance::Imported { label, .. } => label.clone(),
        }
    }

    /// Discriminants of the proper subfields other than the rationals, where
    /// they are known from the construction.
    pub fn subfield_discs(&self) -> Vec<BigInt> {
        match &self.provenance {
            Provenance::CyclicQuartic { quadratic_disc, .. } => vec![BigInt::from(*quadratic_disc)],
            Provenance::Imported { subfield_discs, .. } => subfield_discs.clone(),
            _ => Vec::new(),
        }
    }

    /// Sort key: absolute discriminant, then provenance.
    pub(crate) fn sort_key(&self) -> (u128, &Provenance) {
        (self.abs_disc().unwrap_or(u128::MAX), &self.provenance)
    }
}
