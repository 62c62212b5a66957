//! Number fields of small degree with exact discriminants: quadratic, cyclic
//! cubic, non-Galois cubic (via binary cubic forms) and cyclic quartic, plus
//! quadratic class groups and import of external field tables.

mod abelian;
pub mod class_group;
pub mod cubic;
mod import;
mod record;

pub use abelian::{
    cubic_conductor_primes, cyclic_cubic_multiplicity, cyclic_quartic_shapes, enum_cyclic_cubic, enum_cyclic_quartic,
    enum_quadratic,
};
pub use class_group::{quad_class_group, quad_class_group_bounded, ClassGroupData, ClassGroupError, QuadForm};
pub use cubic::{enum_cubic_s3, BinaryCubicForm, Signature};
pub use import::{import_fields_csv, read_fields_csv, write_fields_csv, ImportError, LMFDB_NF_V1};
pub use record::{FieldRecord, GaloisLabel, Provenance};

/// Default enumeration bounds per field kind.
pub mod defaults {
    pub const QUADRATIC: u64 = 100_000_000;
    pub const CYCLIC_CUBIC: u64 = 1_000_000_000;
    pub const S3_CUBIC: u64 = 10_000_000;
    pub const CYCLIC_QUARTIC: u64 = 10_000_000;
}
