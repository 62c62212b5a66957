//! The 73 conjugacy classes of finite subgroups of GL3(Z), one generator
//! list per class, in the order used by the conductor table.

use std::sync::OnceLock;

use crate::group::{generate_group, MatrixGroup};

use crate::matrix::IntMatrix;

pub struct CatalogEntry {
    pub label: String,
    pub generators: Vec<IntMatrix>,
    pub group: MatrixGroup,
    pub iso_label: &'static str,
}

/// Label of the trivial group.
pub const TRIVIAL_LABEL: &str = "H_{1}";

type Flat = [i64; 9];

const NEG: Flat = [-1, 0, 0, 0, -1, 0, 0, 0, -1];
const D_PMM: Flat = [1, 0, 0, 0, -1, 0, 0, 0, -1];
const D_MPP: Flat = [-1, 0, 0, 0, 1, 0, 0, 0, 1];
const D_MMP: Flat = [-1, 0, 0, 0, -1, 0, 0, 0, 1];
const D_PPM: Flat = [1, 0, 0, 0, 1, 0, 0, 0, -1];
const D_MPM: Flat = [-1, 0, 0, 0, 1, 0, 0, 0, -1];
const SWAP_M: Flat = [-1, 0, 0, 0, 0, 1, 0, 1, 0];
const SWAP_P: Flat = [1, 0, 0, 0, 0, 1, 0, 1, 0];
const ASWAP_P: Flat = [1, 0, 0, 0, 0, -1, 0, -1, 0];
const ASWAP_M: Flat = [-1, 0, 0, 0, 0, -1, 0, -1, 0];
const ROT4: Flat = [1, 0, 0, 0, 0, -1, 0, 1, 0];
const ROT4_M: Flat = [-1, 0, 0, 0, 0, 1, 0, -1, 0];
const ROT4_C: Flat = [1, 0, 1, 0, 0, -1, 0, 1, 0];
const ROT4_CM: Flat = [-1, 0, -1, 0, 0, 1, 0, -1, 0];
const ROT3: Flat = [1, 0, 0, 0, 0, -1, 0, 1, -1];
const CYC3: Flat = [0, 1, 0, 0, 0, 1, 1, 0, 0];
const ROT6: Flat = [1, 0, 0, 0, 0, -1, 0, 1, 1];
const ROT6_M: Flat = [-1, 0, 0, 0, 0, 1, 0, -1, -1];
const ROT6_C: Flat = [-1, 0, 0, 0, 0, 1, 0, -1, 1];
const CYC6: Flat = [0, -1, 0, 0, 0, -1, -1, 0, 0];
const V4_L: Flat = [-1, 0, 0, 1, 0, -1, -1, -1, 0];
const V4_M: Flat = [1, 0, 0, -1, 0, 1, 1, 1, 0];
const V4_N: Flat = [-1, 1, -1, 0, 0, -1, 0, -1, 0];
const V4_O: Flat = [1, -1, 1, 0, 0, 1, 0, 1, 0];
const A4_J: Flat = [0, -1, 1, 0, -1, 0, 1, -1, 0];
const A4_K: Flat = [-1, -1, -1, 0, 0, 1, 0, 1, 0];
const S4_E1: Flat = [0, 0, 1, 0, 1, 0, -1, 0, 0];
const S4_F1: Flat = [0, 0, -1, 0, -1, 0, 1, 0, 0];
const S4_G1: Flat = [0, -1, 0, 1, 1, 1, -1, 0, 0];
const S4_G2: Flat = [-1, -1, 0, 0, 1, 0, 0, 0, -1];
const S4_H1: Flat = [0, 1, 0, -1, -1, -1, 1, 0, 0];
const S4_H2: Flat = [1, 1, 0, 0, -1, 0, 0, 0, 1];
const S4_I1: Flat = [1, 1, 0, -2, -1, -1, 0, 0, 1];
const S4_J1: Flat = [-1, -1, 0, 2, 1, 1, 0, 0, -1];

const TABLE: &[(&str, &str, &[Flat])] = &[
    ("2,a", "C2", &[D_PMM]),
    ("2,b", "C2", &[D_MPP]),
    ("2,c", "C2", &[SWAP_M]),
    ("2,d", "C2", &[ASWAP_P]),
    ("2,e", "C2", &[NEG]),
    ("3,a", "C3", &[ROT3]),
    ("3,b", "C3", &[CYC3]),
    ("4,a", "C4", &[ROT4]),
    ("4,b", "C4", &[ROT4_M]),
    ("4,c", "C4", &[ROT4_C]),
    ("4,d", "C4", &[ROT4_CM]),
    ("4,e", "C2×C2", &[D_PMM, NEG]),
    ("4,f", "C2×C2", &[D_PMM, D_MMP]),
    ("4,g", "C2×C2", &[D_PMM, D_PPM]),
    ("4,h", "C2×C2", &[D_PMM, ASWAP_M]),
    ("4,i", "C2×C2", &[D_PMM, SWAP_P]),
    ("4,j", "C2×C2", &[D_MPP, SWAP_P]),
    ("4,k", "C2×C2", &[SWAP_M, NEG]),
    ("4,l", "C2×C2", &[SWAP_M, V4_L]),
    ("4,m", "C2×C2", &[SWAP_M, V4_M]),
    ("4,n", "C2×C2", &[SWAP_M, V4_N]),
    ("4,o", "C2×C2", &[SWAP_M, V4_O]),
    ("6,a", "C6", &[ROT6]),
    ("6,b", "C6", &[ROT6_M]),
    ("6,c", "C6", &[ROT6_C]),
    ("6,d", "C6", &[CYC6]),
    ("6,e", "S3", &[ROT3, ASWAP_M]),
    ("6,f", "S3", &[ROT3, SWAP_P]),
    ("6,g", "S3", &[ROT3, SWAP_M]),
    ("6,h", "S3", &[ROT3, ASWAP_P]),
    ("6,i", "S3", &[CYC3, [0, 0, -1, 0, -1, 0, -1, 0, 0]]),
    ("6,j", "S3", &[CYC3, [0, 0, 1, 0, 1, 0, 1, 0, 0]]),
    ("8,a", "C4×C2", &[ROT4, NEG]),
    ("8,b", "C4×C2", &[ROT4_C, NEG]),
    ("8,c", "C2×C2×C2", &[D_PMM, D_MMP, NEG]),
    ("8,d", "C2×C2×C2", &[D_PMM, ASWAP_M, NEG]),
    ("8,e", "C2×C2×C2", &[SWAP_M, V4_L, NEG]),
    ("8,f", "C2×C2×C2", &[SWAP_M, V4_N, NEG]),
    ("8,g", "D4", &[ROT4, SWAP_M]),
    ("8,h", "D4", &[ROT4, ASWAP_P]),
    ("8,i", "D4", &[ROT4_M, SWAP_M]),
    ("8,j", "D4", &[ROT4_M, ASWAP_P]),
    ("8,k", "D4", &[ROT4_C, ASWAP_M]),
    ("8,l", "D4", &[ROT4_C, SWAP_P]),
    ("8,m", "D4", &[ROT4_CM, ASWAP_M]),
    ("8,n", "D4", &[ROT4_CM, SWAP_P]),
    ("12,a", "C6×C2", &[ROT6, NEG]),
    ("12,b", "D6", &[ROT6, SWAP_M]),
    ("12,c", "D6", &[ROT6, ASWAP_P]),
    ("12,d", "D6", &[ROT6_M, SWAP_M]),
    ("12,e", "D6", &[ROT6_M, ASWAP_P]),
    ("12,f", "D6", &[ROT6_C, ASWAP_M]),
    ("12,g", "D6", &[ROT6_C, SWAP_M]),
    ("12,h", "D6", &[CYC6, [0, 0, -1, 0, -1, 0, -1, 0, 0]]),
    ("12,i", "A4", &[CYC3, D_MPM]),
    ("12,j", "A4", &[CYC3, A4_J]),
    ("12,k", "A4", &[CYC3, A4_K]),
    ("16,a", "D4×C2", &[ROT4, SWAP_M, NEG]),
    ("16,b", "D4×C2", &[ROT4_C, ASWAP_M, NEG]),
    ("24,a", "A4×C2", &[CYC3, D_MPM, NEG]),
    ("24,b", "A4×C2", &[CYC3, A4_J, NEG]),
    ("24,c", "A4×C2", &[CYC3, A4_K, NEG]),
    ("24,d", "D6×C2", &[ROT6, SWAP_M, NEG]),
    ("24,e", "S4", &[S4_E1, ASWAP_M]),
    ("24,f", "S4", &[S4_F1, SWAP_P]),
    ("24,g", "S4", &[S4_G1, S4_G2]),
    ("24,h", "S4", &[S4_H1, S4_H2]),
    ("24,i", "S4", &[S4_I1, A4_K]),
    ("24,j", "S4", &[S4_J1, [1, 1, 1, 0, 0, -1, 0, -1, 0]]),
    ("48,a", "S4×C2", &[S4_E1, ASWAP_M, NEG]),
    ("48,b", "S4×C2", &[S4_G1, S4_G2, NEG]),
    ("48,c", "S4×C2", &[S4_I1, A4_K, NEG]),
];

fn build() -> Vec<CatalogEntry> {
    let mut trivial = generate_group(&[]).expect("trivial group");
    trivial.label = TRIVIAL_LABEL.to_string();
    let mut out = vec![CatalogEntry {
        label: TRIVIAL_LABEL.to_string(),
        generators: Vec::new(),
        group: trivial,
        iso_label: "1",
    }];
    for (key, iso, flats) in TABLE {
        let label = format!("H_{{{key}}}");
        let generators: Vec<IntMatrix> = flats.iter().map(|f| IntMatrix::from_flat(*f)).collect();
        let mut group = generate_group(&generators).unwrap_or_else(|e| panic!("{label}: {e}"));
        group.label = label.clone();
        out.push(CatalogEntry { label, generators, group, iso_label: iso });
    }
    out
}

/// All 73 entries, trivial group first. Built once and cached.
pub fn catalog() -> &'static [CatalogEntry] {
    static CELL: OnceLock<Vec<CatalogEntry>> = OnceLock::new();
    CELL.get_or_init(build)
}

/// Looks up an entry by `H_{4,e}`, `H_4_e` or `4e`.
pub fn lookup(label: &str) -> Option<&'static CatalogEntry> {
    let want = normalize_label(label)?;
    catalog().iter().find(|e| e.label == want)
}

/// Canonical `H_{n,x}` spelling of a family label.
pub fn normalize_label(label: &str) -> Option<String> {
    let s = label.trim();
    if s == TRIVIAL_LABEL || s == "H_1" || s == "1" {
        return Some(TRIVIAL_LABEL.to_string());
    }
    let body = s.strip_prefix("H_").unwrap_or(s);
    let body = body.trim_start_matches('{').trim_end_matches('}');
    let digits: String = body.chars().take_while(|c| c.is_ascii_digit()).collect();
    let rest: String = body[digits.len()..].chars().filter(|c| c.is_ascii_alphabetic()).collect();
    if digits.is_empty() || rest.len() != 1 {
        return None;
    }
    Some(format!("H_{{{digits},{rest}}}"))
}
