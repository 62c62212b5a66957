//! Which fields make up a torus of each countable family, and how they are
//! counted.

use disc_calculus::{conductor_expression, role_key, ConductorExpression};
use lattice_groups::normalize_label;

#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum FieldKind {
    Quadratic,
    CyclicCubic,
    S3Cubic,
    CyclicQuartic,
    /// Sextic field with dihedral closure of order 12, from an import.
    ImportedSextic,
}

/// A field attached to the torus, by its conductor role.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct Constituent {
    pub role: &'static str,
    pub kind: FieldKind,
    /// How the field is obtained when it is not chosen freely, e.g. "subfield of 4'".
    pub from: Option<&'static str>,
}

/// Which relabelings of the three quadratic subfields of a biquadratic
/// field give isomorphic tori.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum RoleSymmetry {
    /// Every ordering is a different torus: 6 per field.
    Ordered,
    /// `L2` and `L3` play the same part: 3 per field.
    SwapSecondThird,
    /// One torus per field.
    Full,
}

impl RoleSymmetry {
    pub fn per_field(self) -> u64 {
        match self {
            RoleSymmetry::Ordered => 6,
            RoleSymmetry::SwapSecondThird => 3,
            RoleSymmetry::Full => 1,
        }
    }

    /// Canonical representative of a role assignment `(L1, L2, L3)`.
    pub fn canonical<T: Ord + Copy>(self, roles: [T; 3]) -> [T; 3] {
        let [a, b, c] = roles;
        match self {
            RoleSymmetry::Ordered => roles,
            RoleSymmetry::SwapSecondThird => [a, b.min(c), b.max(c)],
            RoleSymmetry::Full => {
                let mut s = roles;
                s.sort();
                s
            }
        }
    }
}

/// How `count_family` evaluates a family.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum Shape {
    /// Quadratic fields with `|D|^k <= X`.
    QuadraticPower(u32),
    CyclicCubic,
    /// Cyclic quartics by `D4/D2` (relative) or `D4`.
    CyclicQuartic { absolute: bool },
    /// Distinct quadratic pairs with `D_A D_B^2 <= X`, ordered.
    QuadraticPairSquare,
    /// Distinct quadratic pairs with `D_A D_B <= X`.
    QuadraticPairProduct { ordered: bool },
    /// Biquadratic fields with `D1 D2 D3 <= X`.
    Biquadratic(RoleSymmetry),
    /// Cyclic sextics by `lcm(D2^2, D3)`.
    SexticLcmSquare,
    /// Cyclic sextics by `D2 D3`.
    SexticProduct,
    /// Cyclic sextics by `lcm(D2^3, D2 D3)`.
    SexticLcmCube,
    /// Non-Galois cubics by `D3`, or `D2 D3` with the resolvent.
    S3Cubic { with_resolvent: bool },
    /// `(L2, L4')` with `L2 != L2'`, by `D2 D4'/D2'`.
    QuadraticQuartic,
    /// Imported dihedral sextics by `D6 / (D3 D2)`.
    ImportedSextic,
}

impl Shape {
    /// Tori per Galois splitting field.
    pub fn per_galois_field(self) -> u64 {
        match self {
            Shape::QuadraticPairSquare | Shape::QuadraticPairProduct { ordered: true } => 6,
            Shape::QuadraticPairProduct { ordered: false } => 3,
            Shape::Biquadratic(sym) => sym.per_field(),
            Shape::QuadraticQuartic => 4,
            Shape::ImportedSextic => 2,
            _ => 1,
        }
    }
}

/// The counting bijection of one family.
#[derive(Debug, Clone, serde::Serialize)]
pub struct TorusFamilySpec {
    pub label: String,
    pub constituents: Vec<Constituent>,
    pub distinctness: Vec<&'static str>,
    #[serde(skip)]
    pub conductor: &'static ConductorExpression,
    pub shape: Shape,
}

impl TorusFamilySpec {
    /// Roles bound by the constituents, in conductor-role spelling.
    pub fn bound_roles(&self) -> Vec<String> {
        self.constituents.iter().map(|c| role_key(c.role)).collect()
    }

    /// True when some form of the conductor uses only constituent roles.
    pub fn conductor_is_bound(&self) -> bool {
        let bound = self.bound_roles();
        self.conductor.forms.iter().any(|f| f.roles().iter().all(|r| bound.iter().any(|b| b == r)))
    }
}

const fn free(role: &'static str, kind: FieldKind) -> Constituent {
    Constituent { role, kind, from: None }
}

const fn sub(role: &'static str, kind: FieldKind, from: &'static str) -> Constituent {
    Constituent { role, kind, from: Some(from) }
}

use FieldKind::*;

fn spec_parts(key: &str) -> Option<(Vec<Constituent>, Vec<&'static str>, Shape)> {
    let quad_l = || vec![free("L", Quadratic)];
    let v4 = || vec![free("1", Quadratic), free("2", Quadratic), sub("3", Quadratic, "third subfield of L1 L2")];
    let c4 = || vec![free("4", CyclicQuartic), sub("2", Quadratic, "subfield of 4")];
    let c6 = || vec![free("2", Quadratic), free("3", CyclicCubic)];
    let s3 = || vec![free("3", S3Cubic), sub("2", Quadratic, "resolvent of 3")];
    let distinct_v4 = vec!["L1, L2, L3 pairwise distinct"];
    let parts = match key {
        "2,a" | "2,c" => (quad_l(), vec![], Shape::QuadraticPower(2)),
        "2,b" | "2,d" => (quad_l(), vec![], Shape::QuadraticPower(1)),
        "2,e" => (quad_l(), vec![], Shape::QuadraticPower(3)),
        "3,a" | "3,b" => (vec![free("L", CyclicCubic)], vec![], Shape::CyclicCubic),
        "4,a" | "4,c" => (c4(), vec![], Shape::CyclicQuartic { absolute: false }),
        "4,b" | "4,d" => (c4(), vec![], Shape::CyclicQuartic { absolute: true }),
        "4,e" | "4,k" => (v4(), distinct_v4, Shape::QuadraticPairSquare),
        "4,g" | "4,i" | "4,m" | "4,o" => (v4(), distinct_v4, Shape::QuadraticPairProduct { ordered: false }),
        "4,j" => (v4(), distinct_v4, Shape::QuadraticPairProduct { ordered: true }),
        "4,f" | "4,l" | "4,n" => (v4(), distinct_v4, Shape::Biquadratic(RoleSymmetry::Full)),
        "4,h" => (v4(), distinct_v4, Shape::Biquadratic(RoleSymmetry::SwapSecondThird)),
        "6,a" => (c6(), vec![], Shape::SexticLcmSquare),
        "6,b" => (c6(), vec![], Shape::SexticProduct),
        "6,c" | "6,d" => (c6(), vec![], Shape::SexticLcmCube),
        "6,e" | "6,g" | "6,i" => (s3(), vec![], Shape::S3Cubic { with_resolvent: true }),
        "6,f" | "6,h" | "6,j" => (s3(), vec![], Shape::S3Cubic { with_resolvent: false }),
        "8,a" | "8,b" => (
            vec![free("2", Quadratic), free("4'", CyclicQuartic), sub("2'", Quadratic, "subfield of 4'")],
            vec!["L2 != L2'"],
            Shape::QuadraticQuartic,
        ),
        "12,c" => (
            vec![free("1", ImportedSextic), sub("4", S3Cubic, "cubic subfield of 1"), sub("6", Quadratic, "quadratic subfield of 1")],
            vec![],
            Shape::ImportedSextic,
        ),
        _ => return None,
    };
    Some(parts)
}

/// The counting bijection of `label`, when the family is countable here.
pub fn family_spec(label: &str) -> Option<TorusFamilySpec> {
    let label = normalize_label(label)?;
    let key = label.strip_prefix("H_{")?.strip_suffix('}')?;
    let (constituents, distinctness, shape) = spec_parts(key)?;
    Some(TorusFamilySpec { conductor: conductor_expression(&label)?, label, constituents, distinctness, shape })
}

/// Labels with a counting bijection, in catalog order.
pub fn implemented_labels() -> Vec<String> {
    lattice_groups::catalog().iter().map(|e| e.label.clone()).filter(|l| family_spec(l).is_some()).collect()
}
