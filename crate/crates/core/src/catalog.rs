//! Names of the compact quaternionic Kähler symmetric spaces and their
//! published dimension data.

use std::fmt;

use serde::Serialize;

use crate::error::{LieError, Result};
use crate::root_system::{Family, RootSystemType};

/// Largest classical rank accepted unless the caller raises it.
pub const DEFAULT_MAX_RANK: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum SpaceKind {
    /// `G₂(ℂⁿ) = SU(n)/S(U(2)×U(n−2))`
    ComplexGrassmannian(usize),
    /// `G°₄(ℝⁿ) = Spin(n)/Spin(4)·Spin(n−4)`
    RealGrassmannian(usize),
    /// `ℍPⁿ⁻¹ = Sp(n)/Sp(1)×Sp(n−1)`
    QuaternionicProjective(usize),
    G,
    FI,
    EII,
    EVI,
    EIX,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SpaceSpec {
    pub kind: SpaceKind,
    pub root_type: RootSystemType,
}

impl SpaceSpec {
    pub fn from_kind(kind: SpaceKind, max_rank: usize) -> Result<Self> {
        let bound = |b: &str| LieError::CatalogBound {
            name: SpaceSpec::display_name(kind),
            bound: b.into(),
        };
        let root_type = match kind {
            SpaceKind::ComplexGrassmannian(n) => {
                if n < 4 {
                    return Err(bound("n ≥ 4 for SU(n)"));
                }
                RootSystemType::a(n - 1)?
            }
            SpaceKind::RealGrassmannian(n) => {
                if n < 7 {
                    return Err(bound("n ≥ 7 for Spin(n)"));
                }
                if n % 2 == 1 {
                    RootSystemType::b((n - 1) / 2)?
                } else {
                    RootSystemType::d(n / 2)?
                }
            }
            SpaceKind::QuaternionicProjective(n) => {
                if n < 3 {
                    return Err(bound("n ≥ 3 for Sp(n)"));
                }
                RootSystemType::c(n)?
            }
            SpaceKind::G => RootSystemType::g2(),
            SpaceKind::FI => RootSystemType::f4(),
            SpaceKind::EII => RootSystemType::e(6)?,
            SpaceKind::EVI => RootSystemType::e(7)?,
            SpaceKind::EIX => RootSystemType::e(8)?,
        };
        let classical = matches!(
            root_type.family(),
            Family::A | Family::B | Family::C | Family::D
        );
        if classical && root_type.rank() > max_rank {
            return Err(bound(&format!(
                "classical rank ≤ {max_rank} (raise it with --max-rank)"
            )));
        }
        Ok(SpaceSpec { kind, root_type })
    }

    /// Parses a space name, a group name, or a root system type.
    pub fn parse(s: &str, max_rank: usize) -> Result<Self> {
        let t = s.trim();
        let compact: String = t.chars().filter(|c| !c.is_whitespace()).collect();
        let unknown = || LieError::UnknownSpace(t.to_string());
        let arg = |prefix: &str, suffix: &str| -> Option<usize> {
            compact
                .strip_prefix(prefix)?
                .strip_suffix(suffix)?
                .parse()
                .ok()
        };
        let kind = if let Some(n) = arg("SU(", ")").or_else(|| arg("G2(C^", ")")).or_else(|| arg("G_2(C^", ")")) {
            SpaceKind::ComplexGrassmannian(n)
        } else if let Some(n) = arg("Spin(", ")")
            .or_else(|| arg("G4(R^", ")"))
            .or_else(|| arg("G_4(R^", ")"))
            .or_else(|| arg("G^o_4(R^", ")"))
        {
            SpaceKind::RealGrassmannian(n)
        } else if let Some(n) = arg("Sp(", ")").or_else(|| arg("G1(H^", ")")).or_else(|| arg("G_1(H^", ")")) {
            SpaceKind::QuaternionicProjective(n)
        } else {
            match compact.as_str() {
                "G" => SpaceKind::G,
                "FI" => SpaceKind::FI,
                "EII" => SpaceKind::EII,
                "EVI" => SpaceKind::EVI,
                "EIX" => SpaceKind::EIX,
                _ => {
                    let ty: RootSystemType = compact.parse().map_err(|_| unknown())?;
                    Self::kind_of_type(ty)
                }
            }
        };
        Self::from_kind(kind, max_rank)
    }

    fn kind_of_type(ty: RootSystemType) -> SpaceKind {
        let r = ty.rank();
        match ty.family() {
            Family::A => SpaceKind::ComplexGrassmannian(r + 1),
            Family::B => SpaceKind::RealGrassmannian(2 * r + 1),
            Family::D => SpaceKind::RealGrassmannian(2 * r),
            Family::C => SpaceKind::QuaternionicProjective(r),
            Family::G2 => SpaceKind::G,
            Family::F4 => SpaceKind::FI,
            Family::E6 => SpaceKind::EII,
            Family::E7 => SpaceKind::EVI,
            Family::E8 => SpaceKind::EIX,
        }
    }

    fn display_name(kind: SpaceKind) -> String {
        match kind {
            SpaceKind::ComplexGrassmannian(n) => format!("G2(C^{n})"),
            SpaceKind::RealGrassmannian(n) => format!("G4(R^{n})"),
            SpaceKind::QuaternionicProjective(n) => format!("G1(H^{n})"),
            SpaceKind::G => "G".into(),
            SpaceKind::FI => "FI".into(),
            SpaceKind::EII => "EII".into(),
            SpaceKind::EVI => "EVI".into(),
            SpaceKind::EIX => "EIX".into(),
        }
    }

    pub fn name(&self) -> String {
        Self::display_name(self.kind)
    }

    pub fn group(&self) -> String {
        match self.kind {
            SpaceKind::ComplexGrassmannian(n) => format!("SU({n})"),
            SpaceKind::RealGrassmannian(n) => format!("Spin({n})"),
            SpaceKind::QuaternionicProjective(n) => format!("Sp({n})"),
            SpaceKind::G => "G2".into(),
            SpaceKind::FI => "F4".into(),
            SpaceKind::EII => "E6".into(),
            SpaceKind::EVI => "E7".into(),
            SpaceKind::EIX => "E8".into(),
        }
    }

    /// Published `dim M`.
    pub fn expected_dim_m(&self) -> usize {
        match self.kind {
            SpaceKind::ComplexGrassmannian(n) => 4 * (n - 2),
            SpaceKind::RealGrassmannian(n) => 4 * (n - 4),
            SpaceKind::QuaternionicProjective(n) => 4 * (n - 1),
            SpaceKind::G => 8,
            SpaceKind::FI => 28,
            SpaceKind::EII => 40,
            SpaceKind::EVI => 64,
            SpaceKind::EIX => 112,
        }
    }

    /// `dim H(p)` of the published `H(p)`; none for `ℍPⁿ⁻¹`.
    pub fn expected_dim_hp(&self) -> Option<usize> {
        Some(match self.kind {
            // ℂPⁿ⁻³
            SpaceKind::ComplexGrassmannian(n) => 2 * (n - 3),
            // S² × S² for n = 7, S² × G°₂(ℝⁿ⁻⁴) otherwise
            SpaceKind::RealGrassmannian(n) => 2 * (n - 5),
            SpaceKind::QuaternionicProjective(_) => return None,
            // S²
            SpaceKind::G => 2,
            // Sp(3)/U(3)
            SpaceKind::FI => 12,
            // G₃(ℂ⁶)
            SpaceKind::EII => 18,
            // SO(12)/U(6)
            SpaceKind::EVI => 30,
            // E₇/(U(1)·E₆)
            SpaceKind::EIX => 54,
        })
    }

    /// Name of the published `H(p)`.
    pub fn hp_label(&self) -> String {
        match self.kind {
            SpaceKind::ComplexGrassmannian(n) => format!("CP^{}", n - 3),
            SpaceKind::RealGrassmannian(7) => "S^2 x S^2".into(),
            SpaceKind::RealGrassmannian(n) => format!("S^2 x G2(R^{})", n - 4),
            SpaceKind::QuaternionicProjective(_) => "-".into(),
            SpaceKind::G => "S^2".into(),
            SpaceKind::FI => "Sp(3)/U(3)".into(),
            SpaceKind::EII => "G3(C^6)".into(),
            SpaceKind::EVI => "SO(12)/U(6)".into(),
            SpaceKind::EIX => "E7/(U(1).E6)".into(),
        }
    }
}

impl fmt::Display for SpaceSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// A₃…A₆, B₃…B₅, D₄, D₅, G₂, F₄, E₆, E₇, E₈.
pub fn default_catalog() -> Vec<SpaceSpec> {
    let kinds = [
        SpaceKind::ComplexGrassmannian(4),
        SpaceKind::ComplexGrassmannian(5),
        SpaceKind::ComplexGrassmannian(6),
        SpaceKind::ComplexGrassmannian(7),
        SpaceKind::RealGrassmannian(7),
        SpaceKind::RealGrassmannian(9),
        SpaceKind::RealGrassmannian(11),
        SpaceKind::RealGrassmannian(8),
        SpaceKind::RealGrassmannian(10),
        SpaceKind::G,
        SpaceKind::FI,
        SpaceKind::EII,
        SpaceKind::EVI,
        SpaceKind::EIX,
    ];
    kinds
        .into_iter()
        .map(|k| SpaceSpec::from_kind(k, DEFAULT_MAX_RANK).expect("default catalog is in bounds"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn parse(s: &str) -> Result<SpaceSpec> {
        SpaceSpec::parse(s, DEFAULT_MAX_RANK)
    }

    #[test]
    fn names_resolve_to_types() {
        assert_eq!(parse("SU(5)").unwrap().root_type.to_string(), "A4");
        assert_eq!(parse("G2(C^5)").unwrap().root_type.to_string(), "A4");
        assert_eq!(parse("Spin(7)").unwrap().root_type.to_string(), "B3");
        assert_eq!(parse("Spin(8)").unwrap().root_type.to_string(), "D4");
        assert_eq!(parse("EIX").unwrap().root_type.to_string(), "E8");
        assert_eq!(parse("G").unwrap().root_type.to_string(), "G2");
        assert_eq!(parse("G2").unwrap().kind, SpaceKind::G);
        assert_eq!(parse("D5").unwrap().kind, SpaceKind::RealGrassmannian(10));
        assert_eq!(parse("Sp(4)").unwrap().root_type.to_string(), "C4");
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(matches!(parse("SU(3)"), Err(LieError::CatalogBound { .. })));
        assert!(matches!(parse("Spin(6)"), Err(LieError::CatalogBound { .. })));
        assert!(matches!(parse("A2"), Err(LieError::CatalogBound { .. })));
        assert!(matches!(parse("SU(12)"), Err(LieError::CatalogBound { .. })));
        assert!(SpaceSpec::parse("SU(12)", 11).is_ok());
        assert!(matches!(parse("Foo"), Err(LieError::UnknownSpace(_))));
    }

    #[test]
    fn published_values() {
        assert_eq!(parse("SU(4)").unwrap().expected_dim_hp(), Some(2));
        assert_eq!(parse("Spin(7)").unwrap().expected_dim_m(), 12);
        assert_eq!(parse("EVI").unwrap().expected_dim_hp(), Some(30));
        assert_eq!(default_catalog().len(), 14);
    }
}
