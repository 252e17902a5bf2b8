//! Physical constants, grouped into named profiles.
//!
//! Two profiles are compiled in. `paper` holds the historical printed values,
//! including `c = 2.98e8 m/s`; its electron and proton masses and `e²` are
//! chosen so that `ħc/e² = 137` and `m_p/m_e = 1836` exactly. `codata` holds
//! modern reference values. Additional profiles can be loaded from JSON and
//! are laid over a built-in one.
//!
//! Planck-scale quantities are always derived from ħ, G and c, never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;
use std::sync::LazyLock;

use serde::{Deserialize, Serialize};

use crate::dimq::{Dimension, Quantity};
use crate::error::{Error, Result};

const PAPER_JSON: &str = include_str!("../fixtures/paper.json");
const CODATA_JSON: &str = include_str!("../fixtures/codata.json");

static PAPER: LazyLock<ConstantsProfile> =
    LazyLock::new(|| ConstantsProfile::parse_complete(PAPER_JSON).expect("built-in paper profile"));
static CODATA: LazyLock<ConstantsProfile> = LazyLock::new(|| {
    ConstantsProfile::parse_complete(CODATA_JSON).expect("built-in codata profile")
});

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum ConstantId {
    Hbar,
    C,
    G,
    KB,
    ElectronMass,
    ProtonMass,
    /// Gaussian `e²` (SI `e²/4πε₀`), energy × length.
    E2,
    YearSeconds,
    GevJoules,
}

impl ConstantId {
    pub const ALL: [ConstantId; 9] = [
        ConstantId::Hbar,
        ConstantId::C,
        ConstantId::G,
        ConstantId::KB,
        ConstantId::ElectronMass,
        ConstantId::ProtonMass,
        ConstantId::E2,
        ConstantId::YearSeconds,
        ConstantId::GevJoules,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ConstantId::Hbar => "hbar",
            ConstantId::C => "c",
            ConstantId::G => "G",
            ConstantId::KB => "k_B",
            ConstantId::ElectronMass => "m_e",
            ConstantId::ProtonMass => "m_p",
            ConstantId::E2 => "e2",
            ConstantId::YearSeconds => "year_seconds",
            ConstantId::GevJoules => "GeV_joules",
        }
    }

    pub fn from_name(name: &str) -> Option<ConstantId> {
        ConstantId::ALL.into_iter().find(|id| id.name() == name)
    }

    /// The dimension every profile must give this constant.
    pub fn dims(self) -> Dimension {
        match self {
            ConstantId::Hbar => Dimension::ACTION,
            ConstantId::C => Dimension::VELOCITY,
            ConstantId::G => Dimension::GRAVITATIONAL,
            ConstantId::KB => Dimension::ENTROPY,
            ConstantId::ElectronMass | ConstantId::ProtonMass => Dimension::MASS,
            ConstantId::E2 => Dimension::ENERGY_LENGTH,
            ConstantId::YearSeconds => Dimension::TIME,
            ConstantId::GevJoules => Dimension::ENERGY,
        }
    }
}

impl fmt::Display for ConstantId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// On-disk form of a profile.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProfileFile {
    pub name: String,
    pub constants: BTreeMap<String, ConstantEntry>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantEntry {
    pub value: f64,
    pub dims: Dimension,
}

#[derive(Debug, Clone, PartialEq)]
pub struct ConstantsProfile {
    name: String,
    values: BTreeMap<ConstantId, Quantity>,
}

impl ConstantsProfile {
    pub fn paper() -> &'static ConstantsProfile {
        &PAPER
    }

    pub fn codata() -> &'static ConstantsProfile {
        &CODATA
    }

    pub fn builtin(name: &str) -> Option<&'static ConstantsProfile> {
        match name {
            "paper" => Some(ConstantsProfile::paper()),
            "codata" => Some(ConstantsProfile::codata()),
            _ => None,
        }
    }

    /// A built-in profile by name, or else a JSON profile file at that path.
    pub fn resolve(name_or_path: &str) -> Result<ConstantsProfile> {
        match ConstantsProfile::builtin(name_or_path) {
            Some(p) => Ok(p.clone()),
            None => ConstantsProfile::load(Path::new(name_or_path)),
        }
    }

    pub fn load(path: &Path) -> Result<ConstantsProfile> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| Error::Profile(format!("{}: {e}", path.display())))?;
        ConstantsProfile::from_json(&text)
    }

    /// Parses a profile file and lays it over the built-in profile with the
    /// same name, or over `paper` when the name is new. Entries in the file
    /// win.
    pub fn from_json(text: &str) -> Result<ConstantsProfile> {
        let file: ProfileFile =
            serde_json::from_str(text).map_err(|e| Error::Profile(e.to_string()))?;
        let base = ConstantsProfile::builtin(&file.name).unwrap_or(ConstantsProfile::paper());
        base.overlay(&file)
    }

    fn parse_complete(text: &str) -> Result<ConstantsProfile> {
        let file: ProfileFile =
            serde_json::from_str(text).map_err(|e| Error::Profile(e.to_string()))?;
        let empty = ConstantsProfile {
            name: file.name.clone(),
            values: BTreeMap::new(),
        };
        let profile = empty.overlay(&file)?;
        if let Some(missing) = ConstantId::ALL
            .iter()
            .find(|id| !profile.values.contains_key(id))
        {
            return Err(Error::Profile(format!("missing constant {missing}")));
        }
        Ok(profile)
    }

    /// Returns a copy with every entry of `file` replacing the current value.
    pub fn overlay(&self, file: &ProfileFile) -> Result<ConstantsProfile> {
        let mut values = self.values.clone();
        for (key, entry) in &file.constants {
            let id =
                ConstantId::from_name(key).ok_or_else(|| Error::UnknownConstant(key.clone()))?;
            if !(entry.value.is_finite() && entry.value > 0.0) {
                return Err(Error::Profile(format!(
                    "{key} must be strictly positive and finite, got {}",
                    entry.value
                )));
            }
            if entry.dims != id.dims() {
                return Err(Error::Profile(format!(
                    "{key} has dimension {}, expected {}",
                    entry.dims,
                    id.dims()
                )));
            }
            values.insert(id, Quantity::new(entry.value, entry.dims)?);
        }
        Ok(ConstantsProfile {
            name: file.name.clone(),
            values,
        })
    }

    pub fn to_file(&self) -> ProfileFile {
        ProfileFile {
            name: self.name.clone(),
            constants: self
                .values
                .iter()
                .map(|(id, q)| {
                    (
                        id.name().to_string(),
                        ConstantEntry {
                            value: q.value(),
                            dims: q.dims(),
                        },
                    )
                })
                .collect(),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn get(&self, id: ConstantId) -> Quantity {
        self.values[&id]
    }

    pub fn get_by_name(&self, name: &str) -> Result<Quantity> {
        ConstantId::from_name(name)
            .map(|id| self.get(id))
            .ok_or_else(|| Error::UnknownConstant(name.to_string()))
    }

    pub fn iter(&self) -> impl Iterator<Item = (ConstantId, Quantity)> + '_ {
        self.values.iter().map(|(id, q)| (*id, *q))
    }

    pub fn hbar(&self) -> Quantity {
        self.get(ConstantId::Hbar)
    }

    pub fn c(&self) -> Quantity {
        self.get(ConstantId::C)
    }

    pub fn g(&self) -> Quantity {
        self.get(ConstantId::G)
    }

    pub fn k_b(&self) -> Quantity {
        self.get(ConstantId::KB)
    }

    pub fn m_e(&self) -> Quantity {
        self.get(ConstantId::ElectronMass)
    }

    pub fn m_p(&self) -> Quantity {
        self.get(ConstantId::ProtonMass)
    }

    pub fn e2(&self) -> Quantity {
        self.get(ConstantId::E2)
    }

    pub fn year(&self) -> Quantity {
        self.get(ConstantId::YearSeconds)
    }

    pub fn gev(&self) -> Quantity {
        self.get(ConstantId::GevJoules)
    }

    /// √(Għ/c⁵)
    pub fn planck_time(&self) -> Quantity {
        (self.g() * self.hbar())
            .try_div(self.c().powi(5).expect("c > 0"))
            .and_then(Quantity::sqrt)
            .expect("constants are positive")
    }

    /// √(ħG/c³)
    pub fn planck_length(&self) -> Quantity {
        (self.hbar() * self.g())
            .try_div(self.c().powi(3).expect("c > 0"))
            .and_then(Quantity::sqrt)
            .expect("constants are positive")
    }

    /// ħc/e², dimensionless (≈137).
    pub fn fine_structure_inverse(&self) -> Quantity {
        (self.hbar() * self.c()).try_div(self.e2()).expect("e2 > 0")
    }

    /// m_p/m_e (≈1836).
    pub fn mass_ratio(&self) -> Quantity {
        self.m_p().try_div(self.m_e()).expect("m_e > 0")
    }

    /// A period of `years` years as a time quantity.
    pub fn years(&self, years: f64) -> Result<Quantity> {
        Ok(self.year() * Quantity::dimensionless(years)?)
    }

    /// An energy of `gev` GeV in joules.
    pub fn gev_energy(&self, gev: f64) -> Result<Quantity> {
        Ok(self.gev() * Quantity::dimensionless(gev)?)
    }
}

impl Default for ConstantsProfile {
    fn default() -> Self {
        ConstantsProfile::paper().clone()
    }
}
