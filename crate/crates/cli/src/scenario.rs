use std::path::{Path, PathBuf};

use cosmocap_core::baseline::FleetSpec;
use cosmocap_core::cosmo::{Scenario, Species, SpeciesTable};
use cosmocap_core::{ConstantsProfile, Dimension, LogInterval, Quantity};
use serde::{Deserialize, Serialize};

use crate::CliError;

/// Horizon growth during inflation, as log10 center ± halfwidth.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GrowthLog10 {
    pub center: f64,
    pub halfwidth: f64,
}

/// The scenario file. Every key is optional; missing keys take the standard
/// present-day values (ρ = 10⁻²⁷ kg/m³, t = 10¹⁰ years, photons only).
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields, default)]
pub struct ScenarioFile {
    pub rho_kg_m3: f64,
    pub age_years: f64,
    pub hubble_per_s: Option<f64>,
    pub include_gravity: bool,
    /// "paper", "codata", or a path to a profile file.
    pub constants_profile: String,
    pub species: Vec<Species>,
    pub matter_radiation_transition_years: f64,
    pub inflation_growth_log10: Option<GrowthLog10>,
    pub fleet: Option<FleetSpec>,
}

impl Default for ScenarioFile {
    fn default() -> Self {
        ScenarioFile {
            rho_kg_m3: 1e-27,
            age_years: 1e10,
            hubble_per_s: None,
            include_gravity: false,
            constants_profile: "paper".to_string(),
            species: vec![Species::photon()],
            matter_radiation_transition_years: 7e5,
            inflation_growth_log10: Some(GrowthLog10 {
                center: 10.0,
                halfwidth: 6.0,
            }),
            fleet: Some(FleetSpec::default()),
        }
    }
}

impl ScenarioFile {
    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse(format!("scenario: {e}")))
    }

    pub fn read(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path)
            .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
        ScenarioFile::parse(&text).map_err(|e| match e {
            CliError::Parse(msg) => CliError::Parse(format!("{}: {msg}", path.display())),
            other => other,
        })
    }

    /// Builds the engine scenario. Profile paths are relative to `base_dir`
    /// when one is given.
    pub fn to_scenario(&self, base_dir: Option<&Path>) -> Result<Scenario, CliError> {
        let profile = resolve_profile(&self.constants_profile, base_dir)?;
        let inflation_growth = match self.inflation_growth_log10 {
            Some(g) => LogInterval::new(g.center, g.halfwidth, Dimension::DIMENSIONLESS)?,
            None => Scenario::paper_default().inflation_growth,
        };
        Ok(Scenario {
            rho: Quantity::new(self.rho_kg_m3, Dimension::MASS_DENSITY)?,
            age: profile.years(self.age_years)?,
            hubble: self
                .hubble_per_s
                .map(|h| Quantity::new(h, Dimension::RATE))
                .transpose()?,
            species: SpeciesTable::new(self.species.clone()),
            include_gravity: self.include_gravity,
            matter_radiation_transition: profile.years(self.matter_radiation_transition_years)?,
            inflation_growth,
            fleet: self.fleet.unwrap_or_default(),
            profile,
        })
    }
}

/// A built-in profile name, or a path to a profile file.
pub fn resolve_profile(
    name_or_path: &str,
    base_dir: Option<&Path>,
) -> Result<ConstantsProfile, CliError> {
    if let Some(p) = ConstantsProfile::builtin(name_or_path) {
        return Ok(p.clone());
    }
    let path = match base_dir {
        Some(dir) if Path::new(name_or_path).is_relative() => dir.join(name_or_path),
        _ => PathBuf::from(name_or_path),
    };
    if !path.is_file() {
        return Err(CliError::Parse(format!(
            "unknown constants profile {name_or_path:?} (expected \"paper\", \"codata\" or a profile file)"
        )));
    }
    ConstantsProfile::load(&path).map_err(|e| CliError::Parse(e.to_string()))
}
