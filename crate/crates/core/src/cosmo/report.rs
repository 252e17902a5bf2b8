use serde::{Deserialize, Serialize};

use super::{
    apply_gravity, bits_holographic, bits_matter, bits_radiation, blackbody_temperature,
    critical_density, d_factor, entropy_in_volume, horizon_volume, inflation_bounds,
    inflation_total_ops, ops_critical, ops_matter, DensityMode, InflationBounds, RadiationBits,
    SpeciesTable,
};
use crate::baseline::{fleet_bits, fleet_ops, historical_fleet_ops, FleetSpec};
use crate::bounds::{SystemLimits, SystemSpec};
use crate::check::positive;
use crate::constants::ConstantsProfile;
use crate::dimq::{Dimension, LogInterval, Quantity};
use crate::error::Result;
use crate::largenum::{identities, LargeNumberReport};

/// Cosmological inputs for a full capacity report.
#[derive(Debug, Clone, PartialEq)]
pub struct Scenario {
    pub rho: Quantity,
    pub age: Quantity,
    /// Defaults to 1/age.
    pub hubble: Option<Quantity>,
    pub species: SpeciesTable,
    pub include_gravity: bool,
    pub profile: ConstantsProfile,
    /// Epoch label only; no formula consumes it.
    pub matter_radiation_transition: Quantity,
    pub inflation_growth: LogInterval,
    pub fleet: FleetSpec,
}

impl Scenario {
    /// ρ = 10⁻²⁷ kg/m³, t = 10¹⁰ years, photons only, no gravity.
    pub fn paper_default() -> Self {
        Scenario::with_profile(ConstantsProfile::paper().clone())
    }

    pub fn with_profile(profile: ConstantsProfile) -> Self {
        Scenario {
            rho: Quantity::new(1e-27, Dimension::MASS_DENSITY).expect("finite"),
            age: profile.years(1e10).expect("finite"),
            hubble: None,
            species: SpeciesTable::photons_only(),
            include_gravity: false,
            matter_radiation_transition: profile.years(7e5).expect("finite"),
            inflation_growth: LogInterval::new(10.0, 6.0, Dimension::DIMENSIONLESS).expect("valid"),
            fleet: FleetSpec::default(),
            profile,
        }
    }

    pub fn hubble_rate(&self) -> Result<Quantity> {
        match self.hubble {
            Some(h) => Ok(h),
            None => self.age.recip(),
        }
    }

    pub fn validate(&self) -> Result<()> {
        positive(self.rho, Dimension::MASS_DENSITY, "density")?;
        positive(self.age, Dimension::TIME, "age")?;
        positive(self.hubble_rate()?, Dimension::RATE, "Hubble rate")?;
        positive(
            self.matter_radiation_transition,
            Dimension::TIME,
            "transition time",
        )?;
        self.species.total_n_eff()?;
        self.fleet.validate()?;
        Ok(())
    }
}

impl Default for Scenario {
    fn default() -> Self {
        Scenario::paper_default()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MatterEpoch {
    pub hubble_rate: Quantity,
    pub critical_density_exact: Quantity,
    pub critical_density_approx: Quantity,
    pub horizon_volume: Quantity,
    /// ρc² × horizon volume.
    pub energy: Quantity,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiationEpoch {
    pub transition_time: Quantity,
    pub d_factor: Quantity,
    /// Bits of the thermalized horizon contents, via 4E/(3 ln2 k_B T).
    pub bits: RadiationBits,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InflationReport {
    pub growth: LogInterval,
    pub total_ops: LogInterval,
    /// Bits within the horizon match the operation count.
    pub total_bits: LogInterval,
    /// Horizon limits evaluated at the scenario's Hubble rate.
    pub at_scenario_hubble: InflationBounds,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct FleetReport {
    pub spec: FleetSpec,
    pub ops: Quantity,
    pub historical_ops: Quantity,
    pub bits: Quantity,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CapacityReport {
    pub profile: String,
    pub ops_matter: Quantity,
    pub ops_critical: Quantity,
    pub ops_with_gravity: Quantity,
    pub bits_matter: Quantity,
    pub bits_holographic: Quantity,
    #[serde(rename = "blackbody_T")]
    pub blackbody_temperature: Quantity,
    pub entropy_total: Quantity,
    pub matter: MatterEpoch,
    pub radiation: RadiationEpoch,
    pub system_limits: SystemLimits,
    pub large_numbers: LargeNumberReport,
    pub inflation: InflationReport,
    pub fleet: FleetReport,
}

pub fn full_report(scenario: &Scenario) -> Result<CapacityReport> {
    scenario.validate()?;
    let p = &scenario.profile;
    let (rho, age) = (scenario.rho, scenario.age);
    let hubble = scenario.hubble_rate()?;

    let ops = ops_matter(p, rho, age)?;
    let volume = horizon_volume(p, age)?;
    let energy = rho * p.c().powi(2)? * volume;
    let temperature = blackbody_temperature(p, rho, &scenario.species)?;
    let entropy = entropy_in_volume(p, rho, volume, &scenario.species)?;
    let total_ops = inflation_total_ops(&scenario.inflation_growth)?;

    let system = SystemSpec {
        energy,
        entropy,
        radius: p.c() * age,
        area: None,
    };

    Ok(CapacityReport {
        profile: p.name().to_string(),
        ops_matter: ops,
        ops_critical: ops_critical(p, age)?,
        ops_with_gravity: apply_gravity(ops, scenario.include_gravity)?,
        bits_matter: bits_matter(p, rho, age, &scenario.species)?,
        bits_holographic: bits_holographic(p, age)?,
        blackbody_temperature: temperature,
        entropy_total: entropy,
        matter: MatterEpoch {
            hubble_rate: hubble,
            critical_density_exact: critical_density(p, hubble, DensityMode::Exact)?,
            critical_density_approx: critical_density(p, hubble, DensityMode::Approx)?,
            horizon_volume: volume,
            energy,
        },
        radiation: RadiationEpoch {
            transition_time: scenario.matter_radiation_transition,
            d_factor: d_factor(&scenario.species)?,
            bits: bits_radiation(p, energy, temperature)?,
        },
        system_limits: system.limits(p)?,
        large_numbers: identities(p, rho, age)?,
        inflation: InflationReport {
            growth: scenario.inflation_growth,
            total_ops,
            total_bits: total_ops,
            at_scenario_hubble: inflation_bounds(p, hubble)?,
        },
        fleet: FleetReport {
            spec: scenario.fleet,
            ops: fleet_ops(&scenario.fleet)?,
            historical_ops: historical_fleet_ops(&scenario.fleet)?,
            bits: fleet_bits(&scenario.fleet)?,
        },
    })
}
