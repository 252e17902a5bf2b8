//! Epoch models for the universe as a computer.
//!
//! Densities are mass densities throughout (kg/m³); the corresponding energy
//! density is always ρc². The horizon volume is taken as c³t³ and geometric
//! factors of order one are dropped, as are factors relating H and 1/t.

mod report;
mod species;

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::bounds;
use crate::check::{non_negative, positive};
use crate::constants::ConstantsProfile;
use crate::dimq::{Dimension, LogInterval, Quantity, Rational};
use crate::error::{Error, Result};

pub use report::{
    full_report, CapacityReport, FleetReport, InflationReport, MatterEpoch, RadiationEpoch,
    Scenario,
};
pub use species::{Species, SpeciesTable, Statistics};

/// k_B T above which the species table can no longer be trusted, in GeV.
pub const GUT_THRESHOLD_GEV: f64 = 2e16;

fn rational_f64(r: Rational) -> f64 {
    *r.numer() as f64 / *r.denom() as f64
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum DensityMode {
    /// 3H²/8πG
    Exact,
    /// 1/Gt² with t = 1/H
    Approx,
}

pub fn critical_density(
    profile: &ConstantsProfile,
    hubble: Quantity,
    mode: DensityMode,
) -> Result<Quantity> {
    let hubble = positive(hubble, Dimension::RATE, "Hubble rate")?;
    let h2_over_g = hubble.powi(2)?.try_div(profile.g())?;
    Ok(match mode {
        DensityMode::Exact => h2_over_g * (3.0 / (8.0 * PI)),
        DensityMode::Approx => h2_over_g,
    })
}

/// c³t³, the volume inside the particle horizon.
pub fn horizon_volume(profile: &ConstantsProfile, age: Quantity) -> Result<Quantity> {
    let age = positive(age, Dimension::TIME, "age")?;
    (profile.c() * age).powi(3)
}

/// ρc⁵t⁴/ħ: operations performed by matter of constant comoving energy
/// inside the horizon.
pub fn ops_matter(profile: &ConstantsProfile, rho: Quantity, age: Quantity) -> Result<Quantity> {
    let rho = positive(rho, Dimension::MASS_DENSITY, "density")?;
    let age = positive(age, Dimension::TIME, "age")?;
    (rho * profile.c().powi(5)? * age.powi(4)?).try_div(profile.hbar())
}

/// (t/t_P)², the count at critical density.
pub fn ops_critical(profile: &ConstantsProfile, age: Quantity) -> Result<Quantity> {
    let age = positive(age, Dimension::TIME, "age")?;
    age.try_div(profile.planck_time())?.powi(2)
}

/// Counting gravitational energy alongside matter doubles the total.
pub fn apply_gravity(ops: Quantity, include: bool) -> Result<Quantity> {
    let ops = non_negative(ops, Dimension::DIMENSIONLESS, "ops")?;
    Ok(if include { ops * 2.0 } else { ops })
}

/// Temperature reached if energy density ρc² were thermalized into the given
/// massless species: k_B T = (30ħ³c⁵ρ/π²Σn)^{1/4}.
pub fn blackbody_temperature(
    profile: &ConstantsProfile,
    rho: Quantity,
    species: &SpeciesTable,
) -> Result<Quantity> {
    let rho = positive(rho, Dimension::MASS_DENSITY, "density")?;
    let n = rational_f64(species.total_n_eff()?);
    let kt4 = (profile.hbar().powi(3)? * profile.c().powi(5)? * rho) * (30.0 / (PI * PI * n));
    kt4.pow(Rational::new(1, 4))?.try_div(profile.k_b())
}

/// Maximum entropy per unit volume, 4ρc²/3T.
pub fn entropy_density(
    profile: &ConstantsProfile,
    rho: Quantity,
    temperature: Quantity,
) -> Result<Quantity> {
    let rho = positive(rho, Dimension::MASS_DENSITY, "density")?;
    let temperature = positive(temperature, Dimension::TEMPERATURE, "temperature")?;
    (rho * profile.c().powi(2)? * (4.0 / 3.0)).try_div(temperature)
}

/// Closed-form maximum entropy in volume V:
/// (4k_B/3)(π²Σn/30)^{1/4}(ρc/ħ)^{3/4}·V.
///
/// The volume enters linearly, which is what makes the result an entropy and
/// agrees with [`entropy_density`] × V.
pub fn entropy_in_volume(
    profile: &ConstantsProfile,
    rho: Quantity,
    volume: Quantity,
    species: &SpeciesTable,
) -> Result<Quantity> {
    let rho = positive(rho, Dimension::MASS_DENSITY, "density")?;
    let volume = positive(volume, Dimension::VOLUME, "volume")?;
    let n = rational_f64(species.total_n_eff()?);
    let dof = Quantity::dimensionless(PI * PI * n / 30.0)?.pow(Rational::new(1, 4))?;
    let matter = (rho * profile.c())
        .try_div(profile.hbar())?
        .pow(Rational::new(3, 4))?;
    Ok(profile.k_b() * (4.0 / 3.0) * dof * matter * volume)
}

/// Bits registered by the matter inside the horizon once thermalized.
pub fn bits_matter(
    profile: &ConstantsProfile,
    rho: Quantity,
    age: Quantity,
    species: &SpeciesTable,
) -> Result<Quantity> {
    let entropy = entropy_in_volume(profile, rho, horizon_volume(profile, age)?, species)?;
    bounds::max_bits(profile, entropy)
}

/// Horizon area c²t² over ℓ_P², i.e. (t/t_P)².
pub fn bits_holographic(profile: &ConstantsProfile, age: Quantity) -> Result<Quantity> {
    ops_critical(profile, age)
}

fn ordered_times(
    t1: Quantity,
    t0: Quantity,
    allow_zero_start: bool,
) -> Result<(Quantity, Quantity)> {
    let t1 = positive(t1, Dimension::TIME, "t1")?;
    let t0 = if allow_zero_start {
        non_negative(t0, Dimension::TIME, "t0")?
    } else {
        positive(t0, Dimension::TIME, "t0")?
    };
    if t0.try_sub(t1)?.is_positive() {
        return Err(Error::domain("t0", "no later than t1"));
    }
    Ok((t1, t0))
}

/// Radiation energy in a comoving volume at an earlier time t0, given
/// energy E1 at t1: E1·(t1/t0)^{1/2}.
pub fn radiation_energy_at(e1: Quantity, t1: Quantity, t0: Quantity) -> Result<Quantity> {
    let e1 = positive(e1, Dimension::ENERGY, "E1")?;
    let (t1, t0) = ordered_times(t1, t0, false)?;
    Ok(e1 * t1.try_div(t0)?.sqrt()?)
}

/// Operations in a radiation-dominated comoving volume between t0 and t1:
/// (4E1/πħ)(t1 − √(t1·t0)). Finite for t0 = 0.
pub fn ops_radiation(
    profile: &ConstantsProfile,
    e1: Quantity,
    t1: Quantity,
    t0: Quantity,
) -> Result<Quantity> {
    let e1 = positive(e1, Dimension::ENERGY, "E1")?;
    let (t1, t0) = ordered_times(t1, t0, true)?;
    let span = t1.try_sub((t1 * t0).sqrt()?)?;
    Ok((e1 * (4.0 / PI)).try_div(profile.hbar())? * span)
}

/// D = (π²/30) Σ n_eff.
pub fn d_factor(species: &SpeciesTable) -> Result<Quantity> {
    let n = rational_f64(species.total_n_eff()?);
    Quantity::dimensionless(PI * PI / 30.0 * n)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RadiationBits {
    pub bits: Quantity,
    /// k_B T exceeds the grand unification threshold.
    pub above_gut_threshold: bool,
}

/// Bits in thermal radiation of energy E at temperature T: 4E/(3 ln2 k_B T).
pub fn bits_radiation(
    profile: &ConstantsProfile,
    energy: Quantity,
    temperature: Quantity,
) -> Result<RadiationBits> {
    let energy = positive(energy, Dimension::ENERGY, "energy")?;
    let temperature = positive(temperature, Dimension::TEMPERATURE, "temperature")?;
    let thermal = profile.k_b() * temperature;
    let bits = (energy * (4.0 / (3.0 * LN_2))).try_div(thermal)?;
    let threshold = profile.gev_energy(GUT_THRESHOLD_GEV)?;
    Ok(RadiationBits {
        bits,
        above_gut_threshold: thermal.try_sub(threshold)?.is_positive(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct InflationBounds {
    pub ops_per_sec: Quantity,
    pub ops_per_hubble_time: Quantity,
    pub bits_horizon: Quantity,
}

/// Limits inside the de Sitter horizon c/H at Hubble rate H, for a universe
/// at critical density.
///
/// The energy inside the horizon is ρ_c c²·(c/H)³ and the rate is E/ħ, which
/// reduces to (3/8π)/(t_P² H).
pub fn inflation_bounds(profile: &ConstantsProfile, hubble: Quantity) -> Result<InflationBounds> {
    let hubble = positive(hubble, Dimension::RATE, "Hubble rate")?;
    let rho_c = critical_density(profile, hubble, DensityMode::Exact)?;
    let radius = profile.c().try_div(hubble)?;
    let energy = rho_c * profile.c().powi(2)? * radius.powi(3)?;
    let ops_per_sec = energy.try_div(profile.hbar())?;
    Ok(InflationBounds {
        ops_per_sec,
        ops_per_hubble_time: ops_per_sec.try_div(hubble)?,
        bits_horizon: bounds::holographic_bits(profile, radius.powi(2)?)?,
    })
}

/// Total inflationary ops given the horizon growth factor: growth².
pub fn inflation_total_ops(growth: &LogInterval) -> Result<LogInterval> {
    if !growth.dims().is_dimensionless() {
        return Err(Error::mismatch(
            "inflation growth",
            growth.dims(),
            Dimension::DIMENSIONLESS,
        ));
    }
    Ok(growth.pow(Rational::from_integer(2)))
}
