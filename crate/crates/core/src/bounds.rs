//! Limits on computation for an arbitrary physical system.
//!
//! Speed is bounded by energy, memory by entropy, and I/O by entropy and
//! size together with the speed of light. The Bekenstein ratio and the
//! holographic bound close the set.
//!
//! `holographic_bits` is area/ℓ_P² verbatim, without the conventional 1/4 or
//! ln 2 factors of black-hole entropy.

use std::f64::consts::{LN_2, PI};

use serde::{Deserialize, Serialize};

use crate::check::{non_negative, positive};
use crate::constants::ConstantsProfile;
use crate::dimq::{Dimension, Quantity};
use crate::error::Result;

/// Relative slack below 1/2π before a Bekenstein ratio is flagged.
pub const BEKENSTEIN_EPSILON: f64 = 1e-9;

/// Maximum elementary operations per second, 2E/πħ.
pub fn max_ops_per_sec(profile: &ConstantsProfile, energy: Quantity) -> Result<Quantity> {
    let energy = positive(energy, Dimension::ENERGY, "energy")?;
    (energy * (2.0 / PI)).try_div(profile.hbar())
}

/// Minimum time to reach an orthogonal state, πħ/2E.
pub fn min_flip_time(profile: &ConstantsProfile, energy: Quantity) -> Result<Quantity> {
    let energy = positive(energy, Dimension::ENERGY, "energy")?;
    (profile.hbar() * (PI / 2.0)).try_div(energy)
}

/// Maximum number of bits, S/(k_B ln 2).
pub fn max_bits(profile: &ConstantsProfile, entropy: Quantity) -> Result<Quantity> {
    let entropy = non_negative(entropy, Dimension::ENTROPY, "entropy")?;
    entropy.try_div(profile.k_b() * LN_2)
}

/// Maximum I/O rate, cS/(k_B R), in units of 1/time.
///
/// This is the expression without a 1/ln 2; divide by ln 2 for bits/s.
pub fn max_io_rate(
    profile: &ConstantsProfile,
    entropy: Quantity,
    radius: Quantity,
) -> Result<Quantity> {
    let entropy = non_negative(entropy, Dimension::ENTROPY, "entropy")?;
    let radius = positive(radius, Dimension::LENGTH, "radius")?;
    (profile.c() * entropy).try_div(profile.k_b() * radius)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BekensteinCheck {
    pub ratio: Quantity,
    /// Set when the ratio falls below 1/2π, which no physical system allows.
    pub below_bound: bool,
}

/// k_B E R/(ħ c S). Reported, never rejected.
pub fn bekenstein_ratio(
    profile: &ConstantsProfile,
    energy: Quantity,
    radius: Quantity,
    entropy: Quantity,
) -> Result<BekensteinCheck> {
    let energy = positive(energy, Dimension::ENERGY, "energy")?;
    let radius = positive(radius, Dimension::LENGTH, "radius")?;
    let entropy = positive(entropy, Dimension::ENTROPY, "entropy")?;
    let ratio =
        (profile.k_b() * energy * radius).try_div(profile.hbar() * profile.c() * entropy)?;
    let floor = (1.0 / (2.0 * PI)) * (1.0 - BEKENSTEIN_EPSILON);
    Ok(BekensteinCheck {
        ratio,
        below_bound: ratio.log10() < floor.log10(),
    })
}

/// Maximum bits on a boundary of the given area, area/ℓ_P².
pub fn holographic_bits(profile: &ConstantsProfile, area: Quantity) -> Result<Quantity> {
    let area = positive(area, Dimension::AREA, "area")?;
    area.try_div(profile.planck_length().powi(2)?)
}

/// Inputs describing a generic system.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SystemSpec {
    pub energy: Quantity,
    pub entropy: Quantity,
    pub radius: Quantity,
    /// Boundary area; R² when absent.
    pub area: Option<Quantity>,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SystemLimits {
    pub ops_per_sec: Quantity,
    pub min_flip_time: Quantity,
    pub bits: Quantity,
    pub io_rate: Quantity,
    pub bekenstein: BekensteinCheck,
    pub holographic_bits: Quantity,
}

impl SystemSpec {
    pub fn area(&self) -> Result<Quantity> {
        match self.area {
            Some(a) => Ok(a),
            None => self.radius.powi(2),
        }
    }

    pub fn limits(&self, profile: &ConstantsProfile) -> Result<SystemLimits> {
        Ok(SystemLimits {
            ops_per_sec: max_ops_per_sec(profile, self.energy)?,
            min_flip_time: min_flip_time(profile, self.energy)?,
            bits: max_bits(profile, self.entropy)?,
            io_rate: max_io_rate(profile, self.entropy, self.radius)?,
            bekenstein: bekenstein_ratio(profile, self.energy, self.radius, self.entropy)?,
            holographic_bits: holographic_bits(profile, self.area()?)?,
        })
    }
}
