//! The Eddington-Dirac large numbers and their exact relation to the
//! operation count.
//!
//! With Gaussian e², all of α, β and γ are pure numbers. βγ² equals
//! ops × (ħc/e²)(m_e/m_p) identically, and αβ² does the same against
//! (t/t_P)². αβ = γ² holds only at ρ = 1/Gt².

use serde::{Deserialize, Serialize};

use crate::check::positive;
use crate::constants::ConstantsProfile;
use crate::cosmo;
use crate::dimq::{Dimension, Quantity};
use crate::error::Result;

/// e²/(G m_e m_p): electric over gravitational attraction of a proton and an
/// electron.
pub fn alpha(profile: &ConstantsProfile) -> Result<Quantity> {
    profile
        .e2()
        .try_div(profile.g() * profile.m_e() * profile.m_p())
}

/// ct/(e²/m_e c²): horizon size over the classical electron radius.
pub fn beta(profile: &ConstantsProfile, age: Quantity) -> Result<Quantity> {
    let age = positive(age, Dimension::TIME, "age")?;
    let electron_radius = profile.e2().try_div(profile.m_e() * profile.c().powi(2)?)?;
    (profile.c() * age).try_div(electron_radius)
}

/// √(ρc³t³/m_p), the square root of the baryon count in the horizon.
pub fn gamma(profile: &ConstantsProfile, rho: Quantity, age: Quantity) -> Result<Quantity> {
    let rho = positive(rho, Dimension::MASS_DENSITY, "density")?;
    let volume = cosmo::horizon_volume(profile, age)?;
    (rho * volume).try_div(profile.m_p())?.sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LargeNumberReport {
    pub alpha: Quantity,
    pub beta: Quantity,
    pub gamma: Quantity,
    /// αβ/γ²; 1 at critical density.
    pub r1: Quantity,
    /// βγ² / (ops_matter · ħc/e² · m_e/m_p); always 1.
    pub r2: Quantity,
    /// αβ² / (ops_critical · ħc/e² · m_e/m_p); neither side depends on ρ,
    /// so this is 1 for every density.
    pub r3: Quantity,
    /// ops_matter / βγ² = (m_p/m_e)/(ħc/e²), about 13.4.
    pub ops_over_beta_gamma2: Quantity,
}

impl LargeNumberReport {
    /// Whether each residual is 1 within `rel`.
    pub fn residual_passes(&self, rel: f64) -> [bool; 3] {
        [self.r1, self.r2, self.r3].map(|r| r.rel_eq(&Quantity::one(), rel))
    }
}

pub fn identities(
    profile: &ConstantsProfile,
    rho: Quantity,
    age: Quantity,
) -> Result<LargeNumberReport> {
    let a = alpha(profile)?;
    let b = beta(profile, age)?;
    let g = gamma(profile, rho, age)?;
    let coupling = profile
        .fine_structure_inverse()
        .try_div(profile.mass_ratio())?;
    let ops = cosmo::ops_matter(profile, rho, age)?;
    let ops_c = cosmo::ops_critical(profile, age)?;
    let bg2 = b * g.powi(2)?;
    Ok(LargeNumberReport {
        alpha: a,
        beta: b,
        gamma: g,
        r1: (a * b).try_div(g.powi(2)?)?,
        r2: bg2.try_div(ops * coupling)?,
        r3: (a * b.powi(2)?).try_div(ops_c * coupling)?,
        ops_over_beta_gamma2: ops.try_div(bg2)?,
    })
}
