use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::dimq::Rational;
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Statistics {
    Boson,
    Fermion,
}

impl Statistics {
    /// 1 for bosons, 7/8 for fermions.
    pub fn weight(self) -> Rational {
        match self {
            Statistics::Boson => Rational::from_integer(1),
            Statistics::Fermion => Rational::new(7, 8),
        }
    }
}

/// One species of effectively massless particle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "SpeciesRepr", into = "SpeciesRepr")]
pub struct Species {
    name: String,
    polarizations: u32,
    particle_antiparticle: u32,
    statistics: Statistics,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpeciesRepr {
    name: String,
    polarizations: u32,
    particle_antiparticle: u32,
    statistics: Statistics,
}

impl TryFrom<SpeciesRepr> for Species {
    type Error = Error;

    fn try_from(r: SpeciesRepr) -> Result<Self> {
        Species::new(
            r.name,
            r.polarizations,
            r.particle_antiparticle,
            r.statistics,
        )
    }
}

impl From<Species> for SpeciesRepr {
    fn from(s: Species) -> Self {
        SpeciesRepr {
            name: s.name,
            polarizations: s.polarizations,
            particle_antiparticle: s.particle_antiparticle,
            statistics: s.statistics,
        }
    }
}

impl Species {
    pub fn new(
        name: impl Into<String>,
        polarizations: u32,
        particle_antiparticle: u32,
        statistics: Statistics,
    ) -> Result<Self> {
        let name = name.into();
        if polarizations == 0 {
            return Err(Error::InvalidSpecies {
                name,
                reason: "polarizations must be positive",
            });
        }
        if !matches!(particle_antiparticle, 1 | 2) {
            return Err(Error::InvalidSpecies {
                name,
                reason: "particle_antiparticle must be 1 or 2",
            });
        }
        Ok(Species {
            name,
            polarizations,
            particle_antiparticle,
            statistics,
        })
    }

    pub fn photon() -> Self {
        Species::new("photon", 2, 1, Statistics::Boson).expect("valid")
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn polarizations(&self) -> u32 {
        self.polarizations
    }

    pub fn particle_antiparticle(&self) -> u32 {
        self.particle_antiparticle
    }

    pub fn statistics(&self) -> Statistics {
        self.statistics
    }

    /// Effective degrees of freedom: polarizations × particle/antiparticle
    /// count × statistics weight.
    pub fn n_eff(&self) -> Rational {
        Rational::from_integer(i64::from(self.polarizations))
            * Rational::from_integer(i64::from(self.particle_antiparticle))
            * self.statistics.weight()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(transparent)]
pub struct SpeciesTable(Vec<Species>);

impl SpeciesTable {
    pub fn new(species: Vec<Species>) -> Self {
        SpeciesTable(species)
    }

    pub fn photons_only() -> Self {
        SpeciesTable(vec![Species::photon()])
    }

    pub fn species(&self) -> &[Species] {
        &self.0
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Σ n_eff over the table. Errors on an empty table.
    pub fn total_n_eff(&self) -> Result<Rational> {
        if self.0.is_empty() {
            return Err(Error::EmptySpecies);
        }
        Ok(self
            .0
            .iter()
            .map(Species::n_eff)
            .fold(Rational::zero(), |a, b| a + b))
    }
}

impl FromIterator<Species> for SpeciesTable {
    fn from_iter<I: IntoIterator<Item = Species>>(iter: I) -> Self {
        SpeciesTable(iter.into_iter().collect())
    }
}
