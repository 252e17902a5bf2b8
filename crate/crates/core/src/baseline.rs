//! Man-made computation, for comparison.

use serde::{Deserialize, Serialize};

use crate::dimq::{Dimension, Quantity};
use crate::error::{Error, Result};

/// A population of identical conventional computers.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FleetSpec {
    pub n_computers: f64,
    pub clock_rate_hz: f64,
    pub ops_per_cycle: f64,
    pub duration_s: f64,
    pub bits_per_computer: f64,
}

impl Default for FleetSpec {
    /// Generous 2001-era figures: 10⁹ machines at 1 GHz doing 10⁵ ops per
    /// cycle for 10⁸ s (about two years), each holding 10¹² bits.
    fn default() -> Self {
        FleetSpec {
            n_computers: 1e9,
            clock_rate_hz: 1e9,
            ops_per_cycle: 1e5,
            duration_s: 1e8,
            bits_per_computer: 1e12,
        }
    }
}

impl FleetSpec {
    pub fn validate(&self) -> Result<()> {
        let fields = [
            ("n_computers", self.n_computers),
            ("clock_rate_hz", self.clock_rate_hz),
            ("ops_per_cycle", self.ops_per_cycle),
            ("duration_s", self.duration_s),
            ("bits_per_computer", self.bits_per_computer),
        ];
        for (name, v) in fields {
            if !v.is_finite() {
                return Err(Error::NonFinite(v));
            }
            if v < 0.0 {
                return Err(Error::domain(name, "non-negative"));
            }
        }
        Ok(())
    }
}

/// n × clock × ops/cycle × duration.
pub fn fleet_ops(fleet: &FleetSpec) -> Result<Quantity> {
    fleet.validate()?;
    let clock = Quantity::new(fleet.clock_rate_hz, Dimension::RATE)?;
    let duration = Quantity::new(fleet.duration_s, Dimension::TIME)?;
    let ops = Quantity::dimensionless(fleet.n_computers)?
        * clock
        * Quantity::dimensionless(fleet.ops_per_cycle)?
        * duration;
    ops.expect_dims(Dimension::DIMENSIONLESS, "fleet ops")
}

/// Roughly half of all conventional operations happened in the most recent
/// two years, so the all-time total is twice the two-year figure.
pub fn historical_fleet_ops(fleet: &FleetSpec) -> Result<Quantity> {
    Ok(fleet_ops(fleet)? * 2.0)
}

/// n × bits per computer.
pub fn fleet_bits(fleet: &FleetSpec) -> Result<Quantity> {
    fleet.validate()?;
    Ok(Quantity::dimensionless(fleet.n_computers)?
        * Quantity::dimensionless(fleet.bits_per_computer)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn defaults_are_exact_powers_of_ten() {
        let f = FleetSpec::default();
        let ops = fleet_ops(&f).unwrap();
        assert_eq!(ops.log10(), 31.0);
        assert_eq!(ops.value(), 1e31);
        let bits = fleet_bits(&f).unwrap();
        assert_eq!(bits.log10(), 21.0);
        assert_eq!(bits.value(), 1e21);
        assert_eq!(historical_fleet_ops(&f).unwrap(), ops * 2.0);
    }

    #[test]
    fn zero_and_invalid() {
        let none = FleetSpec {
            n_computers: 0.0,
            ..FleetSpec::default()
        };
        assert!(fleet_bits(&none).unwrap().is_zero());
        assert!(fleet_ops(&none).unwrap().is_zero());
        let bad = FleetSpec {
            duration_s: -1.0,
            ..FleetSpec::default()
        };
        assert!(fleet_ops(&bad).is_err());
    }

    proptest! {
        #[test]
        fn multilinear(k in 0.1f64..100.0, which in 0usize..5) {
            let base = FleetSpec::default();
            let mut scaled = base;
            match which {
                0 => scaled.n_computers *= k,
                1 => scaled.clock_rate_hz *= k,
                2 => scaled.ops_per_cycle *= k,
                3 => scaled.duration_s *= k,
                _ => scaled.bits_per_computer *= k,
            }
            let ops_factor = if which < 4 { k } else { 1.0 };
            let bits_factor = if which == 0 || which == 4 { k } else { 1.0 };
            prop_assert!(fleet_ops(&scaled).unwrap().rel_eq(&(fleet_ops(&base).unwrap() * ops_factor), 1e-12));
            prop_assert!(fleet_bits(&scaled).unwrap().rel_eq(&(fleet_bits(&base).unwrap() * bits_factor), 1e-12));
        }
    }
}
