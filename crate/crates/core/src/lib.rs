//! Dimension-checked, log-space bounds on the computational capacity of
//! physical systems and of the universe.
//!
//! * [`dimq`]: sign/log10/dimension quantities, the numeric currency.
//! * [`constants`]: named constant profiles and Planck-scale derivations.
//! * [`bounds`]: speed, memory, I/O, Bekenstein and holographic limits for
//!   any system.
//! * [`cosmo`]: matter, radiation and inflationary epochs, plus the
//!   aggregated [`cosmo::CapacityReport`].
//! * [`largenum`]: Eddington-Dirac large numbers.
//! * [`baseline`]: conventional computers for comparison.

pub mod baseline;
pub mod bounds;
mod check;
pub mod constants;
pub mod cosmo;
pub mod dimq;
mod error;
pub mod largenum;

pub use constants::{ConstantId, ConstantsProfile};
pub use dimq::{Dimension, LogInterval, Quantity, Rational};
pub use error::{Error, Result};
