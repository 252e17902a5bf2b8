//! Dimensioned quantities in logarithmic space.
//!
//! A [`Quantity`] is a sign, a decimal logarithm and a [`Dimension`] with
//! rational exponents. Products and powers are exact in the dimension and
//! additive in the logarithm, so values as far apart as ħ³ (~10⁻¹⁰²) and
//! (t/t_P)² (~10¹²¹) combine without overflow, and a dimension error is
//! reported instead of silently producing a wrong number.

mod dimension;
mod interval;
mod quantity;

pub use dimension::{Base, Dimension, Rational};
pub use interval::LogInterval;
pub use quantity::{approx_eq, Quantity, DEFAULT_TOLERANCE_DECADES};
