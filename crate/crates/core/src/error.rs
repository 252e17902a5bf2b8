use thiserror::Error;

use crate::dimq::{Dimension, Rational};

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("value {0} is not finite")]
    NonFinite(f64),

    #[error("division by exact zero")]
    DivisionByZero,

    #[error("dimension mismatch in {op}: {left} vs {right}")]
    DimensionMismatch {
        op: &'static str,
        left: Box<Dimension>,
        right: Box<Dimension>,
    },

    #[error("zero raised to non-positive power {0}")]
    ZeroToNonPositivePower(Rational),

    #[error("negative base raised to {0}, whose denominator is even")]
    NegativeEvenRoot(Rational),

    #[error("{name} must be {requirement}")]
    Domain {
        name: &'static str,
        requirement: &'static str,
    },

    #[error("species table is empty")]
    EmptySpecies,

    #[error("invalid species entry {name:?}: {reason}")]
    InvalidSpecies { name: String, reason: &'static str },

    #[error("unknown constant identifier {0:?}")]
    UnknownConstant(String),

    #[error("invalid constants profile: {0}")]
    Profile(String),

    #[error("interval half-width {0} must be finite and non-negative")]
    InvalidHalfwidth(f64),
}

impl Error {
    pub(crate) fn mismatch(op: &'static str, left: Dimension, right: Dimension) -> Self {
        Error::DimensionMismatch {
            op,
            left: Box::new(left),
            right: Box::new(right),
        }
    }

    pub(crate) fn domain(name: &'static str, requirement: &'static str) -> Self {
        Error::Domain { name, requirement }
    }
}
