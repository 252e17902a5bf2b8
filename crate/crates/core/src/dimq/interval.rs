use std::fmt;

use num_traits::Signed;
use serde::{Deserialize, Serialize};

use super::dimension::{Dimension, Rational};
use super::quantity::Quantity;
use crate::error::{Error, Result};

/// A positive magnitude known to within a symmetric number of decades:
/// `10^(center ± halfwidth)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "IntervalRepr", into = "IntervalRepr")]
pub struct LogInterval {
    center: f64,
    halfwidth: f64,
    dims: Dimension,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct IntervalRepr {
    center: f64,
    halfwidth: f64,
    #[serde(default)]
    dims: Dimension,
}

impl TryFrom<IntervalRepr> for LogInterval {
    type Error = Error;

    fn try_from(r: IntervalRepr) -> Result<Self> {
        LogInterval::new(r.center, r.halfwidth, r.dims)
    }
}

impl From<LogInterval> for IntervalRepr {
    fn from(i: LogInterval) -> Self {
        IntervalRepr {
            center: i.center,
            halfwidth: i.halfwidth,
            dims: i.dims,
        }
    }
}

impl LogInterval {
    pub fn new(center: f64, halfwidth: f64, dims: Dimension) -> Result<Self> {
        if !center.is_finite() {
            return Err(Error::NonFinite(center));
        }
        if !(halfwidth.is_finite() && halfwidth >= 0.0) {
            return Err(Error::InvalidHalfwidth(halfwidth));
        }
        Ok(LogInterval {
            center,
            halfwidth,
            dims,
        })
    }

    /// Degenerate interval at a positive quantity.
    pub fn exact(q: Quantity) -> Result<Self> {
        if !q.is_positive() {
            return Err(Error::domain("interval center", "a positive quantity"));
        }
        LogInterval::new(q.log10(), 0.0, q.dims())
    }

    pub fn center(&self) -> f64 {
        self.center
    }

    pub fn halfwidth(&self) -> f64 {
        self.halfwidth
    }

    pub fn dims(&self) -> Dimension {
        self.dims
    }

    pub fn is_degenerate(&self) -> bool {
        self.halfwidth == 0.0
    }

    pub fn center_quantity(&self) -> Quantity {
        Quantity::from_log10(self.center, self.dims).expect("center is finite")
    }

    pub fn lower(&self) -> Quantity {
        Quantity::from_log10(self.center - self.halfwidth, self.dims).expect("finite bound")
    }

    pub fn upper(&self) -> Quantity {
        Quantity::from_log10(self.center + self.halfwidth, self.dims).expect("finite bound")
    }

    pub fn mul(&self, other: &LogInterval) -> LogInterval {
        LogInterval {
            center: self.center + other.center,
            halfwidth: self.halfwidth + other.halfwidth,
            dims: self.dims * other.dims,
        }
    }

    pub fn pow(&self, p: Rational) -> LogInterval {
        let scale = |x: f64, r: Rational| x * (*r.numer() as f64) / (*r.denom() as f64);
        LogInterval {
            center: scale(self.center, p),
            halfwidth: scale(self.halfwidth, p.abs()),
            dims: self.dims.pow(p),
        }
    }

    pub fn contains(&self, q: &Quantity) -> bool {
        q.is_positive()
            && q.dims() == self.dims
            && (q.log10() - self.center).abs() <= self.halfwidth
    }
}

fn fmt_decades(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.2}")
    }
}

impl fmt::Display for LogInterval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "10^{{{}±{}}} {}",
            fmt_decades(self.center),
            fmt_decades(self.halfwidth),
            self.dims
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dl(c: f64, h: f64) -> LogInterval {
        LogInterval::new(c, h, Dimension::DIMENSIONLESS).unwrap()
    }

    #[test]
    fn squaring_doubles_center_and_halfwidth() {
        let sq = dl(10.0, 6.0).pow(Rational::from_integer(2));
        assert_eq!(sq, dl(20.0, 12.0));
        assert_eq!(sq.to_string(), "10^{20±12} [1]");
        assert_eq!(
            dl(10.0, 6.0).pow(Rational::from_integer(-2)),
            dl(-20.0, 12.0)
        );
    }

    #[test]
    fn mul_identity_and_widths() {
        assert_eq!(dl(10.0, 6.0).mul(&dl(0.0, 0.0)), dl(10.0, 6.0));
        assert_eq!(dl(10.0, 6.0).mul(&dl(3.0, 1.5)), dl(13.0, 7.5));
    }

    #[test]
    fn degenerate_matches_quantity_arithmetic() {
        let a = Quantity::new(3.0e8, Dimension::VELOCITY).unwrap();
        let b = Quantity::new(2.5e-3, Dimension::TIME).unwrap();
        let ia = LogInterval::exact(a).unwrap();
        let ib = LogInterval::exact(b).unwrap();
        assert_eq!(ia.mul(&ib).center_quantity(), a * b);
        assert_eq!(
            ia.pow(Rational::new(3, 2)).center_quantity(),
            a.pow(Rational::new(3, 2)).unwrap()
        );
        assert!(ia.is_degenerate());
        assert!(ia.contains(&a));
    }

    #[test]
    fn rejects_bad_halfwidth() {
        assert!(LogInterval::new(1.0, -0.1, Dimension::DIMENSIONLESS).is_err());
        assert!(LogInterval::new(1.0, f64::NAN, Dimension::DIMENSIONLESS).is_err());
        assert!(LogInterval::exact(Quantity::zero(Dimension::TIME)).is_err());
        assert!(serde_json::from_str::<LogInterval>(r#"{"center":1,"halfwidth":-2}"#).is_err());
    }

    #[test]
    fn bounds_and_display() {
        let i = dl(20.0, 12.0);
        assert_eq!(i.lower().log10(), 8.0);
        assert_eq!(i.upper().log10(), 32.0);
        assert_eq!(dl(1.234, 0.5).to_string(), "10^{1.23±0.50} [1]");
    }
}
