use std::cmp::Ordering;
use std::f64::consts::LN_10;
use std::fmt;
use std::ops::Mul;

use num_traits::{One, Signed};
use serde::{Deserialize, Serialize};

use super::dimension::{Dimension, Rational};
use crate::error::{Error, Result};

/// Tolerance, in decades, used for order-of-magnitude agreement checks.
///
/// Factors of order 2π (about 0.8 decades) are treated as equal; factors of
/// (2π)⁶ are not.
pub const DEFAULT_TOLERANCE_DECADES: f64 = 1.5;

/// A signed, dimensioned physical quantity stored as `sign × 10^log10` in SI
/// units.
///
/// Magnitudes from 10⁻³⁰⁰ to 10⁺³⁰⁰ and well beyond compose without overflow
/// because products only ever add logarithms.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "QuantityRepr", into = "QuantityRepr")]
pub struct Quantity {
    sign: i8,
    // 0.0 whenever sign == 0
    log10: f64,
    dims: Dimension,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct QuantityRepr {
    sign: i8,
    log10: f64,
    dims: Dimension,
}

impl TryFrom<QuantityRepr> for Quantity {
    type Error = String;

    fn try_from(r: QuantityRepr) -> std::result::Result<Self, String> {
        if !matches!(r.sign, -1..=1) {
            return Err(format!("sign must be -1, 0 or 1, got {}", r.sign));
        }
        if !r.log10.is_finite() {
            return Err("log10 must be finite".to_string());
        }
        Ok(Quantity::from_parts_unchecked(r.sign, r.log10, r.dims))
    }
}

impl From<Quantity> for QuantityRepr {
    fn from(q: Quantity) -> Self {
        QuantityRepr {
            sign: q.sign,
            log10: q.log10,
            dims: q.dims,
        }
    }
}

impl Quantity {
    fn from_parts_unchecked(sign: i8, log10: f64, dims: Dimension) -> Self {
        if sign == 0 {
            Quantity {
                sign: 0,
                log10: 0.0,
                dims,
            }
        } else {
            Quantity { sign, log10, dims }
        }
    }

    /// Decomposes an SI value into sign and decimal logarithm.
    pub fn new(value: f64, dims: Dimension) -> Result<Self> {
        if !value.is_finite() {
            return Err(Error::NonFinite(value));
        }
        let sign = match value.partial_cmp(&0.0) {
            Some(Ordering::Greater) => 1,
            Some(Ordering::Less) => -1,
            _ => 0,
        };
        Ok(Quantity::from_parts_unchecked(
            sign,
            value.abs().log10(),
            dims,
        ))
    }

    pub fn dimensionless(value: f64) -> Result<Self> {
        Quantity::new(value, Dimension::DIMENSIONLESS)
    }

    /// The positive quantity `10^log10` in the given dimension.
    pub fn from_log10(log10: f64, dims: Dimension) -> Result<Self> {
        Quantity::from_parts(1, log10, dims)
    }

    pub fn from_parts(sign: i8, log10: f64, dims: Dimension) -> Result<Self> {
        if !matches!(sign, -1..=1) {
            return Err(Error::domain("sign", "-1, 0 or 1"));
        }
        if !log10.is_finite() {
            return Err(Error::NonFinite(log10));
        }
        Ok(Quantity::from_parts_unchecked(sign, log10, dims))
    }

    pub fn zero(dims: Dimension) -> Self {
        Quantity::from_parts_unchecked(0, 0.0, dims)
    }

    pub fn one() -> Self {
        Quantity::from_parts_unchecked(1, 0.0, Dimension::DIMENSIONLESS)
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    /// Decimal logarithm of the magnitude; `-inf` for an exact zero.
    pub fn log10(&self) -> f64 {
        if self.sign == 0 {
            f64::NEG_INFINITY
        } else {
            self.log10
        }
    }

    pub fn dims(&self) -> Dimension {
        self.dims
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    pub fn is_positive(&self) -> bool {
        self.sign > 0
    }

    /// The value in SI units. Saturates to ±inf or 0 outside double range.
    pub fn value(&self) -> f64 {
        if self.sign == 0 {
            0.0
        } else {
            f64::from(self.sign) * 10f64.powf(self.log10)
        }
    }

    pub fn abs(self) -> Quantity {
        Quantity {
            sign: self.sign.abs(),
            ..self
        }
    }

    pub fn try_div(self, rhs: Quantity) -> Result<Quantity> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Quantity::from_parts_unchecked(
            self.sign * rhs.sign,
            self.log10 - rhs.log10,
            self.dims / rhs.dims,
        ))
    }

    pub fn recip(self) -> Result<Quantity> {
        Quantity::one().try_div(self)
    }

    /// Raises to an exact rational power. Dimension exponents scale exactly.
    pub fn pow(self, p: Rational) -> Result<Quantity> {
        let dims = self.dims.pow(p);
        match self.sign {
            0 if p.is_positive() => Ok(Quantity::zero(dims)),
            0 => Err(Error::ZeroToNonPositivePower(p)),
            -1 if *p.denom() % 2 == 0 => Err(Error::NegativeEvenRoot(p)),
            s => {
                let sign = if s < 0 && p.numer() % 2 != 0 { -1 } else { 1 };
                let log10 = self.log10 * (*p.numer() as f64) / (*p.denom() as f64);
                Ok(Quantity::from_parts_unchecked(sign, log10, dims))
            }
        }
    }

    pub fn powi(self, n: i64) -> Result<Quantity> {
        self.pow(Rational::from_integer(n))
    }

    pub fn sqrt(self) -> Result<Quantity> {
        self.pow(Rational::new(1, 2))
    }

    /// Signed sum via base-10 log-sum. Operands must share a dimension.
    pub fn try_add(self, rhs: Quantity) -> Result<Quantity> {
        if self.dims != rhs.dims {
            return Err(Error::mismatch("add", self.dims, rhs.dims));
        }
        if rhs.is_zero() {
            return Ok(self);
        }
        if self.is_zero() {
            return Ok(rhs);
        }
        let (big, small) = if self.log10 >= rhs.log10 {
            (self, rhs)
        } else {
            (rhs, self)
        };
        // ratio ≤ 1; underflows harmlessly to 0 when the gap exceeds ~300
        // decades, leaving `big` unchanged.
        let ratio = 10f64.powf(small.log10 - big.log10);
        if big.sign == small.sign {
            let log10 = big.log10 + ratio.ln_1p() / LN_10;
            Ok(Quantity::from_parts_unchecked(big.sign, log10, big.dims))
        } else if ratio == 1.0 {
            Ok(Quantity::zero(big.dims))
        } else {
            let log10 = big.log10 + (-ratio).ln_1p() / LN_10;
            Ok(Quantity::from_parts_unchecked(big.sign, log10, big.dims))
        }
    }

    pub fn try_sub(self, rhs: Quantity) -> Result<Quantity> {
        if self.dims != rhs.dims {
            return Err(Error::mismatch("sub", self.dims, rhs.dims));
        }
        self.try_add(-rhs)
    }

    /// Order-of-magnitude equality; see [`approx_eq`].
    pub fn approx_eq(&self, other: &Quantity, tol_decades: f64) -> bool {
        approx_eq(self, other, tol_decades)
    }

    /// `|a/b - 1|` for same-dimension, same-sign operands; `None` when the
    /// two are not comparable, or when one is zero and the other is not.
    pub fn relative_difference(&self, other: &Quantity) -> Option<f64> {
        if self.dims != other.dims || self.sign != other.sign {
            return None;
        }
        if self.is_zero() {
            return Some(0.0);
        }
        Some(((self.log10 - other.log10) * LN_10).exp_m1().abs())
    }

    /// True when both quantities agree to relative tolerance `rel`.
    pub fn rel_eq(&self, other: &Quantity, rel: f64) -> bool {
        self.relative_difference(other).is_some_and(|d| d <= rel)
    }

    /// Returns `self` if it has dimension `dims`, otherwise a mismatch error
    /// naming `op`.
    pub fn expect_dims(self, dims: Dimension, op: &'static str) -> Result<Quantity> {
        if self.dims == dims {
            Ok(self)
        } else {
            Err(Error::mismatch(op, self.dims, dims))
        }
    }
}

/// `a ≈ b`: dimensions and signs match and the decimal logarithms differ by
/// at most `tol_decades`. Zero equals only zero. Never errors.
pub fn approx_eq(a: &Quantity, b: &Quantity, tol_decades: f64) -> bool {
    if a.dims != b.dims || a.sign != b.sign {
        return false;
    }
    if a.is_zero() {
        return true;
    }
    (a.log10 - b.log10).abs() <= tol_decades
}

impl std::ops::Neg for Quantity {
    type Output = Quantity;

    fn neg(self) -> Quantity {
        Quantity {
            sign: -self.sign,
            ..self
        }
    }
}

impl Mul for Quantity {
    type Output = Quantity;

    fn mul(self, rhs: Quantity) -> Quantity {
        Quantity::from_parts_unchecked(
            self.sign * rhs.sign,
            self.log10 + rhs.log10,
            self.dims * rhs.dims,
        )
    }
}

/// Multiplies by a plain number.
///
/// # Panics
///
/// Panics if `factor` is not finite.
impl Mul<f64> for Quantity {
    type Output = Quantity;

    fn mul(self, factor: f64) -> Quantity {
        let k = Quantity::dimensionless(factor).expect("scalar factor must be finite");
        self * k
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0 {}", self.dims);
        }
        if self.log10.abs() < 15.0 {
            write!(f, "{:.3e} {}", self.value(), self.dims)
        } else {
            let sign = if self.sign < 0 { "-" } else { "" };
            write!(f, "{sign}10^{{{:.2}}} {}", self.log10, self.dims)
        }
    }
}

impl Default for Quantity {
    fn default() -> Self {
        Quantity::one()
    }
}

impl One for Quantity {
    fn one() -> Self {
        Quantity::one()
    }
}
