use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_traits::{One, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Exact rational exponent. Always stored in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::Rational64;

/// Base dimensions tracked by [`Dimension`].
///
/// There is no independent electric charge. Charge only ever enters through
/// the Gaussian combination `e²`, which has dimension energy·length, so the
/// built-in constants never populate the `Q2` slot. It exists so that
/// user-supplied profiles can carry a charge-squared exponent explicitly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Base {
    Length,
    Mass,
    Time,
    Temperature,
    ChargeSquared,
}

impl Base {
    pub const ALL: [Base; 5] = [
        Base::Length,
        Base::Mass,
        Base::Time,
        Base::Temperature,
        Base::ChargeSquared,
    ];

    /// Short symbol used in rendering and in JSON files.
    pub fn symbol(self) -> &'static str {
        match self {
            Base::Length => "L",
            Base::Mass => "M",
            Base::Time => "T",
            Base::Temperature => "Θ",
            Base::ChargeSquared => "Q2",
        }
    }

    pub fn from_symbol(s: &str) -> Option<Base> {
        match s {
            "L" => Some(Base::Length),
            "M" => Some(Base::Mass),
            "T" => Some(Base::Time),
            "Θ" | "Theta" => Some(Base::Temperature),
            "Q2" => Some(Base::ChargeSquared),
            _ => None,
        }
    }

    fn index(self) -> usize {
        self as usize
    }
}

/// A vector of rational exponents over the five [`Base`] dimensions.
///
/// The zero vector is the unique dimensionless value.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Dimension {
    exps: [Rational; 5],
}

const fn int(n: i64) -> Rational {
    Rational::new_raw(n, 1)
}

impl Dimension {
    pub const DIMENSIONLESS: Dimension = Dimension::from_ints(0, 0, 0, 0, 0);
    pub const LENGTH: Dimension = Dimension::from_ints(1, 0, 0, 0, 0);
    pub const MASS: Dimension = Dimension::from_ints(0, 1, 0, 0, 0);
    pub const TIME: Dimension = Dimension::from_ints(0, 0, 1, 0, 0);
    pub const TEMPERATURE: Dimension = Dimension::from_ints(0, 0, 0, 1, 0);
    pub const AREA: Dimension = Dimension::from_ints(2, 0, 0, 0, 0);
    pub const VOLUME: Dimension = Dimension::from_ints(3, 0, 0, 0, 0);
    pub const RATE: Dimension = Dimension::from_ints(0, 0, -1, 0, 0);
    pub const VELOCITY: Dimension = Dimension::from_ints(1, 0, -1, 0, 0);
    pub const ENERGY: Dimension = Dimension::from_ints(2, 1, -2, 0, 0);
    pub const ACTION: Dimension = Dimension::from_ints(2, 1, -1, 0, 0);
    pub const ENTROPY: Dimension = Dimension::from_ints(2, 1, -2, -1, 0);
    pub const ENTROPY_DENSITY: Dimension = Dimension::from_ints(-1, 1, -2, -1, 0);
    pub const MASS_DENSITY: Dimension = Dimension::from_ints(-3, 1, 0, 0, 0);
    /// Newton's constant: m³ kg⁻¹ s⁻².
    pub const GRAVITATIONAL: Dimension = Dimension::from_ints(3, -1, -2, 0, 0);
    /// Gaussian `e²`: energy × length.
    pub const ENERGY_LENGTH: Dimension = Dimension::from_ints(3, 1, -2, 0, 0);

    pub const fn from_ints(length: i64, mass: i64, time: i64, temperature: i64, q2: i64) -> Self {
        Dimension {
            exps: [int(length), int(mass), int(time), int(temperature), int(q2)],
        }
    }

    /// Builds a dimension from rational exponents, reducing each to lowest
    /// terms.
    pub fn from_exponents(exps: [Rational; 5]) -> Self {
        // Ratio arithmetic already keeps values reduced; `reduced` covers
        // anything built with `new_raw`.
        Dimension {
            exps: exps.map(|r| r.reduced()),
        }
    }

    pub fn exponent(&self, base: Base) -> Rational {
        self.exps[base.index()]
    }

    pub fn exponents(&self) -> [Rational; 5] {
        self.exps
    }

    pub fn is_dimensionless(&self) -> bool {
        self.exps.iter().all(Zero::is_zero)
    }

    pub fn pow(self, p: Rational) -> Dimension {
        Dimension {
            exps: self.exps.map(|e| e * p),
        }
    }

    pub fn recip(self) -> Dimension {
        self.pow(-Rational::one())
    }
}

impl Default for Dimension {
    fn default() -> Self {
        Dimension::DIMENSIONLESS
    }
}

// Multiplying quantities adds their exponents.
#[allow(clippy::suspicious_arithmetic_impl)]
impl Mul for Dimension {
    type Output = Dimension;

    fn mul(self, rhs: Dimension) -> Dimension {
        let mut exps = self.exps;
        for (e, r) in exps.iter_mut().zip(rhs.exps) {
            *e += r;
        }
        Dimension { exps }
    }
}

#[allow(clippy::suspicious_arithmetic_impl)]
impl Div for Dimension {
    type Output = Dimension;

    fn div(self, rhs: Dimension) -> Dimension {
        self * rhs.recip()
    }
}

fn fmt_rational(r: Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_dimensionless() {
            return f.write_str("[1]");
        }
        let parts: Vec<String> = Base::ALL
            .iter()
            .filter(|b| !self.exponent(**b).is_zero())
            .map(|b| format!("{}^{}", b.symbol(), fmt_rational(self.exponent(*b))))
            .collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

// JSON form: {"L": [num, den], ...}, zero exponents omitted. The temperature
// key is written as "Theta" so files stay ASCII.
fn json_key(base: Base) -> &'static str {
    match base {
        Base::Temperature => "Theta",
        b => b.symbol(),
    }
}

impl Serialize for Dimension {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let map: BTreeMap<&str, [i64; 2]> = Base::ALL
            .iter()
            .filter(|b| !self.exponent(**b).is_zero())
            .map(|b| {
                let e = self.exponent(*b);
                (json_key(*b), [*e.numer(), *e.denom()])
            })
            .collect();
        map.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Dimension {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let raw = BTreeMap::<String, [i64; 2]>::deserialize(deserializer)?;
        let mut exps = [Rational::zero(); 5];
        for (key, [num, den]) in raw {
            let base = Base::from_symbol(&key)
                .ok_or_else(|| D::Error::custom(format!("unknown base dimension {key:?}")))?;
            if den == 0 {
                return Err(D::Error::custom(format!(
                    "zero denominator in exponent of {key:?}"
                )));
            }
            exps[base.index()] = Rational::new(num, den);
        }
        Ok(Dimension { exps })
    }
}
