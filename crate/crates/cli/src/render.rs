//! Fixed-format number rendering. Everything here is deterministic: the same
//! quantity always renders to the same bytes.

use cosmocap_core::{Dimension, LogInterval, Quantity};

/// Magnitudes below this are printed as decimals, above it as powers of ten.
const EXACT_BELOW_DECADES: f64 = 15.0;

/// `10^119.34` for large or tiny magnitudes, `1.844e1` (4 significant
/// digits) otherwise.
pub fn number(q: &Quantity) -> String {
    if q.is_zero() {
        return "0".to_string();
    }
    let sign = if q.sign() < 0 { "-" } else { "" };
    let l = q.log10();
    if l.abs() < EXACT_BELOW_DECADES {
        format!("{sign}{:.3e}", q.value().abs())
    } else {
        format!("{sign}10^{l:.2}")
    }
}

/// SI unit label for the dimensions that show up in reports; anything else
/// falls back to the exponent vector.
pub fn unit(d: Dimension) -> String {
    let known = [
        (Dimension::DIMENSIONLESS, ""),
        (Dimension::LENGTH, "m"),
        (Dimension::AREA, "m^2"),
        (Dimension::VOLUME, "m^3"),
        (Dimension::TIME, "s"),
        (Dimension::RATE, "1/s"),
        (Dimension::MASS, "kg"),
        (Dimension::MASS_DENSITY, "kg/m^3"),
        (Dimension::TEMPERATURE, "K"),
        (Dimension::ENERGY, "J"),
        (Dimension::ACTION, "J s"),
        (Dimension::ENTROPY, "J/K"),
        (Dimension::ENTROPY_DENSITY, "J/(K m^3)"),
        (Dimension::VELOCITY, "m/s"),
        (Dimension::GRAVITATIONAL, "m^3/(kg s^2)"),
        (Dimension::ENERGY_LENGTH, "J m"),
    ];
    known
        .iter()
        .find(|(k, _)| *k == d)
        .map(|(_, s)| s.to_string())
        .unwrap_or_else(|| d.to_string())
}

/// Number followed by its unit, if any.
pub fn quantity(q: &Quantity) -> String {
    let u = unit(q.dims());
    if u.is_empty() {
        number(q)
    } else {
        format!("{} {u}", number(q))
    }
}

fn decades(x: f64) -> String {
    if x.fract() == 0.0 && x.abs() < 1e15 {
        format!("{}", x as i64)
    } else {
        format!("{x:.2}")
    }
}

/// `10^{20±12}`, with the unit appended when not dimensionless.
pub fn interval(i: &LogInterval) -> String {
    let body = format!("10^{{{}±{}}}", decades(i.center()), decades(i.halfwidth()));
    let u = unit(i.dims());
    if u.is_empty() {
        body
    } else {
        format!("{body} {u}")
    }
}

/// Up to `digits` significant digits in scientific notation, trailing
/// zeros of the mantissa removed: `1.0545e-34`, `2.99792458e8`.
pub fn trimmed_sci(v: f64, digits: usize) -> String {
    let s = format!("{:.*e}", digits.saturating_sub(1), v);
    let (mantissa, exp) = s.split_once('e').expect("scientific format");
    let mantissa = if mantissa.contains('.') {
        mantissa.trim_end_matches('0').trim_end_matches('.')
    } else {
        mantissa
    };
    format!("{mantissa}e{exp}")
}

/// Four significant digits in positional notation for moderate values
/// (`137.0`, `1836`), scientific otherwise.
pub fn four_digits(v: f64) -> String {
    if v == 0.0 || !v.is_finite() {
        return format!("{v}");
    }
    let mag = v.abs().log10().floor();
    if (-4.0..4.0).contains(&mag) {
        let decimals = (3.0 - mag).max(0.0) as usize;
        format!("{v:.decimals$}")
    } else {
        format!("{v:.3e}")
    }
}
