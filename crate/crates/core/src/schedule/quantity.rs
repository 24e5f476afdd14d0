//! Exact angles and durations.
//!
//! A [`Quantity`] is either `ratio·π/divisor` with an exact rational `ratio`
//! (the divisor is normally a coupling constant) or a bare `f64`. The text
//! form is `pi/16`, `-3*pi/4`, `pi/32/2.5` or, for bare floats, a C99 hex
//! float such as `0x1.8p-2`. Both forms round-trip bit-exactly.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use num_rational::Rational64;
use serde::{de, Deserialize, Deserializer, Serialize, Serializer};

use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq)]
pub enum Quantity {
    Pi { ratio: Rational64, divisor: f64 },
    Float(f64),
}

impl Quantity {
    pub const ZERO: Quantity = Quantity::Pi { ratio: Rational64::new_raw(0, 1), divisor: 1.0 };

    /// `(num/den)·π`
    pub fn pi(num: i64, den: i64) -> Self {
        Quantity::Pi { ratio: Rational64::new(num, den), divisor: 1.0 }
    }

    /// `(num/den)·π/divisor`
    pub fn pi_over(num: i64, den: i64, divisor: f64) -> Self {
        Quantity::Pi { ratio: Rational64::new(num, den), divisor }
    }

    pub fn float(v: f64) -> Self {
        Quantity::Float(v)
    }

    pub fn value(&self) -> f64 {
        match *self {
            Quantity::Pi { ratio, divisor } => PI * (*ratio.numer() as f64) / (*ratio.denom() as f64) / divisor,
            Quantity::Float(v) => v,
        }
    }

    pub fn is_exact(&self) -> bool {
        matches!(self, Quantity::Pi { .. })
    }

    pub fn negated(self) -> Self {
        match self {
            Quantity::Pi { ratio, divisor } => Quantity::Pi { ratio: -ratio, divisor },
            Quantity::Float(v) => Quantity::Float(-v),
        }
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Quantity::Pi { ratio, divisor } => {
                let (n, d) = (*ratio.numer(), *ratio.denom());
                if n == 0 {
                    f.write_str("0")?;
                } else {
                    if n < 0 {
                        f.write_str("-")?;
                    }
                    if n.unsigned_abs() != 1 {
                        write!(f, "{}*", n.unsigned_abs())?;
                    }
                    f.write_str("pi")?;
                    if d != 1 {
                        write!(f, "/{d}")?;
                    }
                }
                if divisor != 1.0 {
                    write!(f, "/{divisor}")?;
                }
                Ok(())
            }
            Quantity::Float(v) => f.write_str(&format_hex_float(v)),
        }
    }
}

impl FromStr for Quantity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        let bad = || Error::Parse(format!("invalid quantity `{s}`"));
        let Some(pi_at) = t.find("pi") else {
            if t == "0" || t == "-0" {
                return Ok(Quantity::ZERO);
            }
            return parse_float(t).map(Quantity::Float).ok_or_else(bad);
        };
        let (head, tail) = (&t[..pi_at], &t[pi_at + 2..]);
        let mut num: i64 = match head.trim() {
            "" => 1,
            "-" => -1,
            h => {
                let h = h.strip_suffix('*').ok_or_else(bad)?.trim();
                h.parse().map_err(|_| bad())?
            }
        };
        let mut parts = tail.split('/').map(str::trim);
        if parts.next() != Some("") {
            return Err(bad());
        }
        let mut den: i64 = 1;
        let mut divisor = 1.0;
        let rest: Vec<&str> = parts.collect();
        match rest.as_slice() {
            [] => {}
            [d] => den = d.parse().map_err(|_| bad())?,
            [d, j] => {
                den = d.parse().map_err(|_| bad())?;
                divisor = parse_float(j).ok_or_else(bad)?;
            }
            _ => return Err(bad()),
        }
        if den == 0 || !(divisor.is_finite() && divisor != 0.0) {
            return Err(bad());
        }
        if den < 0 {
            den = -den;
            num = -num;
        }
        Ok(Quantity::Pi { ratio: Rational64::new(num, den), divisor })
    }
}

impl Serialize for Quantity {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Quantity {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Text(String),
            Number(f64),
        }
        match Raw::deserialize(d)? {
            Raw::Text(t) => t.parse().map_err(de::Error::custom),
            Raw::Number(v) => Ok(Quantity::Float(v)),
        }
    }
}

/// Accepts hex floats, decimal floats and `inf`/`nan`.
fn parse_float(s: &str) -> Option<f64> {
    let s = s.trim();
    let (neg, body) = match s.strip_prefix('-') {
        Some(b) => (true, b),
        None => (false, s.strip_prefix('+').unwrap_or(s)),
    };
    let v = match body.strip_prefix("0x").or_else(|| body.strip_prefix("0X")) {
        Some(hex) => parse_hex_body(hex)?,
        None => body.parse::<f64>().ok()?,
    };
    Some(if neg { -v } else { v })
}

fn parse_hex_body(hex: &str) -> Option<f64> {
    let (mant, exp) = hex.split_once(['p', 'P'])?;
    let exp: i32 = exp.parse().ok()?;
    let (int, frac) = mant.split_once('.').unwrap_or((mant, ""));
    if int.is_empty() && frac.is_empty() {
        return None;
    }
    let mut bits: u64 = 0;
    let mut shift: i32 = 0;
    for c in int.chars().chain(frac.chars()) {
        let d = c.to_digit(16)? as u64;
        if bits >> 60 != 0 {
            return None; // more precision than f64 carries
        }
        bits = bits << 4 | d;
    }
    shift -= 4 * frac.len() as i32;
    // bits · 2^(exp + shift), exact for our own output
    Some(ldexp(bits as f64, exp + shift))
}

fn ldexp(mut x: f64, mut e: i32) -> f64 {
    let pow2 = |k: i32| f64::from_bits(((k + 1023) as u64) << 52);
    while e > 1000 {
        x *= pow2(1000);
        e -= 1000;
    }
    while e < -1000 {
        x *= pow2(-1000);
        e += 1000;
    }
    x * pow2(e)
}

/// C99 `%a` style: `0x1.<hex>p<exp>`, trailing zero digits trimmed.
pub fn format_hex_float(v: f64) -> String {
    if v.is_nan() {
        return "nan".into();
    }
    if v.is_infinite() {
        return if v > 0.0 { "inf".into() } else { "-inf".into() };
    }
    let sign = if v.is_sign_negative() { "-" } else { "" };
    let bits = v.to_bits();
    let exp_bits = ((bits >> 52) & 0x7ff) as i32;
    let mant = bits & ((1u64 << 52) - 1);
    if exp_bits == 0 && mant == 0 {
        return format!("{sign}0x0p+0");
    }
    let (lead, exp) = if exp_bits == 0 { (0, -1022) } else { (1, exp_bits - 1023) };
    let mut digits = format!("{mant:013x}");
    while digits.ends_with('0') {
        digits.pop();
    }
    let frac = if digits.is_empty() { String::new() } else { format!(".{digits}") };
    format!("{sign}0x{lead}{frac}p{exp:+}")
}
