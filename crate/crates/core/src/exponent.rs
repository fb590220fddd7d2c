//! Extended exponents `p` in `[1, inf]`.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{NormError, Result};

/// An exponent `p` in `[1, inf]` with an exact infinity.
///
/// Serializes as a plain number, or the string `"inf"`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Exponent {
    Finite(f64),
    Infinity,
}

impl Exponent {
    pub const ONE: Exponent = Exponent::Finite(1.0);
    pub const TWO: Exponent = Exponent::Finite(2.0);
    pub const INF: Exponent = Exponent::Infinity;

    /// Builds an exponent, mapping `f64::INFINITY` to [`Exponent::Infinity`].
    pub fn new(p: f64) -> Result<Self> {
        if p == f64::INFINITY {
            Ok(Exponent::Infinity)
        } else if p.is_finite() && p >= 1.0 {
            Ok(Exponent::Finite(p))
        } else {
            Err(NormError::InvalidExponent(p.to_string()))
        }
    }

    pub fn is_infinite(self) -> bool {
        matches!(self, Exponent::Infinity)
    }

    pub fn is_one(self) -> bool {
        self == Exponent::ONE
    }

    pub fn is_two(self) -> bool {
        self == Exponent::TWO
    }

    /// `1/p`, with `1/inf = 0`.
    pub fn reciprocal(self) -> f64 {
        match self {
            Exponent::Finite(p) => 1.0 / p,
            Exponent::Infinity => 0.0,
        }
    }

    /// Builds the exponent whose reciprocal is `t` in `[0, 1]`.
    pub fn from_reciprocal(t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(NormError::InvalidExponent(format!("1/{t}")));
        }
        if t == 0.0 {
            Ok(Exponent::Infinity)
        } else {
            Ok(Exponent::Finite(1.0 / t))
        }
    }

    /// The Hölder conjugate `q` with `1/p + 1/q = 1`.
    pub fn dual(self) -> Self {
        match self {
            Exponent::Infinity => Exponent::ONE,
            Exponent::Finite(p) if p == 1.0 => Exponent::Infinity,
            Exponent::Finite(p) if p == 2.0 => Exponent::TWO,
            Exponent::Finite(p) => Exponent::Finite(p / (p - 1.0)),
        }
    }

    /// The finite value as a float, `f64::INFINITY` otherwise.
    pub fn value(self) -> f64 {
        match self {
            Exponent::Finite(p) => p,
            Exponent::Infinity => f64::INFINITY,
        }
    }

    /// True when both exponents coincide to relative `tol` in `1/p` coordinates.
    pub fn approx_eq(self, other: Exponent, tol: f64) -> bool {
        match (self, other) {
            (Exponent::Infinity, Exponent::Infinity) => true,
            (Exponent::Finite(a), Exponent::Finite(b)) => (a - b).abs() <= tol * a.max(b),
            _ => false,
        }
    }
}

/// Free-function form of [`Exponent::dual`].
pub fn dual_exponent(p: Exponent) -> Exponent {
    p.dual()
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        self.value().partial_cmp(&other.value())
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exponent::Finite(p) => write!(f, "{p}"),
            Exponent::Infinity => write!(f, "inf"),
        }
    }
}

impl Serialize for Exponent {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Exponent::Finite(p) => s.serialize_f64(*p),
            Exponent::Infinity => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Exponent {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Num(f64),
            Text(String),
        }
        let parsed = match Raw::deserialize(d)? {
            Raw::Num(p) => Exponent::new(p),
            Raw::Text(t) => t.parse(),
        };
        parsed.map_err(serde::de::Error::custom)
    }
}

impl FromStr for Exponent {
    type Err = NormError;

    /// Accepts a decimal literal or `inf` / `infinity` / `∞`.
    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        match t.to_ascii_lowercase().as_str() {
            "inf" | "+inf" | "infinity" | "∞" => return Ok(Exponent::Infinity),
            _ => {}
        }
        let p: f64 = t
            .parse()
            .map_err(|_| NormError::InvalidExponent(t.to_string()))?;
        if p.is_nan() || p.is_infinite() {
            return Err(NormError::InvalidExponent(t.to_string()));
        }
        Exponent::new(p)
    }
}
