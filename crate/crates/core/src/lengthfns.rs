//! Catalog of side-length functions `l(n)`.
//!
//! Each kind is evaluable at real arguments so the same function drives the
//! discrete spiral, the interpolant and the analytic continuations.
//!
//! The area-normalized kind (each n-gon has area `n^-s`) is classified by
//! its exponent `1 + s/2` just like the inscribed and circumscribed kinds;
//! that classification extrapolates the power-law result rather than
//! following from a separate proof.

use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};

/// `cos(πt)`, exactly zero when `t` is an odd multiple of 1/2.
fn cos_pi(t: f64) -> f64 {
    let r = t.rem_euclid(2.0);
    if r <= 1.0 {
        (PI * (0.5 - r)).sin()
    } else {
        (PI * (r - 1.5)).sin()
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub enum LengthFunction {
    /// `x^-s`
    PowerLaw { s: f64 },
    /// Side of the n-gon inscribed in a circle of radius `x^-s`.
    Inscribed { s: f64 },
    /// Side of the n-gon circumscribed about a circle of radius `x^-s`.
    Circumscribed { s: f64 },
    /// Side of the n-gon whose area is `x^-s`.
    AreaNormalized { s: f64 },
    /// `2 cos(2π/x)`
    Telescoping,
}

/// Leading behaviour `l(x) ~ coefficient · x^-exponent` as `x → ∞`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Asymptotics {
    pub exponent: f64,
    pub coefficient: f64,
}

impl Asymptotics {
    /// Whether `l(n) → 0`.
    pub fn vanishes(&self) -> bool {
        self.exponent > 0.0
    }

    /// `lim l(n)` when the exponent is zero.
    pub fn limit(&self) -> Option<f64> {
        (self.exponent == 0.0).then_some(self.coefficient)
    }
}

impl LengthFunction {
    pub fn eval(&self, x: f64) -> Result<f64> {
        if !(x > 1.0) || !x.is_finite() {
            return Err(domain("length function", x, "x > 1"));
        }
        match *self {
            LengthFunction::Circumscribed { .. } if x == 2.0 => Err(Error::Singular {
                what: "circumscribed length",
                value: x,
            }),
            LengthFunction::AreaNormalized { .. } if x <= 2.0 => Err(domain(
                "area-normalized length",
                x,
                "x > 2 (tan(π/x) must be positive)",
            )),
            _ => Ok(self.value(x)),
        }
    }

    /// Formula without domain checks; callers guarantee `x > 2`.
    #[inline]
    pub(crate) fn value(&self, x: f64) -> f64 {
        match *self {
            LengthFunction::PowerLaw { s } => x.powf(-s),
            LengthFunction::Inscribed { s } => 2.0 * x.powf(-s) * (PI / x).sin(),
            LengthFunction::Circumscribed { s } => 2.0 * x.powf(-s) * (PI / x).tan(),
            LengthFunction::AreaNormalized { s } => {
                (4.0 * x.powf(-s) * (PI / x).tan() / x).sqrt()
            }
            LengthFunction::Telescoping => 2.0 * cos_pi(2.0 / x),
        }
    }

    pub fn asymptotics(&self) -> Asymptotics {
        let (exponent, coefficient) = match *self {
            LengthFunction::PowerLaw { s } => (s, 1.0),
            LengthFunction::Inscribed { s } | LengthFunction::Circumscribed { s } => {
                (1.0 + s, 2.0 * PI)
            }
            LengthFunction::AreaNormalized { s } => (1.0 + s / 2.0, 2.0 * PI.sqrt()),
            LengthFunction::Telescoping => (0.0, 2.0),
        };
        Asymptotics {
            exponent,
            coefficient,
        }
    }

    /// The `s'` with `l(x) ~ c x^-s'`.
    pub fn asymptotic_exponent(&self) -> f64 {
        self.asymptotics().exponent
    }

    /// Terms of the vertex series grow without bound.
    pub fn is_divergent(&self) -> bool {
        self.asymptotic_exponent() < 0.0
    }
}

impl fmt::Display for LengthFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LengthFunction::PowerLaw { s } => write!(f, "power:{s}"),
            LengthFunction::Inscribed { s } => write!(f, "inscribed:{s}"),
            LengthFunction::Circumscribed { s } => write!(f, "circumscribed:{s}"),
            LengthFunction::AreaNormalized { s } => write!(f, "area:{s}"),
            LengthFunction::Telescoping => f.write_str("telescoping"),
        }
    }
}

impl FromStr for LengthFunction {
    type Err = Error;

    fn from_str(spec: &str) -> Result<Self> {
        let bad = || Error::ParseLength(spec.to_string());
        let spec_trim = spec.trim();
        if spec_trim == "telescoping" {
            return Ok(LengthFunction::Telescoping);
        }
        let (kind, arg) = spec_trim.split_once(':').ok_or_else(bad)?;
        let s: f64 = arg.trim().parse().map_err(|_| bad())?;
        if !s.is_finite() {
            return Err(bad());
        }
        match kind.trim() {
            "power" => Ok(LengthFunction::PowerLaw { s }),
            "inscribed" => Ok(LengthFunction::Inscribed { s }),
            "circumscribed" => Ok(LengthFunction::Circumscribed { s }),
            "area" => Ok(LengthFunction::AreaNormalized { s }),
            _ => Err(bad()),
        }
    }
}
