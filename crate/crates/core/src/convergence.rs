//! Limit behaviour of `V(n)`: classification, the limit point `W(s)` of the
//! power-law spiral, its `s → 0+` orbit, and the bound functions used to
//! show absolute convergence of the paired series.
//!
//! Classification is decided from the asymptotic exponent of the length
//! function, never by watching partial sums.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::lengthfns::{Asymptotics, LengthFunction};
use crate::numerics::{AcceleratedSum, AccelerationSettings, ComplexAccumulator, DoubleDouble};
use crate::spiral::{
    harmonic_phase_from, rotation_from, series_limit, sum_signed_tail, ComplexPoint, PhaseWalk,
};

/// Radius of the `s = 0` orbit (the circle has diameter 1).
pub const ORBIT_RADIUS: f64 = 0.5;

/// Exponents at which `W(s)` is evaluated to extrapolate `s → 0+`; the
/// last one doubles as the surrogate for the limit itself.
pub const ORBIT_SAMPLE_S: [f64; 3] = [1e-6, 1e-7, 1e-8];

/// Largest allowed distance between the extrapolated center and `W(1e-8)`.
pub const ORBIT_CONSISTENCY: f64 = 1e-7;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub enum ConvergenceClass {
    Point {
        value: ComplexPoint,
        error_estimate: f64,
    },
    CircularOrbit {
        center: ComplexPoint,
        radius: f64,
    },
    Divergent {
        reason: String,
    },
}

impl ConvergenceClass {
    pub fn name(&self) -> &'static str {
        match self {
            ConvergenceClass::Point { .. } => "Point",
            ConvergenceClass::CircularOrbit { .. } => "CircularOrbit",
            ConvergenceClass::Divergent { .. } => "Divergent",
        }
    }
}

/// A classification together with what it was derived from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Classification {
    pub class: ConvergenceClass,
    pub asymptotics: Asymptotics,
    /// False when the limit was computed but the accelerator did not reach
    /// its tolerance.
    pub converged: bool,
}

pub fn classify(f: &LengthFunction) -> Classification {
    classify_with(f, &AccelerationSettings::default())
}

pub fn classify_with(f: &LengthFunction, settings: &AccelerationSettings) -> Classification {
    let asymptotics = f.asymptotics();
    let exponent = asymptotics.exponent;
    if exponent < 0.0 {
        return Classification {
            class: ConvergenceClass::Divergent {
                reason: format!(
                    "terms do not approach 0: l(n) grows like n^{}",
                    -exponent
                ),
            },
            asymptotics,
            converged: true,
        };
    }
    let (class, converged) = match (*f, exponent > 0.0) {
        (_, true) => {
            let r = series_limit(f, settings).expect("vanishing terms are summable");
            (
                ConvergenceClass::Point {
                    value: r.value,
                    error_estimate: r.error_estimate,
                },
                r.converged,
            )
        }
        (LengthFunction::PowerLaw { .. }, false) => {
            let orbit = orbit_center(settings).expect("orbit exponents are in range");
            (
                ConvergenceClass::CircularOrbit {
                    center: orbit.center,
                    radius: ORBIT_RADIUS,
                },
                orbit.converged,
            )
        }
        (_, false) => {
            // l(n) → c ≠ 0: the spiral settles on a circle of radius |c|/2
            // about the Euler sum of the vertex series
            let r = series_limit(f, settings).expect("bounded terms are Euler summable");
            (
                ConvergenceClass::CircularOrbit {
                    center: r.value,
                    radius: 0.5 * asymptotics.coefficient.abs(),
                },
                r.converged,
            )
        }
    };
    Classification {
        class,
        asymptotics,
        converged,
    }
}

/// `W(s) = Σ_{k>=3} (-1)^k e^{2πi(1/k - 2H_k)} / k^s` for `s > 0`.
pub fn limit_point(s: f64, settings: &AccelerationSettings) -> Result<AcceleratedSum> {
    if !(s > 0.0) || !s.is_finite() {
        return Err(domain("limit_point", s, "s > 0"));
    }
    let mut walk = PhaseWalk::at_integer(2);
    Ok(sum_signed_tail(
        |_| {
            let (x, h) = walk.step();
            x.powf(-s) * harmonic_phase_from(x, h)
        },
        settings,
    ))
}

/// `F(j) = f(2j)/(2j)^s - f(2j-1)/(2j-1)^s`, `f(k) = e^{2πi(1/k - 2H_k)}`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairedSeriesTerm {
    pub j: u64,
    pub value: ComplexPoint,
}

fn pair_value(s: f64, odd: (f64, DoubleDouble), even: (f64, DoubleDouble)) -> Complex64 {
    let (xo, ho) = odd;
    let (xe, he) = even;
    xe.powf(-s) * harmonic_phase_from(xe, he) - xo.powf(-s) * harmonic_phase_from(xo, ho)
}

pub fn paired_term(j: u64, s: f64) -> Result<PairedSeriesTerm> {
    if j < 2 {
        return Err(domain("paired_term", j as f64, "j >= 2"));
    }
    if !(s >= 0.0) || !s.is_finite() {
        return Err(domain("paired_term", s, "s >= 0"));
    }
    let mut walk = PhaseWalk::at_integer(2 * j - 2);
    let odd = walk.step();
    let even = walk.step();
    Ok(PairedSeriesTerm {
        j,
        value: pair_value(s, odd, even),
    })
}

/// `F(2), F(3), ...` computed sequentially.
#[derive(Clone, Debug)]
pub struct PairedTerms {
    s: f64,
    j: u64,
    walk: PhaseWalk,
}

impl PairedTerms {
    pub fn new(s: f64) -> Result<Self> {
        if !(s >= 0.0) || !s.is_finite() {
            return Err(domain("paired_terms", s, "s >= 0"));
        }
        Ok(PairedTerms {
            s,
            j: 1,
            walk: PhaseWalk::at_integer(2),
        })
    }
}

impl Iterator for PairedTerms {
    type Item = PairedSeriesTerm;

    fn next(&mut self) -> Option<PairedSeriesTerm> {
        self.j += 1;
        let odd = self.walk.step();
        let even = self.walk.step();
        Some(PairedSeriesTerm {
            j: self.j,
            value: pair_value(self.s, odd, even),
        })
    }
}

fn check_bound_args(j: u64, s: Option<f64>) -> Result<()> {
    if j < 2 {
        return Err(domain("bound", j as f64, "j >= 2"));
    }
    if let Some(s) = s {
        if !(s > 0.0 && s <= 1.0) {
            return Err(domain("bound_a", s, "0 < s <= 1"));
        }
    }
    Ok(())
}

/// `A(j, s) = (2j-1)(1 - (1 - 1/(2j))^s)`, which lies in `(0, s)`.
pub fn bound_a(j: u64, s: f64) -> Result<f64> {
    check_bound_args(j, Some(s))?;
    let m = 2.0 * j as f64;
    // 1 - (1-1/m)^s without cancellation
    let one_minus = -(s * (-1.0 / m).ln_1p()).exp_m1();
    Ok((m - 1.0) * one_minus)
}

/// `B(j) = 2(2j-1) sin(π(1/(2j-1) + 1/(2j)))`, increasing towards `4π`.
pub fn bound_b(j: u64) -> Result<f64> {
    check_bound_args(j, None)?;
    let m = 2.0 * j as f64;
    Ok(2.0 * (m - 1.0) * (PI * (1.0 / (m - 1.0) + 1.0 / m)).sin())
}

/// `(4π + s) 2^{-1-s} ζ(1+s, 3/2)`, the bound on `Σ |F(j)|`.
pub fn paired_series_bound(s: f64) -> Result<f64> {
    if !(s > 0.0 && s <= 1.0) {
        return Err(domain("paired_series_bound", s, "0 < s <= 1"));
    }
    Ok((4.0 * PI + s) * 2f64.powf(-1.0 - s) * crate::numerics::hurwitz_zeta(1.0 + s, 1.5)?)
}

/// Center of the `s = 0` orbit, `lim_{s→0+} W(s)`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrbitCenter {
    /// Richardson extrapolation of `W(s)` over [`ORBIT_SAMPLE_S`] to `s = 0`.
    pub center: ComplexPoint,
    /// `W(s)` at each of [`ORBIT_SAMPLE_S`].
    pub samples: Vec<(f64, AcceleratedSum)>,
    /// `|center - W(1e-8)|`.
    pub surrogate_gap: f64,
    pub error_estimate: f64,
    pub converged: bool,
}

impl OrbitCenter {
    /// `W(1e-8)`.
    pub fn surrogate(&self) -> ComplexPoint {
        self.samples.last().expect("three samples").1.value
    }
}

/// Lagrange extrapolation of `(s_i, w_i)` to `s = 0`.
fn extrapolate_to_zero(points: &[(f64, Complex64)]) -> Complex64 {
    points
        .iter()
        .enumerate()
        .map(|(i, &(si, wi))| {
            let weight: f64 = points
                .iter()
                .enumerate()
                .filter(|&(k, _)| k != i)
                .map(|(_, &(sk, _))| sk / (sk - si))
                .product();
            wi * weight
        })
        .sum()
}

pub fn orbit_center(settings: &AccelerationSettings) -> Result<OrbitCenter> {
    let samples = ORBIT_SAMPLE_S
        .iter()
        .map(|&s| limit_point(s, settings).map(|r| (s, r)))
        .collect::<Result<Vec<_>>>()?;
    let points: Vec<(f64, Complex64)> = samples.iter().map(|(s, r)| (*s, r.value)).collect();
    let center = extrapolate_to_zero(&points);
    let linear = extrapolate_to_zero(&points[1..]);
    let surrogate = points[2].1;
    let surrogate_gap = (center - surrogate).norm();
    let sample_error = samples
        .iter()
        .map(|(_, r)| r.error_estimate)
        .fold(0.0, f64::max);
    Ok(OrbitCenter {
        center,
        error_estimate: sample_error.max((center - linear).norm()),
        converged: samples.iter().all(|(_, r)| r.converged) && surrogate_gap < ORBIT_CONSISTENCY,
        samples,
        surrogate_gap,
    })
}

/// Distance between even-indexed orbit points against `|sin(2π ln r)|`.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct DistanceLaw {
    pub r: f64,
    pub n: u64,
    /// `|U(nr) - U(n)|` with `U(m) = V(2m)` of the `s = 0` spiral.
    pub empirical: f64,
    pub predicted: f64,
}

pub fn orbit_distance_law(r: f64, n: u64) -> Result<DistanceLaw> {
    if !(r >= 1.0) || !r.is_finite() {
        return Err(domain("orbit_distance_law", r, "r >= 1"));
    }
    if n < 10 {
        return Err(domain("orbit_distance_law", n as f64, "n >= 10"));
    }
    let nr = n as f64 * r;
    if (nr - nr.round()).abs() > 1e-9 * nr {
        return Err(domain("orbit_distance_law", r, "n·r must be an integer"));
    }
    let (lo, hi) = (2 * n, 2 * nr.round() as u64);
    let mut walk = PhaseWalk::at_integer(2);
    let mut acc = ComplexAccumulator::new();
    let mut at_lo = Complex64::new(0.0, 0.0);
    for k in 3..=hi {
        let (x, h) = walk.step();
        acc.add(rotation_from(x, h));
        if k == lo {
            at_lo = acc.value();
        }
    }
    let at_hi = acc.value();
    Ok(DistanceLaw {
        r,
        n,
        empirical: (at_hi - at_lo).norm(),
        predicted: (TAU * r.ln()).sin().abs(),
    })
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurveSample {
    pub s: f64,
    pub limit: AcceleratedSum,
}

/// `W(s)` on a geometric grid from `s_min` to `s_max`. Samples are computed
/// in parallel; output order follows the grid. Samples whose accelerator did
/// not converge are kept with `limit.converged == false`.
pub fn convergence_curve(
    s_min: f64,
    s_max: f64,
    samples: usize,
    settings: &AccelerationSettings,
) -> Result<Vec<CurveSample>> {
    if !(s_min > 0.0) || !s_min.is_finite() {
        return Err(domain("convergence_curve", s_min, "s_min > 0"));
    }
    if !(s_max >= s_min) || !s_max.is_finite() {
        return Err(domain("convergence_curve", s_max, "s_max >= s_min"));
    }
    if samples == 0 {
        return Err(domain("convergence_curve", 0.0, "samples >= 1"));
    }
    let grid: Vec<f64> = if samples == 1 {
        vec![s_min]
    } else {
        let ratio = (s_max / s_min).ln() / (samples - 1) as f64;
        (0..samples)
            .map(|i| match i {
                0 => s_min,
                i if i == samples - 1 => s_max,
                i => s_min * (ratio * i as f64).exp(),
            })
            .collect()
    };
    grid.into_par_iter()
        .map(|s| limit_point(s, settings).map(|limit| CurveSample { s, limit }))
        .collect()
}
