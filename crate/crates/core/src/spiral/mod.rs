//! Angles, shared vertices, centers and polygons of the n-gon spiral.
//!
//! The orientation is fixed by `θ_2 = -3π`, which gives
//! `θ_n = 2π(n/2 + 1/n - 2H_n)`. Rotations `e^{iθ_n}` are never formed
//! from `θ_n` directly: the angle is tracked in turns as a double-double and
//! reduced modulo one first, so `V(n)` stays accurate for `n` in the
//! millions. For real `n` the factor `(-1)^n` is the continuous branch
//! `e^{iπn}`.

mod interp;
mod polygon;

pub use interp::{interpolated_point, interpolated_vertex};
pub use polygon::{convex_intersection_area, polygon, polygons, PolygonGeometry};

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::lengthfns::LengthFunction;
use crate::numerics::{
    harmonic_continued, harmonic_dd, sum_alternating, AcceleratedSum, AccelerationSettings,
    ComplexAccumulator, DoubleDouble,
};

pub type ComplexPoint = Complex64;

/// Index at which accelerated series switch from direct summation to the
/// accelerator. Beyond it the phase of `e^{2πi(1/k - 2H_k)}` turns by less
/// than `4π/1024` per step, so the stripped terms are smooth in `k`.
pub(crate) const ACCELERATION_START: u64 = 1024;

/// Largest integer below which `f64` indices are exact.
const EXACT_INTEGER_LIMIT: f64 = 9_007_199_254_740_992.0;

fn as_integer(n: f64) -> Option<u64> {
    (n.fract() == 0.0 && n >= 0.0 && n < EXACT_INTEGER_LIMIT).then_some(n as u64)
}

fn harmonic_at(x: f64) -> Result<DoubleDouble> {
    match as_integer(x) {
        Some(k) => Ok(harmonic_dd(k)),
        None => Ok(DoubleDouble::new(harmonic_continued(x)?)),
    }
}

#[inline]
fn unit(turns: f64) -> Complex64 {
    let (s, c) = (TAU * turns).sin_cos();
    Complex64::new(c, s)
}

/// `e^{iθ_x}` from `x` and `H_x`.
#[inline]
pub(crate) fn rotation_from(x: f64, h: DoubleDouble) -> Complex64 {
    let turns = DoubleDouble::new((0.5 * x).fract()) + DoubleDouble::recip(x) - h.scale_pow2(2.0);
    unit(turns.wrap_unit())
}

/// `e^{2πi(1/x - 2H_x)}`, i.e. the rotation with `(-1)^x` stripped.
#[inline]
pub(crate) fn harmonic_phase_from(x: f64, h: DoubleDouble) -> Complex64 {
    let turns = DoubleDouble::recip(x) - h.scale_pow2(2.0);
    unit(turns.wrap_unit())
}

/// Walks `x, x+1, x+2, ...` keeping `H_x` in double-double form.
#[derive(Clone, Debug)]
pub(crate) struct PhaseWalk {
    x: f64,
    h: DoubleDouble,
}

impl PhaseWalk {
    /// Positioned at integer `k`; the first step lands on `k + 1`.
    pub(crate) fn at_integer(k: u64) -> Self {
        PhaseWalk {
            x: k as f64,
            h: harmonic_dd(k),
        }
    }

    /// Positioned at real `x > -1`.
    pub(crate) fn at(x: f64) -> Result<Self> {
        Ok(PhaseWalk {
            x,
            h: harmonic_at(x)?,
        })
    }

    /// Advance by one; returns the new position and its harmonic number.
    #[inline]
    pub(crate) fn step(&mut self) -> (f64, DoubleDouble) {
        self.x += 1.0;
        self.h = self.h + DoubleDouble::recip(self.x);
        (self.x, self.h)
    }
}

/// The closed-form angle `θ_n = 2π(n/2 + 1/n - 2H_n)`.
pub fn theta(n: f64) -> Result<f64> {
    if !(n > 1.0) || !n.is_finite() {
        return Err(domain("theta", n, "n > 1"));
    }
    let h = harmonic_at(n)?.to_f64();
    Ok(TAU * (0.5 * n + 1.0 / n - 2.0 * h))
}

/// `e^{iθ_n}`, accurate for large `n`.
pub fn rotation(n: f64) -> Result<ComplexPoint> {
    if !(n > 1.0) || !n.is_finite() {
        return Err(domain("rotation", n, "n > 1"));
    }
    Ok(rotation_from(n, harmonic_at(n)?))
}

/// Shared vertex `V(n) = Σ_{k=3..n} l(k) e^{iθ_k}`, with `V(2) = 0`.
pub fn vertex(f: &LengthFunction, n: u64) -> Result<ComplexPoint> {
    if n < 2 {
        return Err(domain("vertex", n as f64, "n >= 2"));
    }
    let mut walk = PhaseWalk::at_integer(2);
    let mut acc = ComplexAccumulator::new();
    for _ in 3..=n {
        let (x, h) = walk.step();
        acc.add(f.value(x) * rotation_from(x, h));
    }
    Ok(acc.value())
}

/// `V(2), V(3), ..., V(n_max)` from a single pass.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VertexSequence {
    points: Vec<ComplexPoint>,
}

impl VertexSequence {
    pub fn new(f: &LengthFunction, n_max: u64) -> Result<Self> {
        if n_max < 2 {
            return Err(domain("vertex sequence", n_max as f64, "n_max >= 2"));
        }
        let mut points = Vec::with_capacity((n_max - 1) as usize);
        points.push(Complex64::new(0.0, 0.0));
        let mut walk = PhaseWalk::at_integer(2);
        let mut acc = ComplexAccumulator::new();
        for _ in 3..=n_max {
            let (x, h) = walk.step();
            acc.add(f.value(x) * rotation_from(x, h));
            points.push(acc.value());
        }
        Ok(VertexSequence { points })
    }

    pub fn n_max(&self) -> u64 {
        self.points.len() as u64 + 1
    }

    /// `V(n)`; panics outside `2..=n_max`.
    pub fn at(&self, n: u64) -> ComplexPoint {
        self.points[(n - 2) as usize]
    }

    pub fn get(&self, n: u64) -> Option<ComplexPoint> {
        n.checked_sub(2).and_then(|i| self.points.get(i as usize).copied())
    }

    pub fn iter(&self) -> impl Iterator<Item = (u64, ComplexPoint)> + '_ {
        self.points.iter().enumerate().map(|(i, &p)| (i as u64 + 2, p))
    }

    pub fn points(&self) -> &[ComplexPoint] {
        &self.points
    }
}

/// `1 / (e^{2πi/n} - 1)` written as `e^{-iπ/n} / (2i sin(π/n))` to avoid
/// cancellation for large `n`.
#[inline]
pub(crate) fn inverse_chord(n: f64) -> Complex64 {
    let half = PI / n;
    let (s, c) = half.sin_cos();
    Complex64::new(c, -s) / Complex64::new(0.0, 2.0 * s)
}

/// Center offset `Q(n) = l(n) e^{iθ_n} / (e^{2πi/n} - 1)`.
pub fn q_term(f: &LengthFunction, n: f64) -> Result<ComplexPoint> {
    let side = f.eval(n)?;
    Ok(side * rotation(n)? * inverse_chord(n))
}

/// Polygon center `C(n) = V(n) + Q(n)`.
pub fn center(f: &LengthFunction, n: u64) -> Result<ComplexPoint> {
    if n < 3 {
        return Err(domain("center", n as f64, "n >= 3"));
    }
    Ok(vertex(f, n)? + q_term(f, n as f64)?)
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpiralSample {
    pub index: f64,
    pub theta: f64,
    pub vertex: ComplexPoint,
    pub q: ComplexPoint,
    pub center: ComplexPoint,
}

/// Angle, vertex, correction and center of the `n`-gon.
pub fn sample(f: &LengthFunction, n: u64) -> Result<SpiralSample> {
    if n < 3 {
        return Err(domain("sample", n as f64, "n >= 3"));
    }
    let vertex = vertex(f, n)?;
    let q = q_term(f, n as f64)?;
    Ok(SpiralSample {
        index: n as f64,
        theta: theta(n as f64)?,
        vertex,
        q,
        center: vertex + q,
    })
}

/// `Σ_{k>=3} (-1)^k b_k` where `b` is called for `k = 3, 4, ...` in order:
/// direct summation below [`ACCELERATION_START`], the configured
/// accelerator above it.
pub(crate) fn sum_signed_tail<F>(mut b: F, settings: &AccelerationSettings) -> AcceleratedSum
where
    F: FnMut(u64) -> Complex64,
{
    let mut head = ComplexAccumulator::new();
    for k in 3..ACCELERATION_START {
        let t = b(k);
        head.add(if k % 2 == 0 { t } else { -t });
    }
    let tail = sum_alternating(|j| b(ACCELERATION_START + j as u64), settings);
    let sign = if ACCELERATION_START % 2 == 0 { 1.0 } else { -1.0 };
    let head_terms = (ACCELERATION_START - 3) as usize;
    AcceleratedSum {
        terms_used: tail.terms_used + head_terms,
        ..tail.affine(Complex64::new(sign, 0.0), head.value())
    }
}

/// `lim V(n)` for a length function whose terms vanish; for non-vanishing
/// bounded terms this is the Euler (Abel) sum of the vertex series.
pub fn series_limit(f: &LengthFunction, settings: &AccelerationSettings) -> Result<AcceleratedSum> {
    if f.is_divergent() {
        return Err(crate::error::Error::Divergent(format!(
            "terms of the {f} vertex series do not approach 0"
        )));
    }
    let mut walk = PhaseWalk::at_integer(2);
    Ok(sum_signed_tail(
        |_| {
            let (x, h) = walk.step();
            f.value(x) * harmonic_phase_from(x, h)
        },
        settings,
    ))
}
