//! The telescoping spiral, `L(k) = 2 cos(2π/k)`.
//!
//! Writing `L(k) e^{iθ_k} = (-1)^k (e^{-4πiH_{k-1}} + e^{-4πiH_k})` makes
//! the vertex series telescope to `V_L(n) = -1 + (-1)^n e^{-4πiH_n}`, which
//! continues to real `n` through `H_n = γ + ψ(n + 1)`. All closed forms use
//! `(-1)^n = e^{iπn}`.

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};
use crate::lengthfns::LengthFunction;
use crate::numerics::{digamma, harmonic_continued, harmonic_dd, DoubleDouble, EULER_GAMMA};
use crate::spiral::{rotation_from, ComplexPoint, PhaseWalk, VertexSequence};

/// Special values of the telescoping spiral.
pub struct TelescopingConstants;

impl TelescopingConstants {
    /// Golden ratio; `C_L(φ) = C_L(φ + 1)`.
    pub const PHI: f64 = 1.618_033_988_749_895;
    /// Zeros of `L` in `(1, ∞)`.
    pub const ZERO_LOW: f64 = 4.0 / 3.0;
    pub const ZERO_HIGH: f64 = 4.0;
    /// `lim_{n→1+} Re Q_L(n) = 4(1 - π²/6)`.
    pub const Q_LIMIT_AT_1: f64 = 4.0 * (1.0 - PI * PI / 6.0);
}

fn check(n: f64, what: &'static str) -> Result<()> {
    if !(n > 1.0) || !n.is_finite() {
        return Err(domain(what, n, "n > 1"));
    }
    Ok(())
}

/// Integers up to here get `H_n` in double-double; rounding `H_n` to f64
/// costs about `|Q_L(n)| · 4π · 2^-50` in the offsets.
const EXACT_HARMONIC_LIMIT: f64 = 65_536.0;

/// `(-1)^n e^{-4πiH_n}` with `H_n = γ + ψ(n+1)`.
fn closed_rotation(n: f64) -> Result<Complex64> {
    let h = if n.fract() == 0.0 && n <= EXACT_HARMONIC_LIMIT {
        harmonic_dd(n as u64)
    } else {
        DoubleDouble::new(harmonic_continued(n)?)
    };
    let turns = DoubleDouble::new((0.5 * n).fract()) - h.scale_pow2(2.0);
    let (s, c) = (TAU * turns.wrap_unit()).sin_cos();
    Ok(Complex64::new(c, s))
}

/// `V_L(n) = -1 + (-1)^n e^{-4πi(γ + ψ(n+1))}`.
pub fn vertex_closed(n: f64) -> Result<ComplexPoint> {
    check(n, "vertex_closed")?;
    Ok(closed_rotation(n)? - 1.0)
}

/// `Q_L(n) = (-1)^n e^{-4πi(γ + ψ(n+1))} (z + (z+1)/(z-1))`, `z = e^{2πi/n}`.
pub fn q_closed(n: f64) -> Result<ComplexPoint> {
    check(n, "q_closed")?;
    let (s, c) = (TAU / n).sin_cos();
    // (z + 1)/(z - 1) = -i cot(π/n)
    let factor = Complex64::new(c, s - 1.0 / (PI / n).tan());
    Ok(closed_rotation(n)? * factor)
}

/// `C_L(n) = V_L(n) + Q_L(n)`.
pub fn center_closed(n: f64) -> Result<ComplexPoint> {
    Ok(vertex_closed(n)? + q_closed(n)?)
}

/// The golden self-intersection point written with `ψ(φ)`,
/// `-i e^{-πi(4(γ + ψ(φ)) + φ)} cot(πφ) - 1`.
pub fn golden_point() -> Result<ComplexPoint> {
    let phi = TelescopingConstants::PHI;
    let phase = -PI * (4.0 * (EULER_GAMMA + digamma(phi)?) + phi);
    let cot = 1.0 / (PI * phi).tan();
    Ok(Complex64::new(0.0, -1.0) * Complex64::from_polar(1.0, phase) * cot - 1.0)
}

/// Residuals between the direct vertex sums and the closed forms.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub n_max: u64,
    /// `max |V(n) - V_L(n)|` over `3 <= n <= n_max`.
    pub vertex_residual: f64,
    /// `max |L(k)e^{iθ_k} - (-1)^k(e^{-4πiH_{k-1}} + e^{-4πiH_k})|`.
    pub pairing_residual: f64,
}

impl IdentityReport {
    pub fn max_residual(&self) -> f64 {
        self.vertex_residual.max(self.pairing_residual)
    }
}

pub fn verify_telescoping_identity(n_max: u64) -> Result<IdentityReport> {
    if n_max < 3 {
        return Err(domain("verify_telescoping_identity", n_max as f64, "n_max >= 3"));
    }
    let f = LengthFunction::Telescoping;
    let direct = VertexSequence::new(&f, n_max)?;
    let mut vertex_residual: f64 = 0.0;
    for (n, v) in direct.iter().skip(1) {
        vertex_residual = vertex_residual.max((v - vertex_closed(n as f64)?).norm());
    }
    let minus_four_pi_h = |h: DoubleDouble| {
        let (s, c) = (TAU * h.scale_pow2(-2.0).wrap_unit()).sin_cos();
        Complex64::new(c, s)
    };
    let mut walk = PhaseWalk::at_integer(2);
    let mut h_prev = harmonic_dd(2);
    let mut pairing_residual: f64 = 0.0;
    for k in 3..=n_max {
        let (x, h) = walk.step();
        let lhs = f.value(x) * rotation_from(x, h);
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let rhs = sign * (minus_four_pi_h(h_prev) + minus_four_pi_h(h));
        pairing_residual = pairing_residual.max((lhs - rhs).norm());
        h_prev = h;
    }
    Ok(IdentityReport {
        n_max,
        vertex_residual,
        pairing_residual,
    })
}

/// Richardson extrapolation of `Re Q_L(1 + h)` over `h = 10^-3 ... 10^-6`.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct QLimitEstimate {
    /// `(h, Re Q_L(1 + h))`.
    pub samples: Vec<(f64, f64)>,
    pub extrapolated: f64,
}

pub fn q_limit_at_one() -> Result<QLimitEstimate> {
    let samples = (3..=6)
        .map(|k| {
            let h = 10f64.powi(-k);
            q_closed(1.0 + h).map(|q| (h, q.re))
        })
        .collect::<Result<Vec<_>>>()?;
    // error in powers of h, step ratio 10
    let mut table: Vec<f64> = samples.iter().map(|&(_, v)| v).collect();
    let mut factor = 10.0;
    while table.len() > 1 {
        table = table
            .windows(2)
            .map(|w| (factor * w[1] - w[0]) / (factor - 1.0))
            .collect();
        factor *= 10.0;
    }
    Ok(QLimitEstimate {
        samples,
        extrapolated: table[0],
    })
}
