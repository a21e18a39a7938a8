//! Harmonic numbers, digamma and the Hurwitz zeta function in double precision.

use super::compensated::DoubleDouble;
use crate::error::{domain, Result};

/// Euler–Mascheroni constant γ.
pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Below this the digamma recurrence shifts the argument upward.
const DIGAMMA_SHIFT: f64 = 12.0;

/// `B_{2k} / (2k)` for k = 1..7.
const DIGAMMA_ASYMPTOTIC: [f64; 7] = [
    1.0 / 12.0,
    -1.0 / 120.0,
    1.0 / 252.0,
    -1.0 / 240.0,
    1.0 / 132.0,
    -691.0 / 32760.0,
    1.0 / 12.0,
];

/// `B_{2k} / (2k)!` for k = 1..8.
const EULER_MACLAURIN: [f64; 8] = [
    1.0 / 12.0,
    -1.0 / 720.0,
    1.0 / 30240.0,
    -1.0 / 1209600.0,
    1.0 / 47900160.0,
    -691.0 / 1307674368000.0,
    1.0 / 74724249600.0,
    -3617.0 / 10670622842880000.0,
];

/// `H_n` as an unevaluated double-double sum.
///
/// Terms are added smallest first; the result is accurate to well below
/// one ulp of `H_n` for every `n` that fits in memory-free iteration.
pub fn harmonic_dd(n: u64) -> DoubleDouble {
    (1..=n)
        .rev()
        .fold(DoubleDouble::ZERO, |acc, k| acc + DoubleDouble::recip(k as f64))
}

/// The `n`-th harmonic number `1 + 1/2 + ... + 1/n`.
pub fn harmonic_number(n: u64) -> Result<f64> {
    if n == 0 {
        return Err(domain("harmonic_number", 0.0, "n >= 1"));
    }
    Ok(harmonic_dd(n).to_f64())
}

/// Digamma ψ(x) for `x > 0`.
///
/// Shifts with `ψ(x) = ψ(x + 1) - 1/x` until the argument reaches 12, then
/// uses the asymptotic series through the `x^-14` term.
pub fn digamma(x: f64) -> Result<f64> {
    if !(x > 0.0) || !x.is_finite() {
        return Err(domain("digamma", x, "x > 0"));
    }
    let mut shift = DoubleDouble::ZERO;
    let mut z = x;
    while z < DIGAMMA_SHIFT {
        shift = shift + DoubleDouble::recip(z);
        z += 1.0;
    }
    let inv2 = 1.0 / (z * z);
    let series = DIGAMMA_ASYMPTOTIC
        .iter()
        .rev()
        .fold(0.0, |acc, &c| (acc + c) * inv2);
    let asym = z.ln() - 0.5 / z - series;
    Ok((DoubleDouble::new(asym) - shift).to_f64())
}

/// Harmonic numbers continued to real arguments, `γ + ψ(x + 1)`.
pub fn harmonic_continued(x: f64) -> Result<f64> {
    if !(x > -1.0) || !x.is_finite() {
        return Err(domain("harmonic_continued", x, "x > -1"));
    }
    let psi = digamma(x + 1.0)?;
    Ok((DoubleDouble::new(EULER_GAMMA) + psi).to_f64())
}

/// Hurwitz zeta `ζ(s, a) = Σ_{j>=0} (j + a)^-s` for `s > 1`, `a > 0`.
///
/// Sums the head directly until `j + a >= 20`, then closes with the
/// Euler–Maclaurin tail (integral, half-term and eight Bernoulli corrections).
pub fn hurwitz_zeta(s: f64, a: f64) -> Result<f64> {
    if !(s > 1.0) || !s.is_finite() {
        return Err(domain("hurwitz_zeta", s, "s > 1"));
    }
    if !(a > 0.0) || !a.is_finite() {
        return Err(domain("hurwitz_zeta", a, "a > 0"));
    }
    const CUTOFF: f64 = 20.0;
    let mut sum = DoubleDouble::ZERO;
    let mut x = a;
    while x < CUTOFF {
        sum = sum + x.powf(-s);
        x += 1.0;
    }
    let mut tail = x.powf(1.0 - s) / (s - 1.0) + 0.5 * x.powf(-s);
    // rising factorial s(s+1)...(s+2k-2) times x^{-s-2k+1}
    let mut factor = s * x.powf(-s - 1.0);
    let inv2 = 1.0 / (x * x);
    for (k, c) in EULER_MACLAURIN.iter().enumerate() {
        tail += c * factor;
        let m = 2.0 * k as f64;
        factor *= (s + m + 1.0) * (s + m + 2.0) * inv2;
    }
    Ok((sum + tail).to_f64())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{LN_2, PI};

    #[test]
    fn harmonic_small_values() {
        assert_eq!(harmonic_number(1).unwrap(), 1.0);
        assert!((harmonic_number(3).unwrap() - 11.0 / 6.0).abs() < 1e-15);
        assert!(harmonic_number(0).is_err());
    }

    #[test]
    fn harmonic_matches_asymptotic_expansion() {
        let n: f64 = 1e6;
        let asym = EULER_GAMMA + n.ln() + 0.5 / n - 1.0 / (12.0 * n * n);
        assert!((harmonic_number(1_000_000).unwrap() - asym).abs() < 1e-13);
    }

    #[test]
    fn digamma_special_values() {
        assert!((digamma(1.0).unwrap() + EULER_GAMMA).abs() < 1e-15);
        assert!((digamma(2.0).unwrap() - (1.0 - EULER_GAMMA)).abs() < 1e-15);
        let half = -EULER_GAMMA - 2.0 * LN_2;
        assert!((digamma(0.5).unwrap() - half).abs() < 1e-14);
        assert!((digamma(0.5).unwrap() + 1.963_510_026_021_423_5).abs() < 1e-14);
    }

    #[test]
    fn digamma_rejects_nonpositive() {
        assert!(digamma(0.0).is_err());
        assert!(digamma(-2.5).is_err());
        assert!(digamma(f64::NAN).is_err());
    }

    #[test]
    fn harmonic_continued_at_integers() {
        assert!((harmonic_continued(1.0).unwrap() - 1.0).abs() < 1e-15);
        assert!((harmonic_continued(3.0).unwrap() - 11.0 / 6.0).abs() < 1e-15);
        assert!((harmonic_continued(0.0).unwrap()).abs() < 1e-15);
        assert!(harmonic_continued(-1.0).is_err());
    }

    #[test]
    fn hurwitz_known_values() {
        assert!((hurwitz_zeta(2.0, 1.0).unwrap() - PI * PI / 6.0).abs() < 1e-14);
        assert!((hurwitz_zeta(2.0, 1.5).unwrap() - (PI * PI / 2.0 - 4.0)).abs() < 1e-14);
        assert!(hurwitz_zeta(1.0, 1.0).is_err());
        assert!(hurwitz_zeta(2.0, 0.0).is_err());
    }
}
