//! Summation of alternating complex series.
//!
//! Every accelerator here sums `Σ_{j>=0} (-1)^j a_j` where the caller hands
//! over the `a_j` with the alternating sign already stripped. The generator
//! is always called with `j = 0, 1, 2, ...` in order, so stateful
//! generators (running harmonic sums, for instance) are fine.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Strategy {
    /// Plain partial sums; the estimate is the modulus of the last term.
    DirectPartialSums,
    /// Consecutive terms added in pairs; stops once three successive
    /// paired partial sums agree.
    PairedTerms,
    /// Euler's transform, built from forward differences of the `a_j`.
    EulerTransform,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AccelerationSettings {
    /// Absolute tolerance on the modulus of the correction.
    pub target_tolerance: f64,
    /// Upper bound on the number of `a_j` consumed by the accelerator.
    pub max_terms: usize,
    pub strategy: Strategy,
}

impl AccelerationSettings {
    pub fn new(target_tolerance: f64, max_terms: usize, strategy: Strategy) -> Result<Self> {
        if !(target_tolerance > 0.0) || !target_tolerance.is_finite() {
            return Err(domain(
                "AccelerationSettings::target_tolerance",
                target_tolerance,
                "> 0",
            ));
        }
        if max_terms < 4 {
            return Err(domain(
                "AccelerationSettings::max_terms",
                max_terms as f64,
                ">= 4",
            ));
        }
        Ok(AccelerationSettings {
            target_tolerance,
            max_terms,
            strategy,
        })
    }

    pub fn with_tolerance(self, target_tolerance: f64) -> Result<Self> {
        Self::new(target_tolerance, self.max_terms, self.strategy)
    }

    pub fn with_strategy(self, strategy: Strategy) -> Self {
        AccelerationSettings { strategy, ..self }
    }
}

impl Default for AccelerationSettings {
    fn default() -> Self {
        AccelerationSettings {
            target_tolerance: 1e-12,
            max_terms: 400,
            strategy: Strategy::EulerTransform,
        }
    }
}

/// Result of an accelerated summation. `converged == false` means the
/// tolerance was not reached within `max_terms`; `value` is then the best
/// estimate available.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct AcceleratedSum {
    pub value: Complex64,
    pub error_estimate: f64,
    pub terms_used: usize,
    pub converged: bool,
}

impl AcceleratedSum {
    /// Shift the value by a constant (e.g. a directly summed head) and
    /// multiply it by a unit-modulus sign.
    pub(crate) fn affine(self, scale: Complex64, offset: Complex64) -> Self {
        AcceleratedSum {
            value: offset + scale * self.value,
            ..self
        }
    }
}

/// Euler's transform of `Σ_{j>=0} (-1)^j a_j`.
///
/// Returns `Σ_m (-1)^m Δ^m a_0 / 2^{m+1}` truncated once two successive
/// corrections fall below the target tolerance. Differences are stored
/// pre-divided by `2^m`, which keeps them bounded by `max |a_j|`.
pub fn euler_transform_sum<F>(mut term: F, settings: &AccelerationSettings) -> AcceleratedSum
where
    F: FnMut(usize) -> Complex64,
{
    // diag[i] = Δ^i a_{m-i} / 2^i for the most recent m
    let mut diag: Vec<Complex64> = Vec::with_capacity(settings.max_terms);
    let mut sum = Complex64::new(0.0, 0.0);
    let mut comp = Complex64::new(0.0, 0.0);
    let mut last = f64::INFINITY;
    let mut quiet = 0;
    for m in 0..settings.max_terms {
        let mut carry = term(m);
        for d in diag.iter_mut() {
            let next = (carry - *d) * 0.5;
            *d = carry;
            carry = next;
        }
        diag.push(carry);
        // Δ^m a_0 / 2^m sits in the last slot
        let sign = if m % 2 == 0 { 0.5 } else { -0.5 };
        let correction = carry * sign;
        // Kahan-style compensation per component
        let y = correction - comp;
        let t = sum + y;
        comp = (t - sum) - y;
        sum = t;

        last = correction.norm();
        if last < settings.target_tolerance {
            quiet += 1;
            if quiet >= 2 {
                return AcceleratedSum {
                    value: sum,
                    error_estimate: last,
                    terms_used: m + 1,
                    converged: true,
                };
            }
        } else {
            quiet = 0;
        }
    }
    AcceleratedSum {
        value: sum,
        error_estimate: last,
        terms_used: settings.max_terms,
        converged: false,
    }
}

fn direct_sum<F>(mut term: F, settings: &AccelerationSettings) -> AcceleratedSum
where
    F: FnMut(usize) -> Complex64,
{
    let mut acc = super::ComplexAccumulator::new();
    let mut last = f64::INFINITY;
    for j in 0..settings.max_terms {
        let a = term(j);
        acc.add(if j % 2 == 0 { a } else { -a });
        last = a.norm();
        if last < settings.target_tolerance {
            return AcceleratedSum {
                value: acc.value(),
                error_estimate: last,
                terms_used: j + 1,
                converged: true,
            };
        }
    }
    AcceleratedSum {
        value: acc.value(),
        error_estimate: last,
        terms_used: settings.max_terms,
        converged: false,
    }
}

fn paired_sum<F>(mut term: F, settings: &AccelerationSettings) -> AcceleratedSum
where
    F: FnMut(usize) -> Complex64,
{
    let mut acc = super::ComplexAccumulator::new();
    let mut recent = [f64::INFINITY; 2];
    let pairs = settings.max_terms / 2;
    for p in 0..pairs {
        let pair = term(2 * p) - term(2 * p + 1);
        acc.add(pair);
        recent = [recent[1], pair.norm()];
        if recent.iter().all(|&r| r < settings.target_tolerance) {
            return AcceleratedSum {
                value: acc.value(),
                error_estimate: recent[0].max(recent[1]),
                terms_used: 2 * (p + 1),
                converged: true,
            };
        }
    }
    AcceleratedSum {
        value: acc.value(),
        error_estimate: recent[0].max(recent[1]),
        terms_used: 2 * pairs,
        converged: false,
    }
}

/// Sum `Σ_{j>=0} (-1)^j a_j` with the strategy named in `settings`.
pub fn sum_alternating<F>(term: F, settings: &AccelerationSettings) -> AcceleratedSum
where
    F: FnMut(usize) -> Complex64,
{
    match settings.strategy {
        Strategy::EulerTransform => euler_transform_sum(term, settings),
        Strategy::DirectPartialSums => direct_sum(term, settings),
        Strategy::PairedTerms => paired_sum(term, settings),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_4, LN_2, PI};

    fn settings(tol: f64, max_terms: usize) -> AccelerationSettings {
        AccelerationSettings::new(tol, max_terms, Strategy::EulerTransform).unwrap()
    }

    #[test]
    fn ln2_within_sixty_terms() {
        let r = euler_transform_sum(|j| Complex64::new(1.0 / (j + 1) as f64, 0.0), &settings(1e-12, 60));
        assert!(r.converged);
        assert!(r.terms_used <= 60);
        assert!((r.value.re - LN_2).abs() < 1e-12, "{:?}", r);
        assert_eq!(r.value.im, 0.0);
    }

    #[test]
    fn leibniz_series() {
        let r = euler_transform_sum(|j| Complex64::new(1.0 / (2 * j + 1) as f64, 0.0), &settings(1e-12, 80));
        assert!(r.converged);
        assert!((r.value.re - FRAC_PI_4).abs() < 1e-12);
    }

    #[test]
    fn constant_phase_scales_linearly() {
        let phase = Complex64::from_polar(1.0, PI / 3.0);
        let r = euler_transform_sum(|j| phase / (j + 1) as f64, &settings(1e-12, 60));
        assert!((r.value - phase * LN_2).norm() < 1e-12);
    }

    #[test]
    fn reports_non_convergence() {
        // the estimate cannot drop below 1e-30 in six terms
        let r = euler_transform_sum(|j| Complex64::new(1.0 / (j + 1) as f64, 0.0), &settings(1e-30, 6));
        assert!(!r.converged);
        assert_eq!(r.terms_used, 6);
        assert!((r.value.re - LN_2).abs() < 1e-2);
        assert!(r.error_estimate > 0.0);
    }

    #[test]
    fn settings_validation() {
        assert!(AccelerationSettings::new(0.0, 10, Strategy::EulerTransform).is_err());
        assert!(AccelerationSettings::new(1e-3, 3, Strategy::EulerTransform).is_err());
        assert!(AccelerationSettings::new(1e-3, 4, Strategy::PairedTerms).is_ok());
    }

    #[test]
    fn strategies_agree_on_fast_series() {
        let term = |j: usize| Complex64::new(0.5f64.powi(j as i32), 0.0);
        let exact = 2.0 / 3.0;
        for strategy in [Strategy::DirectPartialSums, Strategy::PairedTerms, Strategy::EulerTransform] {
            let s = AccelerationSettings::new(1e-14, 200, strategy).unwrap();
            let r = sum_alternating(term, &s);
            assert!(r.converged, "{strategy:?}");
            assert!((r.value.re - exact).abs() < 1e-13, "{strategy:?}: {:?}", r);
        }
    }
}
