use num_complex::Complex64;

use super::{rotation_from, sum_signed_tail, ComplexPoint, PhaseWalk};
use crate::error::{domain, Error, Result};
use crate::lengthfns::LengthFunction;
use crate::numerics::{AcceleratedSum, AccelerationSettings};

/// Smooth continuation of `V(n)` to real `n > 1`:
///
/// `Ṽ(n) = Σ_{k>=3} [l(k) e^{iθ_k} - l(k-2+n) e^{iθ_{k-2+n}}]`.
///
/// Both halves of each summand carry the same alternating sign, since
/// `e^{iθ_{k-2+n}} = (-1)^k e^{iπn} e^{2πi(1/x - 2H_x)}` with `x = k-2+n`,
/// so the summand is `(-1)^k` times a term that varies smoothly in `k`
/// and the alternating accelerators apply. At integer `n` the series
/// telescopes to `V(n)`.
pub fn interpolated_vertex(
    f: &LengthFunction,
    n: f64,
    settings: &AccelerationSettings,
) -> Result<AcceleratedSum> {
    if !(n > 1.0) || !n.is_finite() {
        return Err(domain("interpolated_vertex", n, "n > 1"));
    }
    if f.is_divergent() {
        return Err(Error::Divergent(format!(
            "the {f} spiral has no smooth continuation"
        )));
    }
    let mut whole = PhaseWalk::at_integer(2);
    let mut shifted = PhaseWalk::at(n)?;
    Ok(sum_signed_tail(
        |k| {
            let (x, hx) = whole.step();
            let (y, hy) = shifted.step();
            let d: Complex64 = f.value(x) * rotation_from(x, hx) - f.value(y) * rotation_from(y, hy);
            if k % 2 == 0 {
                d
            } else {
                -d
            }
        },
        settings,
    ))
}

/// Convenience wrapper returning just the point.
pub fn interpolated_point(
    f: &LengthFunction,
    n: f64,
    settings: &AccelerationSettings,
) -> Result<ComplexPoint> {
    interpolated_vertex(f, n, settings).map(|r| r.value)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::spiral::vertex;

    #[test]
    fn agrees_with_vertices_at_integers() {
        let f = LengthFunction::PowerLaw { s: 1.0 };
        let settings = AccelerationSettings::default();
        for m in 3..=12u64 {
            let r = interpolated_vertex(&f, m as f64, &settings).unwrap();
            assert!(r.converged);
            let v = vertex(&f, m).unwrap();
            assert!((r.value - v).norm() < 1e-8, "m = {m}: {:?} vs {v}", r.value);
        }
        let r = interpolated_vertex(&f, 2.0, &settings).unwrap();
        assert!(r.value.norm() < 1e-12);
    }

    #[test]
    fn refuses_divergent_lengths() {
        let f = LengthFunction::PowerLaw { s: -1.0 };
        assert!(matches!(
            interpolated_vertex(&f, 3.5, &AccelerationSettings::default()),
            Err(Error::Divergent(_))
        ));
        assert!(interpolated_vertex(&LengthFunction::PowerLaw { s: 1.0 }, 1.0, &AccelerationSettings::default()).is_err());
    }
}
