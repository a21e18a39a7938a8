use crate::error::{domain, Error, Result};
use crate::spiral::ComplexPoint;

const INITIAL_INTERVALS: usize = 128;
const MAX_DEPTH: u32 = 16;

fn eval<F>(curve: &F, t: f64) -> Result<ComplexPoint>
where
    F: Fn(f64) -> Result<ComplexPoint>,
{
    let z = curve(t)?;
    if z.re.is_finite() && z.im.is_finite() {
        Ok(z)
    } else {
        Err(Error::NonFinite(t))
    }
}

fn chord_distance(p: ComplexPoint, a: ComplexPoint, b: ComplexPoint) -> f64 {
    let d = b - a;
    let len2 = d.norm_sqr();
    if len2 == 0.0 {
        return (p - a).norm();
    }
    let u = (((p - a) * d.conj()).re / len2).clamp(0.0, 1.0);
    (p - (a + d * u)).norm()
}

#[allow(clippy::too_many_arguments)]
fn refine<F>(
    curve: &F,
    t0: f64,
    p0: ComplexPoint,
    t1: f64,
    p1: ComplexPoint,
    tolerance: f64,
    depth: u32,
    out: &mut Vec<ComplexPoint>,
) -> Result<()>
where
    F: Fn(f64) -> Result<ComplexPoint>,
{
    if tolerance.is_infinite() {
        out.push(p1);
        return Ok(());
    }
    let tm = 0.5 * (t0 + t1);
    let pm = eval(curve, tm)?;
    // quarter points catch an S-shaped span whose midpoint sits on the chord
    let deviation = chord_distance(pm, p0, p1)
        .max(chord_distance(eval(curve, 0.5 * (t0 + tm))?, p0, pm))
        .max(chord_distance(eval(curve, 0.5 * (tm + t1))?, pm, p1));
    if deviation <= tolerance || depth >= MAX_DEPTH {
        out.push(pm);
        out.push(p1);
        return Ok(());
    }
    refine(curve, t0, p0, tm, pm, tolerance, depth + 1, out)?;
    refine(curve, tm, pm, t1, p1, tolerance, depth + 1, out)
}

/// Samples `curve` on `[lo, hi]`, halving each parameter interval until the
/// curve stays within `tolerance` of the resulting chords. An infinite
/// tolerance yields the uniform starting grid.
pub fn sample_curve<F>(curve: &F, lo: f64, hi: f64, tolerance: f64) -> Result<Vec<ComplexPoint>>
where
    F: Fn(f64) -> Result<ComplexPoint>,
{
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(domain("sample_curve", hi, "finite hi > lo"));
    }
    if !(tolerance > 0.0) {
        return Err(domain("sample_curve", tolerance, "tolerance > 0"));
    }
    let step = (hi - lo) / INITIAL_INTERVALS as f64;
    let param = |i: usize| if i == INITIAL_INTERVALS { hi } else { lo + step * i as f64 };
    let mut out = vec![eval(curve, lo)?];
    for i in 0..INITIAL_INTERVALS {
        let (t0, t1) = (param(i), param(i + 1));
        let p0 = *out.last().expect("non-empty");
        let p1 = eval(curve, t1)?;
        refine(curve, t0, p0, t1, p1, tolerance, 0, &mut out)?;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::TAU;

    #[test]
    fn circle_meets_tolerance() {
        let circle = |t: f64| Ok(ComplexPoint::from_polar(1.0, TAU * t));
        let tol = 1e-5;
        let pts = sample_curve(&circle, 0.0, 1.0, tol).unwrap();
        for w in pts.windows(2) {
            // sagitta of a chord on the unit circle
            let half = 0.5 * (w[1] - w[0]).norm();
            assert!(1.0 - (1.0 - half * half).sqrt() <= tol * 1.01);
        }
        assert_eq!(pts.first(), Some(&ComplexPoint::new(1.0, 0.0)));
    }

    #[test]
    fn coarse_grid() {
        let line = |t: f64| Ok(ComplexPoint::new(t, 0.0));
        assert_eq!(sample_curve(&line, 0.0, 1.0, f64::INFINITY).unwrap().len(), INITIAL_INTERVALS + 1);
        assert!(sample_curve(&line, 1.0, 1.0, 1.0).is_err());
    }
}
