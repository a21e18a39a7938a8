//! Self-intersections of parametric curves `t ↦ curve(t)` in the plane.
//!
//! The curve is sampled as a polyline, crossing segment pairs are found with
//! a sweep over segment bounding boxes, and each crossing is refined by a
//! damped Newton iteration on `curve(a) - curve(b) = 0` with a
//! central-difference Jacobian. When Newton fails the crossing bracket is
//! bisected instead.

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::spiral::ComplexPoint;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct IntersectSettings {
    /// Sampling step in parameter space.
    pub step: f64,
    /// Required `|curve(a) - curve(b)|` after refinement.
    pub tolerance: f64,
    /// Minimum `b - a`; closer pairs are the curve meeting itself trivially.
    pub separation: f64,
}

impl Default for IntersectSettings {
    fn default() -> Self {
        IntersectSettings {
            step: 1e-3,
            tolerance: 1e-10,
            separation: 1e-3,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Intersection {
    pub a: f64,
    pub b: f64,
    pub point: ComplexPoint,
    pub residual: f64,
}

const JACOBIAN_STEP: f64 = 1e-6;
const NEWTON_ITERATIONS: usize = 60;
const BISECTION_LEVELS: usize = 60;

#[derive(Clone, Copy, Debug)]
struct Segment {
    t0: f64,
    t1: f64,
    p0: Complex64,
    p1: Complex64,
}

impl Segment {
    fn min_x(&self) -> f64 {
        self.p0.re.min(self.p1.re)
    }
    fn max_x(&self) -> f64 {
        self.p0.re.max(self.p1.re)
    }
    fn overlaps_y(&self, other: &Segment) -> bool {
        self.p0.im.min(self.p1.im) <= other.p0.im.max(other.p1.im)
            && other.p0.im.min(other.p1.im) <= self.p0.im.max(self.p1.im)
    }
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

/// Parameters `(u, v)` in `[0, 1]²` where two segments cross, if they do.
fn segment_crossing(p0: Complex64, p1: Complex64, q0: Complex64, q1: Complex64) -> Option<(f64, f64)> {
    let d = p1 - p0;
    let e = q1 - q0;
    let denom = cross(d, e);
    if denom == 0.0 {
        return None;
    }
    let w = q0 - p0;
    let u = cross(w, e) / denom;
    let v = cross(w, d) / denom;
    ((0.0..=1.0).contains(&u) && (0.0..=1.0).contains(&v)).then_some((u, v))
}

fn eval<F>(curve: &F, t: f64) -> Result<Complex64>
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

fn newton<F>(curve: &F, mut a: f64, mut b: f64, tolerance: f64) -> Option<(f64, f64)>
where
    F: Fn(f64) -> Result<ComplexPoint>,
{
    let h = JACOBIAN_STEP;
    let g = |a: f64, b: f64| -> Option<Complex64> { Some(eval(curve, a).ok()? - eval(curve, b).ok()?) };
    let mut residual = g(a, b)?;
    for _ in 0..NEWTON_ITERATIONS {
        if residual.norm() < tolerance * 1e-3 {
            break;
        }
        let da = (eval(curve, a + h).ok()? - eval(curve, a - h).ok()?) / (2.0 * h);
        let db = -(eval(curve, b + h).ok()? - eval(curve, b - h).ok()?) / (2.0 * h);
        // [da db] (δa, δb)^T = -residual, columns as real 2-vectors
        let det = cross(da, db);
        if det == 0.0 || !det.is_finite() {
            return None;
        }
        let step_a = -cross(residual, db) / det;
        let step_b = -cross(da, residual) / det;
        let mut damping = 1.0;
        loop {
            let (na, nb) = (a + damping * step_a, b + damping * step_b);
            if let Some(r) = g(na, nb) {
                if r.norm() < residual.norm() {
                    a = na;
                    b = nb;
                    residual = r;
                    break;
                }
            }
            damping *= 0.5;
            if damping < 1e-10 {
                return (residual.norm() < tolerance).then_some((a, b));
            }
        }
    }
    (residual.norm() < tolerance).then_some((a, b))
}

fn bisect<F>(curve: &F, mut s: Segment, mut t: Segment) -> Result<(f64, f64)>
where
    F: Fn(f64) -> Result<ComplexPoint>,
{
    let halves = |seg: Segment| -> Result<[Segment; 2]> {
        let tm = 0.5 * (seg.t0 + seg.t1);
        let pm = eval(curve, tm)?;
        Ok([
            Segment { t0: seg.t0, t1: tm, p0: seg.p0, p1: pm },
            Segment { t0: tm, t1: seg.t1, p0: pm, p1: seg.p1 },
        ])
    };
    for _ in 0..BISECTION_LEVELS {
        let (ss, ts) = (halves(s)?, halves(t)?);
        let mut best: Option<(Segment, Segment)> = None;
        'search: for x in ss {
            for y in ts {
                if segment_crossing(x.p0, x.p1, y.p0, y.p1).is_some() {
                    best = Some((x, y));
                    break 'search;
                }
            }
        }
        match best {
            Some((x, y)) => {
                s = x;
                t = y;
            }
            None => break,
        }
    }
    let (u, v) = segment_crossing(s.p0, s.p1, t.p0, t.p1).unwrap_or((0.5, 0.5));
    Ok((s.t0 + u * (s.t1 - s.t0), t.t0 + v * (t.t1 - t.t0)))
}

/// Parameter pairs `a < b` in `[lo, hi]` with `curve(a) = curve(b)`,
/// sorted by `a`.
pub fn self_intersections<F>(
    curve: F,
    lo: f64,
    hi: f64,
    settings: &IntersectSettings,
) -> Result<Vec<Intersection>>
where
    F: Fn(f64) -> Result<ComplexPoint>,
{
    if !(settings.step > 0.0) || !(settings.tolerance > 0.0) {
        return Err(domain("self_intersections", settings.step.min(settings.tolerance), "step > 0 and tolerance > 0"));
    }
    if !(hi > lo) || !lo.is_finite() || !hi.is_finite() {
        return Err(domain("self_intersections", hi, "hi > lo"));
    }
    let count = ((hi - lo) / settings.step).ceil().max(1.0) as usize;
    let params: Vec<f64> = (0..=count)
        .map(|i| if i == count { hi } else { lo + (hi - lo) * i as f64 / count as f64 })
        .collect();
    let points = params.iter().map(|&t| eval(&curve, t)).collect::<Result<Vec<_>>>()?;
    let segments: Vec<Segment> = (0..count)
        .map(|i| Segment { t0: params[i], t1: params[i + 1], p0: points[i], p1: points[i + 1] })
        .collect();

    let mut order: Vec<usize> = (0..count).collect();
    order.sort_by(|&i, &j| segments[i].min_x().total_cmp(&segments[j].min_x()));
    let mut found: Vec<Intersection> = Vec::new();
    for (pos, &i) in order.iter().enumerate() {
        let si = segments[i];
        for &j in &order[pos + 1..] {
            let sj = segments[j];
            if sj.min_x() > si.max_x() {
                break;
            }
            let (i0, j0) = (i.min(j), i.max(j));
            if j0 - i0 < 2 || !si.overlaps_y(&sj) {
                continue;
            }
            let (s, t) = (segments[i0], segments[j0]);
            let Some((u, v)) = segment_crossing(s.p0, s.p1, t.p0, t.p1) else {
                continue;
            };
            let guess = (s.t0 + u * (s.t1 - s.t0), t.t0 + v * (t.t1 - t.t0));
            let (a, b) = match newton(&curve, guess.0, guess.1, settings.tolerance) {
                Some(ab) => ab,
                None => bisect(&curve, s, t)?,
            };
            let (a, b) = if a <= b { (a, b) } else { (b, a) };
            if b - a <= settings.separation {
                continue;
            }
            let pa = eval(&curve, a)?;
            let residual = (pa - eval(&curve, b)?).norm();
            if residual < settings.tolerance {
                found.push(Intersection { a, b, point: pa, residual });
            }
        }
    }
    found.sort_by(|x, y| x.a.total_cmp(&y.a).then(x.b.total_cmp(&y.b)));
    found.dedup_by(|x, y| (x.a - y.a).abs() < 1e-7 && (x.b - y.b).abs() < 1e-7);
    Ok(found)
}
