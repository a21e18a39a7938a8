//! Ready-made scenes for the standard plots.

use num_complex::Complex64;

use super::{Scene, TableRow};
use crate::convergence::{convergence_curve, limit_point, orbit_center, ORBIT_RADIUS};
use crate::error::{domain, Result};
use crate::lengthfns::LengthFunction;
use crate::numerics::AccelerationSettings;
use crate::spiral::{interpolated_point, polygons, ComplexPoint, VertexSequence};
use crate::telescoping::{center_closed, q_closed, vertex_closed, TelescopingConstants};

/// A scene plus every computed point it shows, as table rows.
#[derive(Clone, Debug, PartialEq)]
pub struct Figure {
    pub scene: Scene,
    pub rows: Vec<TableRow>,
    /// False when some accelerated sum behind the figure did not converge.
    pub converged: bool,
}

impl Figure {
    fn new() -> Self {
        Figure { scene: Scene::new(), rows: Vec::new(), converged: true }
    }

    fn markers(&mut self, name: &str, points: Vec<(f64, ComplexPoint)>) {
        self.rows.extend(points.iter().map(|&(n, z)| TableRow::new(name, n, z)));
        self.scene.add_points(name, points.into_iter().map(|(_, z)| z).collect());
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct FigureSettings {
    /// Draw polygons and their centers only up to this many sides; `None`
    /// draws all of them.
    pub polygons_up_to: Option<u64>,
    /// Draw the smooth interpolation curve through the vertices.
    pub interpolant: bool,
    pub acceleration: AccelerationSettings,
}

impl Default for FigureSettings {
    fn default() -> Self {
        FigureSettings {
            polygons_up_to: None,
            interpolant: true,
            acceleration: AccelerationSettings::default()
                .with_tolerance(1e-8)
                .expect("positive tolerance"),
        }
    }
}

fn check_max_n(max_n: u64) -> Result<()> {
    if max_n < 3 {
        return Err(domain("figure", max_n as f64, "max_n >= 3"));
    }
    Ok(())
}

/// Polygons, shared vertices, centers and (optionally) the interpolant of
/// the spiral for `f`. The telescoping spiral gets [`telescoping_figure`].
pub fn spiral_figure(f: &LengthFunction, max_n: u64, settings: &FigureSettings) -> Result<Figure> {
    if *f == LengthFunction::Telescoping {
        return telescoping_figure(max_n, settings);
    }
    check_max_n(max_n)?;
    let mut fig = Figure::new();
    let limit = settings.polygons_up_to.unwrap_or(max_n).clamp(3, max_n);
    let polys = polygons(f, limit)?;
    let centers: Vec<(f64, ComplexPoint)> = polys.iter().map(|p| (p.n as f64, p.center)).collect();
    fig.scene.add_polygons(polys);
    if settings.interpolant && !f.is_divergent() {
        let acc = settings.acceleration;
        fig.scene
            .add_curve_fn("interpolant", |x| interpolated_point(f, x, &acc), 2.0, max_n as f64)?;
    }
    let vertices = VertexSequence::new(f, max_n)?;
    fig.markers("vertices", vertices.iter().map(|(n, z)| (n as f64, z)).collect());
    fig.markers("centers", centers);
    Ok(fig)
}

/// The `s = 0` spiral with its limiting circle and the circle's center.
/// Polygons stop at the 12-gon unless the settings say otherwise.
pub fn orbit_figure(max_n: u64, settings: &FigureSettings) -> Result<Figure> {
    let settings = FigureSettings { polygons_up_to: settings.polygons_up_to.or(Some(12)), ..*settings };
    let mut fig = spiral_figure(&LengthFunction::PowerLaw { s: 0.0 }, max_n, &settings)?;
    let orbit = orbit_center(&settings.acceleration)?;
    fig.converged &= orbit.converged;
    let center = orbit.center;
    fig.scene.add_curve_fn(
        "orbit",
        |t| Ok(center + Complex64::from_polar(ORBIT_RADIUS, std::f64::consts::TAU * t)),
        0.0,
        1.0,
    )?;
    fig.markers("orbit-center", vec![(0.0, center)]);
    Ok(fig)
}

/// Picks `count` parameters whose curve points are equally spaced in arc
/// length along the polyline `(params[i], points[i])`.
fn equal_arc_parameters(params: &[f64], points: &[ComplexPoint], count: usize) -> Vec<f64> {
    let mut arc = vec![0.0];
    for w in points.windows(2) {
        arc.push(arc.last().unwrap() + (w[1] - w[0]).norm());
    }
    let total = *arc.last().unwrap();
    if count < 2 || total == 0.0 {
        return params.iter().copied().take(count.max(1)).collect();
    }
    (0..count)
        .map(|i| {
            if i == count - 1 {
                return *params.last().unwrap();
            }
            let target = total * i as f64 / (count - 1) as f64;
            let j = arc.partition_point(|&a| a <= target).clamp(1, arc.len() - 1);
            let u = (target - arc[j - 1]) / (arc[j] - arc[j - 1]);
            // the grid is geometric, so interpolate ln s
            (params[j - 1].ln() + u * (params[j].ln() - params[j - 1].ln())).exp()
        })
        .collect()
}

/// The curve `s ↦ W(s)` on a geometric grid, with `spirals` power-law
/// spirals whose limits are equally spaced along it. Each of those spirals
/// is drawn up to `max_n`.
pub fn convergence_figure(
    s_min: f64,
    s_max: f64,
    samples: usize,
    spirals: usize,
    max_n: u64,
    settings: &FigureSettings,
) -> Result<Figure> {
    check_max_n(max_n)?;
    let mut fig = Figure::new();
    let curve = convergence_curve(s_min, s_max, samples, &settings.acceleration)?;
    fig.converged &= curve.iter().all(|c| c.limit.converged);
    let params: Vec<f64> = curve.iter().map(|c| c.s).collect();
    let points: Vec<ComplexPoint> = curve.iter().map(|c| c.limit.value).collect();
    fig.scene.add_curve("W", points.clone());
    fig.rows.extend(curve.iter().map(|c| TableRow::new("W", c.s, c.limit.value)));

    let mut limits = Vec::new();
    for s in equal_arc_parameters(&params, &points, spirals) {
        let f = LengthFunction::PowerLaw { s };
        let w = limit_point(s, &settings.acceleration)?;
        fig.converged &= w.converged;
        limits.push((s, w.value));
        let name = format!("spiral s={s}");
        if settings.interpolant {
            let acc = settings.acceleration;
            fig.scene
                .add_curve_fn(name, |x| interpolated_point(&f, x, &acc), 2.0, max_n as f64)?;
        } else {
            let v = VertexSequence::new(&f, max_n)?;
            fig.scene.add_curve(name, v.points().to_vec());
        }
    }
    fig.markers("limits", limits);
    Ok(fig)
}

/// Polygons of the telescoping spiral up to `max_n`, its vertices on the
/// unit circle about -1, its centers, and the continuations `V_L`, `C_L`
/// from `n = 1.05`.
pub fn telescoping_figure(max_n: u64, settings: &FigureSettings) -> Result<Figure> {
    check_max_n(max_n)?;
    let f = LengthFunction::Telescoping;
    let mut fig = Figure::new();
    let limit = settings.polygons_up_to.unwrap_or(max_n).clamp(3, max_n);
    let polys = polygons(&f, limit)?;
    let centers: Vec<(f64, ComplexPoint)> = polys.iter().map(|p| (p.n as f64, p.center)).collect();
    fig.scene.add_polygons(polys);
    let hi = max_n as f64;
    fig.scene.add_curve_fn("V_L", vertex_closed, 1.05, hi)?;
    fig.scene.add_curve_fn("C_L", center_closed, 1.05, hi)?;
    let vertices = VertexSequence::new(&f, max_n)?;
    fig.markers("vertices", vertices.iter().map(|(n, z)| (n as f64, z)).collect());
    fig.markers("centers", centers);
    Ok(fig)
}

/// `Q_L` on `[lo, hi]` with its values at the integers and its zeros.
pub fn q_figure(lo: f64, hi: f64) -> Result<Figure> {
    if !(lo > 1.0) || !(hi > lo) {
        return Err(domain("q_figure", lo, "1 < lo < hi"));
    }
    let mut fig = Figure::new();
    fig.scene.add_curve_fn("Q_L", q_closed, lo, hi)?;
    let integers = (lo.ceil() as u64..=hi.floor() as u64)
        .map(|n| q_closed(n as f64).map(|q| (n as f64, q)))
        .collect::<Result<Vec<_>>>()?;
    fig.markers("Q_L integers", integers);
    let zeros = [TelescopingConstants::ZERO_LOW, TelescopingConstants::ZERO_HIGH]
        .into_iter()
        .filter(|n| (lo..=hi).contains(n))
        .map(|n| q_closed(n).map(|q| (n, q)))
        .collect::<Result<Vec<_>>>()?;
    fig.markers("zeros", zeros);
    Ok(fig)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn equal_arc_on_a_line() {
        let params = [1.0, 2.0, 4.0, 8.0];
        let points: Vec<ComplexPoint> = [0.0, 1.0, 2.0, 3.0].iter().map(|&x| Complex64::new(x, 0.0)).collect();
        let picked = equal_arc_parameters(&params, &points, 3);
        assert_eq!(picked.len(), 3);
        assert_eq!(picked[0], 1.0);
        assert!((picked[1] - 8f64.sqrt()).abs() < 1e-12);
        assert_eq!(picked[2], 8.0);
    }

    #[test]
    fn spiral_figure_contents() {
        let settings = FigureSettings { interpolant: false, ..Default::default() };
        let fig = spiral_figure(&LengthFunction::PowerLaw { s: 1.0 }, 9, &settings).unwrap();
        assert_eq!(fig.scene.polygons.len(), 7);
        assert_eq!(fig.rows[0], TableRow::new("vertices", 2.0, Complex64::new(0.0, 0.0)));
        assert!(spiral_figure(&LengthFunction::PowerLaw { s: 1.0 }, 2, &settings).is_err());
    }

    #[test]
    fn q_figure_marks_zeros() {
        let fig = q_figure(1.02, 35.0).unwrap();
        let zeros: Vec<_> = fig.rows.iter().filter(|r| r.name == "zeros").collect();
        assert_eq!(zeros.len(), 2);
        assert!(zeros.iter().all(|r| r.point().norm() < 1e-14));
    }
}
