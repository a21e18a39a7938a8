//! SVG figures and CSV/JSON point tables.
//!
//! A [`Scene`] collects polygons, marker sequences and sampled curves in the
//! complex plane. [`render_svg`] maps it onto an 800 px wide canvas with the
//! imaginary axis pointing up; the map is written into the document's
//! `<metadata>` so emitted coordinates can be inverted.

mod figures;
mod sampling;
mod svg;
mod table;

pub use figures::{
    convergence_figure, orbit_figure, q_figure, spiral_figure, telescoping_figure, Figure,
    FigureSettings,
};
pub use sampling::sample_curve;
pub use svg::{render_svg, VIEWPORT_NAMESPACE};
pub use table::{export_table, parse_table, rows_from_points, TableFormat, TableRow};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::spiral::{ComplexPoint, PolygonGeometry};

/// Canvas width in pixels.
pub const CANVAS_WIDTH: f64 = 800.0;
/// Padding on each side, as a fraction of the larger content extent.
pub const MARGIN_FRACTION: f64 = 0.05;
/// Largest allowed distance, in pixels, between a sampled curve and its chords.
pub const CHORD_TOLERANCE_PX: f64 = 0.2;

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Style {
    pub polygon_stroke: f64,
    pub curve_stroke: f64,
    pub marker_radius: f64,
}

impl Default for Style {
    fn default() -> Self {
        Style {
            polygon_stroke: 1.0,
            curve_stroke: 1.5,
            marker_radius: 2.5,
        }
    }
}

/// A named list of points. For markers the order is the sequence order; for
/// curves it is the sampling order.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Series {
    pub name: String,
    pub points: Vec<ComplexPoint>,
}

/// Axis-aligned box in the complex plane.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Viewport {
    pub min: ComplexPoint,
    pub max: ComplexPoint,
}

impl Viewport {
    pub fn width(&self) -> f64 {
        self.max.re - self.min.re
    }

    pub fn height(&self) -> f64 {
        self.max.im - self.min.im
    }

    pub fn contains(&self, z: ComplexPoint) -> bool {
        (self.min.re..=self.max.re).contains(&z.re) && (self.min.im..=self.max.im).contains(&z.im)
    }
}

/// Affine map from the plane to pixel coordinates, `y` flipped.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct ViewportMap {
    pub x_min: f64,
    pub y_max: f64,
    /// Pixels per unit length.
    pub scale: f64,
    pub width: f64,
    pub height: f64,
}

impl ViewportMap {
    pub fn new(viewport: &Viewport, width: f64) -> Self {
        let scale = width / viewport.width();
        ViewportMap {
            x_min: viewport.min.re,
            y_max: viewport.max.im,
            scale,
            width,
            height: viewport.height() * scale,
        }
    }

    pub fn to_px(&self, z: ComplexPoint) -> (f64, f64) {
        ((z.re - self.x_min) * self.scale, (self.y_max - z.im) * self.scale)
    }

    pub fn from_px(&self, x: f64, y: f64) -> ComplexPoint {
        ComplexPoint::new(self.x_min + x / self.scale, self.y_max - y / self.scale)
    }
}

#[derive(Clone, Debug, Default, PartialEq, Serialize, Deserialize)]
pub struct Scene {
    pub polygons: Vec<PolygonGeometry>,
    pub point_sequences: Vec<Series>,
    pub curves: Vec<Series>,
    pub style: Style,
}

impl Scene {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn is_empty(&self) -> bool {
        self.polygons.is_empty()
            && self.point_sequences.iter().all(|s| s.points.is_empty())
            && self.curves.iter().all(|s| s.points.is_empty())
    }

    pub fn add_polygons(&mut self, polygons: impl IntoIterator<Item = PolygonGeometry>) -> &mut Self {
        self.polygons.extend(polygons);
        self
    }

    pub fn add_points(&mut self, name: impl Into<String>, points: Vec<ComplexPoint>) -> &mut Self {
        self.point_sequences.push(Series { name: name.into(), points });
        self
    }

    pub fn add_curve(&mut self, name: impl Into<String>, points: Vec<ComplexPoint>) -> &mut Self {
        self.curves.push(Series { name: name.into(), points });
        self
    }

    /// Samples `curve` on `[lo, hi]` finely enough for the viewport the scene
    /// would have with a coarse version of the curve added. Content added
    /// later can only shrink the pixel scale, so the tolerance still holds.
    pub fn add_curve_fn<F>(&mut self, name: impl Into<String>, curve: F, lo: f64, hi: f64) -> Result<&mut Self>
    where
        F: Fn(f64) -> Result<ComplexPoint>,
    {
        let coarse = sample_curve(&curve, lo, hi, f64::INFINITY)?;
        let mut probe = self.clone();
        probe.add_curve("", coarse);
        let map = probe.viewport_map()?;
        let points = sample_curve(&curve, lo, hi, CHORD_TOLERANCE_PX / map.scale)?;
        Ok(self.add_curve(name, points))
    }

    fn all_points(&self) -> impl Iterator<Item = (&str, ComplexPoint)> + '_ {
        let polys = self
            .polygons
            .iter()
            .flat_map(|p| p.vertices.iter().chain(std::iter::once(&p.center)).map(|&z| ("polygons", z)));
        let series = self
            .point_sequences
            .iter()
            .chain(&self.curves)
            .flat_map(|s| s.points.iter().map(move |&z| (s.name.as_str(), z)));
        polys.chain(series)
    }

    /// Checks that every coordinate is finite.
    pub fn validate(&self) -> Result<()> {
        if self.is_empty() {
            return Err(Error::EmptyScene);
        }
        match self.all_points().find(|(_, z)| !(z.re.is_finite() && z.im.is_finite())) {
            Some((name, _)) => Err(Error::NonFiniteScene(name.to_string())),
            None => Ok(()),
        }
    }

    /// Bounding box of the content padded by [`MARGIN_FRACTION`] of the
    /// larger extent on every side. Content with no extent gets a unit box.
    pub fn viewport(&self) -> Result<Viewport> {
        self.validate()?;
        let (mut lo, mut hi) = (
            ComplexPoint::new(f64::INFINITY, f64::INFINITY),
            ComplexPoint::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        );
        for (_, z) in self.all_points() {
            lo = ComplexPoint::new(lo.re.min(z.re), lo.im.min(z.im));
            hi = ComplexPoint::new(hi.re.max(z.re), hi.im.max(z.im));
        }
        let extent = (hi.re - lo.re).max(hi.im - lo.im);
        let extent = if extent > 0.0 { extent } else { 1.0 };
        let pad = ComplexPoint::new(1.0, 1.0) * (MARGIN_FRACTION * extent);
        if hi.re - lo.re == 0.0 && hi.im - lo.im == 0.0 {
            let half = ComplexPoint::new(0.5, 0.5);
            return Ok(Viewport { min: lo - half - pad, max: hi + half + pad });
        }
        Ok(Viewport { min: lo - pad, max: hi + pad })
    }

    pub fn viewport_map(&self) -> Result<ViewportMap> {
        Ok(ViewportMap::new(&self.viewport()?, CANVAS_WIDTH))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn viewport_has_margin() {
        let mut scene = Scene::new();
        scene.add_points("p", vec![ComplexPoint::new(0.0, 0.0), ComplexPoint::new(2.0, 1.0)]);
        let v = scene.viewport().unwrap();
        assert!((v.min.re + 0.1).abs() < 1e-15 && (v.max.re - 2.1).abs() < 1e-15);
        assert!((v.min.im + 0.1).abs() < 1e-15 && (v.max.im - 1.1).abs() < 1e-15);
    }

    #[test]
    fn map_round_trips() {
        let mut scene = Scene::new();
        scene.add_points("p", vec![ComplexPoint::new(-1.0, 3.0), ComplexPoint::new(2.0, -1.0)]);
        let map = scene.viewport_map().unwrap();
        let z = ComplexPoint::new(0.3, 0.7);
        let (x, y) = map.to_px(z);
        assert!((map.from_px(x, y) - z).norm() < 1e-14);
        // y axis points up
        assert!(map.to_px(ComplexPoint::new(0.0, 1.0)).1 < map.to_px(ComplexPoint::new(0.0, 0.0)).1);
    }

    #[test]
    fn invalid_scenes() {
        assert_eq!(Scene::new().viewport(), Err(Error::EmptyScene));
        let mut scene = Scene::new();
        scene.add_points("bad", vec![ComplexPoint::new(f64::NAN, 0.0)]);
        assert_eq!(scene.validate(), Err(Error::NonFiniteScene("bad".into())));
    }
}
