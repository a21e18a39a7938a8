use std::f64::consts::{PI, TAU};

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use super::{inverse_chord, rotation_from, ComplexPoint, PhaseWalk};
use crate::error::{domain, Result};
use crate::lengthfns::LengthFunction;
use crate::numerics::ComplexAccumulator;

/// One regular polygon of the spiral.
///
/// Vertices run counter-clockwise about the center starting from `V(n)`, so
/// `vertices[1]` is `V(n-1)`: the side shared with the previous polygon.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PolygonGeometry {
    pub n: u64,
    /// Signed side length `l(n)`; negative lengths flip the polygon through
    /// the shared vertex.
    pub side_length: f64,
    pub interior_angle: f64,
    pub center: ComplexPoint,
    pub vertices: Vec<ComplexPoint>,
    pub shared_prev_index: usize,
    pub shared_next_index: usize,
    /// Zero side length: every vertex coincides with the center.
    pub degenerate: bool,
}

impl PolygonGeometry {
    fn build(n: u64, side_length: f64, vertex: ComplexPoint, rotation: Complex64) -> Self {
        let nf = n as f64;
        let q = side_length * rotation * inverse_chord(nf);
        let center = vertex + q;
        let spoke = -q;
        let vertices = (0..n)
            .map(|k| {
                let (s, c) = (TAU * k as f64 / nf).sin_cos();
                center + spoke * Complex64::new(c, s)
            })
            .collect();
        PolygonGeometry {
            n,
            side_length,
            interior_angle: PI * (nf - 2.0) / nf,
            center,
            vertices,
            shared_prev_index: 1,
            shared_next_index: 0,
            degenerate: side_length == 0.0,
        }
    }

    pub fn circumradius(&self) -> f64 {
        self.side_length.abs() / (2.0 * (PI / self.n as f64).sin())
    }

    /// Lengths of the `n` sides, in vertex order.
    pub fn side_lengths(&self) -> Vec<f64> {
        let v = &self.vertices;
        (0..v.len())
            .map(|i| (v[(i + 1) % v.len()] - v[i]).norm())
            .collect()
    }

    pub fn area(&self) -> f64 {
        shoelace(&self.vertices).abs()
    }
}

/// The `n`-gon of the spiral.
pub fn polygon(f: &LengthFunction, n: u64) -> Result<PolygonGeometry> {
    if n < 3 {
        return Err(domain("polygon", n as f64, "n >= 3"));
    }
    let mut out = polygons(f, n)?;
    Ok(out.pop().expect("at least the n-gon"))
}

/// Polygons `3..=n_max`, built from one pass over the spiral.
pub fn polygons(f: &LengthFunction, n_max: u64) -> Result<Vec<PolygonGeometry>> {
    if n_max < 3 {
        return Err(domain("polygons", n_max as f64, "n_max >= 3"));
    }
    let mut walk = PhaseWalk::at_integer(2);
    let mut acc = ComplexAccumulator::new();
    let mut out = Vec::with_capacity((n_max - 2) as usize);
    for n in 3..=n_max {
        let (x, h) = walk.step();
        let side = f.value(x);
        let rot = rotation_from(x, h);
        acc.add(side * rot);
        out.push(PolygonGeometry::build(n, side, acc.value(), rot));
    }
    Ok(out)
}

fn cross(a: Complex64, b: Complex64) -> f64 {
    a.re * b.im - a.im * b.re
}

fn shoelace(pts: &[Complex64]) -> f64 {
    if pts.len() < 3 {
        return 0.0;
    }
    0.5 * (0..pts.len())
        .map(|i| cross(pts[i], pts[(i + 1) % pts.len()]))
        .sum::<f64>()
}

fn counter_clockwise(pts: &[Complex64]) -> Vec<Complex64> {
    let mut v = pts.to_vec();
    if shoelace(&v) < 0.0 {
        v.reverse();
    }
    v
}

/// Area of the intersection of two convex polygons (Sutherland–Hodgman).
pub fn convex_intersection_area(a: &[Complex64], b: &[Complex64]) -> f64 {
    if a.len() < 3 || b.len() < 3 {
        return 0.0;
    }
    let clip = counter_clockwise(b);
    let mut poly = counter_clockwise(a);
    for i in 0..clip.len() {
        if poly.is_empty() {
            break;
        }
        let (p, q) = (clip[i], clip[(i + 1) % clip.len()]);
        let edge = q - p;
        let inside = |z: Complex64| cross(edge, z - p) >= 0.0;
        let input = std::mem::take(&mut poly);
        for j in 0..input.len() {
            let cur = input[j];
            let prev = input[(j + input.len() - 1) % input.len()];
            let (ci, pi) = (inside(cur), inside(prev));
            if ci != pi {
                let d = cur - prev;
                let denom = cross(edge, d);
                if denom != 0.0 {
                    let t = cross(p - prev, edge) / -denom;
                    poly.push(prev + d * t);
                }
            }
            if ci {
                poly.push(cur);
            }
        }
    }
    shoelace(&poly).abs()
}
