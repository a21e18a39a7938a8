mod common;

use std::f64::consts::{PI, SQRT_2};

use approx::assert_abs_diff_eq;
use ngon_spiral::convergence::{orbit_center, ORBIT_RADIUS};
use ngon_spiral::numerics::AccelerationSettings;
use ngon_spiral::spiral::{
    center, convex_intersection_area, interpolated_point, interpolated_vertex, polygon, polygons, q_term, rotation,
    theta, vertex, VertexSequence,
};
use ngon_spiral::telescoping::{q_closed, vertex_closed};
use ngon_spiral::{ComplexPoint, LengthFunction};

use common::{harmonic_table, interpolant_brute_force, theta_by_recurrence, turns, vertices_by_recurrence};

const P1: LengthFunction = LengthFunction::PowerLaw { s: 1.0 };
const P0: LengthFunction = LengthFunction::PowerLaw { s: 0.0 };

fn c(re: f64, im: f64) -> ComplexPoint {
    ComplexPoint::new(re, im)
}

#[test]
fn length_function_values() {
    assert_abs_diff_eq!(P1.eval(3.0).unwrap(), 1.0 / 3.0, epsilon = 1e-16);
    assert_abs_diff_eq!(LengthFunction::Telescoping.eval(4.0).unwrap(), 0.0, epsilon = 1e-15);
    assert_abs_diff_eq!(LengthFunction::Inscribed { s: 0.0 }.eval(4.0).unwrap(), SQRT_2, epsilon = 1e-15);
    assert_eq!(LengthFunction::PowerLaw { s: 0.5 }.asymptotic_exponent(), 0.5);
    assert_eq!(LengthFunction::Inscribed { s: -1.0 }.asymptotic_exponent(), 0.0);
    assert_eq!(LengthFunction::AreaNormalized { s: 2.0 }.asymptotic_exponent(), 2.0);
}

#[test]
fn area_normalized_polygons_have_the_requested_area() {
    let f = LengthFunction::AreaNormalized { s: 1.5 };
    for n in 3..=40 {
        let p = polygon(&f, n).unwrap();
        assert_abs_diff_eq!(p.area(), (n as f64).powf(-1.5), epsilon = 1e-14);
    }
}

#[test]
fn telescoping_length_is_negative_exactly_between_its_zeros() {
    let l = LengthFunction::Telescoping;
    for i in 1..=4000 {
        let x = 1.0 + i as f64 * 0.001;
        let v = l.eval(x).unwrap();
        if x > 4.0 / 3.0 + 1e-9 && x < 4.0 - 1e-9 {
            assert!(v < 0.0, "L({x}) = {v}");
        } else if (x - 4.0 / 3.0).abs() > 1e-9 && (x - 4.0).abs() > 1e-9 {
            assert!(v > 0.0, "L({x}) = {v}");
        }
    }
}

#[test]
fn theta_first_values() {
    assert_abs_diff_eq!(theta(2.0).unwrap(), -3.0 * PI, epsilon = 1e-15);
    assert_abs_diff_eq!(theta(3.0).unwrap(), -11.0 * PI / 3.0, epsilon = 1e-14);
    assert_abs_diff_eq!(theta(4.0).unwrap(), -23.0 * PI / 6.0, epsilon = 1e-14);
}

#[test]
fn theta_satisfies_the_angular_recurrence() {
    let reference = theta_by_recurrence(10_001);
    for n in 2..10_000u64 {
        let nf = n as f64;
        let (a, b) = (theta(nf).unwrap(), theta(nf + 1.0).unwrap());
        let step = b - a - (nf - 2.0) * PI / nf - (nf - 1.0) * PI / (nf + 1.0) + PI;
        assert!(step.abs() < 1e-9, "n = {n}: {step:e}");
        assert!((a - reference[n as usize]).abs() < 1e-9, "n = {n}");
    }
}

#[test]
fn rotation_sign_identity() {
    let h = harmonic_table(10_000);
    for k in 2..=10_000usize {
        let kf = k as f64;
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        let expected = sign * turns(1.0 / kf - 2.0 * h[k]);
        assert!((rotation(kf).unwrap() - expected).norm() < 1e-10, "k = {k}");
    }
}

#[test]
fn vertices_match_recurrence_oracle() {
    for s in [1.0, 0.5, 0.0] {
        let f = LengthFunction::PowerLaw { s };
        let reference = vertices_by_recurrence(s, 2000);
        let seq = VertexSequence::new(&f, 2000).unwrap();
        for (n, v) in seq.iter() {
            assert!((v - reference[n as usize]).norm() < 1e-9, "s = {s}, n = {n}");
        }
    }
}

#[test]
fn first_vertices() {
    assert_eq!(vertex(&P1, 2).unwrap(), c(0.0, 0.0));
    let v3 = vertex(&P1, 3).unwrap();
    assert!((v3 - c(1.0 / 6.0, 3f64.sqrt() / 6.0)).norm() < 1e-15);
    let t3 = vertex(&LengthFunction::Telescoping, 3).unwrap();
    assert!((t3 - c(-0.5, -3f64.sqrt() / 2.0)).norm() < 1e-15);
    assert!((t3 - vertex_closed(3.0).unwrap()).norm() < 1e-14);
}

#[test]
fn center_offsets() {
    assert!(q_term(&LengthFunction::Telescoping, 4.0).unwrap().norm() < 1e-15);
    assert_abs_diff_eq!(q_term(&P1, 4.0).unwrap().norm(), 1.0 / (4.0 * SQRT_2), epsilon = 1e-15);
    let q3 = q_term(&LengthFunction::Telescoping, 3.0).unwrap();
    assert!((q3 - q_closed(3.0).unwrap()).norm() < 1e-12);
    for m in 3..=2000u64 {
        let direct = q_term(&LengthFunction::Telescoping, m as f64).unwrap();
        assert!((direct - q_closed(m as f64).unwrap()).norm() < 1e-10, "m = {m}");
    }
}

#[test]
fn centers() {
    let c3 = center(&P1, 3).unwrap();
    let tri = polygon(&P1, 3).unwrap();
    for v in &tri.vertices {
        assert_abs_diff_eq!((v - c3).norm(), (1.0 / 3.0) / 3f64.sqrt(), epsilon = 1e-15);
    }
    let t4 = LengthFunction::Telescoping;
    assert!((center(&t4, 4).unwrap() - vertex(&t4, 4).unwrap()).norm() < 1e-15);
    assert!((center(&P0, 3).unwrap() - 3.0 * c3).norm() < 1e-15);
}

#[test]
fn first_polygons() {
    let tri = polygon(&P1, 3).unwrap();
    assert_eq!(tri.vertices.len(), 3);
    assert_eq!(tri.vertices[1], vertex(&P1, 2).unwrap());
    assert!((tri.vertices[0] - vertex(&P1, 3).unwrap()).norm() < 1e-15);
    assert!(tri.vertices.iter().all(|v| v.re >= -1e-15 && v.im >= -1e-15), "first quadrant");
    let sq = polygon(&P1, 4).unwrap();
    assert!(sq.side_lengths().iter().all(|s| (s - 0.25).abs() < 1e-15));
    // the square sits on the triangle's upper right edge, from V(3) towards (1/3, 0)
    assert!((sq.vertices[1] - tri.vertices[0]).norm() < 1e-15);
    let edge = tri.vertices[2] - tri.vertices[0];
    let along = sq.vertices[2] - tri.vertices[0];
    assert!((along.re * edge.im - along.im * edge.re).abs() < 1e-15);
    assert_abs_diff_eq!(along.norm(), 0.25, epsilon = 1e-15);
    assert!(polygon(&LengthFunction::Telescoping, 4).unwrap().degenerate);
}

#[test]
fn polygon_geometry_invariants() {
    for f in [P1, LengthFunction::Inscribed { s: 0.5 }, LengthFunction::Telescoping, LengthFunction::Circumscribed { s: 1.0 }] {
        for p in polygons(&f, 40).unwrap() {
            let l = f.eval(p.n as f64).unwrap().abs();
            for side in p.side_lengths() {
                assert_abs_diff_eq!(side, l, epsilon = 1e-10);
            }
            assert!((p.vertices[p.shared_prev_index] - vertex(&f, p.n - 1).unwrap()).norm() < 1e-10);
            assert!((p.vertices[p.shared_next_index] - vertex(&f, p.n).unwrap()).norm() < 1e-10);
        }
    }
}

#[test]
fn consecutive_polygons_do_not_overlap() {
    let polys = polygons(&P1, 13).unwrap();
    for pair in polys.windows(2) {
        let area = convex_intersection_area(&pair[0].vertices, &pair[1].vertices);
        assert!(area < 1e-12, "{}-gon and {}-gon overlap by {area:e}", pair[0].n, pair[1].n);
    }
}

#[test]
fn interpolant_agrees_with_vertices_at_integers() {
    let settings = AccelerationSettings::default();
    for m in 3..=12u64 {
        let v = interpolated_point(&P1, m as f64, &settings).unwrap();
        assert!((v - vertex(&P1, m).unwrap()).norm() < 1e-8, "m = {m}");
    }
}

#[test]
fn interpolant_between_integers_matches_brute_force() {
    let settings = AccelerationSettings::default();
    let v = interpolated_vertex(&P1, 3.5, &settings).unwrap();
    assert!(v.converged);
    let oracle = interpolant_brute_force(3, 1_000_000);
    assert!((v.value - oracle).norm() < 1e-8, "{} vs {oracle}", v.value);
    // between V(3) and V(4)
    let (a, b) = (vertex(&P1, 3).unwrap(), vertex(&P1, 4).unwrap());
    assert!(v.value.re > a.re && v.value.re < b.re);
    assert!(v.value.im > a.im && v.value.im < b.im);
}

#[test]
fn zero_exponent_interpolant_approaches_the_orbit() {
    let settings = AccelerationSettings::default();
    let orbit = orbit_center(&settings).unwrap();
    for m in [500u64, 5000] {
        let v = interpolated_point(&P0, (2 * m) as f64, &settings).unwrap();
        let direct = vertex(&P0, 2 * m).unwrap();
        assert!((v - direct).norm() < 1e-6, "m = {m}: {v} vs {direct}");
        assert!(((v - orbit.center).norm() - ORBIT_RADIUS).abs() < 1e-3);
    }
}

#[test]
fn interpolant_refuses_divergent_and_out_of_domain() {
    let settings = AccelerationSettings::default();
    assert!(interpolated_vertex(&LengthFunction::PowerLaw { s: -1.0 }, 3.5, &settings).is_err());
    assert!(interpolated_vertex(&P1, 1.0, &settings).is_err());
}
