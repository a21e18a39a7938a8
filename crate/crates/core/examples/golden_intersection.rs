//! Self-intersections of the telescoping spiral's center and correction curves.
//!
//! ```bash
//! cargo run -p ngon-spiral --example golden_intersection
//! ```

use ngon_spiral::intersect::{self_intersections, IntersectSettings};
use ngon_spiral::telescoping::{center_closed, golden_point, q_closed, TelescopingConstants};

fn main() -> ngon_spiral::Result<()> {
    let settings = IntersectSettings::default();
    let phi = TelescopingConstants::PHI;

    println!("C_L(n) = V_L(n) + Q_L(n) on [1.05, 6]:");
    for hit in self_intersections(center_closed, 1.05, 6.0, &settings)? {
        println!(
            "  a = {:.12}  b = {:.12}  point = {:.12}  residual = {:.1e}",
            hit.a, hit.b, hit.point, hit.residual
        );
    }
    println!("  expected a = φ = {phi:.12}, b = φ + 1 = {:.12}", phi + 1.0);
    let point = golden_point()?;
    let gap = (center_closed(phi)? - point).norm();
    println!("  closed-form point {point:.12} (|C_L(φ) - point| = {gap:.1e})");

    println!("Q_L(n) on [1.05, 6]:");
    for hit in self_intersections(q_closed, 1.05, 6.0, &settings)? {
        println!(
            "  a = {:.12}  b = {:.12}  point = {:.3e}  residual = {:.1e}",
            hit.a, hit.b, hit.point, hit.residual
        );
    }
    println!("  expected the zeros of L: a = 4/3, b = 4");
    Ok(())
}
