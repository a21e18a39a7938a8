//! The s = 0 spiral: its vertices settle onto a circle of diameter 1.
//!
//! ```bash
//! cargo run -p ngon-spiral --example orbit_center --release
//! ```

use ngon_spiral::convergence::{orbit_center, orbit_distance_law, ORBIT_RADIUS};
use ngon_spiral::numerics::AccelerationSettings;
use ngon_spiral::spiral::VertexSequence;
use ngon_spiral::LengthFunction;

fn main() -> ngon_spiral::Result<()> {
    let orbit = orbit_center(&AccelerationSettings::default())?;
    for (s, w) in &orbit.samples {
        println!("W({s:e}) = {:.15}", w.value);
    }
    println!("extrapolated center  {:.15}", orbit.center);
    println!("|center - W(1e-8)| = {:.2e}", orbit.surrogate_gap);

    let vertices = VertexSequence::new(&LengthFunction::PowerLaw { s: 0.0 }, 1_000_001)?;
    for n in [1_000, 10_000, 100_000, 1_000_000, 1_000_001] {
        let r = (vertices.at(n) - orbit.center).norm();
        println!("|V({n}) - center| - {ORBIT_RADIUS} = {:+.3e}", r - ORBIT_RADIUS);
    }

    for r in [1.25, 1.5, 2.0, 3.0] {
        let law = orbit_distance_law(r, 100_000)?;
        println!(
            "|U({r} n) - U(n)| at n = 1e5: {:.6}, |sin(2 pi ln r)| = {:.6}",
            law.empirical, law.predicted
        );
    }
    Ok(())
}
