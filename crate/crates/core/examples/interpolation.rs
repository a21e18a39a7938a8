//! The smooth curve through the vertices, evaluated between integers.
//!
//! ```bash
//! cargo run -p ngon-spiral --example interpolation --release
//! ```

use ngon_spiral::numerics::AccelerationSettings;
use ngon_spiral::spiral::{interpolated_vertex, vertex};
use ngon_spiral::LengthFunction;

fn main() -> ngon_spiral::Result<()> {
    let f = LengthFunction::PowerLaw { s: 1.0 };
    let settings = AccelerationSettings::default();
    for n in [3.0, 3.25, 3.5, 3.75, 4.0, 6.5, 10.0] {
        let v = interpolated_vertex(&f, n, &settings)?;
        let check = if n.fract() == 0.0 {
            format!("  |V - Vtilde| = {:.1e}", (vertex(&f, n as u64)? - v.value).norm())
        } else {
            String::new()
        };
        println!("Vtilde({n}) = {:.12}{check}", v.value);
    }
    match interpolated_vertex(&LengthFunction::PowerLaw { s: -0.5 }, 3.5, &settings) {
        Err(e) => println!("s = -0.5: {e}"),
        Ok(v) => println!("unexpected value {v:?}"),
    }
    Ok(())
}
