//! The built-in side-length functions and how each spiral behaves as n grows.
//!
//! ```bash
//! cargo run -p ngon-spiral --example length_catalog
//! ```

use ngon_spiral::convergence::{classify, ConvergenceClass};
use ngon_spiral::LengthFunction;

fn main() -> ngon_spiral::Result<()> {
    let catalog = [
        "power:1",
        "power:0.5",
        "power:0",
        "power:-0.5",
        "inscribed:0",
        "inscribed:-0.5",
        "circumscribed:1",
        "area:1",
        "telescoping",
    ];
    for spec in catalog {
        let f: LengthFunction = spec.parse()?;
        let a = f.asymptotics();
        print!("{f:<16} l(5) = {:+.6}  l ~ {:.4} n^{:<5} ", f.eval(5.0)?, a.coefficient, 0.0 - a.exponent);
        match classify(&f).class {
            ConvergenceClass::Point { value, error_estimate } => {
                println!("Point {value:.10} (+/- {error_estimate:.0e})")
            }
            ConvergenceClass::CircularOrbit { center, radius } => {
                println!("CircularOrbit center {center:.10} radius {radius}")
            }
            ConvergenceClass::Divergent { reason } => println!("Divergent: {reason}"),
        }
    }
    Ok(())
}
