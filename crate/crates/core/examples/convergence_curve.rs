//! Limits W(s) of the power-law spirals, and the bounds that make the paired series converge.
//!
//! ```bash
//! cargo run -p ngon-spiral --example convergence_curve --release
//! ```

use ngon_spiral::convergence::{bound_a, bound_b, convergence_curve, paired_series_bound, PairedTerms};
use ngon_spiral::numerics::AccelerationSettings;

fn main() -> ngon_spiral::Result<()> {
    let settings = AccelerationSettings::default();
    for sample in convergence_curve(0.0000726, 1.77, 12, &settings)? {
        println!(
            "s = {:<10.6} W = {:.12}  (estimate {:.0e}, converged {})",
            sample.s, sample.limit.value, sample.limit.error_estimate, sample.limit.converged
        );
    }

    for s in [0.25, 0.5, 1.0] {
        let partial: f64 = PairedTerms::new(s)?.take(100_000).map(|t| t.value.norm()).sum();
        println!(
            "s = {s}: sum of |F(j)| over 1e5 terms {partial:.6} < bound {:.6}",
            paired_series_bound(s)?
        );
    }
    for j in [2, 10, 1000] {
        println!("A({j}, 0.5) = {:.3e}  B({j}) = {:.6}", bound_a(j, 0.5)?, bound_b(j)?);
    }
    Ok(())
}
