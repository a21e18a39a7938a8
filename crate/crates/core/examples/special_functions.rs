//! Harmonic numbers, digamma, Hurwitz zeta and the alternating-series accelerators.
//!
//! ```bash
//! cargo run -p ngon-spiral --example special_functions
//! ```

use ngon_spiral::numerics::{
    digamma, harmonic_continued, harmonic_number, hurwitz_zeta, sum_alternating, AccelerationSettings, Strategy,
};
use num_complex::Complex64;

fn main() -> ngon_spiral::Result<()> {
    for n in [1, 10, 1000, 1_000_000] {
        println!("H_{n} = {:.15}", harmonic_number(n)?);
    }
    let phi = (1.0 + 5f64.sqrt()) / 2.0;
    println!("psi(phi) = {:.15}", digamma(phi)?);
    println!("H_phi = gamma + psi(phi + 1) = {:.15}", harmonic_continued(phi)?);
    println!("zeta(1.5, 3/2) = {:.15}", hurwitz_zeta(1.5, 1.5)?);

    // ln 2 = 1 - 1/2 + 1/3 - ...; the accelerators supply the signs
    let term = |k: usize| Complex64::new(1.0 / (k + 1) as f64, 0.0);
    for strategy in [Strategy::EulerTransform, Strategy::PairedTerms, Strategy::DirectPartialSums] {
        let settings = AccelerationSettings::new(1e-12, 2_000, strategy)?;
        let sum = sum_alternating(term, &settings);
        println!(
            "{strategy:?}: ln 2 ~ {:.15} (error {:.1e}, {} terms, converged {})",
            sum.value.re,
            (sum.value.re - 2f64.ln()).abs(),
            sum.terms_used,
            sum.converged
        );
    }
    Ok(())
}
