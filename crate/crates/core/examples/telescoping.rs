//! The telescoping spiral, its closed forms and both of its figures.
//!
//! ```bash
//! cargo run -p ngon-spiral --example telescoping -- telescoping.svg q_offsets.svg
//! ```

use ngon_spiral::render::{q_figure, render_svg, telescoping_figure, FigureSettings};
use ngon_spiral::telescoping::{q_limit_at_one, vertex_closed, verify_telescoping_identity, TelescopingConstants};

fn main() -> ngon_spiral::Result<()> {
    let mut args = std::env::args().skip(1);
    let fig_a = args.next().unwrap_or_else(|| "telescoping.svg".into());
    let fig_b = args.next().unwrap_or_else(|| "q_offsets.svg".into());

    let report = verify_telescoping_identity(2000)?;
    println!(
        "direct sums vs closed form up to n = 2000: {:.2e} (pairing {:.2e})",
        report.vertex_residual, report.pairing_residual
    );
    let worst = (1..=1000)
        .map(|i| 1.01 + 0.099 * i as f64)
        .map(|n| vertex_closed(n).map(|v| ((v + 1.0).norm() - 1.0).abs()))
        .try_fold(0.0f64, |m, r| r.map(|r| m.max(r)))?;
    println!("max ||V_L(n) + 1| - 1| on (1.01, 100]: {worst:.1e}");

    let q = q_limit_at_one()?;
    for (h, re) in &q.samples {
        println!("Re Q_L(1 + {h:e}) = {re:.9}");
    }
    println!(
        "extrapolated {:.9}, expected 4(1 - pi^2/6) = {:.9}",
        q.extrapolated,
        TelescopingConstants::Q_LIMIT_AT_1
    );

    std::fs::write(&fig_a, render_svg(&telescoping_figure(12, &FigureSettings::default())?.scene)?)
        .expect("write svg");
    std::fs::write(&fig_b, render_svg(&q_figure(1.02, 35.0)?.scene)?).expect("write svg");
    println!("wrote {fig_a} and {fig_b}");
    Ok(())
}
