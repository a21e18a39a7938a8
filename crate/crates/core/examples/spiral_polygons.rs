//! The first polygons of the perimeter-one spiral, as a table and an SVG.
//!
//! ```bash
//! cargo run -p ngon-spiral --example spiral_polygons -- spiral.svg
//! ```

use ngon_spiral::render::{export_table, render_svg, spiral_figure, FigureSettings, TableFormat};
use ngon_spiral::spiral::{convex_intersection_area, polygons, sample};
use ngon_spiral::LengthFunction;

fn main() -> ngon_spiral::Result<()> {
    let out = std::env::args().nth(1).unwrap_or_else(|| "spiral.svg".into());
    let f = LengthFunction::PowerLaw { s: 1.0 };

    for n in 3..=6 {
        let s = sample(&f, n)?;
        println!("n = {n}: theta = {:+.6}  V = {:.6}  C = {:.6}", s.theta, s.vertex, s.center);
    }
    let polys = polygons(&f, 9)?;
    for pair in polys.windows(2) {
        let (a, b) = (&pair[0], &pair[1]);
        println!(
            "{}-gon: side {:.6}, area {:.6}, overlap with the {}-gon {:.1e}",
            a.n,
            a.side_length,
            a.area(),
            b.n,
            convex_intersection_area(&a.vertices, &b.vertices)
        );
    }

    let figure = spiral_figure(&f, 9, &FigureSettings::default())?;
    print!("{}", export_table(&figure.rows[..4], TableFormat::Csv));
    std::fs::write(&out, render_svg(&figure.scene)?).expect("write svg");
    println!("wrote {out}");
    Ok(())
}
