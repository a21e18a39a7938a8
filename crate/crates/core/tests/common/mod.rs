//! Reference computations that share no code with the library.
#![allow(dead_code)]

use std::f64::consts::{PI, TAU};

use num_complex::Complex64;

pub const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Kahan–Babuška running sum.
#[derive(Clone, Copy, Default)]
pub struct Neumaier {
    sum: f64,
    comp: f64,
}

impl Neumaier {
    pub fn add(&mut self, x: f64) {
        let t = self.sum + x;
        if self.sum.abs() >= x.abs() {
            self.comp += (self.sum - t) + x;
        } else {
            self.comp += (x - t) + self.sum;
        }
        self.sum = t;
    }

    pub fn value(&self) -> f64 {
        self.sum + self.comp
    }
}

/// `θ_2 .. θ_{n_max}` from the angular recurrence
/// `θ_{n+1} = θ_n + (n-2)π/n + (n-1)π/(n+1) - π`, `θ_2 = -3π`.
pub fn theta_by_recurrence(n_max: usize) -> Vec<f64> {
    let mut out = vec![f64::NAN, f64::NAN, -3.0 * PI];
    let mut acc = Neumaier::default();
    acc.add(-3.0 * PI);
    for n in 2..n_max {
        let nf = n as f64;
        acc.add((nf - 2.0) * PI / nf);
        acc.add((nf - 1.0) * PI / (nf + 1.0));
        acc.add(-PI);
        out.push(acc.value());
    }
    out
}

/// `V(2..=n_max)` of the power-law spiral, with angles from the recurrence.
pub fn vertices_by_recurrence(s: f64, n_max: usize) -> Vec<Complex64> {
    let theta = theta_by_recurrence(n_max);
    let mut out = vec![Complex64::new(f64::NAN, f64::NAN); 2];
    out.push(Complex64::new(0.0, 0.0));
    let (mut re, mut im) = (Neumaier::default(), Neumaier::default());
    for (k, &t) in theta.iter().enumerate().skip(3) {
        let l = (k as f64).powf(-s);
        re.add(l * t.cos());
        im.add(l * t.sin());
        out.push(Complex64::new(re.value(), im.value()));
    }
    out
}

/// `H_1 .. H_n` by forward compensated summation.
pub fn harmonic_table(n: usize) -> Vec<f64> {
    let mut out = vec![0.0];
    let mut acc = Neumaier::default();
    for k in 1..=n {
        acc.add(1.0 / k as f64);
        out.push(acc.value());
    }
    out
}

/// `H_x = Σ_{k>=1} x/(k(k+x))`: 10^4 terms summed backwards, then an
/// Euler–Maclaurin tail from `K = 10^4`.
pub fn harmonic_by_series(x: f64) -> f64 {
    const K: usize = 10_000;
    let g = |t: f64| 1.0 / t - 1.0 / (t + x);
    let dg = |t: f64| -1.0 / (t * t) + 1.0 / ((t + x) * (t + x));
    let d3g = |t: f64| -6.0 / t.powi(4) + 6.0 / (t + x).powi(4);
    let mut acc = Neumaier::default();
    for k in (1..K).rev() {
        acc.add(g(k as f64));
    }
    let kf = K as f64;
    // Σ_{k>=K} g(k) = ∫_K^∞ g + g(K)/2 - g'(K)/12 + g'''(K)/720 - ...
    acc.add((x / kf).ln_1p());
    acc.add(0.5 * g(kf));
    acc.add(-dg(kf) / 12.0);
    acc.add(d3g(kf) / 720.0);
    acc.value()
}

/// `ζ(s, a)` from `terms` direct terms and an Euler–Maclaurin tail.
pub fn hurwitz_brute_force(s: f64, a: f64, terms: usize) -> f64 {
    let mut acc = Neumaier::default();
    for k in (0..terms).rev() {
        acc.add((k as f64 + a).powf(-s));
    }
    let x = terms as f64 + a;
    acc.add(x.powf(1.0 - s) / (s - 1.0));
    acc.add(0.5 * x.powf(-s));
    acc.add(s * x.powf(-s - 1.0) / 12.0);
    acc.value()
}

/// `e^{2πi t}` for `t` given in turns.
pub fn turns(t: f64) -> Complex64 {
    let (s, c) = (TAU * (t - t.round())).sin_cos();
    Complex64::new(c, s)
}

/// `Ṽ(m + 1/2)` of the `s = 1` spiral by brute force: `terms` terms of
/// `Σ_{k>=3} [e^{iθ_k}/k - e^{iθ_y}/y]`, `y = k - 2 + n`, with the last two
/// partial sums averaged to cancel the alternating remainder.
pub fn interpolant_brute_force(m: u64, terms: u64) -> Complex64 {
    // H_{1/2} = 2 - 2 ln 2, stepped up to H_{m + 3/2} (the argument at k = 3)
    let mut hy = Neumaier::default();
    hy.add(2.0 - 2.0 * 2f64.ln());
    let mut y = 0.5;
    for _ in 0..=m {
        y += 1.0;
        hy.add(1.0 / y);
    }
    let mut hk = Neumaier::default();
    hk.add(1.5);
    let (mut re, mut im) = (Neumaier::default(), Neumaier::default());
    let mut prev = Complex64::new(0.0, 0.0);
    for k in 3..=terms {
        hk.add(1.0 / k as f64);
        if k > 3 {
            y += 1.0;
            hy.add(1.0 / y);
        }
        // θ_x/(2π) = x/2 + 1/x - 2H_x, with x/2 reduced mod 1 exactly
        let kf = k as f64;
        let a = turns(0.5 * (k % 2) as f64 + 1.0 / kf - 2.0 * hk.value()) / kf;
        let b = turns(0.5 * ((k + m) % 2) as f64 - 0.75 + 1.0 / y - 2.0 * hy.value()) / y;
        prev = Complex64::new(re.value(), im.value());
        re.add((a - b).re);
        im.add((a - b).im);
    }
    0.5 * (prev + Complex64::new(re.value(), im.value()))
}

/// Marker centers `(cx, cy)` of every `<circle>` in the group whose
/// `data-name` is `name`, plus the viewport map from the metadata.
pub struct SvgMarkers {
    pub x_min: f64,
    pub y_max: f64,
    pub scale: f64,
    pub groups: Vec<(String, Vec<(f64, f64)>)>,
}

impl SvgMarkers {
    pub fn parse(svg: &str) -> SvgMarkers {
        let doc = roxmltree::Document::parse(svg).expect("well-formed SVG");
        let root = doc.root_element();
        assert_eq!(root.tag_name().name(), "svg");
        assert_eq!(root.attribute("version"), Some("1.1"));
        let meta = doc
            .descendants()
            .find(|n| n.tag_name().name() == "viewport" && n.tag_name().namespace() == Some("urn:ngon-spiral:viewport"))
            .expect("viewport metadata");
        let num = |a: &str| meta.attribute(a).expect(a).parse::<f64>().expect(a);
        let groups = doc
            .descendants()
            .filter(|n| n.tag_name().name() == "g" && n.attribute("id").is_some_and(|id| id.starts_with("points-")))
            .map(|g| {
                let pts = g
                    .children()
                    .filter(|c| c.tag_name().name() == "circle")
                    .map(|c| {
                        let f = |a: &str| c.attribute(a).unwrap().parse::<f64>().unwrap();
                        (f("cx"), f("cy"))
                    })
                    .collect();
                (g.attribute("data-name").unwrap_or("").to_string(), pts)
            })
            .collect();
        SvgMarkers { x_min: num("x-min"), y_max: num("y-max"), scale: num("scale"), groups }
    }

    pub fn group(&self, name: &str) -> &[(f64, f64)] {
        &self.groups.iter().find(|(n, _)| n == name).unwrap_or_else(|| panic!("no group {name}")).1
    }

    pub fn invert(&self, (x, y): (f64, f64)) -> Complex64 {
        Complex64::new(self.x_min + x / self.scale, self.y_max - y / self.scale)
    }

    /// Largest distance in pixels between the markers of `name` and `points`.
    pub fn max_pixel_error(&self, name: &str, points: &[Complex64]) -> f64 {
        let markers = self.group(name);
        assert_eq!(markers.len(), points.len(), "marker count of {name}");
        markers
            .iter()
            .zip(points)
            .map(|(&m, &z)| (self.invert(m) - z).norm() * self.scale)
            .fold(0.0, f64::max)
    }
}
