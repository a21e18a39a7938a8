//! Error-free transformations and double-double accumulators.
//!
//! Harmonic numbers enter every spiral angle multiplied by `4π`, and the
//! angles themselves grow like `πn`. Keeping the running sums in
//! double-double form lets the phases be reduced modulo one full turn
//! without losing the low-order bits that a plain `f64` sum would drop.

use num_complex::Complex64;
use std::ops::{Add, AddAssign, Neg, Sub};

/// `a + b = s + e` exactly.
#[inline]
pub fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    let e = (a - (s - bb)) + (b - bb);
    (s, e)
}

#[inline]
fn quick_two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let e = b - (s - a);
    (s, e)
}

/// An unevaluated sum `hi + lo` with `|lo| <= ulp(hi) / 2`.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct DoubleDouble {
    pub hi: f64,
    pub lo: f64,
}

impl DoubleDouble {
    pub const ZERO: DoubleDouble = DoubleDouble { hi: 0.0, lo: 0.0 };

    pub fn new(x: f64) -> Self {
        DoubleDouble { hi: x, lo: 0.0 }
    }

    /// `1/x` to roughly 106 bits, using an FMA residual.
    pub fn recip(x: f64) -> Self {
        let hi = 1.0 / x;
        let residual = -hi.mul_add(x, -1.0);
        let (hi, lo) = quick_two_sum(hi, residual / x);
        DoubleDouble { hi, lo }
    }

    /// Multiplication by a power of two is exact.
    pub fn scale_pow2(self, factor: f64) -> Self {
        DoubleDouble {
            hi: self.hi * factor,
            lo: self.lo * factor,
        }
    }

    pub fn to_f64(self) -> f64 {
        self.hi + self.lo
    }

    /// Value reduced to `[-1/2, 1/2]` modulo one, returned as `f64`.
    pub fn wrap_unit(self) -> f64 {
        let shifted = self - DoubleDouble::new(self.hi.round());
        let r = shifted.to_f64();
        r - r.round()
    }
}

impl Add for DoubleDouble {
    type Output = DoubleDouble;

    fn add(self, rhs: DoubleDouble) -> DoubleDouble {
        let (s, e) = two_sum(self.hi, rhs.hi);
        let (t, f) = two_sum(self.lo, rhs.lo);
        let (s, e) = quick_two_sum(s, e + t);
        let (hi, lo) = quick_two_sum(s, e + f);
        DoubleDouble { hi, lo }
    }
}

impl Add<f64> for DoubleDouble {
    type Output = DoubleDouble;

    fn add(self, rhs: f64) -> DoubleDouble {
        let (s, e) = two_sum(self.hi, rhs);
        let (hi, lo) = quick_two_sum(s, e + self.lo);
        DoubleDouble { hi, lo }
    }
}

impl AddAssign for DoubleDouble {
    fn add_assign(&mut self, rhs: DoubleDouble) {
        *self = *self + rhs;
    }
}

impl Neg for DoubleDouble {
    type Output = DoubleDouble;

    fn neg(self) -> DoubleDouble {
        DoubleDouble {
            hi: -self.hi,
            lo: -self.lo,
        }
    }
}

impl Sub for DoubleDouble {
    type Output = DoubleDouble;

    fn sub(self, rhs: DoubleDouble) -> DoubleDouble {
        self + (-rhs)
    }
}

/// Compensated running sum of complex terms (double-double per component).
#[derive(Clone, Copy, Debug, Default)]
pub struct ComplexAccumulator {
    re: DoubleDouble,
    im: DoubleDouble,
}

impl ComplexAccumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn add(&mut self, z: Complex64) {
        self.re = self.re + z.re;
        self.im = self.im + z.im;
    }

    pub fn value(&self) -> Complex64 {
        Complex64::new(self.re.to_f64(), self.im.to_f64())
    }
}

impl Extend<Complex64> for ComplexAccumulator {
    fn extend<I: IntoIterator<Item = Complex64>>(&mut self, iter: I) {
        for z in iter {
            self.add(z);
        }
    }
}
