//! Special functions and series-acceleration kernels.

mod accel;
mod compensated;
mod special;

pub use accel::{
    euler_transform_sum, sum_alternating, AcceleratedSum, AccelerationSettings, Strategy,
};
pub use compensated::{two_sum, ComplexAccumulator, DoubleDouble};
pub use special::{
    digamma, harmonic_continued, harmonic_dd, harmonic_number, hurwitz_zeta, EULER_GAMMA,
};
