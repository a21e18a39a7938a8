pub mod error;
pub mod lengthfns;
pub mod numerics;
pub mod spiral;
pub mod cli;
pub mod convergence;
pub mod intersect;
pub mod render;
pub mod telescoping;

pub use error::{Error, Result};
pub use lengthfns::LengthFunction;
pub use spiral::ComplexPoint;
