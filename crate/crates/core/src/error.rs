use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("{what}: argument {value} is outside the domain ({expected})")]
    Domain {
        what: &'static str,
        value: f64,
        expected: &'static str,
    },

    #[error("{what} is singular at {value}")]
    Singular { what: &'static str, value: f64 },

    #[error("refusing to sum a divergent series: {0}")]
    Divergent(String),

    #[error("curve evaluated to a non-finite point at parameter {0}")]
    NonFinite(f64),

    #[error("scene has nothing to draw")]
    EmptyScene,

    #[error("scene contains a non-finite point in `{0}`")]
    NonFiniteScene(String),

    #[error("malformed table: {0}")]
    Table(String),

    #[error("cannot parse length function `{0}` (expected power:S, inscribed:S, circumscribed:S, area:S or telescoping)")]
    ParseLength(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain(what: &'static str, value: f64, expected: &'static str) -> Error {
    Error::Domain {
        what,
        value,
        expected,
    }
}
