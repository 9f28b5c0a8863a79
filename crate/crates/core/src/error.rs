use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid weight system: {0}")]
    InvalidWeights(String),

    #[error("unsupported polytope dimension {0} (expected 2, 3 or 4)")]
    UnsupportedDimension(usize),

    #[error("points do not span a full-dimensional polytope")]
    NotFullDimensional,

    #[error("origin is not in the interior of the polytope")]
    OriginNotInterior,

    #[error("polytope is not reflexive (facet at lattice distance {distance})")]
    NotReflexive { distance: i64 },

    #[error("triangulation aborted: facet {facet} has {points} points, the enumeration cap is {cap}")]
    TriangulationCap {
        facet: usize,
        points: usize,
        cap: usize,
    },

    #[error("integer overflow in exact arithmetic")]
    Overflow,

    #[error("invalid hypersurface class: {0}")]
    InvalidHypersurface(String),

    #[error("invalid divisor basis: {0}")]
    InvalidBasis(String),

    #[error("{0}")]
    Unsupported(String),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit code used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::NotReflexive { .. } | Error::OriginNotInterior => 2,
            Error::TriangulationCap { .. } => 3,
            _ => 1,
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
