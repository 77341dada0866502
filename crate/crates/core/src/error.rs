use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("length mismatch: expected {expected}, got {found}")]
    LengthMismatch { expected: usize, found: usize },

    #[error("vectors over Z2 must have between 1 and {max} coordinates, got {0}", max = crate::gf2::MAX_LEN)]
    UnsupportedLength(usize),

    #[error("projection along the zero vector is undefined")]
    ZeroVector,

    #[error("matrix must have at least one row and one column")]
    EmptyMatrix,

    #[error("invalid simplicial complex: {0}")]
    InvalidComplex(String),

    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("colouring is not surjective: rank {rank} < {rows} rows")]
    NotSurjective { rank: usize, rows: usize },

    #[error("colouring is not proper")]
    Improper,

    #[error("colouring is not orientable")]
    NonOrientable,

    #[error("colourings live on different polytopes")]
    PolytopeMismatch,

    #[error("polytope `{0}` is not a cube with an opposite-facet pairing")]
    NotCube(String),

    #[error("polytope `{0}` is not the right-angled dodecahedron")]
    NotDodecahedron(String),

    #[error("expected a {expected}-dimensional polytope, got dimension {found}")]
    WrongDimension { expected: usize, found: usize },

    #[error("row vector already lies in the row space")]
    RowInRowSpace,

    #[error("colouring does not define a rational homology sphere")]
    NotQhs,

    #[error("index {index} out of range 1..={max}")]
    OutOfRange { index: usize, max: usize },

    #[error("unknown catalog entry `{0}`")]
    UnknownCatalogEntry(String),

    #[error("{0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(err: std::io::Error) -> Self {
        Error::Io(err.to_string())
    }
}
