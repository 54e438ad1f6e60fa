use crate::rat::Rat;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("gcd of two zero polynomials is undefined")]
    GcdOfZeros,
    #[error("interpolation node {0} appears more than once")]
    DuplicateNode(Rat),
    #[error("got {nodes} interpolation nodes but {values} values")]
    LengthMismatch { nodes: usize, values: usize },
    #[error("empty interval ({0}, {1}]")]
    EmptyInterval(Rat, Rat),
    #[error("degree {found} is below the required minimum {required}")]
    DegreeTooSmall { found: usize, required: usize },
    #[error("leading coefficient vanishes at node {0}")]
    SkipNode(Rat),
    #[error("Hankel scaling exponent {nu} must be even and at least {min}")]
    InvalidExponent { nu: usize, min: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("operator matrix has {found} {what}, expected {expected}")]
    OperatorShape {
        what: &'static str,
        found: usize,
        expected: usize,
    },
    #[error("size must be at least 1")]
    EmptySize,
    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}
