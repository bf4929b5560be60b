use thiserror::Error;

/// Errors produced by broadcast-core operations.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid parameters: need t >= r >= 1, got t={t}, r={r}")]
    InvalidParams { t: u32, r: u32 },

    #[error("enumeration of dimension {n}, radius {d} needs {size} points, above the cap of {cap}")]
    EnumerationCap { n: usize, d: usize, size: String, cap: u64 },

    #[error("generating function {kind} {detail}")]
    GenFuncArgs { kind: &'static str, detail: &'static str },

    #[error("tuple-sequence has dimension sum {dimension_sum}, which exceeds ambient dimension {n}")]
    DimensionSumExceeded { dimension_sum: usize, n: usize },

    #[error("point {point:?} has l1 norm {norm}, outside the ball of radius {d}")]
    NormExceeded { point: Vec<i64>, norm: u64, d: usize },

    #[error("point has length {len}, expected dimension {n}")]
    DimensionMismatch { len: usize, n: usize },

    #[error("closed-form coverage is tabulated for dimensions 1..=4, got {0}")]
    ClosedFormDimension(usize),

    #[error("grid side lengths must all be >= 1 and there must be at least one")]
    InvalidGrid,

    #[error("position {i} is outside the fundamental range 0..{d}")]
    PositionOutOfRange { i: u64, d: u64 },

    #[error("invalid tower pattern T({d},{e}): need d >= 1 and 0 <= e < d")]
    InvalidTower { d: u64, e: u64 },

    #[error("invalid lattice basis: {0}")]
    InvalidBasis(String),

    #[error("sublattice index {index} exceeds the cap of {cap}")]
    IndexCap { index: u64, cap: u64 },

    #[error("parse error at offset {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error("vertex {vertex} is out of range for a graph with {order} vertices")]
    VertexOutOfRange { vertex: usize, order: usize },

    #[error("value {0} does not fit the native integer range used by the search")]
    Overflow(String),

    #[error("precondition not met: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, Error>;
