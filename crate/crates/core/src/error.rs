use thiserror::Error;

/// Errors raised by frame, mass, exclusivity and distance operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("frame must contain at least one element")]
    EmptyFrame,
    #[error("frame has {0} elements; at most 64 are supported")]
    FrameTooLarge(usize),
    #[error("duplicate frame label `{0}`")]
    DuplicateLabel(String),
    #[error("frame labels must be non-empty")]
    EmptyLabel,
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("operands belong to different frames or a subset lies outside the frame")]
    FrameMismatch,

    #[error("mass {value} for focal element {subset} is outside (0, 1]")]
    MassOutOfRange { subset: String, value: f64 },
    #[error("the empty set cannot carry mass (got {0})")]
    EmptySetMass(f64),
    #[error("focal element {0} assigned more than once")]
    DuplicateFocal(String),
    #[error("D-number masses sum to {0}, which exceeds 1")]
    SumExceedsOne(f64),
    #[error("BPA masses sum to {0}, expected 1")]
    SumNotOne(f64),
    #[error("operation requires BPAs, got a D number")]
    RequiresBpa,
    #[error("total conflict between the operands (K = {0})")]
    TotalConflict(f64),

    #[error("membership function needs at least 2 vertices, got {0}")]
    TooFewVertices(usize),
    #[error("membership vertex x-coordinates must be finite and strictly increasing (vertex {0})")]
    NonIncreasingAxis(usize),
    #[error("membership degree at vertex {index} is {value}, outside [0, 1]")]
    MembershipOutOfRange { index: usize, value: f64 },
    #[error("membership function must start and end at degree 0")]
    OpenSupport,
    #[error("union area {0} is not positive")]
    DegenerateUnion(f64),
    #[error("intersection area {s} must lie in [0, {u}]")]
    OverlapOutOfRange { s: f64, u: f64 },
    #[error("exclusivity entry ({i}, {j}) = {value} is outside [0, 1]")]
    EntryOutOfRange { i: usize, j: usize, value: f64 },
    #[error("index ({i}, {j}) out of bounds for a {n}x{n} matrix (diagonal entries are fixed)")]
    IndexOutOfBounds { i: usize, j: usize, n: usize },
    #[error("relative matrix is {matrix}x{matrix} but the frame has {frame} elements")]
    DimensionMismatch { matrix: usize, frame: usize },

    #[error("intersection degree is undefined for the empty set")]
    EmptyOperand,
    #[error("quadratic form is negative ({0}); the effective matrix is indefinite for these operands")]
    NegativeRadicand(f64),
    #[error("ordering is not a permutation of the focal union")]
    InvalidOrdering,
    #[error("refusing to allocate a {0}x{0} matrix")]
    MatrixTooLarge(usize),
    #[error("dense evaluation needs a frame of at most {max} elements, got {n}")]
    FrameTooLargeForDense { n: usize, max: usize },
}

pub type Result<T> = std::result::Result<T, Error>;
