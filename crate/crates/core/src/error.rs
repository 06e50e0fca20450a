use thiserror::Error;

/// Errors raised while decoding graph6 records.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(String),
    #[error("truncated graph6 bit field: expected {expected} data bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("graph6 order exceeds limit: n = {0} > 64")]
    OrderExceedsLimit(usize),
    #[error("graph6 record has invalid byte {byte:#04x} at offset {offset}")]
    InvalidByte { byte: u8, offset: usize },
    #[error("graph6 record has {0} trailing bytes")]
    TrailingData(usize),
}

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error(transparent)]
    Graph6(#[from] Graph6Error),

    #[error("vertex limit exceeded: {0} vertices > 64")]
    VertexLimit(usize),

    #[error("graph must have at least one vertex")]
    EmptyGraph,

    #[error("invalid parameters for family {family}: {reason}")]
    FamilyParams { family: String, reason: String },

    #[error("unknown graph family {0:?}")]
    UnknownFamily(String),

    #[error("alpha = {0} lies outside [0, 1]")]
    AlphaOutOfRange(String),

    #[error("cannot parse {0:?} as a rational number")]
    BadRational(String),

    #[error("graph order {n} exceeds the exact-arithmetic bound {bound}")]
    SizeBound { n: usize, bound: usize },

    #[error("eigenvalue iteration did not converge within {0} sweeps")]
    NonConvergence(usize),

    #[error("polynomial is not the characteristic polynomial of a graph: {0}")]
    NotCharpoly(String),

    #[error("division by the zero polynomial")]
    DivisionByZero,

    #[error("polynomial division is not exact: {0}")]
    InexactDivision(String),

    #[error("cospectral forge precondition failed: {0}")]
    ForgePrecondition(String),

    #[error("enumeration order {0} outside the supported range 1..=10")]
    EnumerationRange(usize),

    #[error("invalid degree sequence: {0}")]
    DegreeSequence(String),
}

pub type Result<T> = std::result::Result<T, Error>;
