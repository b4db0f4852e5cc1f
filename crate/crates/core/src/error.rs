use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("image table is not a permutation of 0..{degree}")]
    NotAPermutation { degree: usize },

    #[error("point {point} out of range for degree {degree}")]
    PointOutOfRange { point: usize, degree: usize },

    #[error("rank {rank} out of range for degree {degree}")]
    RankOutOfRange { rank: usize, degree: usize },

    #[error("a transposition needs two distinct points, got {0} twice")]
    DegenerateTransposition(usize),

    #[error("duplicate transposition {0}")]
    DuplicateEdge(String),

    #[error("S does not generate S_n")]
    NotGenerating,

    #[error("degree {n} exceeds the configured cap {max}")]
    DegreeCap { n: usize, max: usize },

    #[error("graph has {vertices} vertices, above the configured cap {max}")]
    VertexCap { vertices: usize, max: usize },

    #[error("vertex {vertex} out of range for a graph on {vertices} vertices")]
    VertexOutOfRange { vertex: usize, vertices: usize },

    #[error("transposition {0} is not in S")]
    NotInGeneratingSet(String),

    #[error("hypothesis violated: {0}")]
    HypothesisViolated(String),

    #[error("not a subgroup: generator {0} is not contained in the ambient group")]
    NotSubgroup(String),

    #[error("undecided: both groups exceed the enumeration cap {cap}")]
    Undecided { cap: usize },

    #[error("transposition graph is not a cycle")]
    NotACycle,

    #[error("parse error at {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("internal consistency error: {0}")]
    Consistency(String),

    #[error("report validation failed: {0}")]
    InvalidReport(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
