use alloc::string::String;

/// Rejected inputs and violated preconditions.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("vertex count {n} exceeds the cap of {cap}")]
    TooManyVertices { n: usize, cap: usize },
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("vertex {vertex} out of range for {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("unknown named graph `{0}`")]
    UnknownName(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
}

pub type Result<T> = core::result::Result<T, Error>;
