use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid edge ({0}, {1})")]
    InvalidEdge(usize, usize),
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("unknown graph `{0}`")]
    UnknownGraph(String),
    #[error("invalid parameter: {0}")]
    InvalidParam(String),
    #[error("input too large: {0}")]
    TooLarge(String),
    #[error("({0}, {1}) is not an edge of the graph")]
    NotAnEdge(usize, usize),
    #[error("vertex {0} is out of range")]
    InvalidVertex(usize),
    #[error("operands belong to different graphs")]
    GraphMismatch,
    #[error("permutation is not an automorphism of the graph")]
    NotAutomorphism,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;
