use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("unknown root system type `{0}`")]
    UnknownType(String),
    #[error("rank {rank} out of range for type {series}")]
    RankOutOfRange { series: char, rank: usize },
    #[error("invalid Cartan data: {0}")]
    InvalidCartan(String),
    #[error("simple index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("weight has {got} coordinates, datum has rank {expected}")]
    RankMismatch { expected: usize, got: usize },
    #[error("weight is not dominant")]
    NotDominant,
    #[error("weight is not integral")]
    NotIntegral,
    #[error("orbit exceeds cap of {cap} elements")]
    Overflow { cap: usize },
    #[error("invalid diagram involution: {0}")]
    InvalidInvolution(String),
    #[error("invalid parabolic subset: {0}")]
    InvalidParabolic(String),
    #[error("parameter is not Hermitian: delta(lambda) != lambda")]
    NotHermitian,
    #[error("parameter already lies in the fundamental parallelepiped")]
    NoViolation,
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("boundary witness failed: {0}")]
    WitnessFailed(String),
    #[error("empty grid")]
    EmptyGrid,
    #[error("requires a rank-2 datum, got rank {0}")]
    NotRankTwo(usize),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}
