use alloc::string::String;

/// Everything that can go wrong in the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid ring descriptor: {0}")]
    InvalidRing(String),
    #[error("operands live in different rings")]
    RingMismatch,
    #[error("cannot parse {input:?} at byte {position}: {message}")]
    Parse {
        input: String,
        position: usize,
        message: String,
    },
    #[error("shape mismatch in {op}: {left:?} vs {right:?}")]
    ShapeMismatch {
        op: &'static str,
        left: (usize, usize),
        right: (usize, usize),
    },
    #[error("ring is not Euclidean in the supported sense; homology is unavailable")]
    NotEuclidean,
    #[error("differentials do not square to zero at degree {0}")]
    NotAComplex(i32),
    #[error("morphism does not commute with differentials at degree {0}")]
    NotAChainMap(i32),
    #[error("invalid module: {0}")]
    InvalidModule(String),
    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),
    #[error("invalid matrix factorization: {0}")]
    InvalidFactorization(String),
    #[error("the potential list is empty")]
    EmptyPotentials,
    #[error("index {index} out of range for {n} generators")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("index {0} repeated")]
    RepeatedIndex(usize),
    #[error("amplitude {amplitude} below threshold {threshold}")]
    AmplitudeBelowThreshold { amplitude: usize, threshold: usize },
    #[error("expected a module in degrees [{lo}, {hi}]")]
    WrongAmplitude { lo: i32, hi: i32 },
    #[error("operation needs exactly one potential, found {0}")]
    NotMonoPotential(usize),
    #[error("variable {0:?} declared in both rings")]
    VariableCollision(String),
    #[error("coefficient bases differ")]
    BaseMismatch,
    #[error("potential counts differ: {0} vs {1}")]
    PotentialCountMismatch(usize, usize),
    #[error("rings with a quotient cannot be joined")]
    QuotientNotSupported,
    #[error("morphism is not closed")]
    NotClosed,
    #[error("expected a parity-{expected} morphism")]
    WrongParity { expected: u8 },
}

pub type Result<T> = core::result::Result<T, Error>;
