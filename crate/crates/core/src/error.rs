use thiserror::Error;

/// Errors raised by the Schubert engine, the lattice computations and the
/// enumerative pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid Grassmannian G({ell},{n}): need 0 <= ell < n")]
    InvalidContext { ell: usize, n: usize },

    #[error("parts {0:?} are not weakly decreasing")]
    NotAPartition(Vec<usize>),

    #[error("partition {partition} does not fit in the {rows}x{cols} box")]
    InadmissiblePartition {
        partition: String,
        rows: usize,
        cols: usize,
    },

    #[error("mixed codimensions {0} and {1} in one class")]
    MixedCodimension(usize, usize),

    #[error("classes live on different Grassmannians")]
    ContextMismatch,

    #[error("codimensions {0} + {1} do not add up to dim {2}")]
    CodimensionMismatch(usize, usize, usize),

    #[error("singular linear system")]
    SingularSystem,

    #[error("Euler characteristic {0} is not an integer")]
    NonIntegralChi(String),

    #[error("t = {t} out of domain: requires t >= {min}")]
    DomainError { t: u64, min: u64 },

    #[error("h^2 + h.K = {0} is odd")]
    ParityError(i64),

    #[error("requires t >= {required} (got t = {t})")]
    PreconditionError { t: u64, required: u64 },

    #[error("internal consistency check failed: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
