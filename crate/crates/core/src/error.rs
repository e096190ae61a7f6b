use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("matrix is not an involution")]
    NotInvolution,
    #[error("rank mismatch: expected {expected}, found {found}")]
    RankMismatch { expected: usize, found: usize },
    #[error("invalid root datum: {0}")]
    InvalidDatum(String),
    #[error("Cartan matrix is not of finite type: {0}")]
    NotFiniteType(String),
    #[error("root closure exceeded {0} roots")]
    NonFiniteType(usize),
    #[error("bound exceeded: {0}")]
    BoundExceeded(String),
    #[error("weight {0:?} is not dominant")]
    NotDominant(Vec<i64>),
    #[error("character is not Weyl invariant at {0:?}")]
    NotWeylInvariant(Vec<i64>),
    #[error("{0:?} is not in the image lattice")]
    NotInImageLattice(Vec<i64>),
    #[error("operation needs a semisimple root datum")]
    NotSemisimple,
    #[error("unknown catalog label `{0}`")]
    UnknownLabel(String),
    #[error("catalog entry `{label}` is invalid: {reason}")]
    CatalogInvalid { label: String, reason: String },
    #[error("invariant violated: {0}")]
    InvariantViolation(String),
    #[error("internal inconsistency: {0}")]
    InternalInconsistency(String),
    #[error("table mismatch for `{label}`: expected {expected}, computed {computed}")]
    Mismatch {
        label: String,
        expected: String,
        computed: String,
    },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("i/o error: {0}")]
    Io(String),
}
