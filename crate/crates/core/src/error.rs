use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown Cartan type label `{0}`")]
    UnknownType(String),
    #[error("Cartan type must have rank at least 1")]
    ZeroRank,
    #[error("Weyl group exceeds the enumeration cap of {cap} elements")]
    GroupTooLarge { cap: usize },
    #[error("elements belong to different Coxeter systems")]
    MismatchedSystems,
    #[error("index {index} out of range for rank {rank}")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("subset {bits:#b} is not contained in the index set of rank {rank}")]
    InvalidSubset { bits: u32, rank: usize },
    #[error("element `{0}` does not lie in Y_J")]
    NotInYSet(String),
    #[error("operation requires a nonzero vector")]
    ZeroVector,
    #[error("invalid basis variant {0}; expected 1, 2 or 3")]
    InvalidVariant(u8),
    #[error("ragged matrix: row {row} has {found} entries, expected {expected}")]
    RaggedMatrix { row: usize, expected: usize, found: usize },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("characteristic {r} equals the defining characteristic {p}; cross characteristic required")]
    CrossCharacteristic { p: u64, r: u64 },
    #[error("module of dimension {size} exceeds the configured cap {cap}")]
    CapExceeded { size: usize, cap: usize },
    #[error("root element is the identity; the SL2 decomposition degenerates")]
    DegenerateDecomposition,
    #[error("subspace is not invariant under the acting generators")]
    NotInvariant,
    #[error("Meataxe gave up after {attempts} random algebra elements on a module of dimension {dim}")]
    BudgetExceeded { attempts: usize, dim: usize },
    #[error("reduction exceeded its step bound of {bound} tau applications")]
    StepBoundExceeded { bound: usize },
    #[error("invariant violated: {0}")]
    Internal(String),
    #[error("unsupported field: {0}")]
    UnsupportedField(String),
    #[error("matrix is not in SL_n: determinant {0}")]
    NotSpecialLinear(String),
    #[error("module is built over P_{found}, but the operation needs P_{expected}")]
    ParabolicMismatch { expected: String, found: String },
    #[error("parse error: {0}")]
    Parse(String),
}
