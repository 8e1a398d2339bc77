use thiserror::Error;

use crate::field::FieldSpec;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("field mismatch: expected {expected}, found {found}")]
    FieldMismatch { expected: FieldSpec, found: FieldSpec },
    #[error("dimension mismatch in {context}: expected {expected}, found {found}")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        found: usize,
    },
    #[error("division by zero in {0}")]
    DivisionByZero(FieldSpec),
    #[error("exhaustive enumeration is only available over GF(p), not {0}")]
    UnsupportedEnumeration(FieldSpec),
    #[error("enumeration of {size} vectors exceeds the cap of {cap}")]
    EnumerationBudget { size: u128, cap: u64 },
    #[error("algebra dimension {dim} exceeds the supported maximum {max}")]
    DimensionTooLarge { dim: usize, max: usize },
    #[error("structure tensor violates the left Leibniz identity at {violations} basis triple(s)")]
    InvalidAlgebra { violations: usize },
    #[error("action matrices violate the bimodule axioms at {violations} place(s)")]
    InvalidBimodule { violations: usize },
    #[error("subspace is not a subalgebra")]
    NotSubalgebra,
    #[error("subspace is not a two-sided ideal")]
    NotIdeal,
    #[error("subspace is not contained in the enclosing subalgebra")]
    NotContained,
    #[error("subspace is not closed under the bimodule actions")]
    NotSubmodule,
    #[error("subalgebra is not subnormal")]
    NotSubnormal,
    #[error("{name} is not defined in characteristic {characteristic}")]
    UnsupportedCharacteristic {
        name: &'static str,
        characteristic: u32,
    },
    #[error("algebra is not a Lie algebra")]
    NotLie,
    #[error("action matrices do not satisfy the module condition")]
    ModuleCondition,
    #[error("bimodule is not irreducible")]
    NotIrreducible,
    #[error("bimodule has dimension zero")]
    EmptyModule,
    #[error("bimodules are defined over different algebras")]
    AlgebraMismatch,
    #[error("nonzero homomorphism between irreducibles is singular (rank {rank} of {dim})")]
    SchurViolation { rank: usize, dim: usize },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }
}
