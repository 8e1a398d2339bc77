//! Exact computations with finite-dimensional left Leibniz algebras given by
//! structure constants over GF(p) or ℚ.

pub mod algebra;
pub mod bimodule;
pub mod checker;
pub mod constructions;
pub mod error;
pub mod field;
pub mod io;
pub mod matrix;
pub mod par;
pub mod subnormal;
pub mod subspace;

pub use algebra::{LeibnizAlgebra, SeriesReport, Subalgebra, Violation};
pub use bimodule::{Bimodule, FactorReport, Irreducible, SpinConfig};
pub use constructions::catalogue;
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use matrix::Matrix;
pub use par::Strategy;
pub use subnormal::{ChainReport, HypothesisMode, ResidualReport};
pub use subspace::{EchelonBasis, Subspace, DEFAULT_ENUMERATION_CAP};
