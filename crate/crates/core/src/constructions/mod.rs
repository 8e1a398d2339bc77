//! Named algebras and validity-preserving combinators.
//!
//! Every combinator returns an algebra that has passed `validate`; none of
//! them trusts its own construction.

pub mod catalogue;
pub mod generate;

pub use catalogue::sl2_natural_action;

use std::sync::Arc;

use crate::algebra::LeibnizAlgebra;
use crate::bimodule::{Bimodule, RightAction};
use crate::error::{Error, Result};
use crate::matrix::Matrix;

/// `A ⊕ B` with `A·B = B·A = 0`; `A` occupies the first coordinates.
pub fn direct_sum(a: &LeibnizAlgebra, b: &LeibnizAlgebra) -> Result<LeibnizAlgebra> {
    if a.field() != b.field() {
        return Err(Error::FieldMismatch {
            expected: a.field(),
            found: b.field(),
        });
    }
    let (na, nb) = (a.dim(), b.dim());
    let d = na + nb;
    let mut t = vec![a.field().zero(); d * d * d];
    let idx = |i: usize, j: usize, k: usize| (i * d + j) * d + k;
    for (off, alg) in [(0, a), (na, b)] {
        let n = alg.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    t[idx(off + i, off + j, off + k)] = alg.constant(i, j, k).clone();
                }
            }
        }
    }
    LeibnizAlgebra::from_tensor(format!("sum({},{})", a.name(), b.name()), a.field(), d, t)
}

/// Whether `action(e_i e_j) = action(i)∘action(j) − action(j)∘action(i)`.
pub fn is_module_action(g: &LeibnizAlgebra, action: &[Matrix]) -> bool {
    let n = g.dim();
    if action.len() != n {
        return false;
    }
    let m = action.first().map_or(0, Matrix::rows);
    (0..n).all(|i| {
        (0..n).all(|j| {
            let ij = Matrix::linear_combination(g.field(), m, m, g.left_mul(i).row(j), action);
            let bracket = action[j]
                .mul(&action[i])
                .and_then(|x| x.sub(&action[i].mul(&action[j])?));
            matches!(bracket, Ok(b) if b == ij)
        })
    })
}

/// `M ⊕ g` with `(m, x)(n, y) = (x·n, xy)`: the split extension of a Lie
/// algebra by a left module with zero right action. `M` comes first.
pub fn hemisemidirect(g: &LeibnizAlgebra, action: Vec<Matrix>) -> Result<LeibnizAlgebra> {
    if !g.is_lie() {
        return Err(Error::NotLie);
    }
    if !is_module_action(g, &action) {
        return Err(Error::ModuleCondition);
    }
    let m = action.first().map_or(0, Matrix::rows);
    let module = Bimodule::from_left_action("m", Arc::new(g.clone()), m, action, RightAction::Zero)?;
    Ok(module
        .split_extension()?
        .with_name(format!("hsd({},{m})", g.name())))
}

/// Left actions factoring through `L/LL`: `e_i ↦ Σ_t c_{it} A^t` for a square
/// matrix `A` and coefficients `c` that vanish on `LL`. The images commute
/// and kill every product, so any right action `0` or `−left` yields a
/// bimodule.
pub fn abelianised_action(
    alg: &LeibnizAlgebra,
    a: &Matrix,
    coefficients: &Matrix,
) -> Result<Vec<Matrix>> {
    let field = alg.field();
    let derived = alg.product(&alg.full(), &alg.full())?;
    let (_, projection) = alg.quotient(&derived)?;
    if coefficients.rows() != projection.cols() {
        return Err(Error::DimensionMismatch {
            context: "abelianised coefficients",
            expected: projection.cols(),
            found: coefficients.rows(),
        });
    }
    let per_basis = projection.mul(coefficients)?;
    let m = a.rows();
    let mut powers = vec![Matrix::identity(field, m)];
    for _ in 1..coefficients.cols() {
        let next = powers.last().expect("nonempty").mul(a)?;
        powers.push(next);
    }
    Ok(per_basis
        .row_iter()
        .map(|c| Matrix::linear_combination(field, m, m, c, &powers))
        .collect())
}
