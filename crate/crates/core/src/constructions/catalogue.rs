//! Named algebras with golden facts.

use crate::algebra::LeibnizAlgebra;
use crate::error::{Error, Result};
use crate::field::FieldSpec;
use crate::matrix::Matrix;

use super::hemisemidirect;

/// A named algebra together with facts the tests treat as golden.
#[derive(Clone, Debug)]
pub struct CatalogueEntry {
    pub algebra: LeibnizAlgebra,
    pub is_lie: bool,
    pub nilpotent: bool,
    pub residual_dim: usize,
}

impl CatalogueEntry {
    pub fn name(&self) -> &str {
        self.algebra.name()
    }
}

/// `e_0 e_k = e_{k+1}` for `k < n - 1`, all other products zero. The
/// one-generated nilpotent Leibniz algebra; `n = 2` is the smallest non-Lie
/// Leibniz algebra.
pub fn cyclic_leibniz(field: FieldSpec, n: usize) -> Result<LeibnizAlgebra> {
    let c: Vec<_> = (0..n.saturating_sub(1)).map(|k| (0, k, k + 1, 1)).collect();
    LeibnizAlgebra::from_constants(format!("cyclic_leibniz_{n}"), field, n, &c)
}

/// Basis `(x, y, z)` with `xy = z = -yx`.
pub fn heisenberg(field: FieldSpec) -> Result<LeibnizAlgebra> {
    LeibnizAlgebra::from_constants("heisenberg_3", field, 3, &[(0, 1, 2, 1), (1, 0, 2, -1)])
}

/// The non-abelian two-dimensional Lie algebra: `e_0 e_1 = e_1 = -e_1 e_0`.
pub fn r2(field: FieldSpec) -> Result<LeibnizAlgebra> {
    LeibnizAlgebra::from_constants("r2_solvable", field, 2, &[(0, 1, 1, 1), (1, 0, 1, -1)])
}

/// Basis `(e, h, f)` with `he = 2e`, `hf = -2f`, `ef = h`.
pub fn sl2(field: FieldSpec) -> Result<LeibnizAlgebra> {
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic {
            name: "sl2",
            characteristic: 2,
        });
    }
    LeibnizAlgebra::from_constants(
        "sl2",
        field,
        3,
        &[
            (1, 0, 0, 2),
            (0, 1, 0, -2),
            (1, 2, 2, -2),
            (2, 1, 2, 2),
            (0, 2, 1, 1),
            (2, 0, 1, -1),
        ],
    )
}

/// The standard filiform Lie algebra: `e_0 e_k = e_{k+1} = -e_k e_0` for
/// `1 ≤ k < n - 1`.
pub fn filiform(field: FieldSpec, n: usize) -> Result<LeibnizAlgebra> {
    let c: Vec<_> = (1..n.saturating_sub(1))
        .flat_map(|k| [(0, k, k + 1, 1), (k, 0, k + 1, -1)])
        .collect();
    LeibnizAlgebra::from_constants(format!("filiform_{n}"), field, n, &c)
}

/// Row-convention matrices of the natural two-dimensional action of `sl2`
/// on its basis `(e, h, f)`.
pub fn sl2_natural_action(field: FieldSpec) -> Vec<Matrix> {
    vec![
        Matrix::from_ints(field, &[&[0, 0], &[1, 0]]),
        Matrix::from_ints(field, &[&[1, 0], &[0, -1]]),
        Matrix::from_ints(field, &[&[0, 1], &[0, 0]]),
    ]
}

/// One-dimensional Lie algebra acting on a line by the identity.
pub fn hsd_1_1(field: FieldSpec) -> Result<LeibnizAlgebra> {
    let g = LeibnizAlgebra::abelian(field, 1)?;
    Ok(hemisemidirect(&g, vec![Matrix::identity(field, 1)])?.with_name("hsd_1_1"))
}

/// `sl2` acting on its natural module with zero right action.
pub fn hsd_sl2_natural(field: FieldSpec) -> Result<LeibnizAlgebra> {
    Ok(hemisemidirect(&sl2(field)?, sl2_natural_action(field))?.with_name("hsd_sl2_natural"))
}

/// All entries available over `field`; `sl2` and its extension are omitted
/// in characteristic 2.
pub fn catalogue(field: FieldSpec) -> Vec<CatalogueEntry> {
    let entry = |algebra: Result<LeibnizAlgebra>, is_lie, nilpotent, residual_dim| {
        algebra.ok().map(|algebra| CatalogueEntry {
            algebra,
            is_lie,
            nilpotent,
            residual_dim,
        })
    };
    [
        entry(LeibnizAlgebra::abelian(field, 1), true, true, 0),
        entry(LeibnizAlgebra::abelian(field, 2), true, true, 0),
        entry(LeibnizAlgebra::abelian(field, 3), true, true, 0),
        entry(cyclic_leibniz(field, 2), false, true, 0),
        entry(cyclic_leibniz(field, 3), false, true, 0),
        entry(heisenberg(field), true, true, 0),
        entry(filiform(field, 4), true, true, 0),
        entry(r2(field), true, false, 1),
        entry(sl2(field), true, false, 3),
        entry(hsd_1_1(field), false, false, 1),
        entry(hsd_sl2_natural(field), false, false, 5),
    ]
    .into_iter()
    .flatten()
    .collect()
}
