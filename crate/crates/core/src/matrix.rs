//! Dense exact matrices and Gauss-Jordan elimination.
//!
//! Vectors are rows throughout the crate: a matrix `A` acts on a row vector
//! `v` as `v·A`, and the row space of a matrix is the subspace it spans.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{mul_add, FieldSpec, Scalar};
use crate::subspace::Subspace;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: FieldSpec,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(field: FieldSpec, rows: usize, cols: usize) -> Self {
        Matrix {
            field,
            rows,
            cols,
            data: vec![field.zero(); rows * cols],
        }
    }

    pub fn identity(field: FieldSpec, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = field.one();
        }
        m
    }

    /// Builds a matrix from rows of `cols` entries, all of which must lie in `field`.
    pub fn from_rows(field: FieldSpec, cols: usize, rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let nrows = rows.len();
        let mut data = Vec::with_capacity(nrows * cols);
        for row in rows {
            if row.len() != cols {
                return Err(Error::DimensionMismatch {
                    context: "matrix row",
                    expected: cols,
                    found: row.len(),
                });
            }
            for x in row {
                if x.field() != field {
                    return Err(Error::FieldMismatch {
                        expected: field,
                        found: x.field(),
                    });
                }
                data.push(x);
            }
        }
        Ok(Matrix {
            field,
            rows: nrows,
            cols,
            data,
        })
    }

    /// Convenience constructor from integer entries; rows must be equally long.
    pub fn from_ints(field: FieldSpec, rows: &[&[i64]]) -> Self {
        let cols = rows.first().map_or(0, |r| r.len());
        let rows = rows
            .iter()
            .map(|r| {
                assert_eq!(r.len(), cols, "ragged integer matrix");
                r.iter().map(|&v| field.from_i64(v)).collect()
            })
            .collect();
        Self::from_rows(field, cols, rows).expect("integer rows are well formed")
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Scalar {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: Scalar) {
        assert_eq!(v.field(), self.field, "scalar field mismatch");
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[Scalar] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_iter(&self) -> impl Iterator<Item = &[Scalar]> {
        (0..self.rows).map(move |r| self.row(r))
    }

    pub fn to_rows(&self) -> Vec<Vec<Scalar>> {
        self.row_iter().map(<[Scalar]>::to_vec).collect()
    }

    /// Entries in row-major order.
    pub fn entries(&self) -> &[Scalar] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Matrix {
        let mut t = Matrix::zeros(self.field, self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.data[c * self.rows + r] = self.get(r, c).clone();
            }
        }
        t
    }

    fn check_field(&self, other: &Matrix) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: other.field,
            });
        }
        Ok(())
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        self.check_field(other)?;
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product",
                expected: self.cols,
                found: other.rows,
            });
        }
        let mut out = Matrix::zeros(self.field, self.rows, other.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..other.cols {
                    mul_add(&mut out.data[r * other.cols + c], a, other.get(k, c));
                }
            }
        }
        Ok(out)
    }

    fn zip_with(&self, other: &Matrix, f: impl Fn(&Scalar, &Scalar) -> Scalar) -> Result<Matrix> {
        self.check_field(other)?;
        if (self.rows, self.cols) != (other.rows, other.cols) {
            return Err(Error::DimensionMismatch {
                context: "matrix shape",
                expected: self.rows * self.cols,
                found: other.rows * other.cols,
            });
        }
        Ok(Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect(),
        })
    }

    pub fn add(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn sub(&self, other: &Matrix) -> Result<Matrix> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn neg(&self) -> Matrix {
        self.scale(&-self.field.one())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            field: self.field,
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|x| x * s).collect(),
        }
    }

    /// `Σ coeffs[i] · mats[i]`; all matrices must share a shape.
    pub fn linear_combination(
        field: FieldSpec,
        rows: usize,
        cols: usize,
        coeffs: &[Scalar],
        mats: &[Matrix],
    ) -> Matrix {
        let mut out = Matrix::zeros(field, rows, cols);
        for (c, m) in coeffs.iter().zip(mats) {
            if c.is_zero() {
                continue;
            }
            debug_assert_eq!((m.rows, m.cols), (rows, cols));
            for (o, x) in out.data.iter_mut().zip(&m.data) {
                mul_add(o, c, x);
            }
        }
        out
    }

    /// Row vector times matrix.
    pub fn vec_mul(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(v.len(), self.rows, "vector length must equal row count");
        let mut out = vec![self.field.zero(); self.cols];
        for (k, a) in v.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (c, o) in out.iter_mut().enumerate() {
                mul_add(o, a, self.get(k, c));
            }
        }
        out
    }

    /// Reduced row echelon form with zero rows stripped, and the rank.
    pub fn rref(&self) -> (Matrix, usize) {
        let mut rows = self.to_rows();
        let pivots = gauss_jordan(&mut rows, self.cols);
        let rank = pivots.len();
        let m = Matrix::from_rows(self.field, self.cols, rows).expect("rows keep their shape");
        (m, rank)
    }

    pub fn rank(&self) -> usize {
        self.rref().1
    }

    /// Some `x` with `self · x = b`, or `None` when the system is inconsistent.
    /// Free variables are set to zero.
    pub fn solve(&self, b: &Matrix) -> Result<Option<Matrix>> {
        self.check_field(b)?;
        if self.rows != b.rows {
            return Err(Error::DimensionMismatch {
                context: "solve right-hand side",
                expected: self.rows,
                found: b.rows,
            });
        }
        let n = self.cols;
        let mut aug: Vec<Vec<Scalar>> = (0..self.rows)
            .map(|r| self.row(r).iter().chain(b.row(r)).cloned().collect())
            .collect();
        let pivots = gauss_jordan(&mut aug, n + b.cols);
        if pivots.last().is_some_and(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Matrix::zeros(self.field, n, b.cols);
        for (row, &p) in aug.iter().zip(&pivots) {
            for c in 0..b.cols {
                x.data[p * b.cols + c] = row[n + c].clone();
            }
        }
        Ok(Some(x))
    }

    /// `{x : self · xᵀ = 0}` as a subspace of row vectors of length `cols`.
    pub fn nullspace(&self) -> Subspace {
        let mut rows = self.to_rows();
        let pivots = gauss_jordan(&mut rows, self.cols);
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let basis = (0..self.cols)
            .filter(|&c| !is_pivot[c])
            .map(|free| {
                let mut v = vec![self.field.zero(); self.cols];
                v[free] = self.field.one();
                for (row, &p) in rows.iter().zip(&pivots) {
                    v[p] = -&row[free];
                }
                v
            })
            .collect::<Vec<_>>();
        Subspace::span(self.field, self.cols, basis).expect("kernel vectors have ambient length")
    }

    /// `{y : y · self = 0}`.
    pub fn left_kernel(&self) -> Subspace {
        self.transpose().nullspace()
    }
}

/// In-place Gauss-Jordan elimination on `rows` (each of length `ncols`).
/// On return `rows` holds the nonzero RREF rows only; the pivot columns are
/// returned in increasing order.
pub(crate) fn gauss_jordan(rows: &mut Vec<Vec<Scalar>>, ncols: usize) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut next = 0;
    for col in 0..ncols {
        if next == rows.len() {
            break;
        }
        let Some(found) = (next..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(next, found);
        let inv = rows[next][col].inv().expect("pivot is nonzero");
        if !inv.is_one() {
            for x in rows[next][col..].iter_mut() {
                *x = &*x * &inv;
            }
        }
        let pivot_row = std::mem::take(&mut rows[next]);
        for (r, row) in rows.iter_mut().enumerate() {
            if r == next || row[col].is_zero() {
                continue;
            }
            let factor = -&row[col];
            for (x, p) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                mul_add(x, &factor, p);
            }
        }
        rows[next] = pivot_row;
        pivots.push(col);
        next += 1;
    }
    rows.truncate(next);
    pivots
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, row) in self.row_iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            let cells: Vec<String> = row.iter().map(ToString::to_string).collect();
            write!(f, "{}", cells.join(" "))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(gf(5), 3);
        assert_eq!(id.rref(), (id.clone(), 3));
    }

    #[test]
    fn rref_strips_dependent_rows() {
        let q = FieldSpec::rationals();
        let m = Matrix::from_ints(q, &[&[2, 4], &[1, 2]]);
        assert_eq!(m.rref(), (Matrix::from_ints(q, &[&[1, 2]]), 1));
    }

    #[test]
    fn rref_mod_two() {
        // [[1,1],[1,2]] ≡ [[1,1],[1,0]] mod 2; R2 -= R1 gives [0,1], then R1 -= R2.
        let m = Matrix::from_ints(gf(2), &[&[1, 1], &[1, 2]]);
        assert_eq!(m.rref(), (Matrix::identity(gf(2), 2), 2));
    }

    #[test]
    fn mixed_fields_are_rejected() {
        let q = FieldSpec::rationals();
        let rows = vec![vec![q.one(), gf(3).one()]];
        assert!(matches!(
            Matrix::from_rows(q, 2, rows),
            Err(Error::FieldMismatch { .. })
        ));
        let a = Matrix::identity(q, 2);
        let b = Matrix::identity(gf(3), 2);
        assert!(matches!(a.mul(&b), Err(Error::FieldMismatch { .. })));
    }

    #[test]
    fn solve_identity_and_underdetermined() {
        let q = FieldSpec::rationals();
        let b = Matrix::from_ints(q, &[&[3, -1], &[7, 2]]);
        assert_eq!(Matrix::identity(q, 2).solve(&b).unwrap(), Some(b.clone()));

        let a = Matrix::from_ints(gf(2), &[&[1, 1]]);
        let rhs = Matrix::from_ints(gf(2), &[&[1]]);
        let x = a.solve(&rhs).unwrap().unwrap();
        assert_eq!(a.mul(&x).unwrap(), rhs);
    }

    #[test]
    fn solve_inconsistent_and_mismatched() {
        let q = FieldSpec::rationals();
        let zero = Matrix::zeros(q, 2, 2);
        let b = Matrix::from_ints(q, &[&[1], &[0]]);
        assert_eq!(zero.solve(&b).unwrap(), None);
        let short = Matrix::from_ints(q, &[&[1]]);
        assert!(matches!(
            zero.solve(&short),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn nullspace_annihilates() {
        let f = gf(3);
        let a = Matrix::from_ints(f, &[&[1, 2, 0, 1], &[0, 1, 1, 1]]);
        let k = a.nullspace();
        assert_eq!(k.dim(), 2);
        for v in k.basis().row_iter() {
            let col = Matrix::from_rows(f, 1, v.iter().map(|x| vec![x.clone()]).collect()).unwrap();
            assert!(a.mul(&col).unwrap().is_zero());
        }
        let left = a.left_kernel();
        assert_eq!(left.dim(), 0);
    }
}
