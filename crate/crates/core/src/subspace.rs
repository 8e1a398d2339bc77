//! Subspaces of a coordinate space, stored by their canonical RREF basis.
//!
//! Two [`Subspace`] values are equal as sets iff they compare equal, so
//! set-level statements (`U^s = U^{s+1}`, `W_{i+1} = W_i`) are plain `==`.

use std::cmp::Ordering;

use crate::error::{Error, Result};
use crate::field::{mul_add, FieldSpec, Scalar};
use crate::matrix::{gauss_jordan, Matrix};

/// Default bound on the number of vectors an exhaustive enumeration may visit.
pub const DEFAULT_ENUMERATION_CAP: u64 = 1 << 16;

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Subspace {
    ambient: usize,
    basis: Matrix,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::zeros(field, 0, ambient),
            pivots: Vec::new(),
        }
    }

    pub fn full(field: FieldSpec, ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Matrix::identity(field, ambient),
            pivots: (0..ambient).collect(),
        }
    }

    /// Canonical span of `vectors`, each of length `ambient`.
    pub fn span(field: FieldSpec, ambient: usize, vectors: Vec<Vec<Scalar>>) -> Result<Self> {
        let m = Matrix::from_rows(field, ambient, vectors)?;
        Ok(Self::row_space(&m))
    }

    pub fn row_space(m: &Matrix) -> Self {
        let mut rows = m.to_rows();
        let pivots = gauss_jordan(&mut rows, m.cols());
        Subspace {
            ambient: m.cols(),
            basis: Matrix::from_rows(m.field(), m.cols(), rows).expect("rows keep their shape"),
            pivots,
        }
    }

    /// Span of the standard basis vectors with the given indices.
    pub fn coordinate(field: FieldSpec, ambient: usize, indices: &[usize]) -> Self {
        let vectors = indices
            .iter()
            .map(|&i| unit_vector(field, ambient, i))
            .collect();
        Self::span(field, ambient, vectors).expect("unit vectors have ambient length")
    }

    pub fn field(&self) -> FieldSpec {
        self.basis.field()
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.pivots.len()
    }

    pub fn is_zero(&self) -> bool {
        self.pivots.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis: RREF, no zero rows.
    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Coordinates not used as pivots; they index a canonical complement.
    pub fn complement_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&c| !is_pivot[c]).collect()
    }

    fn check_compatible(&self, other: &Subspace) -> Result<()> {
        if self.field() != other.field() {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: other.field(),
            });
        }
        if self.ambient != other.ambient {
            return Err(Error::DimensionMismatch {
                context: "subspace ambient dimension",
                expected: self.ambient,
                found: other.ambient,
            });
        }
        Ok(())
    }

    fn check_vector(&self, v: &[Scalar]) -> Result<()> {
        if v.len() != self.ambient {
            return Err(Error::DimensionMismatch {
                context: "vector length",
                expected: self.ambient,
                found: v.len(),
            });
        }
        if let Some(x) = v.iter().find(|x| x.field() != self.field()) {
            return Err(Error::FieldMismatch {
                expected: self.field(),
                found: x.field(),
            });
        }
        Ok(())
    }

    /// `v` minus its component along this subspace: the representative of
    /// `v + self` with zeros in every pivot column.
    pub fn reduce(&self, v: &[Scalar]) -> Vec<Scalar> {
        let mut out = v.to_vec();
        reduce_in_place(self.basis.row_iter().zip(&self.pivots), &mut out);
        out
    }

    pub fn member(&self, v: &[Scalar]) -> Result<bool> {
        self.check_vector(v)?;
        Ok(self.reduce(v).iter().all(Scalar::is_zero))
    }

    /// Coordinates of `v` with respect to the canonical basis, `None` if `v`
    /// is not a member.
    pub fn coordinates(&self, v: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if !self.member(v)? {
            return Ok(None);
        }
        Ok(Some(self.pivots.iter().map(|&p| v[p].clone()).collect()))
    }

    /// The vector with the given coordinates in the canonical basis.
    pub fn combine(&self, coords: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(coords.len(), self.dim(), "coordinate count must equal dimension");
        let mut out = vec![self.field().zero(); self.ambient];
        for (c, row) in coords.iter().zip(self.basis.row_iter()) {
            if c.is_zero() {
                continue;
            }
            for (o, x) in out.iter_mut().zip(row) {
                mul_add(o, c, x);
            }
        }
        out
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Subspace) -> Result<bool> {
        self.check_compatible(other)?;
        Ok(other
            .basis
            .row_iter()
            .all(|row| self.reduce(row).iter().all(Scalar::is_zero)))
    }

    pub fn sum(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let mut e = EchelonBasis::from_subspace(self);
        for row in other.basis.row_iter() {
            e.insert(row.to_vec());
        }
        Ok(e.into_subspace())
    }

    /// Intersection by the Zassenhaus sum-intersection algorithm: the RREF of
    /// `[[A, A], [B, 0]]` exposes `A ∩ B` in the rows whose left half vanishes.
    pub fn intersect(&self, other: &Subspace) -> Result<Subspace> {
        self.check_compatible(other)?;
        let n = self.ambient;
        let zero = self.field().zero();
        let mut rows: Vec<Vec<Scalar>> = self
            .basis
            .row_iter()
            .map(|r| r.iter().chain(r).cloned().collect())
            .chain(
                other
                    .basis
                    .row_iter()
                    .map(|r| r.iter().cloned().chain(std::iter::repeat_n(zero.clone(), n)).collect()),
            )
            .collect();
        let pivots = gauss_jordan(&mut rows, 2 * n);
        let meet = rows
            .into_iter()
            .zip(pivots)
            .filter(|&(_, p)| p >= n)
            .map(|(r, _)| r[n..].to_vec())
            .collect();
        Subspace::span(self.field(), n, meet)
    }

    /// Canonical basis entries in row-major order; used as a total order for
    /// deterministic tie-breaking among subspaces of equal dimension.
    pub fn lex_key(&self) -> &[Scalar] {
        self.basis.entries()
    }

    pub fn lex_cmp(&self, other: &Subspace) -> Ordering {
        self.dim()
            .cmp(&other.dim())
            .then_with(|| self.lex_key().cmp(other.lex_key()))
    }

    fn enumeration_size(&self, cap: u64) -> Result<u32> {
        let p = self
            .field()
            .modulus()
            .ok_or(Error::UnsupportedEnumeration(self.field()))?;
        let size = (p as u128).checked_pow(self.dim() as u32).unwrap_or(u128::MAX);
        if size > cap as u128 {
            return Err(Error::EnumerationBudget { size, cap });
        }
        Ok(p)
    }

    /// Every nonzero vector of the subspace exactly once. Only over GF(p),
    /// and only when `p^dim ≤ cap`.
    pub fn enumerate_vectors(&self, cap: u64) -> Result<VectorIter<'_>> {
        let p = self.enumeration_size(cap)?;
        Ok(VectorIter::new(self, p, false))
    }

    /// One representative per line (first nonzero coordinate equal to 1).
    /// Subject to the same cap as [`enumerate_vectors`](Self::enumerate_vectors).
    pub fn enumerate_projective(&self, cap: u64) -> Result<VectorIter<'_>> {
        let p = self.enumeration_size(cap)?;
        Ok(VectorIter::new(self, p, true))
    }
}

pub(crate) fn unit_vector(field: FieldSpec, n: usize, i: usize) -> Vec<Scalar> {
    let mut v = vec![field.zero(); n];
    v[i] = field.one();
    v
}

fn reduce_in_place<'a>(
    rows: impl Iterator<Item = (&'a [Scalar], &'a usize)>,
    v: &mut [Scalar],
) {
    for (row, &p) in rows {
        if v[p].is_zero() {
            continue;
        }
        let factor = -&v[p];
        for (x, r) in v[p..].iter_mut().zip(&row[p..]) {
            mul_add(x, &factor, r);
        }
    }
}

/// Coefficient-vector enumeration over the canonical basis.
pub struct VectorIter<'a> {
    space: &'a Subspace,
    p: u32,
    coeffs: Vec<u32>,
    projective: bool,
    done: bool,
}

impl<'a> VectorIter<'a> {
    fn new(space: &'a Subspace, p: u32, projective: bool) -> Self {
        let d = space.dim();
        let mut coeffs = vec![0; d];
        if d > 0 {
            // Start at the smallest nonzero tuple in big-endian order.
            coeffs[d - 1] = 1;
        }
        VectorIter {
            space,
            p,
            coeffs,
            projective,
            done: d == 0,
        }
    }

    fn advance(&mut self) {
        for c in self.coeffs.iter_mut().rev() {
            *c += 1;
            if *c < self.p {
                return;
            }
            *c = 0;
        }
        self.done = true;
    }

    fn is_normalised(&self) -> bool {
        self.coeffs.iter().find(|&&c| c != 0) == Some(&1)
    }
}

impl Iterator for VectorIter<'_> {
    type Item = Vec<Scalar>;

    fn next(&mut self) -> Option<Vec<Scalar>> {
        while !self.done {
            let keep = !self.projective || self.is_normalised();
            let field = self.space.field();
            let coords: Vec<Scalar> = self.coeffs.iter().map(|&c| field.from_i64(c as i64)).collect();
            self.advance();
            if keep {
                return Some(self.space.combine(&coords));
            }
        }
        None
    }
}

/// A basis kept in reduced row echelon form under insertion.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    field: FieldSpec,
    ambient: usize,
    rows: Vec<Vec<Scalar>>,
    pivots: Vec<usize>,
}

impl EchelonBasis {
    pub fn new(field: FieldSpec, ambient: usize) -> Self {
        EchelonBasis {
            field,
            ambient,
            rows: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn from_subspace(s: &Subspace) -> Self {
        EchelonBasis {
            field: s.field(),
            ambient: s.ambient,
            rows: s.basis.to_rows(),
            pivots: s.pivots.clone(),
        }
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn reduce(&self, v: &mut [Scalar]) {
        reduce_in_place(
            self.rows.iter().map(Vec::as_slice).zip(&self.pivots),
            v,
        );
    }

    pub fn contains(&self, v: &[Scalar]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Scalar::is_zero)
    }

    /// Adds `v` to the span; returns whether the dimension grew.
    pub fn insert(&mut self, mut v: Vec<Scalar>) -> bool {
        debug_assert_eq!(v.len(), self.ambient);
        self.reduce(&mut v);
        let Some(p) = v.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = v[p].inv().expect("leading entry is nonzero");
        for x in v[p..].iter_mut() {
            *x = &*x * &inv;
        }
        for row in &mut self.rows {
            if row[p].is_zero() {
                continue;
            }
            let factor = -&row[p];
            for (x, y) in row[p..].iter_mut().zip(&v[p..]) {
                mul_add(x, &factor, y);
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.rows.insert(at, v);
        true
    }

    pub fn into_subspace(self) -> Subspace {
        Subspace {
            ambient: self.ambient,
            basis: Matrix::from_rows(self.field, self.ambient, self.rows)
                .expect("echelon rows have ambient length"),
            pivots: self.pivots,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn ints(f: FieldSpec, rows: &[&[i64]]) -> Vec<Vec<Scalar>> {
        rows.iter()
            .map(|r| r.iter().map(|&x| f.from_i64(x)).collect())
            .collect()
    }

    #[test]
    fn span_examples() {
        let f = gf(3);
        assert_eq!(Subspace::span(f, 3, vec![]).unwrap().dim(), 0);
        let q = FieldSpec::rationals();
        assert!(Subspace::span(q, 2, ints(q, &[&[1, 0], &[0, 1]])).unwrap().is_full());
        let line = Subspace::span(f, 2, ints(f, &[&[1, 1], &[2, 2]])).unwrap();
        assert_eq!(line.basis(), &Matrix::from_ints(f, &[&[1, 1]]));
        assert!(matches!(
            Subspace::span(f, 3, ints(f, &[&[1, 1]])),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn lines_of_the_binary_plane() {
        let f = gf(2);
        let lines: Vec<Subspace> = [[1, 0], [0, 1], [1, 1]]
            .iter()
            .map(|v| Subspace::span(f, 2, ints(f, &[v])).unwrap())
            .collect();
        for (i, a) in lines.iter().enumerate() {
            for (j, b) in lines.iter().enumerate() {
                let s = a.sum(b).unwrap();
                let m = a.intersect(b).unwrap();
                if i == j {
                    assert_eq!(&s, a);
                    assert_eq!(&m, a);
                } else {
                    assert!(s.is_full());
                    assert!(m.is_zero());
                }
            }
        }
    }

    #[test]
    fn nested_sum_and_intersection() {
        let q = FieldSpec::rationals();
        let a = Subspace::span(q, 3, ints(q, &[&[1, 2, 3]])).unwrap();
        let b = Subspace::span(q, 3, ints(q, &[&[1, 2, 3], &[0, 0, 1]])).unwrap();
        assert!(b.contains(&a).unwrap());
        assert!(!a.contains(&b).unwrap());
        assert_eq!(a.intersect(&b).unwrap(), a);
        assert_eq!(a.sum(&b).unwrap(), b);
    }

    #[test]
    fn ambient_mismatch_is_an_error() {
        let f = gf(5);
        let a = Subspace::full(f, 2);
        let b = Subspace::full(f, 3);
        assert!(a.sum(&b).is_err());
        assert!(a.intersect(&b).is_err());
        assert!(a.contains(&b).is_err());
        assert!(a.member(&[f.one()]).is_err());
    }

    #[test]
    fn enumeration_counts() {
        let f3 = gf(3);
        let line = Subspace::span(f3, 3, ints(f3, &[&[1, 2, 0]])).unwrap();
        assert_eq!(line.enumerate_vectors(DEFAULT_ENUMERATION_CAP).unwrap().count(), 2);
        assert_eq!(Subspace::full(gf(2), 3).enumerate_vectors(1 << 16).unwrap().count(), 7);
        let f5 = gf(5);
        let plane = Subspace::coordinate(f5, 4, &[0, 2]);
        let all: Vec<_> = plane.enumerate_vectors(1 << 16).unwrap().collect();
        assert_eq!(all.len(), 24);
        assert_eq!(plane.enumerate_projective(1 << 16).unwrap().count(), 6);
        let mut dedup = all.clone();
        dedup.sort();
        dedup.dedup();
        assert_eq!(dedup.len(), 24);
        assert!(all.iter().all(|v| plane.member(v).unwrap() && v.iter().any(|x| !x.is_zero())));
    }

    #[test]
    fn enumeration_errors() {
        let q = Subspace::full(FieldSpec::rationals(), 1);
        assert!(matches!(
            q.enumerate_vectors(100),
            Err(Error::UnsupportedEnumeration(_))
        ));
        let big = Subspace::full(gf(2), 17);
        assert!(matches!(
            big.enumerate_vectors(DEFAULT_ENUMERATION_CAP),
            Err(Error::EnumerationBudget { .. })
        ));
        assert!(Subspace::zero(gf(2), 3).enumerate_vectors(1).unwrap().next().is_none());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = gf(7);
        let s = Subspace::span(f, 3, ints(f, &[&[1, 3, 0], &[0, 2, 5]])).unwrap();
        let v = s.combine(&[f.from_i64(4), f.from_i64(6)]);
        assert_eq!(s.coordinates(&v).unwrap().unwrap(), vec![f.from_i64(4), f.from_i64(6)]);
        assert_eq!(s.coordinates(&unit_vector(f, 3, 2)).unwrap(), None);
    }
}
