//! Left Leibniz algebras given by structure constants.
//!
//! The tensor is stored as one left-multiplication matrix per basis element:
//! row `j` of `left_mul(i)` holds the coordinates of `e_i e_j`, so
//! `c[i][j][k] = left_mul(i)[j][k]` and `x·y = y · λ_x` for row vectors.
//!
//! Powers of a subalgebra are left-normed: `U^1 = U`, `U^{k+1} = U·U^k`.

use std::fmt;

use crate::error::{Error, Result};
use crate::field::{mul_add, FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::par::{self, Strategy};
use crate::subspace::{unit_vector, EchelonBasis, Subspace};

/// Largest supported algebra dimension; tensors are stored densely.
pub const MAX_DIM: usize = 32;

#[derive(Clone, Debug)]
pub struct LeibnizAlgebra {
    name: String,
    field: FieldSpec,
    dim: usize,
    left: Vec<Matrix>,
}

/// Equality is equality of structure constants; names are labels only.
impl PartialEq for LeibnizAlgebra {
    fn eq(&self, other: &Self) -> bool {
        self.field == other.field && self.dim == other.dim && self.left == other.left
    }
}

impl Eq for LeibnizAlgebra {}

/// A basis triple at which `a(xy) = (ax)y + x(ay)` fails.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Violation {
    pub a: usize,
    pub x: usize,
    pub y: usize,
    /// Coordinates of `a(xy)`.
    pub lhs: Vec<Scalar>,
    /// Coordinates of `(ax)y + x(ay)`.
    pub rhs: Vec<Scalar>,
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let show = |v: &[Scalar]| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        write!(
            f,
            "e{a}(e{x}e{y}) = ({}) but (e{a}e{x})e{y} + e{x}(e{a}e{y}) = ({})",
            show(&self.lhs),
            show(&self.rhs),
            a = self.a,
            x = self.x,
            y = self.y
        )
    }
}

/// The lower central series `U = U^1 ⊋ U^2 ⊋ … ⊋ U^s = U^{s+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SeriesReport {
    /// `terms[k-1] = U^k` for `1 ≤ k ≤ s`; strictly descending.
    pub terms: Vec<Subspace>,
    /// The first index `s` with `U^s = U^{s+1}`.
    pub stabilized_at: usize,
    /// The nilpotent residual `U^s`.
    pub residual: Subspace,
}

impl SeriesReport {
    /// `U^k` for any `k ≥ 1`.
    pub fn term(&self, k: usize) -> &Subspace {
        assert!(k >= 1, "series terms are indexed from 1");
        self.terms.get(k - 1).unwrap_or(&self.residual)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.terms.iter().map(Subspace::dim).collect()
    }
}

impl LeibnizAlgebra {
    /// Builds and validates an algebra from a dense tensor `c[(i*n + j)*n + k]`.
    pub fn from_tensor(
        name: impl Into<String>,
        field: FieldSpec,
        dim: usize,
        tensor: Vec<Scalar>,
    ) -> Result<Self> {
        let alg = Self::from_tensor_unchecked(name, field, dim, tensor)?;
        let violations = alg.validate().len();
        if violations > 0 {
            return Err(Error::InvalidAlgebra { violations });
        }
        Ok(alg)
    }

    /// Shape and field checks only; the Leibniz identity is not verified.
    pub fn from_tensor_unchecked(
        name: impl Into<String>,
        field: FieldSpec,
        dim: usize,
        tensor: Vec<Scalar>,
    ) -> Result<Self> {
        if dim > MAX_DIM {
            return Err(Error::DimensionTooLarge { dim, max: MAX_DIM });
        }
        if tensor.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                context: "structure tensor",
                expected: dim * dim * dim,
                found: tensor.len(),
            });
        }
        let mut slices = tensor.chunks((dim * dim).max(1)).map(<[Scalar]>::to_vec);
        let left = (0..dim)
            .map(|_| {
                let slice = slices.next().expect("tensor length checked");
                let rows = slice.chunks(dim).map(<[Scalar]>::to_vec).collect();
                Matrix::from_rows(field, dim, rows)
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(LeibnizAlgebra {
            name: name.into(),
            field,
            dim,
            left,
        })
    }

    /// Validated algebra from sparse integer constants `(i, j, k, c)`.
    /// Repeated indices accumulate.
    pub fn from_constants(
        name: impl Into<String>,
        field: FieldSpec,
        dim: usize,
        constants: &[(usize, usize, usize, i64)],
    ) -> Result<Self> {
        Self::from_tensor(name, field, dim, sparse_tensor(field, dim, constants)?)
    }

    pub fn from_constants_unchecked(
        name: impl Into<String>,
        field: FieldSpec,
        dim: usize,
        constants: &[(usize, usize, usize, i64)],
    ) -> Result<Self> {
        Self::from_tensor_unchecked(name, field, dim, sparse_tensor(field, dim, constants)?)
    }

    /// The zero product on `dim` generators.
    pub fn abelian(field: FieldSpec, dim: usize) -> Result<Self> {
        Self::from_constants(format!("abelian_{dim}"), field, dim, &[])
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn field(&self) -> FieldSpec {
        self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `c[i][j][k]`, the `e_k` coefficient of `e_i e_j`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> &Scalar {
        self.left[i].get(j, k)
    }

    /// Dense tensor in `(i, j, k)` row-major order.
    pub fn tensor(&self) -> Vec<Scalar> {
        self.left.iter().flat_map(|m| m.entries().iter().cloned()).collect()
    }

    /// Matrix of `λ_{e_i}`: row `j` is `e_i e_j`.
    pub fn left_mul(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    /// Matrix of `ρ_{e_i}`: row `j` is `e_j e_i`.
    pub fn right_mul(&self, i: usize) -> Matrix {
        let rows = (0..self.dim).map(|j| self.left[j].row(i).to_vec()).collect();
        Matrix::from_rows(self.field, self.dim, rows).expect("rows have algebra dimension")
    }

    /// Matrix of `λ_x` for an arbitrary element `x`.
    pub fn left_operator(&self, x: &[Scalar]) -> Matrix {
        Matrix::linear_combination(self.field, self.dim, self.dim, x, &self.left)
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Scalar> {
        unit_vector(self.field, self.dim, i)
    }

    pub fn full(&self) -> Subspace {
        Subspace::full(self.field, self.dim)
    }

    pub fn zero_subspace(&self) -> Subspace {
        Subspace::zero(self.field, self.dim)
    }

    /// Span of integer coordinate rows (test and catalogue convenience).
    pub fn span_ints(&self, rows: &[&[i64]]) -> Result<Subspace> {
        let vectors = rows
            .iter()
            .map(|r| r.iter().map(|&x| self.field.from_i64(x)).collect())
            .collect();
        Subspace::span(self.field, self.dim, vectors)
    }

    /// The product `xy`.
    pub fn mul(&self, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(x.len(), self.dim, "element length must equal algebra dimension");
        assert_eq!(y.len(), self.dim, "element length must equal algebra dimension");
        let mut out = vec![self.field.zero(); self.dim];
        for (i, xi) in x.iter().enumerate() {
            if xi.is_zero() {
                continue;
            }
            for (j, yj) in y.iter().enumerate() {
                if yj.is_zero() {
                    continue;
                }
                let coeff = xi * yj;
                for (o, c) in out.iter_mut().zip(self.left[i].row(j)) {
                    mul_add(o, &coeff, c);
                }
            }
        }
        out
    }

    pub(crate) fn check_subspace(&self, s: &Subspace) -> Result<()> {
        if s.field() != self.field {
            return Err(Error::FieldMismatch {
                expected: self.field,
                found: s.field(),
            });
        }
        if s.ambient_dim() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "subspace of algebra",
                expected: self.dim,
                found: s.ambient_dim(),
            });
        }
        Ok(())
    }

    /// Every basis triple violating the left Leibniz identity.
    pub fn validate(&self) -> Vec<Violation> {
        self.validate_with(Strategy::default())
    }

    /// [`validate`](Self::validate) with an explicit execution strategy.
    ///
    /// For each pair `(a, x)` the identity over all `y` at once reads
    /// `λ_x λ_a = λ_{e_a e_x} + λ_a λ_x` on row vectors.
    pub fn validate_with(&self, strategy: Strategy) -> Vec<Violation> {
        let n = self.dim;
        let per_a = par::map_range(strategy, n, |a| {
            let la = &self.left[a];
            let mut found = Vec::new();
            for x in 0..n {
                let lx = &self.left[x];
                let lhs = lx.mul(la).expect("square matrices");
                let ax = self.left_operator(la.row(x));
                let rhs = ax.add(&la.mul(lx).expect("square matrices")).expect("same shape");
                for y in 0..n {
                    if lhs.row(y) != rhs.row(y) {
                        found.push(Violation {
                            a,
                            x,
                            y,
                            lhs: lhs.row(y).to_vec(),
                            rhs: rhs.row(y).to_vec(),
                        });
                    }
                }
            }
            found
        });
        per_a.into_iter().flatten().collect()
    }

    /// `AB`, the span of all products `ab` with `a ∈ A`, `b ∈ B`.
    pub fn product(&self, a: &Subspace, b: &Subspace) -> Result<Subspace> {
        self.check_subspace(a)?;
        self.check_subspace(b)?;
        let mut out = EchelonBasis::new(self.field, self.dim);
        'outer: for x in a.basis().row_iter() {
            let lx = self.left_operator(x);
            for y in b.basis().row_iter() {
                out.insert(lx.vec_mul(y));
                if out.dim() == self.dim {
                    break 'outer;
                }
            }
        }
        Ok(out.into_subspace())
    }

    /// `λ_U^k V`: `λ_U^0 V = V` and `λ_U^k V = U(λ_U^{k-1} V)`.
    pub fn lambda_power(&self, u: &Subspace, v: &Subspace, k: usize) -> Result<Subspace> {
        self.check_subspace(u)?;
        let mut cur = v.clone();
        self.check_subspace(&cur)?;
        for _ in 0..k {
            let next = self.product(u, &cur)?;
            if next == cur {
                break;
            }
            cur = next;
        }
        Ok(cur)
    }

    /// Left-normed lower central series of a subalgebra, up to stabilisation.
    pub fn lower_central_series(&self, u: &Subspace) -> Result<SeriesReport> {
        if !self.is_subalgebra(u)? {
            return Err(Error::NotSubalgebra);
        }
        let mut terms = vec![u.clone()];
        loop {
            assert!(
                terms.len() <= u.dim() + 1,
                "lower central series failed to stabilise"
            );
            let last = terms.last().expect("series is nonempty");
            let next = self.product(u, last)?;
            if &next == last {
                break;
            }
            terms.push(next);
        }
        let residual = terms.last().expect("series is nonempty").clone();
        Ok(SeriesReport {
            stabilized_at: terms.len(),
            terms,
            residual,
        })
    }

    /// The left centre `{x : xa = 0 for all a}`.
    pub fn left_centre(&self) -> Subspace {
        let n = self.dim;
        let rows = self.left.iter().map(|m| m.entries().to_vec()).collect();
        let map = Matrix::from_rows(self.field, n * n, rows).expect("flattened slices");
        let z = map.left_kernel();
        debug_assert!(self.is_ideal(&z).unwrap_or(false), "left centre must be an ideal");
        z
    }

    pub fn is_subalgebra(&self, u: &Subspace) -> Result<bool> {
        u.contains(&self.product(u, u)?)
    }

    /// `L·U ⊆ U`.
    pub fn is_left_ideal(&self, u: &Subspace) -> Result<bool> {
        u.contains(&self.product(&self.full(), u)?)
    }

    /// `U·L ⊆ U`.
    pub fn is_right_ideal(&self, u: &Subspace) -> Result<bool> {
        u.contains(&self.product(u, &self.full())?)
    }

    pub fn is_ideal(&self, u: &Subspace) -> Result<bool> {
        Ok(self.is_left_ideal(u)? && self.is_right_ideal(u)?)
    }

    /// Whether `e_i e_j = -e_j e_i` for all `i, j` (including `e_i e_i = 0`).
    pub fn is_lie(&self) -> bool {
        (0..self.dim).all(|i| {
            (i..self.dim).all(|j| {
                let ij = self.left[i].row(j);
                let ji = self.left[j].row(i);
                if i == j {
                    ij.iter().all(Scalar::is_zero)
                } else {
                    ij.iter().zip(ji).all(|(a, b)| (a + b).is_zero())
                }
            })
        })
    }

    /// `L/I` on the complement basis `{e_q : q not a pivot of I}`, together
    /// with the projection matrix (row `i` = image of `e_i`).
    pub fn quotient(&self, ideal: &Subspace) -> Result<(LeibnizAlgebra, Matrix)> {
        self.check_subspace(ideal)?;
        if !self.is_ideal(ideal)? {
            return Err(Error::NotIdeal);
        }
        let keep = ideal.complement_columns();
        let d = keep.len();
        let project = |v: &[Scalar]| -> Vec<Scalar> {
            let r = ideal.reduce(v);
            keep.iter().map(|&q| r[q].clone()).collect()
        };
        let proj_rows = (0..self.dim).map(|i| project(&self.basis_vector(i))).collect();
        let projection = Matrix::from_rows(self.field, d, proj_rows)?;
        let mut tensor = Vec::with_capacity(d * d * d);
        for &a in &keep {
            for &b in &keep {
                tensor.extend(project(self.left[a].row(b)));
            }
        }
        let q = LeibnizAlgebra::from_tensor(format!("{}_quot", self.name), self.field, d, tensor)?;
        Ok((q, projection))
    }

    /// Smallest subalgebra containing `s`.
    pub fn subalgebra_closure(&self, s: &Subspace) -> Result<Subspace> {
        let mut cur = s.clone();
        loop {
            let next = cur.sum(&self.product(&cur, &cur)?)?;
            if next == cur {
                return Ok(cur);
            }
            cur = next;
        }
    }

    /// Wraps a subspace known to be a subalgebra, caching its ideal flags.
    pub fn subalgebra(&self, s: &Subspace) -> Result<Subalgebra<'_>> {
        if !self.is_subalgebra(s)? {
            return Err(Error::NotSubalgebra);
        }
        Ok(Subalgebra {
            parent: self,
            space: s.clone(),
            left_ideal: self.is_left_ideal(s)?,
            right_ideal: self.is_right_ideal(s)?,
        })
    }
}

fn sparse_tensor(
    field: FieldSpec,
    dim: usize,
    constants: &[(usize, usize, usize, i64)],
) -> Result<Vec<Scalar>> {
    let mut t = vec![field.zero(); dim * dim * dim];
    for &(i, j, k, v) in constants {
        if i >= dim || j >= dim || k >= dim {
            return Err(Error::DimensionMismatch {
                context: "structure constant index",
                expected: dim,
                found: i.max(j).max(k),
            });
        }
        t[(i * dim + j) * dim + k] += &field.from_i64(v);
    }
    Ok(t)
}

/// A subalgebra of a parent algebra with its ideal flags.
#[derive(Clone, Debug)]
pub struct Subalgebra<'a> {
    parent: &'a LeibnizAlgebra,
    space: Subspace,
    left_ideal: bool,
    right_ideal: bool,
}

impl<'a> Subalgebra<'a> {
    pub fn parent(&self) -> &'a LeibnizAlgebra {
        self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn is_left_ideal(&self) -> bool {
        self.left_ideal
    }

    pub fn is_right_ideal(&self) -> bool {
        self.right_ideal
    }

    pub fn is_ideal(&self) -> bool {
        self.left_ideal && self.right_ideal
    }

    /// The subalgebra as an algebra in its own right, on the canonical
    /// (RREF) basis of the subspace.
    pub fn to_algebra(&self) -> LeibnizAlgebra {
        let basis = self.space.basis();
        let d = self.space.dim();
        let mut tensor = Vec::with_capacity(d * d * d);
        for x in basis.row_iter() {
            let lx = self.parent.left_operator(x);
            for y in basis.row_iter() {
                let prod = lx.vec_mul(y);
                tensor.extend(
                    self.space
                        .coordinates(&prod)
                        .expect("same ambient")
                        .expect("subalgebra is closed"),
                );
            }
        }
        LeibnizAlgebra::from_tensor_unchecked(
            format!("{}_sub", self.parent.name),
            self.parent.field,
            d,
            tensor,
        )
        .expect("subalgebra tensor is well formed")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    #[test]
    fn abelian_and_cyclic_validate() {
        for n in 0..4 {
            assert!(LeibnizAlgebra::abelian(gf(3), n).unwrap().validate().is_empty());
        }
        let c2 = catalogue::cyclic_leibniz(gf(5), 2).unwrap();
        assert!(c2.validate().is_empty());
    }

    #[test]
    fn mutated_c2_is_rejected() {
        // Adding e2e1 = e1 breaks e2(e1e1) = 0 versus (e2e1)e1 + e1(e2e1) = e2 + e2.
        let f = FieldSpec::rationals();
        let bad = LeibnizAlgebra::from_constants_unchecked("bad", f, 2, &[(0, 0, 1, 1), (1, 0, 0, 1)])
            .unwrap();
        assert!(!bad.validate().is_empty());
        assert!(matches!(
            LeibnizAlgebra::from_constants("bad", f, 2, &[(0, 0, 1, 1), (1, 0, 0, 1)]),
            Err(Error::InvalidAlgebra { .. })
        ));
    }

    #[test]
    fn dimension_cap() {
        let err = LeibnizAlgebra::from_tensor_unchecked("big", gf(2), 33, vec![]).unwrap_err();
        assert!(matches!(err, Error::DimensionTooLarge { dim: 33, .. }));
    }

    #[test]
    fn products() {
        let f = gf(3);
        let ab = LeibnizAlgebra::abelian(f, 3).unwrap();
        assert!(ab.product(&ab.full(), &ab.full()).unwrap().is_zero());
        let c2 = catalogue::cyclic_leibniz(f, 2).unwrap();
        assert_eq!(c2.product(&c2.full(), &c2.full()).unwrap(), c2.span_ints(&[&[0, 1]]).unwrap());
        let sl2 = catalogue::sl2(FieldSpec::rationals()).unwrap();
        assert!(sl2.product(&sl2.full(), &sl2.full()).unwrap().is_full());
    }

    #[test]
    fn lambda_powers() {
        let f = gf(3);
        let c2 = catalogue::cyclic_leibniz(f, 2).unwrap();
        let l = c2.full();
        assert_eq!(c2.lambda_power(&l, &l, 0).unwrap(), l);
        assert!(c2.lambda_power(&l, &l, 2).unwrap().is_zero());
        let sl2 = catalogue::sl2(FieldSpec::rationals()).unwrap();
        for k in 1..4 {
            assert!(sl2.lambda_power(&sl2.full(), &sl2.full(), k).unwrap().is_full());
        }
    }

    #[test]
    fn lower_central_series_examples() {
        let f = gf(3);
        let h = catalogue::heisenberg(f).unwrap();
        let s = h.lower_central_series(&h.full()).unwrap();
        assert_eq!(s.dims(), vec![3, 1, 0]);
        assert_eq!(s.terms[1], h.span_ints(&[&[0, 0, 1]]).unwrap());
        assert_eq!(s.stabilized_at, 3);
        assert!(s.residual.is_zero());

        let sl2 = catalogue::sl2(FieldSpec::rationals()).unwrap();
        let s = sl2.lower_central_series(&sl2.full()).unwrap();
        assert_eq!((s.stabilized_at, s.residual.dim()), (1, 3));

        let ab = LeibnizAlgebra::abelian(f, 2).unwrap();
        let s = ab.lower_central_series(&ab.full()).unwrap();
        assert_eq!((s.stabilized_at, s.residual.dim()), (2, 0));
        assert!(s.term(10).is_zero());

        let c2 = catalogue::cyclic_leibniz(f, 2).unwrap();
        assert!(matches!(
            c2.lower_central_series(&c2.span_ints(&[&[1, 0]]).unwrap()),
            Err(Error::NotSubalgebra)
        ));
    }

    #[test]
    fn left_centre_examples() {
        let f = gf(5);
        let ab = LeibnizAlgebra::abelian(f, 3).unwrap();
        assert!(ab.left_centre().is_full());
        let c2 = catalogue::cyclic_leibniz(f, 2).unwrap();
        let z = c2.left_centre();
        assert_eq!(z, c2.span_ints(&[&[0, 1]]).unwrap());
        let e1 = c2.basis_vector(0);
        assert!(z.member(&c2.mul(&e1, &e1)).unwrap());
    }

    #[test]
    fn ideal_predicates() {
        let f = FieldSpec::rationals();
        let r2 = catalogue::r2(f).unwrap();
        for s in [r2.zero_subspace(), r2.full()] {
            assert!(r2.is_subalgebra(&s).unwrap());
            assert!(r2.is_ideal(&s).unwrap());
        }
        let e2 = r2.span_ints(&[&[0, 1]]).unwrap();
        assert!(r2.is_ideal(&e2).unwrap());
        let e1 = r2.span_ints(&[&[1, 0]]).unwrap();
        assert!(r2.is_subalgebra(&e1).unwrap());
        assert!(!r2.is_right_ideal(&e1).unwrap());
        assert!(!r2.is_left_ideal(&e1).unwrap());

        let c2 = catalogue::cyclic_leibniz(f, 2).unwrap();
        assert!(c2.is_ideal(&c2.span_ints(&[&[0, 1]]).unwrap()).unwrap());
    }

    #[test]
    fn lie_detection() {
        let q = FieldSpec::rationals();
        assert!(catalogue::sl2(q).unwrap().is_lie());
        assert!(!catalogue::cyclic_leibniz(q, 2).unwrap().is_lie());
        assert!(LeibnizAlgebra::abelian(q, 2).unwrap().is_lie());
        // char 2: antisymmetry alone does not force e_i e_i = 0.
        assert!(!catalogue::cyclic_leibniz(gf(2), 2).unwrap().is_lie());
    }

    #[test]
    fn quotients() {
        let f = gf(3);
        let c2 = catalogue::cyclic_leibniz(f, 2).unwrap();
        let (same, proj) = c2.quotient(&c2.zero_subspace()).unwrap();
        assert_eq!(same, c2);
        assert_eq!(proj, Matrix::identity(f, 2));
        let (q, proj) = c2.quotient(&c2.span_ints(&[&[0, 1]]).unwrap()).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.is_lie());
        assert_eq!(proj, Matrix::from_ints(f, &[&[1], &[0]]));
        let r2 = catalogue::r2(f).unwrap();
        assert!(matches!(
            r2.quotient(&r2.span_ints(&[&[1, 0]]).unwrap()),
            Err(Error::NotIdeal)
        ));
    }

    #[test]
    fn closures() {
        let f = gf(3);
        let c2 = catalogue::cyclic_leibniz(f, 2).unwrap();
        let z = c2.span_ints(&[&[0, 1]]).unwrap();
        assert_eq!(c2.subalgebra_closure(&z).unwrap(), z);
        assert!(c2.subalgebra_closure(&c2.span_ints(&[&[1, 0]]).unwrap()).unwrap().is_full());
        let sl2 = catalogue::sl2(FieldSpec::rationals()).unwrap();
        let e = sl2.span_ints(&[&[1, 0, 0]]).unwrap();
        assert_eq!(sl2.subalgebra_closure(&e).unwrap(), e);
    }

    #[test]
    fn subalgebra_as_algebra() {
        let f = FieldSpec::rationals();
        let sl2 = catalogue::sl2(f).unwrap();
        // Borel subalgebra span{e, h}: he = 2e.
        let b = sl2.span_ints(&[&[1, 0, 0], &[0, 1, 0]]).unwrap();
        let sub = sl2.subalgebra(&b).unwrap();
        assert!(!sub.is_ideal());
        let alg = sub.to_algebra();
        assert!(alg.validate().is_empty());
        assert_eq!(alg.constant(1, 0, 0), &f.from_i64(2));
        assert!(sl2.subalgebra(&sl2.span_ints(&[&[1, 0, 1]]).unwrap()).is_ok());
        assert!(matches!(
            sl2.subalgebra(&sl2.span_ints(&[&[1, 0, 0], &[0, 0, 1]]).unwrap()),
            Err(Error::NotSubalgebra)
        ));
    }

    #[test]
    fn validate_strategies_agree() {
        let f = gf(3);
        let bad = LeibnizAlgebra::from_constants_unchecked(
            "bad",
            f,
            3,
            &[(0, 1, 2, 1), (1, 0, 2, 1), (2, 0, 1, 1), (1, 1, 0, 2)],
        )
        .unwrap();
        assert_eq!(
            bad.validate_with(Strategy::Sequential),
            bad.validate_with(Strategy::Parallel)
        );
    }
}
