//! Leibniz bimodules, composition series and Schur-based isomorphism tests.
//!
//! Action matrices follow the crate's row-vector convention: row `r` of
//! `left(i)` is `e_i · b_r` and row `r` of `right(i)` is `b_r · e_i`, where
//! `b_r` are the basis vectors of the module. The matrix of a composite map
//! `f ∘ g` is therefore `G · F`.
//!
//! The axioms are the three instances of `x(yz) = (xy)z + y(xz)` with a
//! module element placed in each slot:
//!
//! 1. `λ_i λ_j = λ_{e_i e_j} + λ_j λ_i`
//! 2. `λ_i ρ_j = ρ_j λ_i + ρ_{e_i e_j}`
//! 3. `ρ_{e_i e_j} = ρ_j ρ_i + λ_i ρ_j`

use std::sync::Arc;

use crate::algebra::{LeibnizAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::par::{self, Strategy};
use crate::subspace::{EchelonBasis, Subspace, DEFAULT_ENUMERATION_CAP};

/// Limits for exhaustive spinning.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SpinConfig {
    /// Maximum `p^dim` an enumeration may visit.
    pub cap: u64,
    pub strategy: Strategy,
}

impl Default for SpinConfig {
    fn default() -> Self {
        SpinConfig {
            cap: DEFAULT_ENUMERATION_CAP,
            strategy: Strategy::default(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Axiom {
    /// Module element in the right-most slot.
    LeftLeft,
    /// Module element in the middle slot.
    LeftRight,
    /// Module element in the left-most slot.
    RightRight,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BimoduleViolation {
    pub axiom: Axiom,
    pub i: usize,
    pub j: usize,
}

/// How the right action is derived from a left module action.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RightAction {
    /// `v·x = 0`.
    Zero,
    /// `v·x = -x·v`.
    Antisymmetric,
}

#[derive(Clone, Debug)]
pub struct Bimodule {
    name: String,
    algebra: Arc<LeibnizAlgebra>,
    dim: usize,
    left: Vec<Matrix>,
    right: Vec<Matrix>,
}

/// `f ∘ g` in row-vector convention.
fn compose(f: &Matrix, g: &Matrix) -> Matrix {
    g.mul(f).expect("action matrices are square of one size")
}

impl Bimodule {
    /// Validated bimodule.
    pub fn new(
        name: impl Into<String>,
        algebra: Arc<LeibnizAlgebra>,
        dim: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self> {
        let v = Self::new_unchecked(name, algebra, dim, left, right)?;
        let violations = v.validate().len();
        if violations > 0 {
            return Err(Error::InvalidBimodule { violations });
        }
        Ok(v)
    }

    /// Shape and field checks only.
    pub fn new_unchecked(
        name: impl Into<String>,
        algebra: Arc<LeibnizAlgebra>,
        dim: usize,
        left: Vec<Matrix>,
        right: Vec<Matrix>,
    ) -> Result<Self> {
        let n = algebra.dim();
        for list in [&left, &right] {
            if list.len() != n {
                return Err(Error::DimensionMismatch {
                    context: "number of action matrices",
                    expected: n,
                    found: list.len(),
                });
            }
            for m in list {
                if m.field() != algebra.field() {
                    return Err(Error::FieldMismatch {
                        expected: algebra.field(),
                        found: m.field(),
                    });
                }
                if m.rows() != dim || m.cols() != dim {
                    return Err(Error::DimensionMismatch {
                        context: "action matrix size",
                        expected: dim,
                        found: if m.rows() != dim { m.rows() } else { m.cols() },
                    });
                }
            }
        }
        Ok(Bimodule {
            name: name.into(),
            algebra,
            dim,
            left,
            right,
        })
    }

    /// Zero actions on an `m`-dimensional space.
    pub fn trivial(algebra: Arc<LeibnizAlgebra>, m: usize) -> Self {
        let zero = Matrix::zeros(algebra.field(), m, m);
        let n = algebra.dim();
        Bimodule {
            name: format!("trivial_{m}"),
            dim: m,
            left: vec![zero.clone(); n],
            right: vec![zero; n],
            algebra,
        }
    }

    /// The algebra acting on itself by left and right multiplication.
    pub fn adjoint(algebra: Arc<LeibnizAlgebra>) -> Self {
        let n = algebra.dim();
        let left = (0..n).map(|i| algebra.left_mul(i).clone()).collect();
        let right = (0..n).map(|i| algebra.right_mul(i)).collect();
        Bimodule {
            name: format!("{}_adjoint", algebra.name()),
            dim: n,
            left,
            right,
            algebra,
        }
    }

    /// A bimodule from a left action satisfying axiom 1, with the right action
    /// zero or the negative of the left action. Both choices satisfy axioms 2
    /// and 3 whenever axiom 1 holds; the result is validated regardless.
    pub fn from_left_action(
        name: impl Into<String>,
        algebra: Arc<LeibnizAlgebra>,
        dim: usize,
        left: Vec<Matrix>,
        right: RightAction,
    ) -> Result<Self> {
        let right = match right {
            RightAction::Zero => vec![Matrix::zeros(algebra.field(), dim, dim); left.len()],
            RightAction::Antisymmetric => left.iter().map(Matrix::neg).collect(),
        };
        Self::new(name, algebra, dim, left, right)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn algebra(&self) -> &Arc<LeibnizAlgebra> {
        &self.algebra
    }

    pub fn field(&self) -> FieldSpec {
        self.algebra.field()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn left(&self, i: usize) -> &Matrix {
        &self.left[i]
    }

    pub fn right(&self, i: usize) -> &Matrix {
        &self.right[i]
    }

    pub fn left_actions(&self) -> &[Matrix] {
        &self.left
    }

    pub fn right_actions(&self) -> &[Matrix] {
        &self.right
    }

    /// Left action of an arbitrary algebra element.
    pub fn left_of(&self, x: &[Scalar]) -> Matrix {
        Matrix::linear_combination(self.field(), self.dim, self.dim, x, &self.left)
    }

    pub fn right_of(&self, x: &[Scalar]) -> Matrix {
        Matrix::linear_combination(self.field(), self.dim, self.dim, x, &self.right)
    }

    fn actions(&self) -> impl Iterator<Item = &Matrix> {
        self.left.iter().chain(&self.right)
    }

    pub fn validate(&self) -> Vec<BimoduleViolation> {
        let n = self.algebra.dim();
        let mut out = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let ij = self.algebra.left_mul(i).row(j);
                let (li, lj, rj, ri) = (&self.left[i], &self.left[j], &self.right[j], &self.right[i]);
                let l_ij = self.left_of(ij);
                let r_ij = self.right_of(ij);
                let checks = [
                    (
                        Axiom::LeftLeft,
                        compose(li, lj),
                        l_ij.add(&compose(lj, li)).expect("same shape"),
                    ),
                    (
                        Axiom::LeftRight,
                        compose(li, rj),
                        compose(rj, li).add(&r_ij).expect("same shape"),
                    ),
                    (
                        Axiom::RightRight,
                        r_ij,
                        compose(rj, ri).add(&compose(li, rj)).expect("same shape"),
                    ),
                ];
                for (axiom, lhs, rhs) in checks {
                    if lhs != rhs {
                        out.push(BimoduleViolation { axiom, i, j });
                    }
                }
            }
        }
        out.sort_by_key(|v| (v.axiom, v.i, v.j));
        out
    }

    fn check_algebra(&self, other: &Bimodule) -> Result<()> {
        if Arc::ptr_eq(&self.algebra, &other.algebra) || self.algebra == other.algebra {
            Ok(())
        } else {
            Err(Error::AlgebraMismatch)
        }
    }

    /// The algebra on `V ⊕ L` (module coordinates first) with
    /// `(v₁, x)(v₂, y) = (x·v₂ + v₁·y, xy)`.
    pub fn split_extension(&self) -> Result<LeibnizAlgebra> {
        let violations = self.validate().len();
        if violations > 0 {
            return Err(Error::InvalidBimodule { violations });
        }
        let (m, n) = (self.dim, self.algebra.dim());
        let d = m + n;
        let field = self.field();
        let mut t = vec![field.zero(); d * d * d];
        let idx = |i: usize, j: usize, k: usize| (i * d + j) * d + k;
        for r in 0..m {
            for j in 0..n {
                for (k, x) in self.right[j].row(r).iter().enumerate() {
                    t[idx(r, m + j, k)] = x.clone();
                }
            }
        }
        for i in 0..n {
            for s in 0..m {
                for (k, x) in self.left[i].row(s).iter().enumerate() {
                    t[idx(m + i, s, k)] = x.clone();
                }
            }
            for j in 0..n {
                for k in 0..n {
                    t[idx(m + i, m + j, m + k)] = self.algebra.constant(i, j, k).clone();
                }
            }
        }
        LeibnizAlgebra::from_tensor(format!("{}_split", self.name), field, d, t)
    }

    /// `C_L(V) = {x : xv = vx = 0 for all v}`.
    pub fn centraliser(&self) -> Subspace {
        let n = self.algebra.dim();
        let rows = (0..n)
            .map(|i| {
                self.left[i]
                    .entries()
                    .iter()
                    .chain(self.right[i].entries())
                    .cloned()
                    .collect()
            })
            .collect();
        let map = Matrix::from_rows(self.field(), 2 * self.dim * self.dim, rows)
            .expect("flattened actions");
        let c = map.left_kernel();
        debug_assert!(self.algebra.is_ideal(&c).unwrap_or(false), "centraliser must be an ideal");
        c
    }

    /// The same space regarded as a bimodule over a subalgebra, on the
    /// subalgebra's canonical basis.
    pub fn restrict(&self, sub: &Subalgebra<'_>) -> Result<Bimodule> {
        if sub.parent() != self.algebra.as_ref() {
            return Err(Error::AlgebraMismatch);
        }
        let basis = sub.space().basis();
        let left = basis.row_iter().map(|b| self.left_of(b)).collect();
        let right = basis.row_iter().map(|b| self.right_of(b)).collect();
        Self::new_unchecked(
            format!("{}_res", self.name),
            Arc::new(sub.to_algebra()),
            self.dim,
            left,
            right,
        )
    }

    /// The actions of the quotient algebra `L/I` for an ideal `I ⊆ C_L(V)`.
    pub fn induced_on_quotient(&self, ideal: &Subspace) -> Result<Bimodule> {
        if !self.centraliser().contains(ideal)? {
            return Err(Error::NotContained);
        }
        let (quotient, _) = self.algebra.quotient(ideal)?;
        let keep = ideal.complement_columns();
        let left = keep.iter().map(|&q| self.left[q].clone()).collect();
        let right = keep.iter().map(|&q| self.right[q].clone()).collect();
        Self::new_unchecked(
            format!("{}_induced", self.name),
            Arc::new(quotient),
            self.dim,
            left,
            right,
        )
    }

    fn check_vector(&self, w: &[Scalar]) -> Result<()> {
        if w.len() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "module vector",
                expected: self.dim,
                found: w.len(),
            });
        }
        Ok(())
    }

    /// Smallest sub-bimodule containing `w`.
    pub fn spin(&self, w: &[Scalar]) -> Result<Subspace> {
        self.check_vector(w)?;
        let mut basis = EchelonBasis::new(self.field(), self.dim);
        let mut queue = Vec::new();
        if basis.insert(w.to_vec()) {
            queue.push(w.to_vec());
        }
        while let Some(v) = queue.pop() {
            if basis.dim() == self.dim {
                break;
            }
            for m in self.actions() {
                let image = m.vec_mul(&v);
                if basis.insert(image.clone()) {
                    queue.push(image);
                }
            }
        }
        Ok(basis.into_subspace())
    }

    /// Whether `s` is closed under every action.
    pub fn is_submodule(&self, s: &Subspace) -> bool {
        s.ambient_dim() == self.dim
            && s.basis().row_iter().all(|row| {
                self.actions()
                    .all(|m| s.reduce(&m.vec_mul(row)).iter().all(Scalar::is_zero))
            })
    }

    /// The sub-bimodule `S` on its canonical basis.
    pub fn sub_bimodule(&self, s: &Subspace) -> Result<Bimodule> {
        if !self.is_submodule(s) {
            return Err(Error::NotSubmodule);
        }
        let restrict = |m: &Matrix| -> Matrix {
            let rows = s
                .basis()
                .row_iter()
                .map(|b| {
                    let image = m.vec_mul(b);
                    s.pivots().iter().map(|&p| image[p].clone()).collect()
                })
                .collect();
            Matrix::from_rows(self.field(), s.dim(), rows).expect("coordinates have subspace dimension")
        };
        Self::new_unchecked(
            format!("{}_sub", self.name),
            self.algebra.clone(),
            s.dim(),
            self.left.iter().map(restrict).collect(),
            self.right.iter().map(restrict).collect(),
        )
    }

    /// `V/S` on the complement basis `{b_q : q not a pivot of S}`.
    pub fn quotient(&self, s: &Subspace) -> Result<Bimodule> {
        if !self.is_submodule(s) {
            return Err(Error::NotSubmodule);
        }
        let keep = s.complement_columns();
        let induce = |m: &Matrix| -> Matrix {
            let rows = keep
                .iter()
                .map(|&q| {
                    let r = s.reduce(m.row(q));
                    keep.iter().map(|&c| r[c].clone()).collect()
                })
                .collect();
            Matrix::from_rows(self.field(), keep.len(), rows).expect("complement coordinates")
        };
        Self::new_unchecked(
            format!("{}_quot", self.name),
            self.algebra.clone(),
            keep.len(),
            self.left.iter().map(induce).collect(),
            self.right.iter().map(induce).collect(),
        )
    }

    fn projective_points(&self, cap: u64) -> Result<Vec<Vec<Scalar>>> {
        if self.dim == 0 {
            return Err(Error::EmptyModule);
        }
        Ok(Subspace::full(self.field(), self.dim)
            .enumerate_projective(cap)?
            .collect())
    }

    /// An irreducible sub-bimodule: the spin of least dimension over all
    /// nonzero vectors, ties broken by the lexicographically least canonical
    /// basis. Exhaustive, so only over GF(p) within the enumeration cap.
    pub fn minimal_submodule(&self, cfg: &SpinConfig) -> Result<Subspace> {
        let points = self.projective_points(cfg.cap)?;
        let spins = par::map(cfg.strategy, &points, |w| {
            self.spin(w).expect("enumerated vectors have module length")
        });
        Ok(spins
            .into_iter()
            .min_by(Subspace::lex_cmp)
            .expect("a nonzero module has a nonzero vector"))
    }

    /// Whether every nonzero vector spins to the whole space.
    pub fn is_irreducible(&self, cfg: &SpinConfig) -> Result<bool> {
        let points = self.projective_points(cfg.cap)?;
        let dims = par::map(cfg.strategy, &points, |w| {
            self.spin(w).expect("enumerated vectors have module length").dim()
        });
        Ok(dims.into_iter().all(|d| d == self.dim))
    }

    /// Composition series `0 = V_0 ⊂ V_1 ⊂ … ⊂ V_t = V` built by taking a
    /// minimal sub-bimodule of each successive quotient.
    pub fn composition_series(&self, cfg: &SpinConfig) -> Result<FactorReport> {
        if self.field().is_rationals() {
            return Err(Error::UnsupportedEnumeration(self.field()));
        }
        let mut series = vec![Subspace::zero(self.field(), self.dim)];
        let mut factors = Vec::new();
        loop {
            let current = series.last().expect("series is nonempty");
            if current.is_full() {
                break;
            }
            let top = self.quotient(current)?;
            let minimal = top.minimal_submodule(cfg)?;
            factors.push(Irreducible {
                module: top.sub_bimodule(&minimal)?.with_name(format!("{}_factor{}", self.name, factors.len())),
            });
            let comps = current.complement_columns();
            let mut next = EchelonBasis::from_subspace(current);
            for row in minimal.basis().row_iter() {
                let mut lifted = vec![self.field().zero(); self.dim];
                for (t, &c) in comps.iter().enumerate() {
                    lifted[c] = row[t].clone();
                }
                next.insert(lifted);
            }
            series.push(next.into_subspace());
        }
        let mut iso_classes: Vec<Vec<usize>> = Vec::new();
        for (i, f) in factors.iter().enumerate() {
            let mut placed = false;
            for class in iso_classes.iter_mut() {
                if factors[class[0]].is_isomorphic(f)? {
                    class.push(i);
                    placed = true;
                    break;
                }
            }
            if !placed {
                iso_classes.push(vec![i]);
            }
        }
        Ok(FactorReport {
            series,
            factors,
            iso_classes,
        })
    }
}

/// `Hom(A, B)`: all `φ` (as `m_a × m_b` matrices flattened row-major) with
/// `A_x φ = φ B_x` for every left and every right action.
pub fn hom_space(a: &Bimodule, b: &Bimodule) -> Result<Subspace> {
    a.check_algebra(b)?;
    let (ma, mb) = (a.dim, b.dim);
    let field = a.field();
    let var = |r: usize, c: usize| r * mb + c;
    let mut equations = Vec::new();
    for (x, y) in a.left.iter().zip(&b.left).chain(a.right.iter().zip(&b.right)) {
        for r in 0..ma {
            for c in 0..mb {
                let mut eq = vec![field.zero(); ma * mb];
                for s in 0..ma {
                    eq[var(s, c)] += x.get(r, s);
                }
                for s in 0..mb {
                    eq[var(r, s)] -= y.get(s, c);
                }
                equations.push(eq);
            }
        }
    }
    Ok(Matrix::from_rows(field, ma * mb, equations)?.nullspace())
}

/// Unflattens a hom-space vector into an `ma × mb` matrix.
pub fn hom_matrix(field: FieldSpec, flat: &[Scalar], ma: usize, mb: usize) -> Matrix {
    assert_eq!(flat.len(), ma * mb, "hom vector length");
    let rows = flat.chunks(mb.max(1)).take(ma).map(<[Scalar]>::to_vec).collect();
    Matrix::from_rows(field, mb, rows).expect("rows have target dimension")
}

/// A bimodule certified irreducible by exhaustive spinning.
#[derive(Clone, Debug)]
pub struct Irreducible {
    module: Bimodule,
}

impl Irreducible {
    /// `Some` iff the bimodule is irreducible.
    pub fn certify(module: Bimodule, cfg: &SpinConfig) -> Result<Option<Irreducible>> {
        Ok(module.is_irreducible(cfg)?.then_some(Irreducible { module }))
    }

    pub fn module(&self) -> &Bimodule {
        &self.module
    }

    pub fn into_inner(self) -> Bimodule {
        self.module
    }

    pub fn dim(&self) -> usize {
        self.module.dim
    }

    /// Schur: a nonzero homomorphism between irreducibles is invertible, so
    /// isomorphism is decided by `Hom ≠ 0`. One nonzero solution is checked
    /// for full rank.
    pub fn is_isomorphic(&self, other: &Irreducible) -> Result<bool> {
        let hom = hom_space(&self.module, &other.module)?;
        let Some(phi) = hom.basis().row_iter().next() else {
            return Ok(false);
        };
        let (ma, mb) = (self.dim(), other.dim());
        let rank = hom_matrix(self.module.field(), phi, ma, mb).rank();
        if ma != mb || rank != ma {
            return Err(Error::SchurViolation { rank, dim: ma.max(mb) });
        }
        Ok(true)
    }
}

/// Certifies both inputs and decides isomorphism.
pub fn isomorphic_irreducibles(a: &Bimodule, b: &Bimodule, cfg: &SpinConfig) -> Result<bool> {
    a.check_algebra(b)?;
    let a = Irreducible::certify(a.clone(), cfg)?.ok_or(Error::NotIrreducible)?;
    let b = Irreducible::certify(b.clone(), cfg)?.ok_or(Error::NotIrreducible)?;
    a.is_isomorphic(&b)
}

#[derive(Clone, Debug)]
pub struct FactorReport {
    /// `0 = V_0 ⊂ … ⊂ V_t = V`.
    pub series: Vec<Subspace>,
    /// `factors[i] ≅ V_{i+1}/V_i`.
    pub factors: Vec<Irreducible>,
    /// Partition of factor indices into isomorphism classes, in order of
    /// first appearance.
    pub iso_classes: Vec<Vec<usize>>,
}

impl FactorReport {
    pub fn factor_dims(&self) -> Vec<usize> {
        self.factors.iter().map(Irreducible::dim).collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;

    fn gf(p: u64) -> FieldSpec {
        FieldSpec::prime(p).unwrap()
    }

    fn c2(f: FieldSpec) -> Arc<LeibnizAlgebra> {
        Arc::new(catalogue::cyclic_leibniz(f, 2).unwrap())
    }

    #[test]
    fn trivial_and_adjoint_validate() {
        let alg = c2(gf(3));
        assert!(Bimodule::trivial(alg.clone(), 3).validate().is_empty());
        assert!(Bimodule::adjoint(alg).validate().is_empty());
        let sl2 = Arc::new(catalogue::sl2(FieldSpec::rationals()).unwrap());
        assert!(Bimodule::adjoint(sl2).validate().is_empty());
    }

    #[test]
    fn lie_type_bimodule_validates() {
        let q = FieldSpec::rationals();
        let sl2 = Arc::new(catalogue::sl2(q).unwrap());
        let nat = catalogue::sl2_natural_action(q);
        let sym = Bimodule::from_left_action("nat", sl2.clone(), 2, nat.clone(), RightAction::Antisymmetric)
            .unwrap();
        assert!(sym.validate().is_empty());
        // A wrong right action is caught.
        let bad = Bimodule::new_unchecked("bad", sl2, 2, nat.clone(), nat).unwrap();
        assert!(!bad.validate().is_empty());
    }

    #[test]
    fn split_extensions_validate() {
        let f = gf(3);
        let alg = c2(f);
        let x = Bimodule::trivial(alg.clone(), 2).split_extension().unwrap();
        assert_eq!(x.dim(), 4);
        let v = Subspace::coordinate(f, 4, &[0, 1]);
        assert!(x.is_ideal(&v).unwrap());
        assert!(x.product(&v, &v).unwrap().is_zero());
        let ad = Bimodule::adjoint(alg).split_extension().unwrap();
        assert_eq!(ad.dim(), 4);
        assert!(ad.validate().is_empty());
    }

    #[test]
    fn centralisers() {
        let f = gf(3);
        let alg = c2(f);
        assert!(Bimodule::trivial(alg.clone(), 2).centraliser().is_full());
        let c = Bimodule::adjoint(alg.clone()).centraliser();
        assert_eq!(c, alg.span_ints(&[&[0, 1]]).unwrap());
        let q = FieldSpec::rationals();
        let sl2 = Arc::new(catalogue::sl2(q).unwrap());
        let nat = Bimodule::from_left_action("nat", sl2, 2, catalogue::sl2_natural_action(q), RightAction::Zero)
            .unwrap();
        assert!(nat.centraliser().is_zero());
    }

    #[test]
    fn restrictions() {
        let f = gf(3);
        let h = Arc::new(catalogue::heisenberg(f).unwrap());
        let ad = Bimodule::adjoint(h.clone());
        let same = ad.restrict(&h.subalgebra(&h.full()).unwrap()).unwrap();
        assert_eq!(same.left_actions(), ad.left_actions());
        assert_eq!(same.right_actions(), ad.right_actions());
        let z = h.span_ints(&[&[0, 0, 1]]).unwrap();
        let rz = ad.restrict(&h.subalgebra(&z).unwrap()).unwrap();
        assert!(rz.left_actions().iter().chain(rz.right_actions()).all(Matrix::is_zero));
        let r0 = ad.restrict(&h.subalgebra(&h.zero_subspace()).unwrap()).unwrap();
        assert_eq!(r0.algebra().dim(), 0);
        assert!(r0.is_submodule(&Subspace::coordinate(f, 3, &[1])));
    }

    #[test]
    fn spinning() {
        let f = gf(3);
        let alg = c2(f);
        let triv = Bimodule::trivial(alg.clone(), 2);
        assert!(triv.spin(&[f.zero(), f.zero()]).unwrap().is_zero());
        assert_eq!(triv.spin(&[f.one(), f.from_i64(2)]).unwrap().dim(), 1);
        let ad = Bimodule::adjoint(alg);
        assert!(ad.spin(&[f.one(), f.zero()]).unwrap().is_full());
    }

    #[test]
    fn minimal_submodules() {
        let cfg = SpinConfig::default();
        let f2 = gf(2);
        let triv = Bimodule::trivial(c2(f2), 2);
        // Lines are spanned by (1,0), (0,1), (1,1); (0,1) is lexicographically least.
        assert_eq!(
            triv.minimal_submodule(&cfg).unwrap(),
            Subspace::coordinate(f2, 2, &[1])
        );
        let f3 = gf(3);
        let ad = Bimodule::adjoint(c2(f3));
        assert_eq!(ad.minimal_submodule(&cfg).unwrap(), Subspace::coordinate(f3, 2, &[1]));
        assert!(matches!(
            Bimodule::trivial(c2(f3), 0).minimal_submodule(&cfg),
            Err(Error::EmptyModule)
        ));
        let q = Bimodule::adjoint(c2(FieldSpec::rationals()));
        assert!(matches!(
            q.minimal_submodule(&cfg),
            Err(Error::UnsupportedEnumeration(_))
        ));
    }

    #[test]
    fn composition_series_examples() {
        let cfg = SpinConfig::default();
        let f = gf(3);
        let triv = Bimodule::trivial(c2(f), 3);
        let rep = triv.composition_series(&cfg).unwrap();
        assert_eq!(rep.factor_dims(), vec![1, 1, 1]);
        assert_eq!(rep.iso_classes, vec![vec![0, 1, 2]]);

        let ad = Bimodule::adjoint(c2(f));
        let rep = ad.composition_series(&cfg).unwrap();
        assert_eq!(rep.factor_dims(), vec![1, 1]);
        assert_eq!(rep.series[1], Subspace::coordinate(f, 2, &[1]));
        for factor in &rep.factors {
            let m = factor.module();
            assert!(m.left_actions().iter().chain(m.right_actions()).all(Matrix::is_zero));
        }
        assert_eq!(rep.iso_classes.len(), 1);

        let sl2 = Arc::new(catalogue::sl2(f).unwrap());
        let adj = Bimodule::adjoint(sl2);
        let rep = adj.composition_series(&cfg).unwrap();
        assert_eq!(rep.factor_dims(), vec![3]);
    }

    #[test]
    fn hom_spaces() {
        let f = gf(3);
        let alg = c2(f);
        let triv = Bimodule::trivial(alg.clone(), 2);
        assert_eq!(hom_space(&triv, &triv).unwrap().dim(), 4);

        let sl2 = Arc::new(catalogue::sl2(f).unwrap());
        let nat = Bimodule::from_left_action("nat", sl2.clone(), 2, catalogue::sl2_natural_action(f), RightAction::Antisymmetric)
            .unwrap();
        let one = Bimodule::trivial(sl2.clone(), 1);
        assert!(hom_space(&one, &nat).unwrap().is_zero());
        assert!(hom_space(&nat, &one).unwrap().is_zero());
        let end = hom_space(&nat, &nat).unwrap();
        let id: Vec<Scalar> = Matrix::identity(f, 2).entries().to_vec();
        assert!(end.member(&id).unwrap());

        assert!(matches!(hom_space(&triv, &nat), Err(Error::AlgebraMismatch)));
    }

    #[test]
    fn isomorphism_of_irreducibles() {
        let cfg = SpinConfig::default();
        let f = gf(3);
        let sl2 = Arc::new(catalogue::sl2(f).unwrap());
        let nat = Bimodule::from_left_action("nat", sl2.clone(), 2, catalogue::sl2_natural_action(f), RightAction::Antisymmetric)
            .unwrap();
        let one = Bimodule::trivial(sl2.clone(), 1);
        assert!(isomorphic_irreducibles(&nat, &nat, &cfg).unwrap());
        assert!(!isomorphic_irreducibles(&nat, &one, &cfg).unwrap());
        let two = Bimodule::trivial(sl2, 2);
        assert!(matches!(
            isomorphic_irreducibles(&two, &one, &cfg),
            Err(Error::NotIrreducible)
        ));
        let ad = Bimodule::adjoint(c2(f));
        let rep = ad.composition_series(&cfg).unwrap();
        assert!(rep.factors[0].is_isomorphic(&rep.factors[1]).unwrap());
    }

    #[test]
    fn induced_actions_on_quotient() {
        let f = gf(3);
        let alg = c2(f);
        let ad = Bimodule::adjoint(alg.clone());
        let c = ad.centraliser();
        let induced = ad.induced_on_quotient(&c).unwrap();
        assert_eq!(induced.algebra().dim(), 1);
        assert!(induced.validate().is_empty());
        assert!(matches!(
            ad.induced_on_quotient(&alg.full()),
            Err(Error::NotContained)
        ));
    }
}
