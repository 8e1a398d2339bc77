//! Deterministic stream of random algebras built from combinators.
//!
//! Randomness comes from SplitMix64 seeded with the user's seed as its
//! initial state: `x += 0x9e3779b97f4a7c15; z = x;
//! z = (z ^ z>>30) * 0xbf58476d1ce4e5b9; z = (z ^ z>>27) * 0x94d049bb133111eb;
//! return z ^ z>>31` (wrapping arithmetic). A draw below `n` is
//! `next_u64() % n`. Nothing else consumes entropy, so a seed fixes the
//! stream on every platform.

use std::sync::Arc;

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::SplitMix64;

use crate::algebra::{LeibnizAlgebra, MAX_DIM};
use crate::bimodule::{Bimodule, RightAction};
use crate::field::{FieldSpec, Scalar};
use crate::matrix::Matrix;
use crate::subnormal::{ideal_closure, subnormal_chain, ChainReport};
use crate::subspace::Subspace;

use super::catalogue::{self, sl2_natural_action};
use super::{abelianised_action, direct_sum, hemisemidirect};

/// Seeded SplitMix64 with the draws the generator needs.
#[derive(Clone, Debug)]
pub struct Rng(SplitMix64);

impl Rng {
    pub fn new(seed: u64) -> Self {
        Rng(SplitMix64::seed_from_u64(seed))
    }

    pub fn next_u64(&mut self) -> u64 {
        self.0.next_u64()
    }

    /// Uniform-ish in `0..n`; `n` must be positive.
    pub fn below(&mut self, n: usize) -> usize {
        (self.next_u64() % n as u64) as usize
    }

    /// Uniform over GF(p); over ℚ one of `-2..=2`.
    pub fn scalar(&mut self, field: FieldSpec) -> Scalar {
        match field.modulus() {
            Some(p) => field.from_i64(self.below(p as usize) as i64),
            None => field.from_i64(self.below(5) as i64 - 2),
        }
    }

    pub fn vector(&mut self, field: FieldSpec, n: usize) -> Vec<Scalar> {
        (0..n).map(|_| self.scalar(field)).collect()
    }

    /// A vector that is not zero; `n` must be positive.
    pub fn nonzero_vector(&mut self, field: FieldSpec, n: usize) -> Vec<Scalar> {
        let mut v = self.vector(field, n);
        if v.iter().all(Scalar::is_zero) {
            let i = self.below(n);
            v[i] = field.one();
        }
        v
    }

    pub fn matrix(&mut self, field: FieldSpec, rows: usize, cols: usize) -> Matrix {
        let rows = (0..rows).map(|_| self.vector(field, cols)).collect();
        Matrix::from_rows(field, cols, rows).expect("rows have the requested length")
    }

    fn weighted(&mut self, weights: &[usize]) -> usize {
        let mut x = self.below(weights.iter().sum());
        for (i, &w) in weights.iter().enumerate() {
            if x < w {
                return i;
            }
            x -= w;
        }
        unreachable!("draw is below the total weight")
    }
}

/// How a distinguished subalgebra was obtained.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Origin {
    Whole,
    Zero,
    /// `L^k` for the algebra itself.
    LowerCentral(usize),
    /// Subalgebra generated by random vectors.
    Closure,
    /// Ideal closure of a random line in `L`.
    IdealClosure,
    /// Ideal closure of a random line in an ideal closure.
    NestedIdealClosure,
}

impl std::fmt::Display for Origin {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Origin::Whole => f.write_str("whole"),
            Origin::Zero => f.write_str("zero"),
            Origin::LowerCentral(k) => write!(f, "lcs{k}"),
            Origin::Closure => f.write_str("closure"),
            Origin::IdealClosure => f.write_str("ideal"),
            Origin::NestedIdealClosure => f.write_str("nested"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Specimen {
    pub origin: Origin,
    pub space: Subspace,
    pub chain: ChainReport,
}

impl Specimen {
    pub fn is_subnormal(&self) -> bool {
        self.chain.subnormal
    }

    pub fn defect(&self) -> Option<usize> {
        self.chain.defect
    }
}

/// One generated algebra with its distinguished subalgebras and sample
/// bimodules (not necessarily irreducible).
#[derive(Clone, Debug)]
pub struct Instance {
    pub id: String,
    pub algebra: Arc<LeibnizAlgebra>,
    pub specimens: Vec<Specimen>,
    pub bimodules: Vec<Bimodule>,
}

impl Instance {
    /// Distinguished subalgebras, labelled, for a fixed algebra.
    pub fn from_algebra(id: impl Into<String>, algebra: LeibnizAlgebra, rng: &mut Rng) -> Self {
        let algebra = Arc::new(algebra);
        let specimens = specimens(&algebra, rng);
        let bimodules = sample_bimodules(&algebra, rng);
        Instance {
            id: id.into(),
            algebra,
            specimens,
            bimodules,
        }
    }

    /// Whether some specimen other than `0` and `L` is subnormal of defect ≥ 2.
    pub fn has_deep_subnormal(&self) -> bool {
        self.specimens.iter().any(|s| {
            s.defect().is_some_and(|d| d >= 2) && !s.space.is_zero() && !s.space.is_full()
        })
    }
}

/// Iterator over `budget` instances.
#[derive(Clone, Debug)]
pub struct Generator {
    rng: Rng,
    seed: u64,
    field: FieldSpec,
    max_dim: usize,
    budget: usize,
    index: usize,
}

/// `budget` instances of dimension at most `max_dim` (clamped to
/// `1..=MAX_DIM`) over `field`.
pub fn generate(seed: u64, field: FieldSpec, max_dim: usize, budget: usize) -> Generator {
    Generator {
        rng: Rng::new(seed),
        seed,
        field,
        max_dim: max_dim.clamp(1, MAX_DIM),
        budget,
        index: 0,
    }
}

impl Iterator for Generator {
    type Item = Instance;

    fn next(&mut self) -> Option<Instance> {
        if self.index >= self.budget {
            return None;
        }
        let id = format!("gen-s{}-f{}-{:04}", self.seed, self.field.token(), self.index);
        self.index += 1;
        let alg = Builder {
            rng: &mut self.rng,
            field: self.field,
        }
        .algebra(self.max_dim, 0);
        Some(Instance::from_algebra(id, alg, &mut self.rng))
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.budget - self.index;
        (n, Some(n))
    }
}

type BaseChoice = Box<dyn Fn(&mut Rng) -> LeibnizAlgebra>;

struct Builder<'a> {
    rng: &'a mut Rng,
    field: FieldSpec,
}

impl Builder<'_> {
    fn odd(&self) -> bool {
        self.field.characteristic() != 2
    }

    fn pick<T>(&mut self, mut options: Vec<T>) -> T {
        let i = self.rng.below(options.len());
        options.swap_remove(i)
    }

    /// A catalogue-style algebra of dimension at most `max ≥ 1`.
    fn base(&mut self, max: usize) -> LeibnizAlgebra {
        let f = self.field;
        let mut options: Vec<BaseChoice> = vec![Box::new(move |r: &mut Rng| {
            LeibnizAlgebra::abelian(f, 1 + r.below(max.min(3))).expect("abelian")
        })];
        if max >= 2 {
            options.push(Box::new(move |r: &mut Rng| {
                catalogue::cyclic_leibniz(f, 2 + r.below(max - 1)).expect("cyclic")
            }));
            options.push(Box::new(move |_: &mut Rng| catalogue::r2(f).expect("r2")));
            options.push(Box::new(move |_: &mut Rng| catalogue::hsd_1_1(f).expect("hsd")));
        }
        if max >= 3 {
            options.push(Box::new(move |_: &mut Rng| catalogue::heisenberg(f).expect("heisenberg")));
            options.push(Box::new(move |_: &mut Rng| catalogue::heisenberg(f).expect("heisenberg")));
            if self.odd() {
                options.push(Box::new(move |_: &mut Rng| catalogue::sl2(f).expect("sl2")));
            }
        }
        if max >= 4 {
            options.push(Box::new(move |r: &mut Rng| {
                catalogue::filiform(f, 4 + r.below(max - 3)).expect("filiform")
            }));
        }
        if max >= 5 && self.odd() {
            options.push(Box::new(move |_: &mut Rng| catalogue::hsd_sl2_natural(f).expect("hsd sl2")));
        }
        let build = self.pick(options);
        build(self.rng)
    }

    /// A Lie algebra of dimension at most `max ≥ 1`.
    fn lie(&mut self, max: usize, depth: usize) -> LeibnizAlgebra {
        let f = self.field;
        let mut options = vec![0, 0];
        if max >= 2 {
            options.push(1);
            if depth < 2 {
                options.push(2);
            }
        }
        if max >= 3 {
            options.extend([3, 3]);
            if self.odd() {
                options.push(4);
            }
        }
        if max >= 4 {
            options.push(5);
        }
        match self.pick(options) {
            0 => LeibnizAlgebra::abelian(f, 1 + self.rng.below(max.min(2))).expect("abelian"),
            1 => catalogue::r2(f).expect("r2"),
            2 => {
                let a = self.lie(max - 1, depth + 1);
                let b = self.lie(max - a.dim(), depth + 1);
                direct_sum(&a, &b).expect("sum of Lie algebras")
            }
            3 => catalogue::heisenberg(f).expect("heisenberg"),
            4 => catalogue::sl2(f).expect("sl2"),
            _ => catalogue::filiform(f, 4 + self.rng.below(max - 3)).expect("filiform"),
        }
    }

    /// Left module action of a Lie algebra on a space of dimension in `1..=max`.
    fn module_action(&mut self, g: &LeibnizAlgebra, max: usize) -> Vec<Matrix> {
        let mut options = vec![0, 0];
        if g.dim() <= max {
            options.push(1);
        }
        if g.name() == "sl2" && max >= 2 {
            options.extend([2, 2]);
        }
        match self.pick(options) {
            1 => (0..g.dim()).map(|i| g.left_mul(i).clone()).collect(),
            2 => sl2_natural_action(self.field),
            _ => self.abelianised(g, max),
        }
    }

    fn abelianised(&mut self, alg: &LeibnizAlgebra, max: usize) -> Vec<Matrix> {
        let m = 1 + self.rng.below(max.min(3));
        let a = self.rng.matrix(self.field, m, m);
        let derived = alg
            .product(&alg.full(), &alg.full())
            .expect("ambient subspaces");
        let d = alg.dim() - derived.dim();
        let terms = 1 + self.rng.below(2);
        let c = self.rng.matrix(self.field, d, terms);
        abelianised_action(alg, &a, &c).expect("coefficients sized to the abelianisation")
    }

    /// A bimodule of dimension in `1..=max` over `alg`.
    fn bimodule(&mut self, alg: &Arc<LeibnizAlgebra>, max: usize) -> Bimodule {
        let mut options = vec![0, 1, 1];
        if alg.dim() <= max {
            options.push(2);
        }
        if alg.name() == "sl2" && max >= 2 {
            options.push(3);
        }
        match self.pick(options) {
            0 => Bimodule::trivial(alg.clone(), 1 + self.rng.below(max.min(2))),
            2 => Bimodule::adjoint(alg.clone()),
            3 => Bimodule::from_left_action(
                "natural",
                alg.clone(),
                2,
                sl2_natural_action(self.field),
                RightAction::Antisymmetric,
            )
            .expect("natural sl2 bimodule"),
            _ => {
                let left = self.abelianised(alg, max);
                let m = left.first().map_or(1, Matrix::rows);
                let right = if self.rng.below(2) == 0 {
                    RightAction::Zero
                } else {
                    RightAction::Antisymmetric
                };
                Bimodule::from_left_action("abelianised", alg.clone(), m, left, right)
                    .expect("abelianised actions form a bimodule")
            }
        }
    }

    /// An algebra of dimension at most `max ≥ 1`.
    fn algebra(&mut self, max: usize, depth: usize) -> LeibnizAlgebra {
        if max < 2 || depth >= 2 {
            return self.base(max);
        }
        match self.rng.weighted(&[3, 2, 3, 4, 1]) {
            0 => self.base(max),
            1 => {
                let a = self.algebra(max - 1, depth + 1);
                let b = self.algebra(max - a.dim(), depth + 1);
                direct_sum(&a, &b).expect("direct sums are valid")
            }
            2 => {
                let g = self.lie(max - 1, depth + 1);
                let action = self.module_action(&g, max - g.dim());
                hemisemidirect(&g, action).expect("module actions of Lie algebras")
            }
            3 => {
                let a = Arc::new(self.algebra(max - 1, depth + 1));
                let v = self.bimodule(&a, max - a.dim());
                let name = format!("ext({},{})", a.name(), v.dim());
                v.split_extension()
                    .expect("split extensions of valid bimodules are valid")
                    .with_name(name)
            }
            _ => {
                let a = self.algebra(max, depth + 1);
                let z = a.left_centre();
                if z.is_zero() || z.is_full() {
                    return a;
                }
                let name = format!("quot({})", a.name());
                a.quotient(&z)
                    .expect("the left centre is an ideal")
                    .0
                    .with_name(name)
            }
        }
    }
}

fn specimens(alg: &LeibnizAlgebra, rng: &mut Rng) -> Vec<Specimen> {
    let field = alg.field();
    let n = alg.dim();
    let l = alg.full();
    let mut found: Vec<(Origin, Subspace)> = vec![(Origin::Whole, l.clone()), (Origin::Zero, alg.zero_subspace())];
    let series = alg.lower_central_series(&l).expect("L is a subalgebra");
    for k in 2..=series.stabilized_at {
        found.push((Origin::LowerCentral(k), series.term(k).clone()));
    }
    let closure = |vs: Vec<Vec<Scalar>>| {
        let s = Subspace::span(field, n, vs).expect("vectors of ambient length");
        alg.subalgebra_closure(&s).expect("ambient subspace")
    };
    if n > 0 {
        for _ in 0..3 {
            let v = rng.nonzero_vector(field, n);
            found.push((Origin::Closure, closure(vec![v])));
        }
        let (v, w) = (rng.nonzero_vector(field, n), rng.nonzero_vector(field, n));
        found.push((Origin::Closure, closure(vec![v, w])));

        let line = closure(vec![rng.nonzero_vector(field, n)]);
        let ideal = ideal_closure(alg, &line, &l).expect("closure lies in L");
        found.push((Origin::IdealClosure, ideal.clone()));
        let coords = rng.nonzero_vector(field, ideal.dim());
        let inner = closure(vec![ideal.combine(&coords)]);
        found.push((Origin::Closure, inner.clone()));
        let nested = ideal_closure(alg, &inner, &ideal).expect("closure lies in the ideal");
        found.push((Origin::NestedIdealClosure, nested));
    }
    let mut out: Vec<Specimen> = Vec::new();
    for (origin, space) in found {
        if out.iter().any(|s| s.space == space) {
            continue;
        }
        let chain = subnormal_chain(alg, &space).expect("specimens are subalgebras");
        out.push(Specimen {
            origin,
            space,
            chain,
        });
    }
    out
}

fn sample_bimodules(alg: &Arc<LeibnizAlgebra>, rng: &mut Rng) -> Vec<Bimodule> {
    let mut out = vec![Bimodule::adjoint(alg.clone())];
    let mut builder = Builder {
        rng,
        field: alg.field(),
    };
    for _ in 0..2 {
        out.push(builder.bimodule(alg, 3));
    }
    out.into_iter()
        .enumerate()
        .map(|(i, v)| {
            let name = format!("{}_m{i}", v.name());
            v.with_name(name)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn splitmix_reference_values() {
        // First outputs of the reference implementation seeded with 0.
        let mut r = Rng::new(0);
        assert_eq!(r.next_u64(), 0xe220a8397b1dcdaf);
        assert_eq!(r.next_u64(), 0x6e789e6aa1b965f4);
    }

    #[test]
    fn streams_are_deterministic_and_valid() {
        let f = FieldSpec::prime(3).unwrap();
        let a: Vec<_> = generate(11, f, 6, 25).collect();
        let b: Vec<_> = generate(11, f, 6, 25).collect();
        assert_eq!(a.len(), 25);
        for (x, y) in a.iter().zip(&b) {
            assert_eq!(x.id, y.id);
            assert_eq!(x.algebra.name(), y.algebra.name());
            assert_eq!(x.algebra.tensor(), y.algebra.tensor());
            assert_eq!(
                x.specimens.iter().map(|s| s.space.clone()).collect::<Vec<_>>(),
                y.specimens.iter().map(|s| s.space.clone()).collect::<Vec<_>>()
            );
            assert!(x.algebra.dim() <= 6);
            assert!(x.algebra.validate().is_empty());
            for v in &x.bimodules {
                assert!(v.validate().is_empty(), "{}", v.name());
            }
            for s in &x.specimens {
                assert!(x.algebra.is_subalgebra(&s.space).unwrap());
            }
        }
    }

    #[test]
    fn deep_subnormal_specimens_over_gf2() {
        let f = FieldSpec::prime(2).unwrap();
        let deep = generate(1, f, 6, 100).filter(Instance::has_deep_subnormal).count();
        assert!(deep >= 20, "only {deep} instances with defect ≥ 2");
    }
}
