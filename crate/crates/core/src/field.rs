//! Exact scalar fields: GF(p) for primes below 2^31, and the rationals.
//!
//! A [`Scalar`] carries enough information to know which field it lives in,
//! so arithmetic between scalars of different fields is a programming error
//! and panics. Public entry points that combine user-supplied data (matrix
//! construction, parsing) check fields first and return
//! [`Error::FieldMismatch`](crate::Error::FieldMismatch) instead.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};

const MAX_MODULUS: u64 = 1 << 31;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Kind {
    Prime(u32),
    Rationals,
}

/// One of the two exact fields supported by the kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec(Kind);

impl FieldSpec {
    /// GF(p). Primality is checked by trial division.
    pub fn prime(p: u64) -> Result<Self> {
        if !(2..MAX_MODULUS).contains(&p) || !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec(Kind::Prime(p as u32)))
    }

    pub const fn rationals() -> Self {
        FieldSpec(Kind::Rationals)
    }

    /// The modulus for GF(p), `None` for the rationals.
    pub fn modulus(self) -> Option<u32> {
        match self.0 {
            Kind::Prime(p) => Some(p),
            Kind::Rationals => None,
        }
    }

    pub fn characteristic(self) -> u32 {
        self.modulus().unwrap_or(0)
    }

    pub fn is_rationals(self) -> bool {
        self.0 == Kind::Rationals
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, v: i64) -> Scalar {
        match self.0 {
            Kind::Prime(p) => Scalar(Repr::Mod {
                value: v.rem_euclid(p as i64) as u32,
                modulus: p,
            }),
            Kind::Rationals => Scalar(Repr::Rat(BigRational::from_integer(BigInt::from(v)))),
        }
    }

    /// The element `num/den`; fails when `den` vanishes in this field.
    pub fn from_ratio(self, num: &BigInt, den: &BigInt) -> Result<Scalar> {
        match self.0 {
            Kind::Prime(p) => {
                let reduce = |x: &BigInt| -> i64 {
                    let m = BigInt::from(p);
                    let r = ((x % &m) + &m) % &m;
                    r.to_i64().expect("residue fits in i64")
                };
                let d = self.from_i64(reduce(den));
                let inv = d.inv().ok_or(Error::DivisionByZero(self))?;
                Ok(&self.from_i64(reduce(num)) * &inv)
            }
            Kind::Rationals => {
                if den.is_zero() {
                    return Err(Error::DivisionByZero(self));
                }
                Ok(Scalar(Repr::Rat(BigRational::new(num.clone(), den.clone()))))
            }
        }
    }

    /// Parses `num` or `num/den` (optionally signed) as an element of this field.
    pub fn parse_scalar(self, s: &str) -> std::result::Result<Scalar, String> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num: BigInt = num
            .parse()
            .map_err(|_| format!("invalid integer {num:?}"))?;
        let den: BigInt = den
            .parse()
            .map_err(|_| format!("invalid denominator {den:?}"))?;
        self.from_ratio(&num, &den).map_err(|e| e.to_string())
    }

    /// Number of field elements, `None` when infinite.
    pub fn order(self) -> Option<u64> {
        self.modulus().map(u64::from)
    }

    /// Enumerates all elements of GF(p) in canonical order `0, 1, …, p-1`.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        let p = self.modulus()?;
        Some((0..p).map(move |value| Scalar(Repr::Mod { value, modulus: p })))
    }

    /// Token used in the text file formats: `q` or the decimal modulus.
    pub fn token(self) -> String {
        match self.0 {
            Kind::Prime(p) => p.to_string(),
            Kind::Rationals => "q".to_string(),
        }
    }

    /// Inverse of [`token`](Self::token).
    pub fn parse_token(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Self::rationals());
        }
        let p: u64 = s.parse().map_err(|_| Error::parse(0, format!("invalid field {s:?}")))?;
        Self::prime(p)
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.0 {
            Kind::Prime(p) => write!(f, "GF({p})"),
            Kind::Rationals => f.write_str("Q"),
        }
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Repr {
    Mod { value: u32, modulus: u32 },
    Rat(BigRational),
}

/// An element of GF(p) (canonical representative in `[0, p)`) or of ℚ
/// (reduced fraction, positive denominator).
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Scalar(Repr);

impl Scalar {
    pub fn field(&self) -> FieldSpec {
        match &self.0 {
            Repr::Mod { modulus, .. } => FieldSpec(Kind::Prime(*modulus)),
            Repr::Rat(_) => FieldSpec::rationals(),
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 0,
            Repr::Rat(r) => r.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.0 {
            Repr::Mod { value, .. } => *value == 1,
            Repr::Rat(r) => r.is_one(),
        }
    }

    /// Multiplicative inverse, `None` for zero.
    pub fn inv(&self) -> Option<Scalar> {
        if self.is_zero() {
            return None;
        }
        Some(match &self.0 {
            Repr::Mod { value, modulus } => Scalar(Repr::Mod {
                value: pow_mod(*value, modulus - 2, *modulus),
                modulus: *modulus,
            }),
            Repr::Rat(r) => Scalar(Repr::Rat(r.recip())),
        })
    }

    /// Canonical representative for GF(p) elements.
    pub fn residue(&self) -> Option<u32> {
        match &self.0 {
            Repr::Mod { value, .. } => Some(*value),
            Repr::Rat(_) => None,
        }
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.0 {
            Repr::Rat(r) => Some(r),
            Repr::Mod { .. } => None,
        }
    }
}

fn pow_mod(base: u32, mut exp: u32, modulus: u32) -> u32 {
    let m = modulus as u64;
    let mut b = base as u64 % m;
    let mut acc = 1u64 % m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m;
        }
        b = b * b % m;
        exp >>= 1;
    }
    acc as u32
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.0 {
            Repr::Mod { value, .. } => write!(f, "{value}"),
            Repr::Rat(r) if r.is_integer() => write!(f, "{}", r.numer()),
            Repr::Rat(r) => write!(f, "{}/{}", r.numer(), r.denom()),
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Orders GF(p) elements by representative and rationals numerically.
impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (&self.0, &other.0) {
            (
                Repr::Mod { value: a, modulus: p },
                Repr::Mod { value: b, modulus: q },
            ) => p.cmp(q).then(a.cmp(b)),
            (Repr::Rat(a), Repr::Rat(b)) => a.cmp(b),
            (Repr::Mod { .. }, Repr::Rat(_)) => Ordering::Less,
            (Repr::Rat(_), Repr::Mod { .. }) => Ordering::Greater,
        }
    }
}

fn mismatch(a: &Scalar, b: &Scalar) -> ! {
    panic!("scalar field mismatch: {} vs {}", a.field(), b.field())
}

impl Add for &Scalar {
    type Output = Scalar;
    fn add(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                let s = *a as u64 + *b as u64;
                Scalar(Repr::Mod {
                    value: (s % *p as u64) as u32,
                    modulus: *p,
                })
            }
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a + b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Sub for &Scalar {
    type Output = Scalar;
    fn sub(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                let s = *a as u64 + *p as u64 - *b as u64;
                Scalar(Repr::Mod {
                    value: (s % *p as u64) as u32,
                    modulus: *p,
                })
            }
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a - b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Mul for &Scalar {
    type Output = Scalar;
    fn mul(self, rhs: &Scalar) -> Scalar {
        match (&self.0, &rhs.0) {
            (Repr::Mod { value: a, modulus: p }, Repr::Mod { value: b, modulus: q }) if p == q => {
                Scalar(Repr::Mod {
                    value: (*a as u64 * *b as u64 % *p as u64) as u32,
                    modulus: *p,
                })
            }
            (Repr::Rat(a), Repr::Rat(b)) => Scalar(Repr::Rat(a * b)),
            _ => mismatch(self, rhs),
        }
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match &self.0 {
            Repr::Mod { value, modulus } => Scalar(Repr::Mod {
                value: if *value == 0 { 0 } else { modulus - value },
                modulus: *modulus,
            }),
            Repr::Rat(r) => Scalar(Repr::Rat(-r)),
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

macro_rules! forward_owned {
    ($($tr:ident $method:ident),*) => {$(
        impl $tr for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
        impl $tr<&Scalar> for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                (&self).$method(rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl AddAssign<&Scalar> for Scalar {
    fn add_assign(&mut self, rhs: &Scalar) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Scalar> for Scalar {
    fn sub_assign(&mut self, rhs: &Scalar) {
        *self = &*self - rhs;
    }
}

/// `acc += a * b` without materialising the product for the common zero cases.
#[inline]
pub(crate) fn mul_add(acc: &mut Scalar, a: &Scalar, b: &Scalar) {
    if a.is_zero() || b.is_zero() {
        return;
    }
    match (&mut acc.0, &a.0, &b.0) {
        (
            Repr::Mod { value: s, modulus: p },
            Repr::Mod { value: x, modulus: q },
            Repr::Mod { value: y, modulus: r },
        ) if p == q && q == r => {
            let m = *p as u64;
            *s = ((*s as u64 + *x as u64 * *y as u64 % m) % m) as u32;
        }
        _ => *acc += &(a * b),
    }
}
