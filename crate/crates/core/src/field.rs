//! Exact arithmetic over the rationals and over prime fields `F_p`.
//!
//! A [`Field`] is a small copyable descriptor; a [`FieldElement`] carries its
//! descriptor so that elements of different fields can never be combined
//! silently. The checked `try_*` methods report [`FieldError::MixedFields`];
//! the operator impls panic instead and are meant for code that has already
//! validated its operands.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use thiserror::Error;

/// Largest modulus accepted by [`Field::prime`] (exclusive).
pub const MAX_MODULUS: u64 = 1 << 32;

/// Exclusive bound on `p` for the exhaustive scan in [`solve_epsilon`].
pub const EPSILON_SCAN_LIMIT: u64 = 1 << 16;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields ({0} and {1})")]
    MixedFields(Field, Field),
    #[error("characteristic 3 is not supported")]
    CharacteristicThree,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("modulus {0} is too large (must be below 2^32)")]
    ModulusTooLarge(u64),
    #[error("{field} is too large for an exhaustive scan (limit {limit})")]
    FieldTooLargeForScan { field: Field, limit: u64 },
    #[error("invalid field spec `{0}` (expected `q` or `fp:<p>`)")]
    InvalidFieldSpec(String),
    #[error("invalid element literal `{literal}` for {field}")]
    InvalidLiteral { literal: String, field: Field },
}

/// The base field: either `Q` or `F_p` for a prime `p != 3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Field {
    modulus: Option<u64>,
}

impl Field {
    pub const fn rationals() -> Self {
        Field { modulus: None }
    }

    /// `F_p`. Rejects composites, `p = 3` and moduli `>= 2^32`.
    pub fn prime(p: u64) -> Result<Self, FieldError> {
        if p >= MAX_MODULUS {
            return Err(FieldError::ModulusTooLarge(p));
        }
        if !is_prime(p) {
            return Err(FieldError::NotPrime(p));
        }
        if p == 3 {
            return Err(FieldError::CharacteristicThree);
        }
        Ok(Field { modulus: Some(p) })
    }

    pub fn modulus(&self) -> Option<u64> {
        self.modulus
    }

    pub fn characteristic(&self) -> u64 {
        self.modulus.unwrap_or(0)
    }

    pub fn is_finite(&self) -> bool {
        self.modulus.is_some()
    }

    pub fn zero(&self) -> FieldElement {
        self.from_i64(0)
    }

    pub fn one(&self) -> FieldElement {
        self.from_i64(1)
    }

    pub fn from_i64(&self, n: i64) -> FieldElement {
        match self.modulus {
            None => FieldElement::rational(BigRational::from_integer(BigInt::from(n))),
            Some(p) => FieldElement::residue(n.rem_euclid(p as i64) as u64, *self),
        }
    }

    pub fn from_bigint(&self, n: &BigInt) -> FieldElement {
        match self.modulus {
            None => FieldElement::rational(BigRational::from_integer(n.clone())),
            Some(p) => {
                let r = n.mod_floor(&BigInt::from(p));
                FieldElement::residue(r.to_u64().expect("residue below modulus"), *self)
            }
        }
    }

    /// `num / den` as an element of this field.
    pub fn from_ratio(&self, num: i64, den: i64) -> Result<FieldElement, FieldError> {
        self.from_i64(num).try_div(&self.from_i64(den))
    }

    /// Lifts an exact rational into this field (reducing modulo `p` when finite).
    pub fn from_rational(&self, q: &BigRational) -> Result<FieldElement, FieldError> {
        match self.modulus {
            None => Ok(FieldElement::rational(q.clone())),
            Some(_) => self
                .from_bigint(q.numer())
                .try_div(&self.from_bigint(q.denom())),
        }
    }

    /// All elements `0, 1, ..., p-1` of a prime field; `None` over `Q`.
    pub fn elements(&self) -> Option<impl Iterator<Item = FieldElement> + '_> {
        let p = self.modulus?;
        Some((0..p).map(move |v| FieldElement::residue(v, *self)))
    }

    /// Parses `<int>` or `<int>/<int>`.
    pub fn parse_element(&self, s: &str) -> Result<FieldElement, FieldError> {
        let invalid = || FieldError::InvalidLiteral {
            literal: s.to_string(),
            field: *self,
        };
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), Some(d.trim())),
            None => (s, None),
        };
        let num: BigInt = num.parse().map_err(|_| invalid())?;
        let den: BigInt = match den {
            Some(d) => d.parse().map_err(|_| invalid())?,
            None => BigInt::one(),
        };
        if den.is_zero() {
            return Err(invalid());
        }
        match self.modulus {
            None => Ok(FieldElement::rational(BigRational::new(num, den))),
            Some(_) => self
                .from_bigint(&num)
                .try_div(&self.from_bigint(&den))
                .map_err(|_| invalid()),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.modulus {
            None => write!(f, "q"),
            Some(p) => write!(f, "fp:{p}"),
        }
    }
}

impl FromStr for Field {
    type Err = FieldError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s.eq_ignore_ascii_case("q") {
            return Ok(Field::rationals());
        }
        let p = s
            .strip_prefix("fp:")
            .and_then(|p| p.trim().parse::<u64>().ok())
            .ok_or_else(|| FieldError::InvalidFieldSpec(s.to_string()))?;
        Field::prime(p)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
enum Value {
    Rational(BigRational),
    Residue(u64),
}

/// An element of a [`Field`]. Rationals are kept reduced with a positive
/// denominator; residues lie in `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct FieldElement {
    field: Field,
    value: Value,
}

impl FieldElement {
    pub(crate) fn rational(q: BigRational) -> Self {
        FieldElement {
            field: Field::rationals(),
            value: Value::Rational(q),
        }
    }

    fn residue(v: u64, field: Field) -> Self {
        debug_assert!(field.modulus.is_some_and(|p| v < p));
        FieldElement {
            field,
            value: Value::Residue(v),
        }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match &self.value {
            Value::Rational(q) => Some(q),
            Value::Residue(_) => None,
        }
    }

    pub fn as_residue(&self) -> Option<u64> {
        match self.value {
            Value::Residue(v) => Some(v),
            Value::Rational(_) => None,
        }
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_zero(),
            Value::Residue(v) => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Rational(q) => q.is_one(),
            Value::Residue(v) => *v == 1,
        }
    }

    fn same_field(&self, other: &Self) -> Result<(), FieldError> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(FieldError::MixedFields(self.field, other.field))
        }
    }

    fn modulus(&self) -> u64 {
        self.field.modulus.expect("residue without modulus")
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Self::rational(a + b),
            (Value::Residue(a), Value::Residue(b)) => {
                let p = self.modulus();
                Self::residue((a + b) % p, self.field)
            }
            _ => unreachable!(),
        })
    }

    pub fn try_sub(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.try_add(&other.neg_ref())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        Ok(match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Self::rational(a * b),
            (Value::Residue(a), Value::Residue(b)) => {
                let p = self.modulus();
                Self::residue(a * b % p, self.field)
            }
            _ => unreachable!(),
        })
    }

    pub fn try_div(&self, other: &Self) -> Result<Self, FieldError> {
        self.same_field(other)?;
        self.try_mul(&other.inv()?)
    }

    fn neg_ref(&self) -> Self {
        match &self.value {
            Value::Rational(q) => Self::rational(-q),
            Value::Residue(v) => {
                let p = self.modulus();
                Self::residue((p - v) % p, self.field)
            }
        }
    }

    pub fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(match &self.value {
            Value::Rational(q) => Self::rational(q.recip()),
            Value::Residue(v) => {
                let p = self.modulus();
                Self::residue(pow_mod(*v, p - 2, p), self.field)
            }
        })
    }

    pub fn pow(&self, exp: u32) -> Self {
        match &self.value {
            Value::Rational(q) => Self::rational(num_traits::pow(q.clone(), exp as usize)),
            Value::Residue(v) => {
                let p = self.modulus();
                Self::residue(pow_mod(*v, exp as u64, p), self.field)
            }
        }
    }

    pub fn square(&self) -> Self {
        self * self
    }

    /// Order comparison; only meaningful over `Q`.
    pub fn cmp_rational(&self, other: &Self) -> Option<Ordering> {
        match (&self.value, &other.value) {
            (Value::Rational(a), Value::Rational(b)) => Some(a.cmp(b)),
            _ => None,
        }
    }

    /// Nearest `f64` (rationals only).
    pub fn to_f64(&self) -> Option<f64> {
        self.as_rational().and_then(|q| q.to_f64())
    }

    pub fn is_negative(&self) -> bool {
        self.as_rational().is_some_and(|q| q.is_negative())
    }
}

impl fmt::Display for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Rational(q) if q.is_integer() => write!(f, "{}", q.numer()),
            Value::Rational(q) => write!(f, "{}/{}", q.numer(), q.denom()),
            Value::Residue(v) => write!(f, "{v}"),
        }
    }
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&FieldElement> for &FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: &FieldElement) -> FieldElement {
                self.$checked(rhs).unwrap_or_else(|e| panic!("{e}"))
            }
        }

        impl $trait<FieldElement> for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                (&self).$method(&rhs)
            }
        }

        impl $trait<&FieldElement> for FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: &FieldElement) -> FieldElement {
                (&self).$method(rhs)
            }
        }

        impl $trait<FieldElement> for &FieldElement {
            type Output = FieldElement;

            fn $method(self, rhs: FieldElement) -> FieldElement {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, try_add);
forward_binop!(Sub, sub, try_sub);
forward_binop!(Mul, mul, try_mul);

impl Neg for &FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

impl Neg for FieldElement {
    type Output = FieldElement;

    fn neg(self) -> FieldElement {
        self.neg_ref()
    }
}

fn pow_mod(mut base: u64, mut exp: u64, p: u64) -> u64 {
    let mut acc = 1 % p;
    base %= p;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * base % p;
        }
        base = base * base % p;
        exp >>= 1;
    }
    acc
}

/// Trial division; fine for the `< 2^32` moduli this crate accepts.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Both roots of `e^2 - e + 1 = 0` in the field, smaller residue first.
///
/// Over `Q` the discriminant `-3` is not a square, so there are none. Over
/// `F_p` the roots are found by scanning every residue.
pub fn solve_epsilon(field: Field) -> Result<Option<(FieldElement, FieldElement)>, FieldError> {
    let Some(p) = field.modulus() else {
        return Ok(None);
    };
    if p >= EPSILON_SCAN_LIMIT {
        return Err(FieldError::FieldTooLargeForScan {
            field,
            limit: EPSILON_SCAN_LIMIT,
        });
    }
    let roots: Vec<u64> = (0..p).filter(|&e| (e * e + 1 + p - e) % p == 0).collect();
    Ok(match roots.as_slice() {
        [] => None,
        [e1, e2] => Some((
            FieldElement::residue(*e1, field),
            FieldElement::residue(*e2, field),
        )),
        // a double root needs discriminant -3 = 0, i.e. characteristic 3
        _ => unreachable!("epsilon quadratic has roots {roots:?} in {field}"),
    })
}

/// True iff `l^3 + 1 = 0` has `l = -1` as its only root in the field.
pub fn cube_root_unique(field: Field) -> Result<bool, FieldError> {
    Ok(solve_epsilon(field)?.is_none())
}
