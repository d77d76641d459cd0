//! Exact coefficient fields.
//!
//! Three kinds of fields appear in the pipeline: the rationals, simple
//! algebraic extensions `Q(a)`, and rational function fields `K(X,Y)` over
//! either of them. All of them implement [`Field`]. Elements carry whatever
//! context they need (an extension element knows its minimal polynomial), so
//! `zero()` and `one()` can be built without a field handle.

mod algebraic;
pub mod factor;
mod ratfun;
mod roots;
mod upoly;

use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub use algebraic::{AlgNum, NumberField};
pub use ratfun::RatFun;
pub use roots::{all_roots_are_roots_of_unity, cyclotomic_polynomial, euler_phi, is_root_of_unity};
pub use upoly::UPoly;

/// Arbitrary precision rational number.
pub type Rational = BigRational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FieldError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("operands belong to different fields")]
    DescriptorMismatch,
    #[error("operation is undefined for the zero element")]
    ZeroElement,
    #[error("operation is undefined for a constant polynomial")]
    ConstantPolynomial,
    #[error("minimal polynomial {0} must be monic, irreducible and of degree at least 2")]
    BadMinimalPolynomial(String),
    #[error("fraction field needs a nonempty list of distinct variables")]
    BadVariableList,
}

/// A field of characteristic zero with exact, canonical arithmetic.
pub trait Field:
    Clone + PartialEq + Eq + fmt::Debug + fmt::Display + Send + Sync + 'static
{
    fn zero() -> Self;
    fn one() -> Self;
    fn from_rational(q: &Rational) -> Self;

    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
    fn neg(&self) -> Self;
    fn inv(&self) -> Result<Self, FieldError>;

    /// The rational value of the element, if it is one.
    fn to_rational(&self) -> Option<Rational>;

    /// Whether the element lies in the constant subfield. Always true except
    /// for rational function fields, where the constants are the base field.
    fn is_constant(&self) -> bool {
        true
    }

    /// Degree of the element's field over `Q` (1 for the rationals).
    fn extension_degree(&self) -> usize {
        1
    }

    /// Lifts a rational number into the field of `self` (keeps extension context).
    fn lift_like(&self, q: &Rational) -> Self {
        Self::from_rational(q)
    }

    /// Whether this element renders as a single token (no parentheses needed
    /// when it multiplies a monomial).
    fn is_atomic(&self) -> bool {
        self.to_rational().is_some()
    }

    /// Renders the element; rational function fields use `names` for their
    /// variables.
    fn render(&self, _names: &[String]) -> String {
        self.to_string()
    }

    fn from_int(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }

    fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn div(&self, rhs: &Self) -> Result<Self, FieldError> {
        Ok(self.mul(&rhs.inv()?))
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }
}

impl Field for Rational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn neg(&self) -> Self {
        -self
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if Zero::is_zero(self) {
            Err(FieldError::DivisionByZero)
        } else {
            Ok(self.recip())
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        Some(self.clone())
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
}

/// Runtime description of a coefficient field.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FieldDescriptor {
    Rationals,
    SimpleExtension(Arc<NumberField>),
    FractionField {
        base: Box<FieldDescriptor>,
        variables: Vec<String>,
    },
}

impl FieldDescriptor {
    pub fn fraction_field(
        base: FieldDescriptor,
        variables: Vec<String>,
    ) -> Result<Self, FieldError> {
        let mut seen = std::collections::HashSet::new();
        if variables.is_empty() || !variables.iter().all(|v| seen.insert(v.clone())) {
            return Err(FieldError::BadVariableList);
        }
        Ok(FieldDescriptor::FractionField {
            base: Box::new(base),
            variables,
        })
    }
}

/// The integer `n` as a rational.
pub fn rat(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// The fraction `n / d`.
pub fn rat_frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Renders a rational as `n` or `n/d`.
pub(crate) fn fmt_rational(q: &Rational) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

pub(crate) fn is_negative_rational(q: &Rational) -> bool {
    q.is_negative()
}
