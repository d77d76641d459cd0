use std::fmt;
use std::sync::Arc;

use super::{factor, fmt_rational, Field, FieldError, Rational, UPoly};

/// A simple algebraic extension `Q(a)` given by the minimal polynomial of `a`.
#[derive(Debug, PartialEq, Eq)]
pub struct NumberField {
    minpoly: UPoly<Rational>,
    name: String,
}

impl NumberField {
    /// Checks that `minpoly` is monic, of degree at least 2 and irreducible over `Q`.
    pub fn new(minpoly: UPoly<Rational>, name: &str) -> Result<Arc<Self>, FieldError> {
        let bad = || FieldError::BadMinimalPolynomial(minpoly.render(name));
        if minpoly.deg() < 2 || !minpoly.lc().is_one() {
            return Err(bad());
        }
        if !factor::is_irreducible(&minpoly) {
            return Err(bad());
        }
        Ok(Arc::new(NumberField {
            minpoly,
            name: name.to_string(),
        }))
    }

    pub fn minpoly(&self) -> &UPoly<Rational> {
        &self.minpoly
    }

    pub fn degree(&self) -> usize {
        self.minpoly.deg()
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    /// The generator `a` as a field element.
    pub fn generator(self: &Arc<Self>) -> AlgNum {
        AlgNum::from_poly(self, &UPoly::x())
    }

    pub fn element(self: &Arc<Self>, coeffs: Vec<Rational>) -> AlgNum {
        AlgNum::from_poly(self, &UPoly::new(coeffs))
    }
}

/// Element of `Q(a)`, stored as its reduced coefficient vector in the power
/// basis `1, a, ..., a^(d-1)`. Rational constants may omit the field handle.
#[derive(Clone, Debug)]
pub struct AlgNum {
    field: Option<Arc<NumberField>>,
    coeffs: UPoly<Rational>,
}

impl AlgNum {
    pub fn from_poly(field: &Arc<NumberField>, p: &UPoly<Rational>) -> Self {
        AlgNum {
            field: Some(field.clone()),
            coeffs: p.rem(&field.minpoly),
        }
    }

    pub fn rational(q: Rational) -> Self {
        AlgNum {
            field: None,
            coeffs: UPoly::constant(q),
        }
    }

    pub fn field(&self) -> Option<&Arc<NumberField>> {
        self.field.as_ref()
    }

    /// Coordinates in the power basis, padded to the extension degree.
    pub fn coordinates(&self, degree: usize) -> Vec<Rational> {
        (0..degree.max(1)).map(|i| self.coeffs.coeff(i)).collect()
    }

    pub fn as_poly(&self) -> &UPoly<Rational> {
        &self.coeffs
    }

    fn joint_field(&self, o: &Self) -> Result<Option<Arc<NumberField>>, FieldError> {
        match (&self.field, &o.field) {
            (Some(a), Some(b)) => {
                if Arc::ptr_eq(a, b) || a == b {
                    Ok(Some(a.clone()))
                } else {
                    Err(FieldError::DescriptorMismatch)
                }
            }
            (Some(a), None) | (None, Some(a)) => Ok(Some(a.clone())),
            (None, None) => Ok(None),
        }
    }

    pub fn checked_add(&self, o: &Self) -> Result<Self, FieldError> {
        let field = self.joint_field(o)?;
        Ok(AlgNum {
            field,
            coeffs: self.coeffs.add(&o.coeffs),
        })
    }

    pub fn checked_sub(&self, o: &Self) -> Result<Self, FieldError> {
        let field = self.joint_field(o)?;
        Ok(AlgNum {
            field,
            coeffs: self.coeffs.sub(&o.coeffs),
        })
    }

    pub fn checked_mul(&self, o: &Self) -> Result<Self, FieldError> {
        let field = self.joint_field(o)?;
        let prod = self.coeffs.mul(&o.coeffs);
        let coeffs = match &field {
            Some(f) => prod.rem(&f.minpoly),
            None => prod,
        };
        Ok(AlgNum { field, coeffs })
    }

    pub fn checked_div(&self, o: &Self) -> Result<Self, FieldError> {
        self.joint_field(o)?;
        self.checked_mul(&o.inv()?)
    }
}

impl PartialEq for AlgNum {
    fn eq(&self, o: &Self) -> bool {
        if let (Some(a), Some(b)) = (&self.field, &o.field) {
            if !Arc::ptr_eq(a, b) && a != b {
                return false;
            }
        }
        self.coeffs == o.coeffs
    }
}

impl Eq for AlgNum {}

impl fmt::Display for AlgNum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = self.field.as_ref().map_or("a", |fd| fd.name.as_str());
        if let Some(q) = self.to_rational() {
            return f.write_str(&fmt_rational(&q));
        }
        f.write_str(&self.coeffs.render(name))
    }
}

impl Field for AlgNum {
    fn zero() -> Self {
        AlgNum::rational(<Rational as Field>::zero())
    }
    fn one() -> Self {
        AlgNum::rational(<Rational as Field>::one())
    }
    fn from_rational(q: &Rational) -> Self {
        AlgNum::rational(q.clone())
    }
    fn is_zero(&self) -> bool {
        self.coeffs.is_zero()
    }
    fn add(&self, rhs: &Self) -> Self {
        self.checked_add(rhs).expect("field mismatch")
    }
    fn sub(&self, rhs: &Self) -> Self {
        self.checked_sub(rhs).expect("field mismatch")
    }
    fn mul(&self, rhs: &Self) -> Self {
        self.checked_mul(rhs).expect("field mismatch")
    }
    fn neg(&self) -> Self {
        AlgNum {
            field: self.field.clone(),
            coeffs: self.coeffs.neg(),
        }
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        match &self.field {
            None => Ok(AlgNum::rational(self.coeffs.coeff(0).inv()?)),
            Some(f) => {
                let (g, s, _) = self.coeffs.xgcd(&f.minpoly);
                debug_assert!(g.is_constant());
                Ok(AlgNum::from_poly(f, &s))
            }
        }
    }
    fn to_rational(&self) -> Option<Rational> {
        self.coeffs.is_constant().then(|| self.coeffs.coeff(0))
    }
    fn extension_degree(&self) -> usize {
        self.field.as_ref().map_or(1, |f| f.degree())
    }
    fn lift_like(&self, q: &Rational) -> Self {
        AlgNum {
            field: self.field.clone(),
            coeffs: UPoly::constant(q.clone()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn reduction_modulo_minimal_polynomial() {
        let k = NumberField::new(UPoly::from_ints(&[1, 0, 1]), "a").unwrap();
        let a = k.generator();
        assert_eq!(a.mul(&a), AlgNum::from_rational(&rat(-1)));
        let inv = a.add(&AlgNum::one()).inv().unwrap();
        assert_eq!(inv.mul(&a.add(&AlgNum::one())), AlgNum::one());
    }

    #[test]
    fn mismatched_fields_are_rejected() {
        let k1 = NumberField::new(UPoly::from_ints(&[1, 0, 1]), "a").unwrap();
        let k2 = NumberField::new(UPoly::from_ints(&[-2, 0, 1]), "b").unwrap();
        let e = k1.generator().checked_add(&k2.generator());
        assert_eq!(e, Err(FieldError::DescriptorMismatch));
        assert_eq!(
            k1.generator().checked_div(&AlgNum::zero()),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn reducible_minimal_polynomial_is_rejected() {
        assert!(NumberField::new(UPoly::from_ints(&[-1, 0, 1]), "a").is_err());
        assert!(NumberField::new(UPoly::from_ints(&[1, 1]), "a").is_err());
        assert!(NumberField::new(UPoly::from_ints(&[1, 0, 2]), "a").is_err());
    }
}
