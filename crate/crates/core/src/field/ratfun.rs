use std::fmt;

use super::{Field, FieldError, Rational};
use crate::poly::{gcd, MonomialOrder, Poly};

/// Element of a rational function field `K(v0, v1, ...)`, kept in lowest
/// terms with a denominator of leading coefficient 1 under grevlex.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatFun<F: Field> {
    num: Poly<F>,
    den: Poly<F>,
}

impl<F: Field> RatFun<F> {
    pub fn new(num: Poly<F>, den: Poly<F>) -> Result<Self, FieldError> {
        if den.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduced(num, den))
    }

    pub fn from_poly(p: Poly<F>) -> Self {
        RatFun {
            num: p,
            den: Poly::one(),
        }
    }

    pub fn num(&self) -> &Poly<F> {
        &self.num
    }

    pub fn den(&self) -> &Poly<F> {
        &self.den
    }

    /// The numerator, if the denominator is 1.
    pub fn as_poly(&self) -> Option<&Poly<F>> {
        self.den.is_constant().then_some(&self.num)
    }

    fn reduced(num: Poly<F>, den: Poly<F>) -> Self {
        if num.is_zero() {
            return RatFun {
                num,
                den: Poly::one(),
            };
        }
        let (num, den) = if den.is_constant() {
            (num, den)
        } else {
            let g = gcd(&num, &den);
            if g.is_constant() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides"),
                    den.div_exact(&g).expect("gcd divides"),
                )
            }
        };
        let lc = den.leading_coeff(&MonomialOrder::Grevlex);
        if lc.is_one() {
            return RatFun { num, den };
        }
        let inv = lc.inv().expect("nonzero");
        RatFun {
            num: num.scale(&inv),
            den: den.scale(&inv),
        }
    }
}

impl<F: Field> fmt::Display for RatFun<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Field::render(self, &[]))
    }
}

impl<F: Field> Field for RatFun<F> {
    fn zero() -> Self {
        Self::from_poly(Poly::zero())
    }
    fn one() -> Self {
        Self::from_poly(Poly::one())
    }
    fn from_rational(q: &Rational) -> Self {
        Self::from_poly(Poly::constant(F::from_rational(q)))
    }
    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        if self.den == o.den {
            return Self::reduced(self.num.add(&o.num), self.den.clone());
        }
        if o.den.is_one_poly() {
            return RatFun {
                num: self.num.add(&o.num.mul(&self.den)),
                den: self.den.clone(),
            };
        }
        if self.den.is_one_poly() {
            return RatFun {
                num: o.num.add(&self.num.mul(&o.den)),
                den: o.den.clone(),
            };
        }
        Self::reduced(
            self.num.mul(&o.den).add(&o.num.mul(&self.den)),
            self.den.mul(&o.den),
        )
    }
    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }
    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return Self::zero();
        }
        if self.den.is_one_poly() && o.den.is_one_poly() {
            return RatFun {
                num: self.num.mul(&o.num),
                den: Poly::one(),
            };
        }
        Self::reduced(self.num.mul(&o.num), self.den.mul(&o.den))
    }
    fn neg(&self) -> Self {
        RatFun {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }
    fn inv(&self) -> Result<Self, FieldError> {
        if self.is_zero() {
            return Err(FieldError::DivisionByZero);
        }
        Ok(Self::reduced(self.den.clone(), self.num.clone()))
    }
    fn to_rational(&self) -> Option<Rational> {
        if !self.num.is_constant() || !self.den.is_constant() {
            return None;
        }
        self.num.constant_term().to_rational()
    }
    fn is_constant(&self) -> bool {
        self.num.is_constant() && self.den.is_constant()
    }
    fn extension_degree(&self) -> usize {
        self.num
            .terms()
            .map(|(_, c)| c.extension_degree())
            .max()
            .unwrap_or(1)
    }
    fn lift_like(&self, q: &Rational) -> Self {
        match self.num.terms().next() {
            Some((_, c)) => Self::from_poly(Poly::constant(c.lift_like(q))),
            None => Self::from_rational(q),
        }
    }
    fn is_atomic(&self) -> bool {
        if self.to_rational().is_some() {
            return true;
        }
        self.den.is_one_poly()
            && self.num.is_monomial()
            && self.num.terms().all(|(_, c)| c.is_one())
    }
    fn render(&self, names: &[String]) -> String {
        let n = self.num.render(names);
        if self.den.is_one_poly() {
            return n;
        }
        let d = self.den.render(names);
        let wrap = |s: String, p: &Poly<F>| {
            if p.len() > 1 || p.terms().any(|(_, c)| !c.is_atomic()) {
                format!("({s})")
            } else {
                s
            }
        };
        format!("{}/{}", wrap(n, &self.num), wrap(d, &self.den))
    }
}

impl<F: Field> Poly<F> {
    fn is_one_poly(&self) -> bool {
        self.is_constant() && self.constant_term().is_one()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    fn v(i: usize) -> RatFun<Rational> {
        RatFun::from_poly(Poly::var(i))
    }

    #[test]
    fn canonical_form() {
        let a = v(0).add(&v(1));
        let b = a.mul(&v(0)).div(&a.mul(&v(1))).unwrap();
        assert_eq!(b, v(0).div(&v(1)).unwrap());
        assert_eq!(b.mul(&v(1)), v(0));
        let half = RatFun::new(Poly::var(0), Poly::var(1).scale(&rat(2))).unwrap();
        assert_eq!(half.den(), &Poly::var(1));
        assert!(!half.is_constant());
        assert!(RatFun::<Rational>::from_int(3).is_constant());
        assert_eq!(
            RatFun::<Rational>::new(Poly::one(), Poly::zero()),
            Err(FieldError::DivisionByZero)
        );
    }

    #[test]
    fn rendering() {
        let names = vec!["x".to_string(), "y".to_string()];
        let a = v(0).add(&v(1)).div(&v(1)).unwrap();
        assert_eq!(a.render(&names), "(x + y)/y");
    }
}
