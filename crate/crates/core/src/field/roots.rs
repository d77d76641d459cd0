//! Root-of-unity detection for field elements and for the roots of a
//! univariate polynomial, using exact arithmetic only.

use num_integer::Integer;

use super::{Field, FieldError, Rational, UPoly};

pub fn euler_phi(n: u64) -> u64 {
    let mut result = n;
    let mut m = n;
    let mut p = 2;
    while p * p <= m {
        if m.is_multiple_of(p) {
            while m.is_multiple_of(p) {
                m /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if m > 1 {
        result -= result / m;
    }
    result
}

/// The `n`-th cyclotomic polynomial over `Q`.
pub fn cyclotomic_polynomial(n: u64) -> UPoly<Rational> {
    assert!(n > 0);
    let mut p = UPoly::monomial(<Rational as Field>::one(), n as usize).sub(&UPoly::one());
    for d in 1..n {
        if n.is_multiple_of(d) {
            p = p
                .div_exact(&cyclotomic_polynomial(d))
                .expect("cyclotomic divisor");
        }
    }
    p
}

/// Smallest `n > 0` with `c^n = 1`, or `None` if `c` is not a root of unity.
///
/// An element of degree `d` over `Q` can only have order `n` with
/// `phi(n) <= d`, so `n <= 2 d^2` bounds the search.
pub fn is_root_of_unity<F: Field>(c: &F) -> Result<Option<u64>, FieldError> {
    if c.is_zero() {
        return Err(FieldError::ZeroElement);
    }
    if !c.is_constant() {
        return Ok(None);
    }
    let d = c.extension_degree() as u64;
    let bound = (2 * d * d).max(2);
    let mut power = c.clone();
    for n in 1..=bound {
        if power.is_one() {
            return Ok(Some(n));
        }
        power = power.mul(c);
    }
    Ok(None)
}

/// Least `N` such that every root of `h` is an `N`-th root of unity.
///
/// Works on the squarefree part and peels off `gcd(h, Phi_n)` for every `n`
/// whose cyclotomic degree fits into the available degree; no root
/// isolation is needed. Over a rational function field the roots of unity
/// are constants, so a nonconstant coefficient of the monic squarefree part
/// rules everything out immediately.
pub fn all_roots_are_roots_of_unity<F: Field>(h: &UPoly<F>) -> Result<Option<u64>, FieldError> {
    if h.is_constant() {
        return Err(FieldError::ConstantPolynomial);
    }
    let h = h.monic();
    if h.coeffs().iter().any(|c| !c.is_constant()) {
        return Ok(None);
    }
    let sf = h.squarefree_part();
    if sf.coeff(0).is_zero() {
        return Ok(None);
    }
    let ext = sf
        .coeffs()
        .iter()
        .map(Field::extension_degree)
        .max()
        .unwrap_or(1) as u64;
    let bound = sf.deg() as u64 * ext;
    let template = sf.lc();
    let mut rest = sf;
    let mut order = 1u64;
    let mut n = 1u64;
    while !rest.is_constant() {
        if n > 2 * bound * bound + 2 {
            return Ok(None);
        }
        if euler_phi(n) <= bound {
            let cyc = cyclotomic_polynomial(n).map(|q| template.lift_like(q));
            let g = rest.gcd(&cyc);
            if !g.is_constant() {
                rest = rest.div_exact(&g).expect("gcd divides");
                order = order.lcm(&n);
            }
        }
        n += 1;
    }
    Ok(Some(order))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, AlgNum, NumberField};

    #[test]
    fn rational_roots_of_unity() {
        assert_eq!(is_root_of_unity(&rat(-1)), Ok(Some(2)));
        assert_eq!(is_root_of_unity(&rat(1)), Ok(Some(1)));
        assert_eq!(is_root_of_unity(&rat(3)), Ok(None));
        assert_eq!(is_root_of_unity(&rat(0)), Err(FieldError::ZeroElement));
    }

    #[test]
    fn primitive_cube_root_in_extension() {
        let k = NumberField::new(UPoly::from_ints(&[1, 1, 1]), "w").unwrap();
        let w = k.generator();
        // brute force: w^n = 1 for n up to 2 d^2 = 8
        let brute = (1..=8u64).find(|&n| w.pow(n).is_one());
        assert_eq!(brute, Some(3));
        assert_eq!(is_root_of_unity(&w), Ok(Some(3)));
        let two_w = w.mul(&AlgNum::from_int(2));
        assert_eq!(is_root_of_unity(&two_w), Ok(None));
    }

    #[test]
    fn polynomial_roots_of_unity() {
        let h = UPoly::<Rational>::from_ints(&[1, 1, 1]);
        assert_eq!(all_roots_are_roots_of_unity(&h), Ok(Some(3)));
        let h = UPoly::<Rational>::from_ints(&[-2, 0, 1]);
        assert_eq!(all_roots_are_roots_of_unity(&h), Ok(None));
        let h = UPoly::<Rational>::from_ints(&[-1, 0, 1]);
        assert_eq!(all_roots_are_roots_of_unity(&h), Ok(Some(2)));
        // (u^2+1)^2 (u-1): squarefree part has order lcm(4, 1)
        let h = UPoly::<Rational>::from_ints(&[1, 0, 1])
            .pow(2)
            .mul(&UPoly::from_ints(&[-1, 1]));
        assert_eq!(all_roots_are_roots_of_unity(&h), Ok(Some(4)));
        assert_eq!(
            all_roots_are_roots_of_unity(&UPoly::<Rational>::from_ints(&[3])),
            Err(FieldError::ConstantPolynomial)
        );
    }

    #[test]
    fn cyclotomics() {
        assert_eq!(cyclotomic_polynomial(1), UPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(6), UPoly::from_ints(&[1, -1, 1]));
        assert_eq!(cyclotomic_polynomial(12).deg() as u64, euler_phi(12));
    }
}
