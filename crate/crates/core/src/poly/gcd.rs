//! Multivariate gcd over a field by recursive primitive remainder sequences.

use super::{Monomial, MonomialOrder, Poly};
use crate::field::Field;

/// Greatest common divisor, normalized to leading coefficient 1 under
/// grevlex; `gcd(0, 0) = 0`.
pub fn gcd<F: Field>(a: &Poly<F>, b: &Poly<F>) -> Poly<F> {
    if a.is_zero() {
        return normalize(b);
    }
    if b.is_zero() {
        return normalize(a);
    }
    if a.is_constant() || b.is_constant() {
        return Poly::one();
    }
    if a.is_monomial() || b.is_monomial() {
        let (m, p) = if a.is_monomial() { (a, b) } else { (b, a) };
        let start = m.monomials().next().unwrap().clone();
        let g = p.monomials().fold(start, |acc, x| acc.gcd(x));
        return Poly::term(g, F::one());
    }
    if a.len() <= b.len() {
        if b.div_exact(a).is_some() {
            return normalize(a);
        }
    } else if a.div_exact(b).is_some() {
        return normalize(b);
    }
    let mut vars = a.variables();
    for v in b.variables() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort_unstable();
    let v = *vars.last().unwrap();
    let (ca, cb) = (content_in(a, v), content_in(b, v));
    let c = gcd(&ca, &cb);
    if a.degree_in(v) == 0 {
        return gcd(a, &cb);
    }
    if b.degree_in(v) == 0 {
        return gcd(&ca, b);
    }
    let pa = normalize(&a.div_exact(&ca).expect("content divides"));
    let pb = normalize(&b.div_exact(&cb).expect("content divides"));
    let (mut f, mut g) = if pa.degree_in(v) >= pb.degree_in(v) {
        (pa, pb)
    } else {
        (pb, pa)
    };
    loop {
        let r = pseudo_rem(&f, &g, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            g = Poly::one();
            break;
        }
        f = g;
        g = primitive_part(&r, v);
    }
    normalize(&c.mul(&primitive_part(&g, v)))
}

pub fn gcd_many<'a, F: Field>(ps: impl IntoIterator<Item = &'a Poly<F>>) -> Poly<F> {
    let mut acc = Poly::zero();
    for p in ps {
        acc = gcd(&acc, p);
        if acc.is_constant() && !acc.is_zero() {
            return acc;
        }
    }
    acc
}

/// Gcd of the coefficients of `p` viewed as a polynomial in `var`.
pub fn content_in<F: Field>(p: &Poly<F>, var: usize) -> Poly<F> {
    gcd_many(p.univariate_coeffs(var).iter())
}

fn primitive_part<F: Field>(p: &Poly<F>, var: usize) -> Poly<F> {
    let c = content_in(p, var);
    normalize(&p.div_exact(&c).expect("content divides"))
}

fn normalize<F: Field>(p: &Poly<F>) -> Poly<F> {
    p.monic(&MonomialOrder::Grevlex)
}

/// A remainder of `f` by `g` in `var` after multiplying `f` by a power of
/// the leading coefficient of `g`.
fn pseudo_rem<F: Field>(f: &Poly<F>, g: &Poly<F>, var: usize) -> Poly<F> {
    let dg = g.degree_in(var);
    let lg = g.univariate_coeffs(var).pop().unwrap();
    let mut f = f.clone();
    while !f.is_zero() && f.degree_in(var) >= dg {
        let df = f.degree_in(var);
        let lf = f.univariate_coeffs(var).pop().unwrap();
        let shift = Poly::term(Monomial::var_pow(var, df - dg), F::one());
        f = lg.mul(&f).sub(&lf.mul(&shift).mul(g));
    }
    f
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;
    use proptest::prelude::*;

    fn x(i: usize) -> Poly<Rational> {
        Poly::var(i)
    }

    #[test]
    fn known_gcds() {
        let a = x(0).add(&x(1)).mul(&x(0).sub(&x(2)));
        let b = x(0).add(&x(1)).mul(&x(1).add(&Poly::from_int(1)));
        assert_eq!(gcd(&a, &b), x(0).add(&x(1)));
        assert_eq!(
            gcd(&x(0).pow(3).mul(&x(1)), &x(0).pow(2).add(&x(0).pow(3))),
            x(0).pow(2)
        );
        let c = x(0).mul(&x(1)).sub(&Poly::one());
        assert!(gcd(&c, &x(0).add(&x(1))).is_constant());
    }

    fn small_poly() -> impl Strategy<Value = Poly<Rational>> {
        prop::collection::vec(((0u32..3, 0u32..3, 0u32..2), -3i64..4), 1..5).prop_map(|ts| {
            Poly::from_terms(
                ts.into_iter()
                    .map(|((a, b, c), k)| (Monomial::from_exps(&[a, b, c]), crate::field::rat(k))),
            )
        })
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(40))]
        #[test]
        fn gcd_of_products_contains_common_factor(a in small_poly(), b in small_poly(), c in small_poly()) {
            prop_assume!(!a.is_zero() && !b.is_zero() && !c.is_zero());
            let g = gcd(&a.mul(&c), &b.mul(&c));
            prop_assert!(a.mul(&c).div_exact(&g).is_some());
            prop_assert!(b.mul(&c).div_exact(&g).is_some());
            prop_assert!(g.div_exact(&normalize(&c)).is_some());
        }
    }
}
