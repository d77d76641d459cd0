//! Elimination, syzygies, intersection and saturation.

use super::{GroebnerBasis, ModuleOrder};
use crate::field::Field;
use crate::poly::{MonomialOrder, Poly};

/// Gröbner basis of `<gens>` intersected with the ring of the variables not in `vars`.
pub fn eliminate<F: Field>(gens: &[Poly<F>], vars: &[usize]) -> Vec<Poly<F>> {
    if vars.is_empty() {
        return GroebnerBasis::ideal(gens, MonomialOrder::Grevlex).polys();
    }
    GroebnerBasis::ideal(gens, MonomialOrder::eliminating(vars))
        .polys()
        .into_iter()
        .filter(|p| p.free_of(vars))
        .collect()
}

/// Generators of `{a : sum a_i v_i = 0}` for vectors `v_i` of length `rank`.
pub fn syzygies<F: Field>(vs: &[Vec<Poly<F>>], rank: usize) -> Vec<Vec<Poly<F>>> {
    let k = vs.len();
    let gens: Vec<Vec<Poly<F>>> = vs
        .iter()
        .enumerate()
        .map(|(i, v)| {
            let mut row = v.clone();
            row.resize(rank, Poly::zero());
            let mut unit = vec![Poly::zero(); k];
            unit[i] = Poly::one();
            row.extend(unit);
            row
        })
        .collect();
    let blocks: Vec<usize> = (0..rank + k).map(|p| usize::from(p >= rank)).collect();
    let order = ModuleOrder::top(MonomialOrder::Grevlex).with_blocks(blocks);
    GroebnerBasis::module(&gens, rank + k, order)
        .vectors()
        .into_iter()
        .filter(|v| v[..rank].iter().all(Poly::is_zero))
        .map(|mut v| v.split_off(rank))
        .collect()
}

fn aux_var<F: Field>(polys: &[&[Poly<F>]]) -> usize {
    polys
        .iter()
        .flat_map(|ps| ps.iter().map(Poly::nvars))
        .max()
        .unwrap_or(0)
}

/// Gröbner basis (grevlex) of the intersection of two ideals.
pub fn ideal_intersect<F: Field>(i: &[Poly<F>], j: &[Poly<F>]) -> Vec<Poly<F>> {
    let w = aux_var(&[i, j]);
    let wp = Poly::var(w);
    let one_minus_w = Poly::one().sub(&wp);
    let mut gens: Vec<Poly<F>> = i.iter().map(|f| f.mul(&wp)).collect();
    gens.extend(j.iter().map(|g| g.mul(&one_minus_w)));
    let elim = eliminate(&gens, &[w]);
    GroebnerBasis::ideal(&elim, MonomialOrder::Grevlex).polys()
}

/// Gröbner basis (grevlex) of the saturation `I : f^infinity`.
pub fn saturate<F: Field>(i: &[Poly<F>], f: &Poly<F>) -> Vec<Poly<F>> {
    let w = aux_var(&[i, std::slice::from_ref(f)]);
    let mut gens = i.to_vec();
    gens.push(Poly::one().sub(&Poly::var(w).mul(f)));
    let elim = eliminate(&gens, &[w]);
    GroebnerBasis::ideal(&elim, MonomialOrder::Grevlex).polys()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{RatFun, Rational};

    fn x(i: usize) -> Poly<Rational> {
        Poly::var(i)
    }

    #[test]
    fn elimination() {
        // <x - t, y - t^2>, t = var 2
        let gens = [x(0).sub(&x(2)), x(1).sub(&x(2).pow(2))];
        let e = eliminate(&gens, &[2]);
        assert_eq!(e, vec![x(0).pow(2).sub(&x(1))]);
        let same = eliminate(&[x(0)], &[]);
        assert_eq!(same, vec![x(0)]);
    }

    #[test]
    fn syzygy_examples() {
        let s = syzygies(&[vec![x(0)], vec![x(1)]], 1);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0][0].mul(&x(0)).add(&s[0][1].mul(&x(1))), Poly::zero());
        assert!(s[0][0] == x(1) || s[0][0] == x(1).neg());
        assert!(syzygies(&[vec![Poly::<Rational>::one()]], 1).is_empty());
        let s = syzygies(&[vec![x(0)], vec![x(0)]], 1);
        assert_eq!(s.len(), 1);
        assert!(s[0][0].is_constant() && s[0][0] == s[0][1].neg());
    }

    #[test]
    fn intersections() {
        assert_eq!(ideal_intersect(&[x(0)], &[x(1)]), vec![x(0).mul(&x(1))]);
        assert_eq!(ideal_intersect(&[x(0)], &[x(0)]), vec![x(0)]);
        // <s> cap <s - 1, t> over K(x, y)[s, t]; s = var 0, t = var 1
        let v = |i| Poly::<RatFun<Rational>>::var(i);
        let one = Poly::<RatFun<Rational>>::one();
        let got = ideal_intersect(&[v(0)], &[v(0).sub(&one), v(1)]);
        let want = [v(0).pow(2).sub(&v(0)), v(0).mul(&v(1))];
        let gb_got = GroebnerBasis::ideal(&got, MonomialOrder::Grevlex);
        let gb_want = GroebnerBasis::ideal(&want, MonomialOrder::Grevlex);
        assert!(want.iter().all(|p| gb_got.contains_poly(p)));
        assert!(got.iter().all(|p| gb_want.contains_poly(p)));
    }

    #[test]
    fn saturation() {
        // <x*y> : y^inf = <x>
        assert_eq!(saturate(&[x(0).mul(&x(1))], &x(1)), vec![x(0)]);
    }
}
