//! Separated pairs of zero-dimensional ideals.
//!
//! Every pair `(f, g)` can be reduced modulo `I ∩ K[X]` and `I ∩ K[Y]`, so
//! a bounded ansatz over the standard monomials of the two elimination
//! ideals finds all remaining generators.

use std::collections::{BTreeMap, BTreeSet};

use crate::field::Field;
use crate::groebner::GroebnerBasis;
use crate::linalg::{independent_subset, nullspace, solve};
use crate::poly::merge::SeparatedPair;
use crate::poly::{Monomial, MonomialOrder, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum ZerodimError {
    #[error("ideal is not zero-dimensional")]
    PositiveDimensional,
}

/// Generators of `A(I)` for a zero-dimensional `I`, with the data needed to
/// reduce arbitrary pairs modulo `A(I)`.
#[derive(Debug, Clone)]
pub struct AlgebraPresentation<F: Field> {
    x_vars: Vec<usize>,
    y_vars: Vec<usize>,
    gb: GroebnerBasis<F>,
    elim_x: GroebnerBasis<F>,
    elim_y: GroebnerBasis<F>,
    box_x: Vec<Monomial>,
    box_y: Vec<Monomial>,
    eliminants_x: Vec<Poly<F>>,
    eliminants_y: Vec<Poly<F>>,
    ansatz: Vec<SeparatedPair<F>>,
    generators: Vec<SeparatedPair<F>>,
    complement: Vec<SeparatedPair<F>>,
    quotient_basis: Vec<Monomial>,
    complement_matrix: Vec<Vec<F>>,
}

fn is_zero_dimensional<F: Field>(gb: &GroebnerBasis<F>, vars: &[usize]) -> bool {
    gb.is_unit()
        || vars.iter().all(|&v| {
            gb.leading_terms()
                .iter()
                .any(|(m, _)| m.only_in(&[v]) && m.exp(v) > 0)
        })
}

/// Monomials in `vars` that are standard for `gb`, sorted by degree and
/// then in reverse monomial order, so `1` comes first.
pub fn standard_monomials<F: Field>(gb: &GroebnerBasis<F>, vars: &[usize]) -> Vec<Monomial> {
    if gb.is_unit() {
        return Vec::new();
    }
    let mut seen = BTreeSet::new();
    let mut frontier = vec![Monomial::one()];
    seen.insert(Monomial::one());
    while let Some(m) = frontier.pop() {
        for &v in vars {
            let next = m.mul(&Monomial::var(v));
            if gb.is_standard(&next, 0) && seen.insert(next.clone()) {
                frontier.push(next);
            }
        }
    }
    let mut out: Vec<Monomial> = seen.into_iter().collect();
    out.sort_by(|a, b| {
        a.degree()
            .cmp(&b.degree())
            .then_with(|| MonomialOrder::Grevlex.cmp(b, a))
    });
    out
}

fn coordinates<F: Field>(p: &Poly<F>, index: &BTreeMap<Monomial, usize>) -> Vec<F> {
    let mut v = vec![F::zero(); index.len()];
    for (m, c) in p.terms() {
        v[index[m]] = c.clone();
    }
    v
}

/// Monic minimal polynomial of the variable `v` modulo the ideal of `gb`.
fn minimal_polynomial<F: Field>(
    gb: &GroebnerBasis<F>,
    v: usize,
    index: &BTreeMap<Monomial, usize>,
) -> Poly<F> {
    let mut powers: Vec<Vec<F>> = Vec::new();
    let mut pk = Poly::one();
    loop {
        let nf = gb.reduce_poly(&pk);
        let col = coordinates(&nf, index);
        if !powers.is_empty() {
            let rows: Vec<Vec<F>> = (0..index.len())
                .map(|r| powers.iter().map(|c| c[r].clone()).collect())
                .collect();
            if let Some(x) = solve(&rows, &col, powers.len()) {
                let k = powers.len() as u32;
                let mut out = Poly::term(Monomial::var_pow(v, k), F::one());
                for (i, c) in x.iter().enumerate() {
                    out = out.sub(&Poly::term(Monomial::var_pow(v, i as u32), c.clone()));
                }
                return out;
            }
        } else if nf.is_zero() {
            return Poly::one();
        }
        powers.push(col);
        pk = nf.mul(&Poly::var(v));
    }
}

impl<F: Field> AlgebraPresentation<F> {
    /// Builds the presentation; `x_vars` and `y_vars` are the two blocks.
    pub fn new(gens: &[Poly<F>], x_vars: &[usize], y_vars: &[usize]) -> Result<Self, ZerodimError> {
        let all: Vec<usize> = x_vars.iter().chain(y_vars).copied().collect();
        let gb = GroebnerBasis::ideal(gens, MonomialOrder::Grevlex);
        if !is_zero_dimensional(&gb, &all) {
            return Err(ZerodimError::PositiveDimensional);
        }
        let elim = |drop: &[usize]| {
            let polys: Vec<Poly<F>> = GroebnerBasis::ideal(gens, MonomialOrder::eliminating(drop))
                .polys()
                .into_iter()
                .filter(|p| p.free_of(drop))
                .collect();
            GroebnerBasis::ideal(&polys, MonomialOrder::Grevlex)
        };
        let elim_x = elim(y_vars);
        let elim_y = elim(x_vars);
        let box_x = standard_monomials(&elim_x, x_vars);
        let box_y = standard_monomials(&elim_y, y_vars);
        let quotient_basis = standard_monomials(&gb, &all);
        let index: BTreeMap<Monomial, usize> = quotient_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let eliminants_x = x_vars
            .iter()
            .map(|&v| minimal_polynomial(&gb, v, &index))
            .collect();
        let eliminants_y = y_vars
            .iter()
            .map(|&v| minimal_polynomial(&gb, v, &index))
            .collect();

        let mut pres = AlgebraPresentation {
            x_vars: x_vars.to_vec(),
            y_vars: y_vars.to_vec(),
            gb,
            elim_x,
            elim_y,
            box_x,
            box_y,
            eliminants_x,
            eliminants_y,
            ansatz: Vec::new(),
            generators: Vec::new(),
            complement: Vec::new(),
            quotient_basis,
            complement_matrix: Vec::new(),
        };
        pres.solve_ansatz(&index);
        pres.collect_generators();
        pres.build_complement(&index);
        Ok(pres)
    }

    /// Candidate pairs `(m, 0)` for non-constant `m` in the `X` box and
    /// `(0, m)` for `m` in the `Y` box.
    fn monomial_pairs(&self) -> (Vec<SeparatedPair<F>>, Vec<SeparatedPair<F>>) {
        let xs = self
            .box_x
            .iter()
            .filter(|m| !m.is_one())
            .map(|m| SeparatedPair::new(Poly::term(m.clone(), F::one()), Poly::zero()))
            .collect();
        let ys = self
            .box_y
            .iter()
            .map(|m| SeparatedPair::new(Poly::zero(), Poly::term(m.clone(), F::one())))
            .collect();
        (xs, ys)
    }

    fn psi(&self, pair: &SeparatedPair<F>, index: &BTreeMap<Monomial, usize>) -> Vec<F> {
        coordinates(&self.gb.reduce_poly(&pair.difference()), index)
    }

    fn solve_ansatz(&mut self, index: &BTreeMap<Monomial, usize>) {
        let (xs, ys) = self.monomial_pairs();
        let cands: Vec<SeparatedPair<F>> = xs.into_iter().chain(ys).collect();
        let cols: Vec<Vec<F>> = cands.iter().map(|c| self.psi(c, index)).collect();
        let rows: Vec<Vec<F>> = (0..index.len())
            .map(|r| cols.iter().map(|c| c[r].clone()).collect())
            .collect();
        self.ansatz = nullspace(&rows, cands.len())
            .into_iter()
            .map(|sol| {
                cands.iter().zip(&sol).filter(|(_, c)| !c.is_zero()).fold(
                    SeparatedPair::new(Poly::zero(), Poly::zero()),
                    |acc, (p, c)| acc.add(&p.scale(c)),
                )
            })
            .collect();
    }

    fn collect_generators(&mut self) {
        let mut gens = Vec::new();
        if self.gb.is_unit() {
            gens.extend(
                self.x_vars
                    .iter()
                    .map(|&v| SeparatedPair::new(Poly::var(v), Poly::zero())),
            );
            gens.extend(
                self.y_vars
                    .iter()
                    .map(|&v| SeparatedPair::new(Poly::zero(), Poly::var(v))),
            );
            self.generators = gens;
            return;
        }
        for e in self.elim_x.polys() {
            for m in &self.box_x {
                gens.push(SeparatedPair::new(e.mul_term(m, &F::one()), Poly::zero()));
            }
        }
        for e in self.elim_y.polys() {
            for m in &self.box_y {
                gens.push(SeparatedPair::new(Poly::zero(), e.mul_term(m, &F::one())));
            }
        }
        gens.extend(self.ansatz.iter().cloned());
        self.generators = gens;
    }

    fn build_complement(&mut self, index: &BTreeMap<Monomial, usize>) {
        let (xs, ys) = self.monomial_pairs();
        let cands: Vec<SeparatedPair<F>> = ys.into_iter().chain(xs).collect();
        let images: Vec<Vec<F>> = cands.iter().map(|c| self.psi(c, index)).collect();
        let chosen = independent_subset(&images, index.len());
        self.complement = chosen.iter().map(|&i| cands[i].clone()).collect();
        self.complement_matrix = (0..index.len())
            .map(|r| chosen.iter().map(|&i| images[i][r].clone()).collect())
            .collect();
    }

    /// Coordinates of `pair` modulo `A(I)` with respect to the complement basis.
    pub fn complement_coordinates(&self, pair: &SeparatedPair<F>) -> Vec<F> {
        let index: BTreeMap<Monomial, usize> = self
            .quotient_basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        let target = self.psi(pair, &index);
        solve(&self.complement_matrix, &target, self.complement.len())
            .expect("complement spans the image")
    }

    /// The element of the complement space congruent to `pair` modulo `A(I)`.
    pub fn complement_reduce(&self, pair: &SeparatedPair<F>) -> SeparatedPair<F> {
        self.complement_coordinates(pair)
            .iter()
            .zip(&self.complement)
            .filter(|(c, _)| !c.is_zero())
            .fold(
                SeparatedPair::new(Poly::zero(), Poly::zero()),
                |acc, (c, v)| acc.add(&v.scale(c)),
            )
    }

    /// Whether `pair` lies in `A(I)`.
    pub fn contains(&self, pair: &SeparatedPair<F>) -> bool {
        self.gb.contains_poly(&pair.difference())
    }

    /// Reduces `f` modulo `I ∩ K[X]` and `g` modulo `I ∩ K[Y]`; the result
    /// differs from `pair` by an element of `A(I)`.
    pub fn reduce_components(&self, pair: &SeparatedPair<F>) -> SeparatedPair<F> {
        SeparatedPair::new(
            self.elim_x.reduce_poly(&pair.f),
            self.elim_y.reduce_poly(&pair.g),
        )
    }

    pub fn groebner_basis(&self) -> &GroebnerBasis<F> {
        &self.gb
    }

    /// Monic univariate polynomials in `I`, one per `X`-variable.
    pub fn eliminants_x(&self) -> &[Poly<F>] {
        &self.eliminants_x
    }

    pub fn eliminants_y(&self) -> &[Poly<F>] {
        &self.eliminants_y
    }

    /// Gröbner bases (grevlex) of `I ∩ K[X]` and `I ∩ K[Y]`.
    pub fn elimination_ideals(&self) -> (&GroebnerBasis<F>, &GroebnerBasis<F>) {
        (&self.elim_x, &self.elim_y)
    }

    /// Standard monomials of `I ∩ K[X]` and `I ∩ K[Y]`.
    pub fn degree_boxes(&self) -> (&[Monomial], &[Monomial]) {
        (&self.box_x, &self.box_y)
    }

    /// Basis of the pairs supported on the degree boxes, with `f` free of
    /// constants.
    pub fn ansatz_solutions(&self) -> &[SeparatedPair<F>] {
        &self.ansatz
    }

    /// Algebra generators of `A(I)`; `(1, 1)` is implicit.
    pub fn generators(&self) -> &[SeparatedPair<F>] {
        &self.generators
    }

    /// Basis of a complement of `A(I)` in `K[X] x K[Y]`.
    pub fn complement_basis(&self) -> &[SeparatedPair<F>] {
        &self.complement
    }
}

/// Eliminants in the `X` and in the `Y` variables.
pub type Eliminants<F> = (Vec<Poly<F>>, Vec<Poly<F>>);

/// Monic univariate eliminants `p_1..p_n` and `q_1..q_m` of a
/// zero-dimensional ideal.
pub fn univariate_eliminants<F: Field>(
    gens: &[Poly<F>],
    x_vars: &[usize],
    y_vars: &[usize],
) -> Result<Eliminants<F>, ZerodimError> {
    let all: Vec<usize> = x_vars.iter().chain(y_vars).copied().collect();
    let gb = GroebnerBasis::ideal(gens, MonomialOrder::Grevlex);
    if !is_zero_dimensional(&gb, &all) {
        return Err(ZerodimError::PositiveDimensional);
    }
    let index: BTreeMap<Monomial, usize> = standard_monomials(&gb, &all)
        .into_iter()
        .enumerate()
        .map(|(i, m)| (m, i))
        .collect();
    Ok((
        x_vars
            .iter()
            .map(|&v| minimal_polynomial(&gb, v, &index))
            .collect(),
        y_vars
            .iter()
            .map(|&v| minimal_polynomial(&gb, v, &index))
            .collect(),
    ))
}

/// Presentation of `A(I)` for a zero-dimensional `I`.
pub fn zerodim_algebra<F: Field>(
    gens: &[Poly<F>],
    x_vars: &[usize],
    y_vars: &[usize],
) -> Result<AlgebraPresentation<F>, ZerodimError> {
    AlgebraPresentation::new(gens, x_vars, y_vars)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};
    use crate::linalg::rank;

    fn v(i: usize) -> Poly<Rational> {
        Poly::var(i)
    }

    fn c(k: i64) -> Poly<Rational> {
        Poly::from_int(k)
    }

    fn pair(f: Poly<Rational>, g: Poly<Rational>) -> SeparatedPair<Rational> {
        SeparatedPair::new(f, g)
    }

    #[test]
    fn point_ideal() {
        // x1 = 0, x2 = 1, y1 = 2, y2 = 3
        let gens = [
            v(0).sub(&c(1)),
            v(1).sub(&c(1)),
            v(2).sub(&c(2)),
            v(3).sub(&c(2)),
        ];
        let pres = zerodim_algebra(&gens, &[0, 1], &[2, 3]).unwrap();
        assert!(pres.ansatz_solutions().is_empty());
        let want = [
            pair(v(0).sub(&c(1)), Poly::zero()),
            pair(v(1).sub(&c(1)), Poly::zero()),
            pair(Poly::zero(), v(2).sub(&c(2))),
            pair(Poly::zero(), v(3).sub(&c(2))),
        ];
        for w in &want {
            assert!(pres.generators().contains(w), "missing {w:?}");
        }
        assert_eq!(pres.generators().len(), 4);
        let g = pair(v(0).pow(3), v(3).pow(3));
        assert_eq!(pres.complement_reduce(&g), pair(Poly::zero(), c(7)));
        assert_eq!(pres.complement_reduce(&g.pow(2)), pair(Poly::zero(), c(63)));
        assert_eq!(
            pres.complement_reduce(&g.pow(3)),
            pair(Poly::zero(), c(511))
        );
        assert_eq!(
            pres.complement_reduce(&SeparatedPair::one()),
            pair(Poly::zero(), Poly::zero())
        );
    }

    #[test]
    fn small_eliminants() {
        let (p, q) = univariate_eliminants(
            &[v(0).pow(2).sub(&v(1)), v(1).pow(2).sub(&v(0))],
            &[0],
            &[1],
        )
        .unwrap();
        assert_eq!(p, vec![v(0).pow(4).sub(&v(0))]);
        assert_eq!(q, vec![v(1).pow(4).sub(&v(1))]);
        let pres = zerodim_algebra(&[v(0), v(1)], &[0], &[1]).unwrap();
        assert_eq!(
            pres.generators(),
            &[pair(v(0), Poly::zero()), pair(Poly::zero(), v(1))]
        );
        assert_eq!(
            zerodim_algebra(&[v(0).mul(&v(1))], &[0], &[1]).unwrap_err(),
            ZerodimError::PositiveDimensional
        );
    }

    #[test]
    fn complement_is_a_complement() {
        let gens = [v(0).pow(2).sub(&v(1)), v(1).pow(2).sub(&v(0))];
        let pres = zerodim_algebra(&gens, &[0], &[1]).unwrap();
        for g in pres.generators() {
            assert!(pres.contains(g));
            assert!(pres.complement_reduce(g).f.is_zero() && pres.complement_reduce(g).g.is_zero());
        }
        for b in pres.complement_basis() {
            assert_eq!(&pres.complement_reduce(b), b);
        }
        // the complement coordinates are independent
        let coords: Vec<Vec<Rational>> = pres
            .complement_basis()
            .iter()
            .map(|b| pres.complement_coordinates(b))
            .collect();
        assert_eq!(
            rank(&coords, pres.complement_basis().len()),
            pres.complement_basis().len()
        );
        let _ = rat(0);
    }
}
