//! Separated pairs of `I0 ∩ <p1>` with `I0` zero-dimensional.
//!
//! `A(<p1>)` is generated by one pair `g`, so the pairs of the intersection
//! are the polynomials in `g` that fall into `A(I0)`. The exponents of the
//! generators found so far span a numerical semigroup; only exponents
//! outside it need to be searched.

use num_integer::Integer;

use crate::field::{Field, Rational};
use crate::linalg::nullspace;
use crate::poly::merge::{SeparatedPair, VariablePartition};
use crate::poly::Poly;
use crate::principal::{thm5_generator, PrincipalError, PrincipalOutcome, PrincipalProblem};
use crate::zerodim::{AlgebraPresentation, ZerodimError};

/// The additive monoid spanned by a set of positive integers.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SemigroupTracker {
    gens: Vec<u64>,
    member: Vec<bool>,
}

impl SemigroupTracker {
    pub fn new() -> Self {
        SemigroupTracker {
            gens: Vec::new(),
            member: vec![true],
        }
    }

    pub fn generators(&self) -> &[u64] {
        &self.gens
    }

    pub fn insert(&mut self, d: u64) {
        assert!(d > 0, "semigroup generators are positive");
        if !self.contains(d) {
            self.gens.push(d);
            self.gens.sort_unstable();
            self.member.truncate(1);
        }
    }

    fn extend_to(&mut self, n: u64) {
        while (self.member.len() as u64) <= n {
            let k = self.member.len() as u64;
            let hit = self
                .gens
                .iter()
                .any(|&g| g <= k && self.member[(k - g) as usize]);
            self.member.push(hit);
        }
    }

    pub fn contains(&mut self, n: u64) -> bool {
        self.extend_to(n);
        self.member[n as usize]
    }

    /// Whether only finitely many positive integers are missing.
    pub fn has_finite_complement(&self) -> bool {
        self.gens.iter().fold(0u64, |acc, &g| acc.gcd(&g)) == 1
    }

    /// The missing positive integers, when there are finitely many.
    pub fn gaps(&mut self) -> Option<Vec<u64>> {
        if !self.has_finite_complement() {
            return None;
        }
        let (lo, hi) = (self.gens[0], *self.gens.last().expect("nonempty"));
        // the largest gap is below (lo - 1)(hi - 1)
        let bound = (lo - 1) * (hi - 1) + 1;
        Some((1..=bound).filter(|&n| !self.contains(n)).collect())
    }

    /// Missing positive integers below `n`.
    pub fn gaps_below(&mut self, n: u64) -> Vec<u64> {
        (1..n).filter(|&k| !self.contains(k)).collect()
    }
}

/// A generator `sum_i c_i g^i` of the intersection.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PowerCombination<F: Field> {
    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub coeffs: Vec<(u32, F)>,
    pub pair: SeparatedPair<F>,
}

impl<F: Field> PowerCombination<F> {
    pub fn degree(&self) -> u32 {
        self.coeffs.last().map_or(0, |(e, _)| *e)
    }

    /// Renders the combination as a polynomial in `var`.
    pub fn render(&self, var: &str) -> String {
        let p = Poly::from_terms(
            self.coeffs
                .iter()
                .map(|(e, c)| (crate::poly::Monomial::var_pow(0, *e), c.clone())),
        );
        p.render(&[var.to_string()])
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntersectOutcome<F: Field> {
    /// The generator of `A(<p1>)`, absent when that algebra is trivial.
    pub base: Option<SeparatedPair<F>>,
    pub generators: Vec<PowerCombination<F>>,
    /// `complement_reduce(g^e)` for every exponent examined.
    pub reductions: Vec<SeparatedPair<F>>,
    /// False when the exponent cap stopped the search early.
    pub complete: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum IntersectError {
    #[error(transparent)]
    Zerodim(#[from] ZerodimError),
    #[error(transparent)]
    Principal(#[from] PrincipalError),
}

/// Polynomials in `g` that lie in `A(I0)`, searched up to exponent `cap`.
pub fn intersect_with_generator<F: Field>(
    pres: &AlgebraPresentation<F>,
    g: &SeparatedPair<F>,
    cap: u32,
) -> IntersectOutcome<F> {
    let mut tracker = SemigroupTracker::new();
    let mut reductions: Vec<SeparatedPair<F>> = Vec::new();
    let mut coords: Vec<Vec<F>> = Vec::new();
    let mut generators = Vec::new();
    let mut power = SeparatedPair::one();
    let mut complete = false;
    for e in 1..=cap {
        if tracker.has_finite_complement() {
            let gaps = tracker.gaps().expect("finite complement");
            if gaps.iter().all(|&k| k < e as u64) {
                complete = true;
                break;
            }
        }
        power = pres.reduce_components(&power.mul(g));
        reductions.push(pres.complement_reduce(&power));
        coords.push(pres.complement_coordinates(&power));
        if tracker.contains(e as u64) {
            continue;
        }
        let mut support: Vec<u32> = tracker
            .gaps_below(e as u64)
            .into_iter()
            .map(|k| k as u32)
            .collect();
        support.push(e);
        let dim = pres.complement_basis().len();
        let rows: Vec<Vec<F>> = (0..dim)
            .map(|r| {
                support
                    .iter()
                    .map(|&k| coords[k as usize - 1][r].clone())
                    .collect()
            })
            .collect();
        let sols = nullspace(&rows, support.len());
        let Some(sol) = sols.iter().find(|s| !s.last().expect("nonempty").is_zero()) else {
            continue;
        };
        let top = sol.last().expect("nonempty").inv().expect("nonzero");
        let coeffs: Vec<(u32, F)> = support
            .iter()
            .zip(sol)
            .map(|(&k, c)| (k, c.mul(&top)))
            .filter(|(_, c)| !c.is_zero())
            .collect();
        let pair = coeffs.iter().fold(
            SeparatedPair::new(Poly::zero(), Poly::zero()),
            |acc, (k, c)| acc.add(&g.pow(*k).scale(c)),
        );
        generators.push(PowerCombination { coeffs, pair });
        tracker.insert(e as u64);
    }
    if !complete && tracker.has_finite_complement() {
        complete = tracker
            .gaps()
            .expect("finite complement")
            .iter()
            .all(|&k| k <= cap as u64);
    }
    IntersectOutcome {
        base: Some(g.clone()),
        generators,
        reductions,
        complete,
    }
}

/// Generators of `A(I0 ∩ <p1>)` over `Q`; `(1, 1)` is implicit.
pub fn intersect_algebra(
    i0: &[Poly<Rational>],
    p1: &Poly<Rational>,
    part: &VariablePartition,
    cap: u32,
) -> Result<IntersectOutcome<Rational>, IntersectError> {
    let pres = AlgebraPresentation::new(i0, &part.x_vars(), &part.y_vars())?;
    let prob = PrincipalProblem::new(p1.clone(), part.clone())?;
    match thm5_generator(&prob)? {
        PrincipalOutcome::Trivial => Ok(IntersectOutcome {
            base: None,
            generators: Vec::new(),
            reductions: Vec::new(),
            complete: true,
        }),
        PrincipalOutcome::Simple(g) => Ok(intersect_with_generator(&pres, &g, cap)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::rat;

    #[test]
    fn semigroups() {
        let mut s = SemigroupTracker::new();
        s.insert(2);
        assert_eq!(s.gaps(), None);
        assert!(!s.contains(5) && s.contains(6));
        s.insert(3);
        assert_eq!(s.gaps(), Some(vec![1]));
        let mut s = SemigroupTracker::new();
        s.insert(1);
        assert_eq!(s.gaps(), Some(vec![]));
        let mut s = SemigroupTracker::new();
        s.insert(3);
        s.insert(5);
        assert_eq!(s.gaps(), Some(vec![1, 2, 4, 7]));
    }

    #[test]
    fn point_and_curve() {
        let v = |i| Poly::<Rational>::var(i);
        let c = |k| Poly::<Rational>::from_int(k);
        let part = VariablePartition::standard(2, 2);
        let i0 = [
            v(0).sub(&c(1)),
            v(1).sub(&c(1)),
            v(2).sub(&c(2)),
            v(3).sub(&c(2)),
        ];
        let p1 = v(0).pow(2).add(&v(0).mul(&v(3))).add(&v(3).pow(2));
        let out = intersect_algebra(&i0, &p1, &part, 64).unwrap();
        let g = SeparatedPair::new(v(0).pow(3), v(3).pow(3));
        assert_eq!(out.base, Some(g.clone()));
        assert!(out.complete);
        let want: Vec<Vec<(u32, Rational)>> = vec![
            vec![(1, rat(-9)), (2, rat(1))],
            vec![(1, rat(-73)), (3, rat(1))],
        ];
        let got: Vec<Vec<(u32, Rational)>> =
            out.generators.iter().map(|p| p.coeffs.clone()).collect();
        assert_eq!(got, want);
        let zero = Poly::zero();
        assert_eq!(out.reductions[0], SeparatedPair::new(zero.clone(), c(7)));
        assert_eq!(out.reductions[1], SeparatedPair::new(zero.clone(), c(63)));
        assert_eq!(out.reductions[2], SeparatedPair::new(zero, c(511)));
        assert_eq!(out.generators[0].render("g"), "g^2 - 9*g");
    }

    #[test]
    fn generator_already_inside() {
        // I0 = <x, y>, p1 = x - y: g = (x, y) lies in A(I0)
        let v = |i| Poly::<Rational>::var(i);
        let part = VariablePartition::standard(1, 1);
        let out = intersect_algebra(&[v(0), v(1)], &v(0).sub(&v(1)), &part, 8).unwrap();
        assert_eq!(out.generators.len(), 1);
        assert_eq!(out.generators[0].coeffs, vec![(1, rat(1))]);
        assert!(out.complete);
        // (x + y)^2 + x: trivial algebra
        let p = v(0).add(&v(1)).pow(2).add(&v(0));
        let out = intersect_algebra(&[v(0), v(1)], &p, &part, 8).unwrap();
        assert!(out.base.is_none() && out.generators.is_empty());
    }
}
