//! Degree-by-degree enumeration of algebra generators of `A(I)`.
//!
//! The naive strategy solves a linear system over the monomials of each
//! degree. The merged strategy first computes generators `B` of `A(Ī)` for
//! the image `Ī` of `I` over `L = K(X,Y)` in `s`, `t`, and at each degree
//! pulls the `L`-span of the products of `B` back to pairs over `K`.

use std::collections::BTreeMap;

use crate::bivar::{bivar_principal_generator, BivarOutcome};
use crate::field::{Field, RatFun};
use crate::groebner::{ideal_intersect, saturate, GroebnerBasis};
use crate::groebner::pairs::{
    k_basis, module_cap_ideal, span_cap_polymodule, top_eliminate_component, vecspace_intersect,
    PairLayout,
};
use crate::intersect::intersect_with_generator;
use crate::linalg::{nullspace, rref, Echelon};
use crate::poly::merge::{eval_st, phi_merge, SeparatedPair, VariablePartition};
use crate::poly::{gcd_many, Monomial, MonomialOrder, Poly};
use crate::principal::{from_bivariate, to_bivariate};
use crate::zerodim::AlgebraPresentation;

/// Monomials in `vars` of total degree at most `d`, by degree.
pub fn monomials_up_to(vars: &[usize], d: u32) -> Vec<Monomial> {
    let mut out = vec![Monomial::one()];
    let mut layer = vec![(Monomial::one(), 0usize)];
    for _ in 0..d {
        let mut next = Vec::new();
        for (m, first) in &layer {
            for (k, &v) in vars.iter().enumerate().skip(*first) {
                next.push((m.mul(&Monomial::var(v)), k));
            }
        }
        out.extend(next.iter().map(|(m, _)| m.clone()));
        layer = next;
    }
    out
}

/// A basis of the pairs `(f, g)` of `A(I)` with both components of degree
/// at most `d`, `(1, 1)` included.
pub fn naive_degree_search<F: Field>(
    gb: &GroebnerBasis<F>,
    part: &VariablePartition,
    d: u32,
) -> Vec<SeparatedPair<F>> {
    let xs = monomials_up_to(&part.x_vars(), d);
    let ys = monomials_up_to(&part.y_vars(), d);
    let cols: Vec<Poly<F>> = xs
        .iter()
        .map(|m| gb.reduce_poly(&Poly::term(m.clone(), F::one())))
        .chain(
            ys.iter()
                .map(|m| gb.reduce_poly(&Poly::term(m.clone(), F::one())).neg()),
        )
        .collect();
    let ncols = cols.len();
    let mut rows_of: BTreeMap<Monomial, Vec<F>> = BTreeMap::new();
    for (k, c) in cols.iter().enumerate() {
        for (m, v) in c.terms() {
            rows_of
                .entry(m.clone())
                .or_insert_with(|| vec![F::zero(); ncols])[k] = v.clone();
        }
    }
    let rows: Vec<Vec<F>> = rows_of.into_values().collect();
    let mut sols = nullspace(&rows, ncols);
    // reversed columns put the highest monomials first in the echelon form
    let rev = |v: &Vec<F>| v.iter().rev().cloned().collect::<Vec<F>>();
    let mut sols_rev: Vec<Vec<F>> = sols.iter().map(rev).collect();
    rref(&mut sols_rev, ncols);
    sols = sols_rev.iter().map(rev).collect();
    sols.iter()
        .map(|sol| {
            let f = Poly::from_terms(xs.iter().cloned().zip(sol[..xs.len()].iter().cloned()));
            let g = Poly::from_terms(ys.iter().cloned().zip(sol[xs.len()..].iter().cloned()));
            SeparatedPair::new(f, g)
        })
        .collect()
}

/// Generators of `Ī = <phi(p_i)>` over `L`, with `s`, `t` as variables 0, 1.
pub fn merged_ideal<F: Field>(
    gens: &[Poly<F>],
    part: &VariablePartition,
) -> GroebnerBasis<RatFun<F>> {
    let merged: Vec<Poly<RatFun<F>>> = gens
        .iter()
        .map(|p| to_bivariate(&phi_merge(p, part), part))
        .filter(|p| !p.is_zero())
        .collect();
    GroebnerBasis::ideal(&merged, MonomialOrder::Grevlex)
}

/// How generators of `A(Ī)` were obtained.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MergedRoute {
    /// `A(Ī)` is trivial, hence so is `A(I)`.
    Trivial,
    Principal,
    Zerodim,
    /// `Ī = <g> ∩ I0`; `complete` is false if the exponent cap was hit.
    Intersection { complete: bool },
    Unsupported(String),
}

impl MergedRoute {
    pub fn name(&self) -> &'static str {
        match self {
            MergedRoute::Trivial => "trivial",
            MergedRoute::Principal => "principal",
            MergedRoute::Zerodim => "zerodim",
            MergedRoute::Intersection { .. } => "intersection",
            MergedRoute::Unsupported(_) => "unsupported",
        }
    }
}

#[derive(Debug, Clone)]
pub struct MergedAnalysis<F: Field> {
    pub route: MergedRoute,
    /// Generators of `A(Ī)`, in `L[s] x L[t]`; `(1, 1)` is implicit.
    pub generators: Vec<SeparatedPair<RatFun<F>>>,
    /// The gcd of `Ī`, when nonconstant, as a primitive element of `K[X,Y,s,t]`.
    pub gcd: Option<Poly<F>>,
}

fn mixed<L: Field>(p: &Poly<L>) -> bool {
    !p.free_of(&[crate::bivar::S]) && !p.free_of(&[crate::bivar::T])
}

fn same_ideal<L: Field>(a: &[Poly<L>], b: &GroebnerBasis<L>) -> bool {
    let ga = GroebnerBasis::ideal(a, MonomialOrder::Grevlex);
    a.iter().all(|p| b.contains_poly(p)) && b.polys().iter().all(|p| ga.contains_poly(p))
}

/// Generators of `A(Ī)` for an ideal of `L[s, t]`, by the shape of its
/// Gröbner basis: principal, zero-dimensional, or a principal ideal
/// intersected with a zero-dimensional one.
pub fn bivar_ideal_dispatch<F: Field>(
    gb: &GroebnerBasis<RatFun<F>>,
    part: &VariablePartition,
    cap: u32,
) -> MergedAnalysis<F> {
    let polys = gb.polys();
    let st = [crate::bivar::S, crate::bivar::T];
    let unsupported = |why: &str, g: Option<Poly<F>>| MergedAnalysis {
        route: MergedRoute::Unsupported(why.to_string()),
        generators: Vec::new(),
        gcd: g,
    };
    if polys.is_empty() {
        return MergedAnalysis {
            route: MergedRoute::Trivial,
            generators: Vec::new(),
            gcd: None,
        };
    }
    let g = gcd_many(polys.iter());
    let zerodim = |gens: &[Poly<RatFun<F>>]| {
        AlgebraPresentation::new(gens, &[crate::bivar::S], &[crate::bivar::T])
    };
    if g.is_constant() {
        return match zerodim(&polys) {
            Ok(pres) => MergedAnalysis {
                route: MergedRoute::Zerodim,
                generators: pres.generators().to_vec(),
                gcd: None,
            },
            Err(_) => unsupported("coprime generators but positive-dimensional", None),
        };
    }
    let g_prim = primitive_form(&g, part);
    if !mixed(&g) {
        return unsupported("gcd lies in L[s] or L[t]", Some(g_prim));
    }
    let gen = match bivar_principal_generator(&g) {
        Ok(BivarOutcome::Simple(b)) => SeparatedPair::new(b.f, b.g),
        Ok(BivarOutcome::Trivial) => {
            return MergedAnalysis {
                route: MergedRoute::Trivial,
                generators: Vec::new(),
                gcd: Some(g_prim),
            }
        }
        Err(e) => return unsupported(&e.to_string(), Some(g_prim)),
    };
    if polys.len() == 1 {
        return MergedAnalysis {
            route: MergedRoute::Principal,
            generators: vec![gen],
            gcd: Some(g_prim),
        };
    }
    let i0 = saturate(&polys, &g);
    if !same_ideal(&ideal_intersect(std::slice::from_ref(&g), &i0), gb) {
        return unsupported("ideal is not <gcd> intersected with its saturation", Some(g_prim));
    }
    let Ok(pres) = zerodim(&i0) else {
        return unsupported("saturation is positive-dimensional", Some(g_prim));
    };
    debug_assert!(i0.iter().all(|p| p.only_in(&st)));
    let out = intersect_with_generator(&pres, &gen, cap);
    MergedAnalysis {
        route: MergedRoute::Intersection {
            complete: out.complete,
        },
        generators: out.generators.into_iter().map(|c| c.pair).collect(),
        gcd: Some(g_prim),
    }
}

fn primitive_form<F: Field>(g: &Poly<RatFun<F>>, part: &VariablePartition) -> Poly<F> {
    let p = from_bivariate(g, part);
    match crate::poly::merge::st_content(&p, part) {
        Some(c) if !c.is_zero() => p.div_exact(&c).unwrap_or(p),
        _ => p,
    }
}

/// Intermediate results of the pull-back of an `L`-span of pairs to `K`.
#[derive(Debug, Clone)]
pub struct Problem18Trace<F: Field> {
    pub layout: Option<PairLayout>,
    /// Generators of `M = span_L ∩ <phi(I)>` as vectors, the unit included.
    pub module: Vec<Vec<Poly<F>>>,
    /// Elements of `M` with first component in `K[X][s]`.
    pub m_x: Vec<Vec<Poly<F>>>,
    /// Elements of `M` with second component in `K[Y][t]`.
    pub m_y: Vec<Vec<Poly<F>>>,
    /// `K`-basis of the common part, as pairs in `K[X,Y,s,t]`.
    pub intersection: Vec<SeparatedPair<F>>,
    /// The pairs with `s = t = 1`.
    pub pairs: Vec<SeparatedPair<F>>,
}

/// Pairs of `A(I)` whose images lie in the `L`-span of the given pairs of
/// `A(Ī)` together with `(1, 1)`.
pub fn solve_problem18<F: Field>(
    gens: &[Poly<F>],
    part: &VariablePartition,
    pairs: &[SeparatedPair<RatFun<F>>],
) -> Problem18Trace<F> {
    let st = [part.s(), part.t()];
    let diffs: Vec<Poly<F>> = pairs
        .iter()
        .map(|p| from_bivariate(&p.difference(), part))
        .filter(|d| !d.is_zero())
        .collect();
    let merged: Vec<Poly<F>> = gens.iter().map(|p| phi_merge(p, part)).collect();
    let n = span_cap_polymodule(&diffs, &st);
    let m = module_cap_ideal(&n, &merged, &st);
    let layout = PairLayout::covering(&m, part.s(), part.t());
    let width = layout.width();
    let mut module: Vec<Vec<Poly<F>>> = m
        .iter()
        .filter_map(|d| layout.from_difference(d))
        .collect();
    module.push(layout.unit());
    let m_x = top_eliminate_component(&module, width, &layout.f_block(), &part.y_vars());
    let m_y = top_eliminate_component(&module, width, &layout.g_block(), &part.x_vars());
    let common = vecspace_intersect(&m_x, &m_y, width, &part.x_vars(), &part.y_vars());
    let intersection: Vec<SeparatedPair<F>> = common
        .iter()
        .map(|v| {
            let (f, g) = layout.to_pair(v);
            SeparatedPair::new(f, g)
        })
        .collect();
    let evaluated: Vec<Vec<Poly<F>>> = intersection
        .iter()
        .map(|p| vec![eval_st(&p.f, part), eval_st(&p.g, part)])
        .filter(|v| v.iter().any(|p| !p.is_zero()))
        .collect();
    let pairs = k_basis(&evaluated)
        .into_iter()
        .map(|v| SeparatedPair::new(v[0].clone(), v[1].clone()))
        .collect();
    Problem18Trace {
        layout: Some(layout),
        module,
        m_x,
        m_y,
        intersection,
        pairs,
    }
}

/// Pairs that are not polynomials in the pairs kept before them.
#[derive(Debug, Clone, Default)]
pub struct GeneratorSet<F: Field> {
    gens: Vec<SeparatedPair<F>>,
}

/// Bound on the number of products used by the redundancy test.
const PRODUCT_CAP: usize = 4096;

impl<F: Field> GeneratorSet<F> {
    pub fn new() -> Self {
        GeneratorSet { gens: Vec::new() }
    }

    pub fn generators(&self) -> &[SeparatedPair<F>] {
        &self.gens
    }

    fn products_up_to(&self, d: u32) -> Vec<SeparatedPair<F>> {
        let mut out = vec![SeparatedPair::one()];
        let mut stack = vec![(SeparatedPair::one(), 0usize)];
        while let Some((p, first)) = stack.pop() {
            for (k, g) in self.gens.iter().enumerate().skip(first) {
                if out.len() >= PRODUCT_CAP {
                    return out;
                }
                let q = p.mul(g);
                if q.f.is_zero() && q.g.is_zero() || q.total_degree() > d {
                    continue;
                }
                out.push(q.clone());
                stack.push((q, k));
            }
        }
        out
    }

    /// Whether `pair` is a `K`-combination of products of kept generators.
    pub fn is_redundant(&self, pair: &SeparatedPair<F>) -> bool {
        let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
        let mut sparse = |p: &SeparatedPair<F>| -> Vec<(usize, F)> {
            let mut out = Vec::new();
            for (side, q) in [&p.f, &p.g].into_iter().enumerate() {
                for (m, c) in q.terms() {
                    let n = index.len();
                    out.push((*index.entry((side, m.clone())).or_insert(n), c.clone()));
                }
            }
            out
        };
        let prods: Vec<Vec<(usize, F)>> = self
            .products_up_to(pair.total_degree())
            .iter()
            .map(&mut sparse)
            .collect();
        let cand = sparse(pair);
        let ncols = index.len();
        let dense = |s: &[(usize, F)]| {
            let mut row = vec![F::zero(); ncols];
            for (k, c) in s {
                row[*k] = c.clone();
            }
            row
        };
        let mut ech = Echelon::new(ncols);
        for p in &prods {
            ech.insert(&dense(p));
        }
        ech.contains(&dense(&cand))
    }

    /// Adds the canonical form of `pair` unless it is constant or redundant.
    pub fn try_add(&mut self, pair: &SeparatedPair<F>) -> bool {
        if pair.is_trivial() {
            return false;
        }
        let c = pair.canonical();
        if self.is_redundant(&c) {
            return false;
        }
        self.gens.push(c);
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    Naive,
    Merged,
}

impl Strategy {
    pub fn name(&self) -> &'static str {
        match self {
            Strategy::Naive => "naive",
            Strategy::Merged => "merged",
        }
    }
}

pub struct Budget<'a> {
    pub max_degree: u32,
    /// Exponent bound for the intersection route.
    pub exponent_cap: u32,
    pub stop: &'a dyn Fn() -> bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnumerationStatus {
    /// `A(I)` contains only constant pairs.
    Trivial,
    /// Generators found before the budget ran out.
    Partial,
    /// The merged route was unsupported and the naive search ran instead.
    UnsupportedFallback,
}

impl EnumerationStatus {
    pub fn name(&self) -> &'static str {
        match self {
            EnumerationStatus::Trivial => "trivial",
            EnumerationStatus::Partial => "partial",
            EnumerationStatus::UnsupportedFallback => "unsupported-fallback",
        }
    }
}

#[derive(Debug, Clone)]
pub struct Enumeration<F: Field> {
    pub strategy: Strategy,
    pub status: EnumerationStatus,
    /// Generators in order of discovery; `(1, 1)` is implicit.
    pub generators: Vec<SeparatedPair<F>>,
    /// Degree at which each generator was found.
    pub found_at: Vec<u32>,
    /// Highest degree fully processed.
    pub degree_reached: u32,
    /// True if the stop condition cut the run short.
    pub interrupted: bool,
    /// Candidates dropped because `f - g` was not in `I`.
    pub rejected: usize,
    pub merged: Option<MergedAnalysis<F>>,
}

/// Exponent vectors of length `u`, total at most `d`, the zero vector excluded.
fn exponent_vectors(u: usize, d: u32) -> Vec<Vec<u32>> {
    let vars: Vec<usize> = (0..u).collect();
    monomials_up_to(&vars, d)
        .into_iter()
        .skip(1)
        .map(|m| (0..u).map(|i| m.exp(i)).collect())
        .collect()
}

/// Products of the `B` generators of degree at most `d`, reduced to an
/// `L`-basis of the span of their differences.
fn span_basis<F: Field>(
    b: &[SeparatedPair<RatFun<F>>],
    d: u32,
) -> Vec<SeparatedPair<RatFun<F>>> {
    let prods: Vec<SeparatedPair<RatFun<F>>> = exponent_vectors(b.len(), d)
        .iter()
        .map(|e| {
            e.iter()
                .zip(b)
                .fold(SeparatedPair::one(), |acc, (&k, g)| acc.mul(&g.pow(k)))
        })
        .collect();
    let mut index: BTreeMap<Monomial, usize> = BTreeMap::new();
    for p in &prods {
        for m in p.difference().monomials() {
            let n = index.len();
            index.entry(m.clone()).or_insert(n);
        }
    }
    let mut ech = Echelon::new(index.len());
    prods
        .into_iter()
        .filter(|p| {
            let mut row = vec![RatFun::zero(); index.len()];
            for (m, c) in p.difference().terms() {
                row[index[m]] = c.clone();
            }
            ech.insert(&row)
        })
        .collect()
}

/// Enumerates generators of `A(I)` degree by degree until the budget runs out.
pub fn enumerate_generators<F: Field>(
    gens: &[Poly<F>],
    part: &VariablePartition,
    strategy: Strategy,
    budget: &Budget,
) -> Enumeration<F> {
    let gb = GroebnerBasis::ideal(gens, MonomialOrder::Grevlex);
    let mut out = Enumeration {
        strategy,
        status: EnumerationStatus::Partial,
        generators: Vec::new(),
        found_at: Vec::new(),
        degree_reached: 0,
        interrupted: false,
        rejected: 0,
        merged: None,
    };
    let mut set = GeneratorSet::new();
    let mut take = |cands: Vec<SeparatedPair<F>>, d: u32, out: &mut Enumeration<F>| {
        let mut cands: Vec<SeparatedPair<F>> =
            cands.into_iter().filter(|c| !c.is_trivial()).collect();
        cands.sort_by_key(|c| c.total_degree());
        for c in cands {
            if !gb.contains_poly(&c.difference()) {
                out.rejected += 1;
                continue;
            }
            if set.try_add(&c) {
                out.generators.push(set.generators().last().expect("added").clone());
                out.found_at.push(d);
            }
        }
    };
    let mut b: Option<Vec<SeparatedPair<RatFun<F>>>> = None;
    if strategy == Strategy::Merged {
        let ibar = merged_ideal(gens, part);
        let analysis = bivar_ideal_dispatch(&ibar, part, budget.exponent_cap);
        match &analysis.route {
            MergedRoute::Trivial => {
                out.status = EnumerationStatus::Trivial;
                out.merged = Some(analysis);
                return out;
            }
            MergedRoute::Unsupported(_) => out.status = EnumerationStatus::UnsupportedFallback,
            _ => b = Some(analysis.generators.clone()),
        }
        out.merged = Some(analysis);
    }
    let mut last_rank = None;
    for d in 1..=budget.max_degree {
        if (budget.stop)() {
            out.interrupted = true;
            break;
        }
        let cands = match &b {
            None => naive_degree_search(&gb, part, d),
            Some(b) => {
                let basis = span_basis(b, d);
                if last_rank == Some(basis.len()) {
                    out.degree_reached = d;
                    continue;
                }
                last_rank = Some(basis.len());
                if (budget.stop)() {
                    out.interrupted = true;
                    break;
                }
                solve_problem18(gens, part, &basis).pairs
            }
        };
        take(cands, d, &mut out);
        out.degree_reached = d;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::Rational;

    fn v(i: usize) -> Poly<Rational> {
        Poly::var(i)
    }

    fn never() -> bool {
        false
    }

    #[test]
    fn monomial_counts() {
        assert_eq!(monomials_up_to(&[0, 1], 2).len(), 6);
        assert_eq!(monomials_up_to(&[3], 3).len(), 4);
        assert_eq!(monomials_up_to(&[], 3).len(), 1);
        assert_eq!(exponent_vectors(2, 2).len(), 5);
    }

    #[test]
    fn naive_finds_principal_generator() {
        // x^2 - y^3 in K[x, y]
        let part = VariablePartition::standard(1, 1);
        let p = v(0).pow(2).sub(&v(1).pow(3));
        let gb = GroebnerBasis::ideal(std::slice::from_ref(&p), MonomialOrder::Grevlex);
        assert_eq!(naive_degree_search(&gb, &part, 2).len(), 1);
        let sols = naive_degree_search(&gb, &part, 3);
        assert_eq!(sols.len(), 2);
        let budget = Budget {
            max_degree: 4,
            exponent_cap: 8,
            stop: &never,
        };
        let e = enumerate_generators(&[p], &part, Strategy::Naive, &budget);
        assert_eq!(
            e.generators,
            vec![SeparatedPair::new(v(0).pow(2), v(1).pow(3))]
        );
        assert_eq!(e.found_at, vec![3]);
    }

    #[test]
    fn redundancy_filter() {
        let mut set = GeneratorSet::<Rational>::new();
        let g = SeparatedPair::new(v(0), v(1));
        assert!(set.try_add(&g));
        assert!(!set.try_add(&g.pow(2).add(&g.scale(&Rational::from_int(3)))));
        assert!(!set.try_add(&SeparatedPair::one()));
        assert!(set.try_add(&SeparatedPair::new(v(0).pow(2), Poly::zero())));
        assert_eq!(set.generators().len(), 2);
    }

    #[test]
    fn merged_principal_example() {
        // x1 + x2 - y: Ī = <(x1 + x2) s - y t>
        let part = VariablePartition::standard(2, 1);
        let p = v(0).add(&v(1)).sub(&v(2));
        let budget = Budget {
            max_degree: 2,
            exponent_cap: 8,
            stop: &never,
        };
        let e = enumerate_generators(&[p], &part, Strategy::Merged, &budget);
        assert_eq!(e.merged.as_ref().unwrap().route, MergedRoute::Principal);
        assert_eq!(
            e.generators,
            vec![SeparatedPair::new(v(0).add(&v(1)), v(2))]
        );
        assert_eq!(e.rejected, 0);
    }

    #[test]
    fn trivial_short_circuit() {
        // (x + y)^2 + x
        let part = VariablePartition::standard(1, 1);
        let p = v(0).add(&v(1)).pow(2).add(&v(0));
        let budget = Budget {
            max_degree: 3,
            exponent_cap: 8,
            stop: &never,
        };
        let e = enumerate_generators(&[p], &part, Strategy::Merged, &budget);
        assert_eq!(e.status, EnumerationStatus::Trivial);
        assert!(e.generators.is_empty());
    }

    #[test]
    fn zero_budget() {
        let part = VariablePartition::standard(1, 1);
        let budget = Budget {
            max_degree: 0,
            exponent_cap: 8,
            stop: &never,
        };
        let e = enumerate_generators(&[v(0).sub(&v(1))], &part, Strategy::Naive, &budget);
        assert!(e.generators.is_empty() && e.degree_reached == 0 && !e.interrupted);
    }

    fn monomial_curve_ideal() -> Vec<Poly<Rational>> {
        let (x1, x2, y1, y2) = (v(0), v(1), v(2), v(3));
        vec![
            y1.pow(2).sub(&x2.mul(&y2)),
            x2.pow(2).sub(&x1.mul(&y1)),
            x1.pow(4)
                .mul(&x2)
                .mul(&y1)
                .sub(&x2.mul(&y1).mul(&y2.pow(4))),
        ]
    }

    #[test]
    fn pair_search_sixth_powers() {
        let part = VariablePartition::standard(2, 2);
        let s6 = SeparatedPair::new(Poly::<RatFun<Rational>>::var(0).pow(6), Poly::zero());
        let t6 = SeparatedPair::new(Poly::zero(), Poly::<RatFun<Rational>>::var(1).pow(6));
        let tr = solve_problem18(&monomial_curve_ideal(), &part, &[s6, t6]);
        let (s, t) = (v(part.s()), v(part.t()));
        let big = SeparatedPair::new(
            v(0).pow(3).mul(&v(1).pow(3)).mul(&s.pow(6)),
            v(2).pow(3).mul(&v(3).pow(3)).mul(&t.pow(6)),
        );
        assert_eq!(tr.intersection, vec![SeparatedPair::one(), big]);
        let want = SeparatedPair::new(
            v(0).pow(3).mul(&v(1).pow(3)),
            v(2).pow(3).mul(&v(3).pow(3)),
        );
        assert_eq!(tr.pairs, vec![SeparatedPair::one(), want]);
        let empty = solve_problem18(&monomial_curve_ideal(), &part, &[]);
        assert_eq!(empty.pairs, vec![SeparatedPair::one()]);
    }

    #[test]
    fn merged_ideal_of_monomial_curve_is_zerodim() {
        let part = VariablePartition::standard(2, 2);
        let a = bivar_ideal_dispatch(&merged_ideal(&monomial_curve_ideal(), &part), &part, 16);
        assert_eq!(a.route, MergedRoute::Zerodim);
    }

    #[test]
    fn trivial_algebra_with_nontrivial_image() {
        let (x1, x2, y1, y2) = (v(0), v(1), v(2), v(3));
        let base = y1.sub(&x1);
        let gens = vec![
            base.add(&x1.mul(&x2).mul(&y2)).sub(&x2.mul(&y1).mul(&y2)),
            base.add(&x1.pow(2).mul(&y1)).sub(&x1.mul(&y1.pow(2))),
        ];
        let part = VariablePartition::standard(2, 2);
        let a = bivar_ideal_dispatch(&merged_ideal(&gens, &part), &part, 16);
        assert_eq!(a.route, MergedRoute::Principal);
        let (s, t) = (v(part.s()), v(part.t()));
        let g = a.gcd.unwrap();
        let want = s.mul(&x1).sub(&t.mul(&y1));
        assert!(g == want || g == want.neg());
        let d = from_bivariate(&a.generators[0].difference(), &part);
        assert!(d == want || d == want.neg());
        let tr = solve_problem18(&gens, &part, &a.generators);
        assert_eq!(tr.pairs, vec![SeparatedPair::one()]);
        let gb = GroebnerBasis::ideal(&gens, MonomialOrder::Grevlex);
        assert_eq!(naive_degree_search(&gb, &part, 6), vec![SeparatedPair::one()]);
    }

    #[test]
    fn saturation_split() {
        // <s (s - 1), s t> = <s> ∩ <s - 1, t>
        type L = RatFun<Rational>;
        let (s, t) = (Poly::<L>::var(0), Poly::<L>::var(1));
        let gens = [s.mul(&s.sub(&Poly::one())), s.mul(&t)];
        let gb = GroebnerBasis::ideal(&gens, MonomialOrder::Grevlex);
        let part = VariablePartition::standard(1, 1);
        let a = bivar_ideal_dispatch(&gb, &part, 8);
        // the gcd s is not mixed
        assert!(matches!(a.route, MergedRoute::Unsupported(_)));
        let i0 = saturate(&gens, &s);
        assert!(same_ideal(&ideal_intersect(std::slice::from_ref(&s), &i0), &gb));
    }
}
