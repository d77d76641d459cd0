//! Shared oracles and instance generators for the integration tests.
#![allow(dead_code)]

use std::collections::BTreeMap;

use rand::Rng;
use sepvar::enumerate::monomials_up_to;
use sepvar::field::{rat, Field, Rational};
use sepvar::linalg::{nullspace, Echelon};
use sepvar::poly::merge::{SeparatedPair, VariablePartition};
use sepvar::poly::{Monomial, Poly};

pub fn v(i: usize) -> Poly<Rational> {
    Poly::var(i)
}

pub fn c(k: i64) -> Poly<Rational> {
    Poly::from_int(k)
}

fn is_mixed(m: &Monomial, part: &VariablePartition) -> bool {
    m.degree_in(&part.x_vars()) > 0 && m.degree_in(&part.y_vars()) > 0
}

/// Basis of the separated multiples `q p` of total degree at most `d`,
/// found by an ansatz for the cofactor `q`; no Gröbner bases involved.
pub fn cofactor_oracle(p: &Poly<Rational>, part: &VariablePartition, d: u32) -> Vec<Poly<Rational>> {
    let dp = p.total_degree();
    if d < dp {
        return Vec::new();
    }
    let qs = monomials_up_to(&part.xy_vars(), d - dp);
    let prods: Vec<Poly<Rational>> = qs
        .iter()
        .map(|m| p.mul_term(m, &Rational::one()))
        .collect();
    let mut rows: BTreeMap<Monomial, Vec<Rational>> = BTreeMap::new();
    for (k, q) in prods.iter().enumerate() {
        for (m, c) in q.terms() {
            if is_mixed(m, part) {
                rows.entry(m.clone())
                    .or_insert_with(|| vec![Rational::zero(); prods.len()])[k] = c.clone();
            }
        }
    }
    let rows: Vec<Vec<Rational>> = rows.into_values().collect();
    nullspace(&rows, prods.len())
        .iter()
        .map(|sol| {
            sol.iter()
                .zip(&prods)
                .fold(Poly::zero(), |acc, (c, q)| acc.add(&q.scale(c)))
        })
        .collect()
}

fn span_rows(vectors: &[Vec<Poly<Rational>>]) -> Vec<Vec<Rational>> {
    let mut index: BTreeMap<(usize, Monomial), usize> = BTreeMap::new();
    for vec in vectors {
        for (k, p) in vec.iter().enumerate() {
            for m in p.monomials() {
                let n = index.len();
                index.entry((k, m.clone())).or_insert(n);
            }
        }
    }
    vectors
        .iter()
        .map(|vec| {
            let mut row = vec![Rational::zero(); index.len()];
            for (k, p) in vec.iter().enumerate() {
                for (m, c) in p.terms() {
                    row[index[&(k, m.clone())]] = c.clone();
                }
            }
            row
        })
        .collect()
}

/// Whether `target` is a `K`-combination of `basis`, all vectors of polynomials.
pub fn in_span(basis: &[Vec<Poly<Rational>>], target: &[Poly<Rational>]) -> bool {
    let mut all = basis.to_vec();
    all.push(target.to_vec());
    let rows = span_rows(&all);
    let ncols = rows[0].len();
    let mut e = Echelon::new(ncols);
    for r in &rows[..basis.len()] {
        e.insert(r);
    }
    e.contains(&rows[basis.len()])
}

pub fn pair_vec(p: &SeparatedPair<Rational>) -> Vec<Poly<Rational>> {
    vec![p.f.clone(), p.g.clone()]
}

/// Whether the spans of two families of pairs agree once `(1, 1)` is added.
pub fn same_span_with_unit(a: &[SeparatedPair<Rational>], b: &[SeparatedPair<Rational>]) -> bool {
    let with_unit = |v: &[SeparatedPair<Rational>]| {
        let mut out: Vec<Vec<Poly<Rational>>> = v.iter().map(pair_vec).collect();
        out.push(pair_vec(&SeparatedPair::one()));
        out
    };
    let (sa, sb) = (with_unit(a), with_unit(b));
    sa.iter().all(|p| in_span(&sb, p)) && sb.iter().all(|p| in_span(&sa, p))
}

/// Whether `pair` is `a g + b (1, 1)` with `a != 0`.
pub fn affinely_equal(pair: &SeparatedPair<Rational>, g: &SeparatedPair<Rational>) -> bool {
    !pair.is_trivial() && same_span_with_unit(std::slice::from_ref(pair), std::slice::from_ref(g))
}

fn random_poly(rng: &mut impl Rng, vars: &[usize], deg: u32, terms: usize) -> Poly<Rational> {
    let monos = monomials_up_to(vars, deg);
    (0..terms).fold(Poly::zero(), |acc, _| {
        let m = monos[rng.gen_range(0..monos.len())].clone();
        acc.add(&Poly::term(m, rat(rng.gen_range(-3..=3))))
    })
}

/// A random principal generator in `n + m <= 4` variables of degree at
/// most 3, involving both blocks. Several shapes keep nontrivial answers
/// frequent.
pub fn random_principal(rng: &mut impl Rng) -> (Poly<Rational>, VariablePartition) {
    loop {
        let n = rng.gen_range(1..=2);
        let m = rng.gen_range(1..=2);
        let part = VariablePartition::standard(n, m);
        let (xs, ys) = (part.x_vars(), part.y_vars());
        let p = match rng.gen_range(0..4) {
            0 => random_poly(rng, &part.xy_vars(), 3, 4),
            1 => {
                let a = random_poly(rng, &xs, 1, 2);
                let b = random_poly(rng, &ys, 1, 2);
                a.pow(2).add(&a.mul(&b)).add(&b.pow(2))
            }
            2 => {
                let a = random_poly(rng, &xs, 3, 3);
                let b = random_poly(rng, &ys, 3, 3);
                a.sub(&b)
            }
            _ => {
                let a = random_poly(rng, &xs, 1, 2);
                let b = random_poly(rng, &ys, 1, 2);
                a.pow(2)
                    .add(&b.pow(2).scale(&rat(rng.gen_range(-2..=2))))
                    .add(&a.scale(&rat(rng.gen_range(-1..=1))))
            }
        };
        if p.total_degree() <= 3 && !p.free_of(&xs) && !p.free_of(&ys) {
            return (p, part);
        }
    }
}

/// Random zero-dimensional ideal: the points `(a_i, b_i)` of small grids.
pub fn random_points(rng: &mut impl Rng) -> (Vec<Poly<Rational>>, VariablePartition) {
    let part = VariablePartition::standard(1, 1);
    let (x, y) = (v(0), v(1));
    let a = rng.gen_range(-2..=2);
    let b = rng.gen_range(-2..=2);
    let k = rng.gen_range(1..=3);
    let gens = vec![
        x.sub(&c(a)).pow(k),
        y.sub(&c(b)).mul(&y.sub(&c(b + 1))),
        x.sub(&c(a)).mul(&y.sub(&c(b))),
    ];
    (gens, part)
}
