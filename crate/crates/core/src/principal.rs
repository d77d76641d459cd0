//! Separated pairs of a principal ideal `<p>` in any number of variables.
//!
//! The polynomial is translated to vanish at the origin, merged into
//! `K(X,Y)[s,t]`, solved there as a bivariate problem and mapped back.

use std::sync::Arc;

use crate::bivar::{bivar_principal_generator, BivarError, BivarOutcome, S, T};
use crate::field::{factor, AlgNum, Field, FieldError, NumberField, RatFun, Rational, UPoly};
use crate::poly::merge::{phi_merge, st_content, translate, SeparatedPair, VariablePartition};
use crate::poly::{gcd, Monomial, Poly};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PrincipalError {
    #[error("polynomial is constant")]
    Constant,
    #[error("polynomial involves only the x-variables")]
    OnlyX,
    #[error("polynomial involves only the y-variables")]
    OnlyY,
    #[error("polynomial uses variables outside the partition")]
    UnknownVariable,
    #[error(
        "no vanishing point over the coefficient field; a tower of extensions would be needed"
    )]
    NoPointInField,
    #[error("no coordinate pair of the generator descends to the base field")]
    DescentFailed,
    #[error(transparent)]
    Bivar(#[from] BivarError),
    #[error(transparent)]
    Field(#[from] FieldError),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PrincipalOutcome<F: Field> {
    Simple(SeparatedPair<F>),
    Trivial,
}

impl<F: Field> PrincipalOutcome<F> {
    pub fn generator(&self) -> Option<&SeparatedPair<F>> {
        match self {
            PrincipalOutcome::Simple(g) => Some(g),
            PrincipalOutcome::Trivial => None,
        }
    }
}

/// A polynomial with variables in `X` and `Y`, involving both blocks.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrincipalProblem<F: Field> {
    p: Poly<F>,
    part: VariablePartition,
}

impl<F: Field> PrincipalProblem<F> {
    pub fn new(p: Poly<F>, part: VariablePartition) -> Result<Self, PrincipalError> {
        if p.is_constant() {
            return Err(PrincipalError::Constant);
        }
        if !p.only_in(&part.xy_vars()) {
            return Err(PrincipalError::UnknownVariable);
        }
        if p.only_in(&part.x_vars()) {
            return Err(PrincipalError::OnlyX);
        }
        if p.only_in(&part.y_vars()) {
            return Err(PrincipalError::OnlyY);
        }
        Ok(PrincipalProblem { p, part })
    }

    pub fn poly(&self) -> &Poly<F> {
        &self.p
    }

    pub fn partition(&self) -> &VariablePartition {
        &self.part
    }
}

/// A point where `p` vanishes, possibly over an extension `Q(a)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtensionContext {
    pub field: Option<Arc<NumberField>>,
    pub point: Vec<AlgNum>,
}

/// A root of `r` in the coefficient field, if one is easy to find.
fn root_in_field<F: Field>(r: &UPoly<F>) -> Option<F> {
    if r.coeff(0).is_zero() {
        return Some(F::zero());
    }
    if r.deg() == 1 {
        return r.coeff(0).div(&r.coeff(1)).ok().map(|c| c.neg());
    }
    let q = UPoly::new(
        r.coeffs()
            .iter()
            .map(F::to_rational)
            .collect::<Option<Vec<_>>>()?,
    );
    factor::factor(&q)
        .into_iter()
        .find(|(f, _)| f.deg() == 1)
        .map(|(f, _)| F::from_rational(&-f.coeff(0)))
}

const SPECIALIZATIONS: [i64; 9] = [0, 1, -1, 2, -2, 3, -3, 4, -4];

/// Searches for a zero of `p` over its own coefficient field: the origin
/// first, then all variables but the last set to a common small integer.
/// On failure returns the first nonconstant univariate residual together
/// with the specialized coordinates.
pub fn point_in_field<F: Field>(p: &Poly<F>) -> Result<Vec<F>, (Vec<F>, UPoly<F>)> {
    let vars = p.variables();
    let n = p.nvars();
    if p.constant_term().is_zero() {
        return Ok(vec![F::zero(); n]);
    }
    let last = *vars.last().expect("nonconstant polynomial");
    let mut first = None;
    for v in SPECIALIZATIONS {
        let mut q: Vec<F> = vec![F::zero(); n];
        for &i in &vars[..vars.len() - 1] {
            q[i] = F::from_int(v);
        }
        let mut res = p.clone();
        for &i in &vars[..vars.len() - 1] {
            res = res.eval_var(i, &q[i]);
        }
        let r = res.to_upoly(last).expect("univariate residual");
        if r.is_constant() {
            continue;
        }
        if let Some(root) = root_in_field(&r) {
            q[last] = root;
            return Ok(q);
        }
        if first.is_none() {
            first = Some((q, r));
        }
    }
    Err(first.expect("some specialization leaves a nonconstant residual"))
}

/// A zero of `p`, over `Q` when the search finds one, else over `Q(a)` for
/// `a` a root of the lowest-degree irreducible factor of the first residual.
pub fn find_vanishing_point(p: &Poly<Rational>) -> Result<ExtensionContext, PrincipalError> {
    if p.is_constant() {
        return Err(PrincipalError::Constant);
    }
    match point_in_field(p) {
        Ok(q) => Ok(ExtensionContext {
            field: None,
            point: q.into_iter().map(AlgNum::rational).collect(),
        }),
        Err((q, r)) => {
            let (min, _) = factor::factor(&r)
                .into_iter()
                .min_by_key(|(f, _)| f.deg())
                .expect("nonconstant residual has a factor");
            let field = NumberField::new(min, "a")?;
            let last = *p.variables().last().expect("nonconstant");
            let mut point: Vec<AlgNum> = q.into_iter().map(AlgNum::rational).collect();
            point[last] = field.generator();
            Ok(ExtensionContext {
                field: Some(field),
                point,
            })
        }
    }
}

/// Image of `p` in `K(X,Y)[s,t]` with `s`, `t` as variables 0 and 1.
pub fn to_bivariate<F: Field>(p: &Poly<F>, part: &VariablePartition) -> Poly<RatFun<F>> {
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let (st, xy) = m.split(&[part.s(), part.t()]);
        let key = Monomial::from_exps(&[st.exp(part.s()), st.exp(part.t())]);
        out.add_term(key, &RatFun::from_poly(Poly::term(xy, c.clone())));
    }
    out
}

/// Clears denominators of a polynomial in `K(X,Y)[s,t]` and returns it in
/// `K[X,Y,s,t]`.
pub fn from_bivariate<F: Field>(p: &Poly<RatFun<F>>, part: &VariablePartition) -> Poly<F> {
    let mut l = Poly::one();
    for (_, c) in p.terms() {
        let g = gcd(&l, c.den());
        l = l.mul(&c.den().div_exact(&g).expect("gcd divides"));
    }
    let mut out = Poly::zero();
    for (m, c) in p.terms() {
        let factor = l.div_exact(c.den()).expect("common denominator");
        let st = {
            let mut st = Monomial::one();
            st.set(part.s(), m.exp(S));
            st.set(part.t(), m.exp(T));
            st
        };
        out = out.add(&c.num().mul(&factor).mul_term(&st, &F::one()));
    }
    out
}

/// Splits a separated `D = F - G` in `K[X,Y,s,t]` into `(F, G)` with `F`
/// free of constants in `s`, then checks `F` in `K[X][s]` and `G` in
/// `K[Y][t]` and sets `s = t = 1`.
fn merged_to_pair<F: Field>(d: &Poly<F>, part: &VariablePartition) -> Option<SeparatedPair<F>> {
    let mut f = Poly::zero();
    let mut g = Poly::zero();
    for (m, c) in d.terms() {
        if m.exp(part.s()) > 0 {
            if m.exp(part.t()) > 0 {
                return None;
            }
            f.add_term(m.clone(), c);
        } else {
            g.add_term(m.clone(), &c.neg());
        }
    }
    let mut fy = part.y_vars();
    fy.push(part.t());
    let mut gx = part.x_vars();
    gx.push(part.s());
    if !f.free_of(&fy) || !g.free_of(&gx) {
        return None;
    }
    let pair = SeparatedPair::new(
        crate::poly::merge::eval_st(&f, part),
        crate::poly::merge::eval_st(&g, part),
    );
    (!pair.is_trivial()).then_some(pair)
}

/// The pipeline over the coefficient field of `p`, given a zero `q` of `p`.
/// The result is in canonical form.
pub fn thm5_generator_at<F: Field>(
    prob: &PrincipalProblem<F>,
    q: &[F],
) -> Result<PrincipalOutcome<F>, PrincipalError> {
    let part = &prob.part;
    let mut q = q.to_vec();
    q.resize(part.n() + part.m(), F::zero());
    let moved = translate(&prob.p, &q);
    debug_assert!(moved.constant_term().is_zero());
    let merged = to_bivariate(&phi_merge(&moved, part), part);
    let BivarOutcome::Simple(gen) = bivar_principal_generator(&merged)? else {
        return Ok(PrincipalOutcome::Trivial);
    };
    let d = from_bivariate(&gen.difference(), part);
    let content = st_content(&d, part).expect("nonzero difference");
    let d = d.div_exact(&content).expect("content divides");
    let Some(pair) = merged_to_pair(&d, part) else {
        return Ok(PrincipalOutcome::Trivial);
    };
    let back: Vec<F> = q.iter().map(F::neg).collect();
    let pair = SeparatedPair::new(translate(&pair.f, &back), translate(&pair.g, &back));
    Ok(PrincipalOutcome::Simple(pair.canonical()))
}

/// Rewrites a generator over `Q(a)` as one over `Q`: some coordinate pair in
/// the power basis of `Q(a)` is an affine preimage of the generator.
pub fn alpha_descent(
    gen: &SeparatedPair<AlgNum>,
) -> Result<SeparatedPair<Rational>, PrincipalError> {
    let degree = gen
        .f
        .terms()
        .chain(gen.g.terms())
        .map(|(_, c)| c.extension_degree())
        .max()
        .unwrap_or(1);
    let coord = |p: &Poly<AlgNum>, i: usize| {
        Poly::from_terms(
            p.terms()
                .map(|(m, c)| (m.clone(), c.coordinates(degree)[i].clone())),
        )
    };
    for i in 0..degree {
        let cand = SeparatedPair::new(coord(&gen.f, i), coord(&gen.g, i));
        if cand.is_trivial() {
            continue;
        }
        let lifted = cand.map_coeffs(|c| AlgNum::rational(c.clone()));
        let (m, c) = lifted
            .f
            .terms()
            .chain(lifted.g.terms())
            .find(|(m, _)| !m.is_one())
            .map(|(m, c)| (m.clone(), c.clone()))
            .expect("nontrivial pair has a nonconstant term");
        let in_f = lifted.f.coeff(&m) == c && !c.is_zero();
        let target = if in_f {
            gen.f.coeff(&m)
        } else {
            gen.g.coeff(&m)
        };
        let lambda = target.div(&c)?;
        let mu = gen
            .f
            .constant_term()
            .sub(&lambda.mul(&lifted.f.constant_term()));
        let affine = lifted.scale(&lambda).add(&SeparatedPair::one().scale(&mu));
        if affine == *gen {
            return Ok(cand.canonical());
        }
    }
    Err(PrincipalError::DescentFailed)
}

/// Generator of `A(<p>)` over `Q` in canonical form, or `Trivial`.
pub fn thm5_generator(
    prob: &PrincipalProblem<Rational>,
) -> Result<PrincipalOutcome<Rational>, PrincipalError> {
    let ctx = find_vanishing_point(&prob.p)?;
    if ctx.field.is_none() {
        let q: Vec<Rational> = ctx
            .point
            .iter()
            .map(|c| c.to_rational().expect("rational point"))
            .collect();
        return thm5_generator_at(prob, &q);
    }
    let lifted = PrincipalProblem {
        p: prob.p.map_coeffs(|c| AlgNum::rational(c.clone())),
        part: prob.part.clone(),
    };
    match thm5_generator_at(&lifted, &ctx.point)? {
        PrincipalOutcome::Trivial => Ok(PrincipalOutcome::Trivial),
        PrincipalOutcome::Simple(gen) => Ok(PrincipalOutcome::Simple(alpha_descent(&gen)?)),
    }
}

/// Generator of `A(<p>)` for `p` over a declared extension field; the
/// vanishing point has to exist in that field.
pub fn thm5_generator_in_field<F: Field>(
    prob: &PrincipalProblem<F>,
) -> Result<PrincipalOutcome<F>, PrincipalError> {
    let q = point_in_field(&prob.p).map_err(|_| PrincipalError::NoPointInField)?;
    thm5_generator_at(prob, &q)
}

/// `f - g` for the generator `(f, g)`: the separated multiple of `p` that
/// divides all others.
pub fn minimal_separated_multiple(
    prob: &PrincipalProblem<Rational>,
) -> Result<Option<Poly<Rational>>, PrincipalError> {
    Ok(thm5_generator(prob)?
        .generator()
        .map(SeparatedPair::difference))
}
