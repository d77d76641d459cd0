//! Sparse multivariate polynomials.
//!
//! A [`Poly`] does not know its variable names or the number of variables;
//! variables are indices, and names are supplied only when parsing or
//! rendering. The crate-wide convention places `X` at `0..n`, `Y` at
//! `n..n+m`, and the merge variables `s`, `t` right after them.

mod gcd;
pub mod merge;
mod monomial;
pub mod newton;
mod order;

use std::collections::BTreeMap;
use std::fmt;

use crate::field::{fmt_rational, is_negative_rational, Field, UPoly};

pub use gcd::{content_in, gcd, gcd_many};
pub use monomial::Monomial;
pub use order::MonomialOrder;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly<F: Field> {
    terms: BTreeMap<Monomial, F>,
}

impl<F: Field> Default for Poly<F> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<F: Field> Poly<F> {
    pub fn zero() -> Self {
        Poly {
            terms: BTreeMap::new(),
        }
    }

    pub fn one() -> Self {
        Self::constant(F::one())
    }

    pub fn constant(c: F) -> Self {
        Self::term(Monomial::one(), c)
    }

    pub fn from_int(n: i64) -> Self {
        Self::constant(F::from_int(n))
    }

    pub fn var(i: usize) -> Self {
        Self::term(Monomial::var(i), F::one())
    }

    pub fn term(m: Monomial, c: F) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Poly { terms }
    }

    pub fn from_terms(it: impl IntoIterator<Item = (Monomial, F)>) -> Self {
        let mut p = Self::zero();
        for (m, c) in it {
            p.add_term(m, &c);
        }
        p
    }

    /// Adds `c*m` in place.
    pub fn add_term(&mut self, m: Monomial, c: &F) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                let s = e.get().add(c);
                if s.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = s;
                }
            }
        }
    }

    /// Terms in increasing lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &F)> + ExactSizeIterator {
        self.terms.iter()
    }

    pub fn into_terms(self) -> impl Iterator<Item = (Monomial, F)> {
        self.terms.into_iter()
    }

    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn coeff(&self, m: &Monomial) -> F {
        self.terms.get(m).cloned().unwrap_or_else(F::zero)
    }

    pub fn constant_term(&self) -> F {
        self.coeff(&Monomial::one())
    }

    /// One past the largest variable index that occurs.
    pub fn nvars(&self) -> usize {
        self.terms.keys().map(Monomial::len).max().unwrap_or(0)
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::degree).max().unwrap_or(0)
    }

    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.keys().map(|m| m.exp(var)).max().unwrap_or(0)
    }

    pub fn degree_in_vars(&self, vars: &[usize]) -> u32 {
        self.terms
            .keys()
            .map(|m| m.degree_in(vars))
            .max()
            .unwrap_or(0)
    }

    /// Variables that occur, ascending.
    pub fn variables(&self) -> Vec<usize> {
        (0..self.nvars())
            .filter(|&i| self.terms.keys().any(|m| m.exp(i) > 0))
            .collect()
    }

    pub fn only_in(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|m| m.only_in(vars))
    }

    pub fn free_of(&self, vars: &[usize]) -> bool {
        self.terms.keys().all(|m| m.free_of(vars))
    }

    pub fn leading_term(&self, order: &MonomialOrder) -> Option<(&Monomial, &F)> {
        let mut it = self.terms.iter();
        let mut best = it.next()?;
        for t in it {
            if order.cmp(t.0, best.0) == std::cmp::Ordering::Greater {
                best = t;
            }
        }
        Some(best)
    }

    pub fn leading_monomial(&self, order: &MonomialOrder) -> Option<Monomial> {
        self.leading_term(order).map(|(m, _)| m.clone())
    }

    pub fn leading_coeff(&self, order: &MonomialOrder) -> F {
        self.leading_term(order)
            .map_or_else(F::zero, |(_, c)| c.clone())
    }

    /// Divides by the leading coefficient under `order`.
    pub fn monic(&self, order: &MonomialOrder) -> Self {
        match self.leading_term(order) {
            None => Self::zero(),
            Some((_, c)) => {
                let inv = c.inv().expect("nonzero");
                self.scale(&inv)
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), c);
        }
        out
    }

    pub fn sub(&self, o: &Self) -> Self {
        let mut out = self.clone();
        for (m, c) in &o.terms {
            out.add_term(m.clone(), &c.neg());
        }
        out
    }

    pub fn neg(&self) -> Self {
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg()))
                .collect(),
        }
    }

    pub fn scale(&self, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a.mul(c)))
                .collect(),
        }
    }

    pub fn mul_term(&self, m: &Monomial, c: &F) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Poly {
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (a.mul(m), b.mul(c)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &Self) -> Self {
        let (small, big) = if self.len() <= o.len() {
            (self, o)
        } else {
            (o, self)
        };
        let mut out = Self::zero();
        for (m, c) in &small.terms {
            for (n, d) in &big.terms {
                out.add_term(m.mul(n), &c.mul(d));
            }
        }
        out
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> Poly<G> {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.clone(), f(c))))
    }

    /// Relocates variables with `map`.
    pub fn rename(&self, map: impl Fn(usize) -> usize) -> Self {
        Poly::from_terms(self.terms.iter().map(|(m, c)| (m.rename(&map), c.clone())))
    }

    /// Substitutes `values[i]` for variable `i` wherever `values[i]` is `Some`.
    pub fn substitute(&self, values: &[Option<Poly<F>>]) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let mut rest = Monomial::one();
            let mut acc = Self::constant(c.clone());
            for (i, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match values.get(i).and_then(|v| v.as_ref()) {
                    Some(v) => acc = acc.mul(&v.pow(e)),
                    None => rest.set(i, e),
                }
            }
            out = out.add(&acc.mul_term(&rest, &F::one()));
        }
        out
    }

    /// Substitutes a constant for one variable.
    pub fn eval_var(&self, var: usize, value: &F) -> Self {
        let mut out = Self::zero();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            let mut rest = m.clone();
            rest.set(var, 0);
            out.add_term(rest, &c.mul(&value.pow(e as u64)));
        }
        out
    }

    /// Value at a point given for every occurring variable.
    pub fn eval(&self, point: &[F]) -> F {
        let mut acc = F::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exps().iter().enumerate() {
                if e > 0 {
                    t = t.mul(&point[i].pow(e as u64));
                }
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Groups terms by their monomial in `vars`; the values are the
    /// cofactors in the remaining variables.
    pub fn coefficients_in(&self, vars: &[usize]) -> BTreeMap<Monomial, Poly<F>> {
        let mut out: BTreeMap<Monomial, Poly<F>> = BTreeMap::new();
        for (m, c) in &self.terms {
            let (inside, outside) = m.split(vars);
            out.entry(inside).or_default().add_term(outside, c);
        }
        out
    }

    /// Coefficients as a polynomial in one variable, lowest degree first.
    pub fn univariate_coeffs(&self, var: usize) -> Vec<Poly<F>> {
        let mut out = vec![Poly::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            let mut rest = m.clone();
            rest.set(var, 0);
            out[m.exp(var) as usize].add_term(rest, c);
        }
        if self.is_zero() {
            out.clear();
        }
        out
    }

    pub fn from_univariate_coeffs(coeffs: &[Poly<F>], var: usize) -> Self {
        let mut out = Self::zero();
        for (k, c) in coeffs.iter().enumerate() {
            out = out.add(&c.mul_term(&Monomial::var_pow(var, k as u32), &F::one()));
        }
        out
    }

    /// The polynomial as a univariate one, if only `var` occurs.
    pub fn to_upoly(&self, var: usize) -> Option<UPoly<F>> {
        if !self.only_in(&[var]) {
            return None;
        }
        let mut v = vec![F::zero(); self.degree_in(var) as usize + 1];
        for (m, c) in &self.terms {
            v[m.exp(var) as usize] = c.clone();
        }
        Some(UPoly::new(v))
    }

    pub fn from_upoly(p: &UPoly<F>, var: usize) -> Self {
        Poly::from_terms(
            p.coeffs()
                .iter()
                .enumerate()
                .map(|(k, c)| (Monomial::var_pow(var, k as u32), c.clone())),
        )
    }

    /// Exact quotient `self / d`, or `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &Self) -> Option<Self> {
        if d.is_zero() {
            return None;
        }
        let order = MonomialOrder::Lex;
        let (dm, dc) = d
            .leading_term(&order)
            .map(|(m, c)| (m.clone(), c.clone()))?;
        let dinv = dc.inv().ok()?;
        let mut r = self.clone();
        let mut q = Self::zero();
        while let Some((m, c)) = r
            .terms
            .iter()
            .next_back()
            .map(|(m, c)| (m.clone(), c.clone()))
        {
            let qm = m.div(&dm)?;
            let qc = c.mul(&dinv);
            r = r.sub(&d.mul_term(&qm, &qc));
            q.add_term(qm, &qc);
        }
        Some(q)
    }

    /// Terms sorted by descending grevlex.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &F)> {
        let order = MonomialOrder::Grevlex;
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| order.cmp(b.0, a.0));
        v
    }

    /// Renders with the given variable names, terms in descending grevlex.
    pub fn render(&self, names: &[String]) -> String {
        if self.is_zero() {
            return "0".into();
        }
        let mut out = String::new();
        for (m, c) in self.sorted_terms() {
            push_term_named(&mut out, c, &m.render(names), names);
        }
        out
    }
}

impl<F: Field> fmt::Display for Poly<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render(&[]))
    }
}

/// Appends `c*mono` to a sum being rendered.
pub(crate) fn push_term<F: Field>(out: &mut String, c: &F, mono: &str) {
    push_term_named(out, c, mono, &[]);
}

pub(crate) fn push_term_named<F: Field>(out: &mut String, c: &F, mono: &str, names: &[String]) {
    let first = out.is_empty();
    if let Some(q) = c.to_rational() {
        let neg = is_negative_rational(&q);
        let abs = if neg { -q } else { q };
        match (first, neg) {
            (true, true) => out.push('-'),
            (true, false) => {}
            (false, true) => out.push_str(" - "),
            (false, false) => out.push_str(" + "),
        }
        let unit = num_traits::One::is_one(&abs);
        match (unit, mono.is_empty()) {
            (true, false) => out.push_str(mono),
            (_, true) => out.push_str(&fmt_rational(&abs)),
            (false, false) => {
                out.push_str(&fmt_rational(&abs));
                out.push('*');
                out.push_str(mono);
            }
        }
        return;
    }
    if !first {
        out.push_str(" + ");
    }
    let s = c.render(names);
    let s = if c.is_atomic() { s } else { format!("({s})") };
    out.push_str(&s);
    if !mono.is_empty() {
        out.push('*');
        out.push_str(mono);
    }
}
