//! Variable partitions, the merge map, translations and `s,t`-content.

use super::{gcd_many, Monomial, MonomialOrder, Poly};
use crate::field::Field;

/// Names reserved for the merge variables.
pub const MERGE_VARS: [&str; 2] = ["s", "t"];

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PartitionError {
    #[error("variable block {0} is empty")]
    EmptyBlock(&'static str),
    #[error("variable {0} appears twice")]
    Duplicate(String),
    #[error("variable name {0} is reserved")]
    Reserved(String),
}

/// Split of the ring variables into the `X` block and the `Y` block. In
/// index space `X` occupies `0..n`, `Y` occupies `n..n+m`, and the merge
/// variables `s`, `t` follow.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VariablePartition {
    x: Vec<String>,
    y: Vec<String>,
}

impl VariablePartition {
    pub fn new(x: Vec<String>, y: Vec<String>) -> Result<Self, PartitionError> {
        if x.is_empty() {
            return Err(PartitionError::EmptyBlock("x"));
        }
        if y.is_empty() {
            return Err(PartitionError::EmptyBlock("y"));
        }
        let mut seen = std::collections::HashSet::new();
        for v in x.iter().chain(&y) {
            if MERGE_VARS.contains(&v.as_str()) {
                return Err(PartitionError::Reserved(v.clone()));
            }
            if !seen.insert(v.clone()) {
                return Err(PartitionError::Duplicate(v.clone()));
            }
        }
        Ok(VariablePartition { x, y })
    }

    /// Partition with generated names `x1..xn`, `y1..ym`.
    pub fn standard(n: usize, m: usize) -> Self {
        VariablePartition::new(
            (1..=n).map(|i| format!("x{i}")).collect(),
            (1..=m).map(|i| format!("y{i}")).collect(),
        )
        .expect("generated names are valid")
    }

    pub fn n(&self) -> usize {
        self.x.len()
    }

    pub fn m(&self) -> usize {
        self.y.len()
    }

    pub fn x_names(&self) -> &[String] {
        &self.x
    }

    pub fn y_names(&self) -> &[String] {
        &self.y
    }

    pub fn x_vars(&self) -> Vec<usize> {
        (0..self.n()).collect()
    }

    pub fn y_vars(&self) -> Vec<usize> {
        (self.n()..self.n() + self.m()).collect()
    }

    pub fn xy_vars(&self) -> Vec<usize> {
        (0..self.n() + self.m()).collect()
    }

    pub fn s(&self) -> usize {
        self.n() + self.m()
    }

    pub fn t(&self) -> usize {
        self.n() + self.m() + 1
    }

    /// Names of `X`, `Y`, `s`, `t` in index order.
    pub fn names(&self) -> Vec<String> {
        let mut v: Vec<String> = self.x.iter().chain(&self.y).cloned().collect();
        v.extend(MERGE_VARS.iter().map(|s| s.to_string()));
        v
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names().iter().position(|v| v == name)
    }

    pub fn is_x(&self, var: usize) -> bool {
        var < self.n()
    }

    pub fn is_y(&self, var: usize) -> bool {
        var >= self.n() && var < self.n() + self.m()
    }
}

/// A pair `(f, g)` with `f` free of `Y` and `t`, and `g` free of `X` and `s`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SeparatedPair<F: Field> {
    pub f: Poly<F>,
    pub g: Poly<F>,
}

impl<F: Field> SeparatedPair<F> {
    pub fn new(f: Poly<F>, g: Poly<F>) -> Self {
        SeparatedPair { f, g }
    }

    pub fn one() -> Self {
        SeparatedPair::new(Poly::one(), Poly::one())
    }

    pub fn is_separated(&self, part: &VariablePartition) -> bool {
        let mut fy = part.y_vars();
        fy.push(part.t());
        let mut gx = part.x_vars();
        gx.push(part.s());
        self.f.free_of(&fy) && self.g.free_of(&gx)
    }

    pub fn difference(&self) -> Poly<F> {
        self.f.sub(&self.g)
    }

    pub fn add(&self, o: &Self) -> Self {
        SeparatedPair::new(self.f.add(&o.f), self.g.add(&o.g))
    }

    pub fn sub(&self, o: &Self) -> Self {
        SeparatedPair::new(self.f.sub(&o.f), self.g.sub(&o.g))
    }

    pub fn scale(&self, c: &F) -> Self {
        SeparatedPair::new(self.f.scale(c), self.g.scale(c))
    }

    pub fn mul(&self, o: &Self) -> Self {
        SeparatedPair::new(self.f.mul(&o.f), self.g.mul(&o.g))
    }

    pub fn pow(&self, e: u32) -> Self {
        SeparatedPair::new(self.f.pow(e), self.g.pow(e))
    }

    pub fn total_degree(&self) -> u32 {
        self.f.total_degree().max(self.g.total_degree())
    }

    pub fn is_trivial(&self) -> bool {
        self.f.is_constant() && self.g.is_constant() && self.f == self.g
    }

    /// Representative of `a (f, g) + b (1, 1)` with `f(0) = 0` and leading
    /// coefficient one (of `f` under grevlex, or of `g` if `f` is constant).
    /// Trivial pairs map to `(0, 0)`.
    pub fn canonical(&self) -> Self {
        let c = self.f.constant_term();
        let shifted = self.sub(&SeparatedPair::one().scale(&c));
        let lead = if shifted.f.is_zero() {
            shifted.g.leading_coeff(&MonomialOrder::Grevlex)
        } else {
            shifted.f.leading_coeff(&MonomialOrder::Grevlex)
        };
        match lead.inv() {
            Ok(inv) => shifted.scale(&inv),
            Err(_) => shifted,
        }
    }

    pub fn map_coeffs<G: Field>(&self, f: impl Fn(&F) -> G) -> SeparatedPair<G> {
        SeparatedPair::new(self.f.map_coeffs(&f), self.g.map_coeffs(&f))
    }
}

/// Multiplies each term by `s^i t^j`, `i`, `j` its `X`- and `Y`-degrees.
pub fn phi_merge<F: Field>(p: &Poly<F>, part: &VariablePartition) -> Poly<F> {
    let (xs, ys) = (part.x_vars(), part.y_vars());
    Poly::from_terms(p.terms().map(|(m, c)| {
        let mut mm = m.clone();
        mm.set(part.s(), m.exp(part.s()) + m.degree_in(&xs));
        mm.set(part.t(), m.exp(part.t()) + m.degree_in(&ys));
        (mm, c.clone())
    }))
}

/// Sets `s = t = 1`.
pub fn eval_st<F: Field>(p: &Poly<F>, part: &VariablePartition) -> Poly<F> {
    Poly::from_terms(p.terms().map(|(m, c)| {
        let mut mm = m.clone();
        mm.set(part.s(), 0);
        mm.set(part.t(), 0);
        (mm, c.clone())
    }))
}

/// `p(v + q)`: substitutes `v_i + q_i` for each variable `v_i`.
pub fn translate<F: Field>(p: &Poly<F>, q: &[F]) -> Poly<F> {
    let values: Vec<Option<Poly<F>>> = q
        .iter()
        .enumerate()
        .map(|(i, c)| (!c.is_zero()).then(|| Poly::var(i).add(&Poly::constant(c.clone()))))
        .collect();
    p.substitute(&values)
}

/// Gcd over `K[X,Y]` of the coefficients of `d` with respect to `s`, `t`.
pub fn st_content<F: Field>(d: &Poly<F>, part: &VariablePartition) -> Option<Poly<F>> {
    if d.is_zero() {
        return None;
    }
    let cs = d.coefficients_in(&[part.s(), part.t()]);
    Some(gcd_many(cs.values()))
}

/// Monomial `s^a t^b`.
pub fn st_monomial(part: &VariablePartition, a: u32, b: u32) -> Monomial {
    let mut m = Monomial::one();
    m.set(part.s(), a);
    m.set(part.t(), b);
    m
}
