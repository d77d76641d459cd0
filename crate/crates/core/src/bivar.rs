//! Separated multiples of a single polynomial in two variables `s`, `t`
//! (variables 0 and 1) over an arbitrary coefficient field.

use crate::field::{all_roots_are_roots_of_unity, Field, FieldError, UPoly};
use crate::groebner::GroebnerBasis;
use crate::linalg::{nullspace, rref};
use crate::poly::newton::newton_edges;
use crate::poly::{Monomial, MonomialOrder, Poly};

pub const S: usize = 0;
pub const T: usize = 1;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BivarError {
    #[error("polynomial is not homogeneous in s, t")]
    NotHomogeneous,
    #[error("polynomial must be nonconstant")]
    Constant,
    #[error("polynomial must involve both s and t")]
    NotMixed,
    #[error(transparent)]
    Field(#[from] FieldError),
}

/// Generator `(F, G)` of the separated multiples of `P`: `F` in `s` with
/// zero constant term and leading coefficient one, `G` in `t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BivarGenerator<L: Field> {
    pub f: Poly<L>,
    pub g: Poly<L>,
}

impl<L: Field> BivarGenerator<L> {
    pub fn difference(&self) -> Poly<L> {
        self.f.sub(&self.g)
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum BivarOutcome<L: Field> {
    Simple(BivarGenerator<L>),
    Trivial,
}

fn homogeneous_degree<L: Field>(h: &Poly<L>) -> Result<u32, BivarError> {
    let mut degs = h.monomials().map(|m| m.exp(S) + m.exp(T));
    let d = degs.next().ok_or(BivarError::Constant)?;
    if !h.only_in(&[S, T]) || degs.any(|e| e != d) {
        return Err(BivarError::NotHomogeneous);
    }
    if d == 0 {
        return Err(BivarError::Constant);
    }
    Ok(d)
}

/// Least `N` and the `c` with `h | s^N - c t^N`, if any.
pub fn separated_multiple_of_homogeneous<L: Field>(
    h: &Poly<L>,
) -> Result<Option<(u64, L)>, BivarError> {
    let d = homogeneous_degree(h)? as usize;
    if h.monomials().all(|m| m.exp(S) > 0) || h.monomials().all(|m| m.exp(T) > 0) {
        return Ok(None);
    }
    let mut cs = vec![L::zero(); d + 1];
    for (m, c) in h.terms() {
        cs[m.exp(S) as usize] = c.clone();
    }
    let ht = UPoly::new(cs);
    if !ht.is_squarefree() {
        return Ok(None);
    }
    // roots of R are the quotients of pairs of roots of ht
    // nonzero nodes keep the formal degree of ht(u v)
    let npts = d * d + 1;
    let xs: Vec<L> = (1..=npts).map(|k| L::from_int(k as i64)).collect();
    let ys: Vec<L> = xs
        .iter()
        .map(|u| {
            let mut upow = L::one();
            let scaled = UPoly::new(
                ht.coeffs()
                    .iter()
                    .map(|c| {
                        let v = c.mul(&upow);
                        upow = upow.mul(u);
                        v
                    })
                    .collect(),
            );
            ht.resultant(&scaled)
        })
        .collect();
    let r = UPoly::interpolate(&xs, &ys);
    if r.is_constant() {
        return Ok(None);
    }
    let Some(n) = all_roots_are_roots_of_unity(&r)? else {
        return Ok(None);
    };
    let rem = UPoly::x().pow_mod(n, &ht);
    if rem.is_constant() && !rem.is_zero() {
        Ok(Some((n, rem.lc())))
    } else {
        Ok(None)
    }
}

/// Rewrites an axis-to-axis edge polynomial as `h(s^dt, t^ds)` with `h`
/// homogeneous; returns `h` and the steps `(ds, dt)`.
fn edge_form<L: Field>(
    edge: &Poly<L>,
    normal: (u32, u32),
    start: (u32, u32),
) -> (Poly<L>, u32, u32) {
    let (ws, wt) = normal;
    let k = start.0 / wt;
    let h = Poly::from_terms(edge.terms().map(|(m, c)| {
        let j = m.exp(T) / ws;
        (Monomial::from_exps(&[k - j, j]), c.clone())
    }));
    (h, wt, ws)
}

/// Smallest `F = s^ns + ...` (no constant term) and `G` of `t`-degree at
/// most `nt` with `F - G` in `<p>`.
fn solve_ansatz<L: Field>(p: &Poly<L>, ns: u32, nt: u32) -> Option<BivarGenerator<L>> {
    let gb = GroebnerBasis::ideal(std::slice::from_ref(p), MonomialOrder::Grevlex);
    // columns: a_ns .. a_1, b_0 .. b_nt
    let mut cols: Vec<Poly<L>> = (1..=ns)
        .rev()
        .map(|i| gb.reduce_poly(&Poly::term(Monomial::var_pow(S, i), L::one())))
        .collect();
    cols.extend((0..=nt).map(|j| {
        gb.reduce_poly(&Poly::term(Monomial::var_pow(T, j), L::one()))
            .neg()
    }));
    let mut rows_of: std::collections::BTreeMap<Monomial, Vec<L>> = Default::default();
    let ncols = cols.len();
    for (k, c) in cols.iter().enumerate() {
        for (m, v) in c.terms() {
            rows_of
                .entry(m.clone())
                .or_insert_with(|| vec![L::zero(); ncols])[k] = v.clone();
        }
    }
    let rows: Vec<Vec<L>> = rows_of.into_values().collect();
    let mut sols = nullspace(&rows, ncols);
    if sols.is_empty() {
        return None;
    }
    let pivots = rref(&mut sols, ncols);
    let (row, _) = sols
        .iter()
        .zip(&pivots).rfind(|(_, &pc)| pc < ns as usize)?;
    let f = Poly::from_terms(
        (0..ns as usize).map(|k| (Monomial::var_pow(S, ns - k as u32), row[k].clone())),
    );
    let g = Poly::from_terms(
        (0..=nt as usize).map(|j| (Monomial::var_pow(T, j as u32), row[ns as usize + j].clone())),
    );
    Some(BivarGenerator { f, g })
}

/// Generator of the separated multiples of `p`, or `Trivial` if `p` has none.
pub fn bivar_principal_generator<L: Field>(p: &Poly<L>) -> Result<BivarOutcome<L>, BivarError> {
    if p.is_constant() {
        return Err(BivarError::Constant);
    }
    if !p.only_in(&[S, T]) || p.free_of(&[S]) || p.free_of(&[T]) {
        return Err(BivarError::NotMixed);
    }
    let edges = newton_edges(p, S, T).unwrap_or_default();
    let mut best: Option<(u64, BivarGenerator<L>)> = None;
    for e in edges.iter().filter(|e| e.is_axis_to_axis()) {
        let (h, ds, dt) = edge_form(&e.poly, e.normal, e.start);
        let Some((n, _)) = separated_multiple_of_homogeneous(&h)? else {
            continue;
        };
        if best.as_ref().is_some_and(|(bn, _)| *bn <= n) {
            continue;
        }
        if let Some(gen) = solve_ansatz(p, ds * n as u32, dt * n as u32) {
            best = Some((n, gen));
        }
    }
    Ok(best.map_or(BivarOutcome::Trivial, |(_, g)| BivarOutcome::Simple(g)))
}
