//! Module computations behind the pair-search algorithm: rational spans cut
//! down to polynomial modules, intersections with ideals, elimination of one
//! side of a pair, and the `K`-space intersection of two modules over
//! disjoint variable sets.

use std::collections::{BTreeMap, BTreeSet};

use super::{syzygies, GroebnerBasis, ModuleOrder};
use crate::field::{Field, RatFun};
use crate::linalg;
use crate::poly::{gcd, gcd_many, Monomial, MonomialOrder, Poly};

/// Layout of a pair `(F, G)` in `K[X,Y][s] x K[X,Y][t]` as a vector over
/// `K[X,Y]`: one slot per power `s^a` (`a >= 1`), one per power `t^b`
/// (`b >= 0`), and a final slot `k` shared by both constants, so the vector
/// `v` stands for `(sum v_a s^a + k, sum v_b t^b + k)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairLayout {
    pub s_exps: Vec<u32>,
    pub t_exps: Vec<u32>,
    pub s: usize,
    pub t: usize,
}

impl PairLayout {
    /// Layout covering every `s`- and `t`-power occurring in `polys`.
    pub fn covering<F: Field>(polys: &[Poly<F>], s: usize, t: usize) -> Self {
        let mut se = BTreeSet::new();
        let mut te = BTreeSet::from([0u32]);
        for p in polys {
            for m in p.monomials() {
                let (a, b) = (m.exp(s), m.exp(t));
                if a > 0 {
                    se.insert(a);
                }
                if b > 0 {
                    te.insert(b);
                }
            }
        }
        PairLayout {
            s_exps: se.into_iter().collect(),
            t_exps: te.into_iter().collect(),
            s,
            t,
        }
    }

    pub fn width(&self) -> usize {
        self.s_exps.len() + self.t_exps.len() + 1
    }

    pub fn kappa(&self) -> usize {
        self.width() - 1
    }

    pub fn f_slot(&self, a: u32) -> Option<usize> {
        self.s_exps.iter().position(|&e| e == a)
    }

    pub fn g_slot(&self, b: u32) -> Option<usize> {
        self.t_exps
            .iter()
            .position(|&e| e == b)
            .map(|i| i + self.s_exps.len())
    }

    /// Slots that make up the first component, the shared constant included.
    pub fn f_block(&self) -> Vec<usize> {
        let mut v: Vec<usize> = (0..self.s_exps.len()).collect();
        v.push(self.kappa());
        v
    }

    /// Slots that make up the second component, the shared constant included.
    pub fn g_block(&self) -> Vec<usize> {
        let mut v: Vec<usize> =
            (self.s_exps.len()..self.s_exps.len() + self.t_exps.len()).collect();
        v.push(self.kappa());
        v
    }

    /// The vector of the pair `(1, 1)`.
    pub fn unit<F: Field>(&self) -> Vec<Poly<F>> {
        let mut v = vec![Poly::zero(); self.width()];
        v[self.kappa()] = Poly::one();
        v
    }

    /// Writes `D = F - G` as a pair: `s`-powers go to `F`, `t`-powers and the
    /// constant go to `G` with opposite sign. `None` if `D` has a mixed
    /// monomial or a power outside the layout.
    pub fn from_difference<F: Field>(&self, d: &Poly<F>) -> Option<Vec<Poly<F>>> {
        let mut v = vec![Poly::zero(); self.width()];
        for (m, c) in d.terms() {
            let (st, rest) = m.split(&[self.s, self.t]);
            let (a, b) = (st.exp(self.s), st.exp(self.t));
            if a > 0 && b > 0 {
                return None;
            }
            if a > 0 {
                v[self.f_slot(a)?].add_term(rest, c);
            } else {
                v[self.g_slot(b)?].add_term(rest, &c.neg());
            }
        }
        Some(v)
    }

    /// Writes a pair as a vector, putting the constant of `F` into the shared slot.
    pub fn from_pair<F: Field>(&self, f: &Poly<F>, g: &Poly<F>) -> Option<Vec<Poly<F>>> {
        let mut v = vec![Poly::zero(); self.width()];
        for (m, c) in f.terms() {
            let (st, rest) = m.split(&[self.s, self.t]);
            let a = st.exp(self.s);
            if st.exp(self.t) > 0 {
                return None;
            }
            if a > 0 {
                v[self.f_slot(a)?].add_term(rest, c);
            } else {
                v[self.kappa()].add_term(rest.clone(), c);
                v[self.g_slot(0)?].add_term(rest, &c.neg());
            }
        }
        for (m, c) in g.terms() {
            let (st, rest) = m.split(&[self.s, self.t]);
            if st.exp(self.s) > 0 {
                return None;
            }
            v[self.g_slot(st.exp(self.t))?].add_term(rest, c);
        }
        Some(v)
    }

    /// The pair `(F, G)` a vector stands for.
    pub fn to_pair<F: Field>(&self, v: &[Poly<F>]) -> (Poly<F>, Poly<F>) {
        let k = &v[self.kappa()];
        let mut f = k.clone();
        let mut g = k.clone();
        for (i, &a) in self.s_exps.iter().enumerate() {
            f = f.add(&v[i].mul_term(&Monomial::var_pow(self.s, a), &F::one()));
        }
        for (i, &b) in self.t_exps.iter().enumerate() {
            let slot = i + self.s_exps.len();
            g = g.add(&v[slot].mul_term(&Monomial::var_pow(self.t, b), &F::one()));
        }
        (f, g)
    }
}

/// Clears denominators of a row over `K(X,Y)` and removes the content.
fn clear_row<F: Field>(row: &[RatFun<F>]) -> Vec<Poly<F>> {
    let mut l = Poly::one();
    for c in row {
        if !c.is_zero() && !c.den().is_constant() {
            let g = gcd(&l, c.den());
            l = l.mul(&c.den().div_exact(&g).expect("gcd divides"));
        }
    }
    let nums: Vec<Poly<F>> = row
        .iter()
        .map(|c| {
            if c.is_zero() {
                Poly::zero()
            } else {
                c.num()
                    .mul(&l.div_exact(c.den()).expect("lcm is a multiple"))
            }
        })
        .collect();
    let content = gcd_many(nums.iter());
    if content.is_zero() || content.is_constant() {
        return nums;
    }
    nums.iter()
        .map(|p| p.div_exact(&content).expect("content divides"))
        .collect()
}

/// Basis of the `K[X,Y]`-module `span_{K(X,Y)}(qs)` intersected with
/// `K[X,Y][s,t]`, where `st` lists the variables `s`, `t`.
pub fn span_cap_polymodule<F: Field>(qs: &[Poly<F>], st: &[usize]) -> Vec<Poly<F>> {
    let qs: Vec<&Poly<F>> = qs.iter().filter(|q| !q.is_zero()).collect();
    if qs.is_empty() {
        return Vec::new();
    }
    let mut monos: BTreeSet<Monomial> = BTreeSet::new();
    let coeffs: Vec<BTreeMap<Monomial, Poly<F>>> = qs
        .iter()
        .map(|q| {
            let c = q.coefficients_in(st);
            monos.extend(c.keys().cloned());
            c
        })
        .collect();
    let monos: Vec<Monomial> = monos.into_iter().collect();
    let n = monos.len();
    let rows: Vec<Vec<RatFun<F>>> = coeffs
        .iter()
        .map(|c| {
            monos
                .iter()
                .map(|m| RatFun::from_poly(c.get(m).cloned().unwrap_or_default()))
                .collect()
        })
        .collect();
    let kernel = linalg::nullspace(&rows, n);
    if kernel.is_empty() {
        return monos
            .iter()
            .map(|m| Poly::term(m.clone(), F::one()))
            .collect();
    }
    let a: Vec<Vec<Poly<F>>> = kernel.iter().map(|w| clear_row(w)).collect();
    let columns: Vec<Vec<Poly<F>>> = (0..n)
        .map(|j| a.iter().map(|row| row[j].clone()).collect())
        .collect();
    syzygies(&columns, a.len())
        .into_iter()
        .map(|v| {
            let mut p = Poly::zero();
            for (vj, m) in v.iter().zip(&monos) {
                p = p.add(&vj.mul_term(m, &F::one()));
            }
            p
        })
        .filter(|p| !p.is_zero())
        .collect()
}

/// Basis of `N ∩ J` for the `K[X,Y]`-module `N` generated by `ns` and the
/// ideal `J` of `K[X,Y][s,t]` generated by `js`.
///
/// Computes one module Gröbner basis of `(n_i, e_i)`, `(p_j, 0)` in which the
/// first position dominates and the order eliminates `s`, `t`; the elements
/// with vanishing first entry and no `s`, `t` are the coefficient vectors of
/// the intersection.
pub fn module_cap_ideal<F: Field>(ns: &[Poly<F>], js: &[Poly<F>], st: &[usize]) -> Vec<Poly<F>> {
    let r = ns.len();
    if r == 0 || js.iter().all(Poly::is_zero) {
        return Vec::new();
    }
    let mut gens: Vec<Vec<Poly<F>>> = Vec::new();
    for (i, n) in ns.iter().enumerate() {
        let mut v = vec![Poly::zero(); r + 1];
        v[0] = n.clone();
        v[i + 1] = Poly::one();
        gens.push(v);
    }
    for p in js {
        let mut v = vec![Poly::zero(); r + 1];
        v[0] = p.clone();
        gens.push(v);
    }
    let blocks: Vec<usize> = (0..=r).map(|p| usize::from(p > 0)).collect();
    let order = ModuleOrder::top(MonomialOrder::eliminating(st)).with_blocks(blocks);
    let gb = GroebnerBasis::module(&gens, r + 1, order);
    gb.vectors()
        .into_iter()
        .filter(|v| v[0].is_zero() && v.iter().all(|c| c.free_of(st)))
        .map(|v| {
            let mut q = Poly::zero();
            for (a, n) in v[1..].iter().zip(ns) {
                q = q.add(&a.mul(n));
            }
            q
        })
        .filter(|q| !q.is_zero())
        .collect()
}

/// Generators of the elements of the module generated by `gens` whose
/// entries at `keep` are free of `elim`: one Gröbner basis in which the
/// `keep` positions dominate and the order eliminates `elim`, keeping the
/// qualifying elements.
pub fn top_eliminate_component<F: Field>(
    gens: &[Vec<Poly<F>>],
    width: usize,
    keep: &[usize],
    elim: &[usize],
) -> Vec<Vec<Poly<F>>> {
    let blocks: Vec<usize> = (0..width)
        .map(|p| usize::from(!keep.contains(&p)))
        .collect();
    let order = ModuleOrder::top(MonomialOrder::eliminating(elim)).with_blocks(blocks);
    GroebnerBasis::module(gens, width, order)
        .vectors()
        .into_iter()
        .filter(|v| keep.iter().all(|&i| v[i].free_of(elim)))
        .collect()
}

fn coefficient_vector<F: Field>(
    v: &[Poly<F>],
    index: &mut BTreeMap<(usize, Monomial), usize>,
) -> Vec<(usize, F)> {
    let mut out = Vec::new();
    for (slot, p) in v.iter().enumerate() {
        for (m, c) in p.terms() {
            let n = index.len();
            let k = *index.entry((slot, m.clone())).or_insert(n);
            out.push((k, c.clone()));
        }
    }
    out
}

/// Keeps a `K`-linearly independent subset of the vectors, in order.
pub fn k_basis<F: Field>(vs: &[Vec<Poly<F>>]) -> Vec<Vec<Poly<F>>> {
    let mut index = BTreeMap::new();
    let sparse: Vec<Vec<(usize, F)>> = vs
        .iter()
        .map(|v| coefficient_vector(v, &mut index))
        .collect();
    let dense: Vec<Vec<F>> = sparse
        .iter()
        .map(|s| {
            let mut row = vec![F::zero(); index.len()];
            for (k, c) in s {
                row[*k] = c.clone();
            }
            row
        })
        .collect();
    linalg::independent_subset(&dense, index.len())
        .into_iter()
        .map(|i| vs[i].clone())
        .collect()
}

/// A `K`-basis of the intersection of the `K[X]`-module generated by `bx`
/// with the `K[Y]`-module generated by `cy`, all vectors of length `width`
/// over `K[X,Y]`.
///
/// Candidate monomials for the coefficients are read off Gröbner bases of
/// the syzygies of `(bx, -cy)` under orders eliminating `Y` and `X`; the
/// coefficients are then found by a linear solve over `K`.
pub fn vecspace_intersect<F: Field>(
    bx: &[Vec<Poly<F>>],
    cy: &[Vec<Poly<F>>],
    width: usize,
    xvars: &[usize],
    yvars: &[usize],
) -> Vec<Vec<Poly<F>>> {
    let (u, v) = (bx.len(), cy.len());
    if u == 0 || v == 0 {
        return Vec::new();
    }
    let mut gens: Vec<Vec<Poly<F>>> = bx.to_vec();
    gens.extend(cy.iter().map(|c| c.iter().map(Poly::neg).collect()));
    let syz = syzygies(&gens, width);
    if syz.is_empty() {
        return Vec::new();
    }
    let mut alpha: Vec<BTreeSet<Monomial>> = vec![BTreeSet::new(); u];
    let mut beta: Vec<BTreeSet<Monomial>> = vec![BTreeSet::new(); v];
    for elim in [yvars, xvars] {
        let order = ModuleOrder::top(MonomialOrder::eliminating(elim));
        for g in GroebnerBasis::module(&syz, u + v, order).vectors() {
            for i in 0..u {
                alpha[i].extend(g[i].monomials().map(|m| m.split(xvars).0));
            }
            for j in 0..v {
                beta[j].extend(g[u + j].monomials().map(|m| m.split(yvars).0));
            }
        }
    }
    // unknowns: (generator index, monomial); generators 0..u from bx, u.. from cy
    let mut unknowns: Vec<(usize, Monomial)> = Vec::new();
    for (i, ms) in alpha.iter().enumerate() {
        unknowns.extend(ms.iter().map(|m| (i, m.clone())));
    }
    for (j, ms) in beta.iter().enumerate() {
        unknowns.extend(ms.iter().map(|m| (u + j, m.clone())));
    }
    let mut index = BTreeMap::new();
    let columns: Vec<Vec<(usize, F)>> = unknowns
        .iter()
        .map(|(k, m)| {
            let scaled: Vec<Poly<F>> = gens[*k].iter().map(|p| p.mul_term(m, &F::one())).collect();
            coefficient_vector(&scaled, &mut index)
        })
        .collect();
    let mut rows = vec![vec![F::zero(); unknowns.len()]; index.len()];
    for (col, entries) in columns.iter().enumerate() {
        for (r, c) in entries {
            rows[*r][col] = rows[*r][col].add(c);
        }
    }
    let kernel = linalg::nullspace(&rows, unknowns.len());
    let elements: Vec<Vec<Poly<F>>> = kernel
        .iter()
        .map(|sol| {
            let mut acc = vec![Poly::zero(); width];
            for ((k, m), c) in unknowns.iter().zip(sol) {
                if *k < u && !c.is_zero() {
                    for (slot, p) in gens[*k].iter().enumerate() {
                        acc[slot] = acc[slot].add(&p.mul_term(m, c));
                    }
                }
            }
            acc
        })
        .filter(|e| e.iter().any(|p| !p.is_zero()))
        .collect();
    k_basis(&elements)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};

    // x = 0, y = 1, s = 2, t = 3
    fn v(i: usize) -> Poly<Rational> {
        Poly::var(i)
    }

    #[test]
    fn span_cap_examples() {
        let st = [2, 3];
        assert_eq!(span_cap_polymodule(&[v(0).mul(&v(2))], &st), vec![v(2)]);
        let q = v(0).mul(&v(2)).add(&v(3));
        let got = span_cap_polymodule(std::slice::from_ref(&q), &st);
        assert_eq!(got.len(), 1);
        assert!(got[0] == q || got[0] == q.neg());
        assert_eq!(
            span_cap_polymodule(&[v(2), v(0).mul(&v(2))], &st),
            vec![v(2)]
        );
    }

    #[test]
    fn module_cap_examples() {
        let st = [2, 3];
        assert!(module_cap_ideal(&[Poly::one()], &[v(2)], &st).is_empty());
        let got = module_cap_ideal(&[v(2)], &[v(2)], &st);
        assert_eq!(got.len(), 1);
        assert_eq!(got[0].monic(&MonomialOrder::Grevlex), v(2));
        let target = v(0).mul(&v(2)).add(&v(1).mul(&v(3)));
        let got = module_cap_ideal(&[v(2), v(3)], std::slice::from_ref(&target), &st);
        assert_eq!(got.len(), 1);
        assert_eq!(
            got[0].monic(&MonomialOrder::Grevlex),
            target.monic(&MonomialOrder::Grevlex)
        );
    }

    #[test]
    fn pair_layout_round_trip() {
        let d = v(0)
            .mul(&v(2).pow(2))
            .sub(&v(1).mul(&v(3)))
            .add(&Poly::from_int(3));
        let lay = PairLayout::covering(std::slice::from_ref(&d), 2, 3);
        let vec = lay.from_difference(&d).unwrap();
        let (f, g) = lay.to_pair(&vec);
        assert_eq!(f.sub(&g), d);
        let back = lay
            .from_pair(&f.add(&Poly::from_int(5)), &g.add(&Poly::from_int(5)))
            .unwrap();
        let (f2, g2) = lay.to_pair(&back);
        assert_eq!(f2, f.add(&Poly::from_int(5)));
        assert_eq!(g2, g.add(&Poly::from_int(5)));
    }

    #[test]
    fn eliminate_component_example() {
        // M = <(y*s, t)> in slots [s^1][t^0, t^1][k]
        let lay = PairLayout {
            s_exps: vec![1],
            t_exps: vec![0, 1],
            s: 2,
            t: 3,
        };
        let m = lay.from_pair(&v(1).mul(&v(2)), &v(3)).unwrap();
        let mx = top_eliminate_component(&[m], lay.width(), &lay.f_block(), &[1]);
        assert!(mx.is_empty());
    }

    #[test]
    fn vecspace_examples() {
        let lay = PairLayout {
            s_exps: vec![1],
            t_exps: vec![0, 1],
            s: 2,
            t: 3,
        };
        let unit: Vec<Poly<Rational>> = lay.unit();
        let got = vecspace_intersect(std::slice::from_ref(&unit), std::slice::from_ref(&unit), lay.width(), &[0], &[1]);
        assert_eq!(got, vec![unit]);
        let sx = lay.from_pair(&v(2), &Poly::zero()).unwrap();
        let ty = lay.from_pair(&Poly::zero(), &v(3)).unwrap();
        assert!(vecspace_intersect(&[sx], &[ty], lay.width(), &[0], &[1]).is_empty());
        let _ = rat(0);
    }
}
