//! Buchberger's algorithm for ideals and for submodules of free modules.
//!
//! Vectors are lists of polynomials; internally each is a list of terms
//! `(monomial, position, coefficient)` sorted by a [`ModuleOrder`].

mod ops;
pub mod pairs;

use std::cmp::Ordering;

use crate::field::Field;
use crate::poly::{Monomial, MonomialOrder, Poly};

pub use ops::{eliminate, ideal_intersect, saturate, syzygies};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ModuleKind {
    /// Term over position: monomials first, positions break ties.
    Top,
    /// Position over term.
    Pot,
}

/// Order on the terms `m*e_i` of a free module. Positions are grouped into
/// blocks; a term in a lower-numbered block is larger than any term in a
/// higher-numbered one. Inside a block the kind decides, and lower
/// positions are larger.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuleOrder {
    pub mono: MonomialOrder,
    pub kind: ModuleKind,
    pub position_blocks: Vec<usize>,
}

impl ModuleOrder {
    pub fn top(mono: MonomialOrder) -> Self {
        ModuleOrder {
            mono,
            kind: ModuleKind::Top,
            position_blocks: Vec::new(),
        }
    }

    pub fn pot(mono: MonomialOrder) -> Self {
        ModuleOrder {
            mono,
            kind: ModuleKind::Pot,
            position_blocks: Vec::new(),
        }
    }

    /// Assigns `blocks[i]` as the block of position `i`.
    pub fn with_blocks(mut self, blocks: Vec<usize>) -> Self {
        self.position_blocks = blocks;
        self
    }

    fn block(&self, pos: usize) -> usize {
        self.position_blocks.get(pos).copied().unwrap_or(0)
    }
}

/// A monomial order prepared for fast comparisons.
#[derive(Clone, Debug)]
struct Compiled {
    lex: bool,
    /// Explicit leading blocks; all other variables form a final grevlex block.
    blocks: Vec<Vec<usize>>,
    in_block: Vec<bool>,
    order: ModuleOrder,
}

impl Compiled {
    fn new(order: &ModuleOrder) -> Self {
        let (lex, blocks) = match &order.mono {
            MonomialOrder::Lex => (true, Vec::new()),
            MonomialOrder::Grevlex => (false, Vec::new()),
            MonomialOrder::Block(bs) => (
                false,
                bs.iter().filter(|b| !b.is_empty()).cloned().collect(),
            ),
        };
        let width = blocks.iter().flatten().map(|&i| i + 1).max().unwrap_or(0);
        let mut in_block = vec![false; width];
        for &i in blocks.iter().flatten() {
            in_block[i] = true;
        }
        Compiled {
            lex,
            blocks,
            in_block,
            order: order.clone(),
        }
    }

    fn cmp_mono(&self, a: &Monomial, b: &Monomial) -> Ordering {
        if self.lex {
            return a.cmp(b);
        }
        let (mut ra, mut rb) = (a.degree(), b.degree());
        for blk in &self.blocks {
            let da: u32 = blk.iter().map(|&i| a.exp(i)).sum();
            let db: u32 = blk.iter().map(|&i| b.exp(i)).sum();
            if da != db {
                return da.cmp(&db);
            }
            for &i in blk.iter().rev() {
                let (x, y) = (a.exp(i), b.exp(i));
                if x != y {
                    return y.cmp(&x);
                }
            }
            ra -= da;
            rb -= db;
        }
        if ra != rb {
            return ra.cmp(&rb);
        }
        for i in (0..a.len().max(b.len())).rev() {
            if self.in_block.get(i).copied().unwrap_or(false) {
                continue;
            }
            let (x, y) = (a.exp(i), b.exp(i));
            if x != y {
                return y.cmp(&x);
            }
        }
        Ordering::Equal
    }

    fn cmp_term(&self, a: &Monomial, pa: usize, b: &Monomial, pb: usize) -> Ordering {
        let (ba, bb) = (self.order.block(pa), self.order.block(pb));
        if ba != bb {
            return bb.cmp(&ba);
        }
        match self.order.kind {
            ModuleKind::Top => self.cmp_mono(a, b).then(pb.cmp(&pa)),
            ModuleKind::Pot => pb.cmp(&pa).then_with(|| self.cmp_mono(a, b)),
        }
    }
}

type Term<F> = (Monomial, usize, F);

/// A vector in sorted-term form; the first term leads.
#[derive(Clone, Debug)]
struct Elem<F: Field> {
    terms: Vec<Term<F>>,
    sugar: u32,
}

impl<F: Field> Elem<F> {
    fn lead(&self) -> &Term<F> {
        &self.terms[0]
    }
}

#[derive(Clone, Debug)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    pos: usize,
    sugar: u32,
}

/// Optional self-check of every basis computed in the process.
pub mod audit {
    use std::sync::atomic::{AtomicBool, AtomicUsize, Ordering};

    use super::GroebnerBasis;
    use crate::field::Field;

    static ENABLED: AtomicBool = AtomicBool::new(false);
    static CHECKED: AtomicUsize = AtomicUsize::new(0);
    static FAILED: AtomicUsize = AtomicUsize::new(0);

    /// Turns S-pair checking of every new basis on or off.
    pub fn enable(on: bool) {
        ENABLED.store(on, Ordering::SeqCst);
    }

    /// `(bases checked, bases with a failing S-pair)` so far.
    pub fn counts() -> (usize, usize) {
        (CHECKED.load(Ordering::SeqCst), FAILED.load(Ordering::SeqCst))
    }

    pub(super) fn record<F: Field>(gb: &GroebnerBasis<F>) {
        if !ENABLED.load(Ordering::Relaxed) {
            return;
        }
        CHECKED.fetch_add(1, Ordering::SeqCst);
        if gb.s_pair_failures() > 0 {
            FAILED.fetch_add(1, Ordering::SeqCst);
        }
    }
}

/// Computation interrupted by the caller's stop condition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("computation interrupted")]
pub struct Interrupted;

/// A reduced Gröbner basis of a submodule of `R^rank` (an ideal when
/// `rank == 1`).
#[derive(Clone, Debug)]
pub struct GroebnerBasis<F: Field> {
    order: ModuleOrder,
    rank: usize,
    nvars: usize,
    cmp: Compiled,
    elems: Vec<Elem<F>>,
}

impl<F: Field> GroebnerBasis<F> {
    /// Basis of the ideal generated by `gens`.
    pub fn ideal(gens: &[Poly<F>], order: MonomialOrder) -> Self {
        let vs: Vec<Vec<Poly<F>>> = gens.iter().map(|g| vec![g.clone()]).collect();
        Self::module(&vs, 1, ModuleOrder::top(order))
    }

    pub fn ideal_with(
        gens: &[Poly<F>],
        order: MonomialOrder,
        stop: &dyn Fn() -> bool,
    ) -> Result<Self, Interrupted> {
        let vs: Vec<Vec<Poly<F>>> = gens.iter().map(|g| vec![g.clone()]).collect();
        Self::module_with(&vs, 1, ModuleOrder::top(order), stop)
    }

    /// Basis of the submodule of `R^rank` generated by `gens`.
    pub fn module(gens: &[Vec<Poly<F>>], rank: usize, order: ModuleOrder) -> Self {
        Self::module_with(gens, rank, order, &|| false).expect("never interrupted")
    }

    pub fn module_with(
        gens: &[Vec<Poly<F>>],
        rank: usize,
        order: ModuleOrder,
        stop: &dyn Fn() -> bool,
    ) -> Result<Self, Interrupted> {
        let nvars = gens
            .iter()
            .flat_map(|v| v.iter().map(Poly::nvars))
            .max()
            .unwrap_or(0);
        let mut gb = GroebnerBasis {
            cmp: Compiled::new(&order),
            order,
            rank,
            nvars,
            elems: Vec::new(),
        };
        gb.buchberger(gens, stop)?;
        audit::record(&gb);
        Ok(gb)
    }

    pub fn order(&self) -> &ModuleOrder {
        &self.order
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    /// Whether the basis generates the whole module (contains `1` for ideals).
    pub fn is_unit(&self) -> bool {
        self.rank == 1 && self.elems.iter().any(|e| e.lead().0.is_one())
    }

    /// Basis elements as vectors.
    pub fn vectors(&self) -> Vec<Vec<Poly<F>>> {
        self.elems
            .iter()
            .map(|e| self.to_vector(&e.terms))
            .collect()
    }

    /// Basis elements of an ideal basis.
    pub fn polys(&self) -> Vec<Poly<F>> {
        self.vectors()
            .into_iter()
            .map(|mut v| v.remove(0))
            .collect()
    }

    /// Leading `(monomial, position)` of each element.
    pub fn leading_terms(&self) -> Vec<(Monomial, usize)> {
        self.elems
            .iter()
            .map(|e| (e.lead().0.clone(), e.lead().1))
            .collect()
    }

    pub fn normal_form(&self, v: &[Poly<F>]) -> Vec<Poly<F>> {
        let terms = self.to_terms(v);
        let r = self.reduce(terms, None);
        self.to_vector(&r)
    }

    pub fn reduce_poly(&self, p: &Poly<F>) -> Poly<F> {
        self.normal_form(std::slice::from_ref(p)).remove(0)
    }

    pub fn contains(&self, v: &[Poly<F>]) -> bool {
        self.normal_form(v).iter().all(Poly::is_zero)
    }

    pub fn contains_poly(&self, p: &Poly<F>) -> bool {
        self.reduce_poly(p).is_zero()
    }

    /// Normal form `r` together with cofactors `q` such that
    /// `v = sum q_i * b_i + r` for the basis elements `b_i`.
    pub fn normal_form_with_cofactors(&self, v: &[Poly<F>]) -> (Vec<Poly<F>>, Vec<Poly<F>>) {
        let mut q = vec![Poly::zero(); self.elems.len()];
        let r = self.reduce(self.to_terms(v), Some(&mut q));
        (self.to_vector(&r), q)
    }

    /// Number of S-pairs of the basis that fail to reduce to zero.
    pub fn s_pair_failures(&self) -> usize {
        let mut fails = 0;
        for i in 0..self.elems.len() {
            for j in i + 1..self.elems.len() {
                let (a, b) = (self.elems[i].lead(), self.elems[j].lead());
                if a.1 != b.1 {
                    continue;
                }
                let lcm = a.0.lcm(&b.0);
                let s = self.spoly(i, j, &lcm);
                if !self.reduce(s, None).is_empty() {
                    fails += 1;
                }
            }
        }
        fails
    }

    /// Whether `m*e_pos` is a standard term (not divisible by any leading term).
    pub fn is_standard(&self, m: &Monomial, pos: usize) -> bool {
        !self
            .elems
            .iter()
            .any(|e| e.lead().1 == pos && e.lead().0.divides(m))
    }

    fn to_terms(&self, v: &[Poly<F>]) -> Vec<Term<F>> {
        let mut terms: Vec<Term<F>> = v
            .iter()
            .enumerate()
            .flat_map(|(pos, p)| p.terms().map(move |(m, c)| (m.clone(), pos, c.clone())))
            .collect();
        terms.sort_by(|a, b| self.cmp.cmp_term(&b.0, b.1, &a.0, a.1));
        terms
    }

    fn to_vector(&self, terms: &[Term<F>]) -> Vec<Poly<F>> {
        let mut out = vec![Poly::zero(); self.rank];
        for (m, pos, c) in terms {
            if *pos >= out.len() {
                out.resize(pos + 1, Poly::zero());
            }
            out[*pos].add_term(m.clone(), c);
        }
        out
    }

    /// `a - c*m*b` for sorted term lists.
    fn sub_scaled(&self, a: &[Term<F>], b: &[Term<F>], m: &Monomial, c: &F) -> Vec<Term<F>> {
        let mut out = Vec::with_capacity(a.len() + b.len());
        let mut ia = 0;
        let mut bs = b
            .iter()
            .map(|(bm, bp, bc)| (bm.mul(m), *bp, bc.mul(c)))
            .peekable();
        while ia < a.len() || bs.peek().is_some() {
            let ord = match (a.get(ia), bs.peek()) {
                (Some(x), Some(y)) => self.cmp.cmp_term(&x.0, x.1, &y.0, y.1),
                (Some(_), None) => Ordering::Greater,
                (None, _) => Ordering::Less,
            };
            match ord {
                Ordering::Greater => {
                    out.push(a[ia].clone());
                    ia += 1;
                }
                Ordering::Less => {
                    let (bm, bp, bc) = bs.next().unwrap();
                    out.push((bm, bp, bc.neg()));
                }
                Ordering::Equal => {
                    let (bm, bp, bc) = bs.next().unwrap();
                    let v = a[ia].2.sub(&bc);
                    if !v.is_zero() {
                        out.push((bm, bp, v));
                    }
                    ia += 1;
                }
            }
        }
        out
    }

    /// Full reduction against the current elements.
    fn reduce(&self, terms: Vec<Term<F>>, cof: Option<&mut Vec<Poly<F>>>) -> Vec<Term<F>> {
        self.reduce_by(terms, self.elems.len(), None, cof)
    }

    fn reduce_by(
        &self,
        mut p: Vec<Term<F>>,
        upto: usize,
        skip: Option<usize>,
        mut cof: Option<&mut Vec<Poly<F>>>,
    ) -> Vec<Term<F>> {
        let mut done = 0;
        while done < p.len() {
            let (m, pos, c) = p[done].clone();
            let red = self.elems[..upto]
                .iter()
                .enumerate()
                .position(|(k, e)| Some(k) != skip && e.lead().1 == pos && e.lead().0.divides(&m));
            match red {
                None => done += 1,
                Some(k) => {
                    let e = &self.elems[k];
                    let q = m.div(&e.lead().0).unwrap();
                    let f = c.div(&e.lead().2).expect("nonzero lead");
                    if let Some(cf) = cof.as_deref_mut() {
                        cf[k].add_term(q.clone(), &f);
                    }
                    let tail = self.sub_scaled(&p[done..], &e.terms, &q, &f);
                    p.truncate(done);
                    p.extend(tail);
                }
            }
        }
        p
    }

    fn spoly(&self, i: usize, j: usize, lcm: &Monomial) -> Vec<Term<F>> {
        let (a, b) = (&self.elems[i], &self.elems[j]);
        let qa = lcm.div(&a.lead().0).unwrap();
        let qb = lcm.div(&b.lead().0).unwrap();
        let fa = F::one().div(&a.lead().2).unwrap();
        let fb = F::one().div(&b.lead().2).unwrap();
        let scaled_a: Vec<Term<F>> = a
            .terms
            .iter()
            .map(|(m, p, c)| (m.mul(&qa), *p, c.mul(&fa)))
            .collect();
        self.sub_scaled(&scaled_a, &b.terms, &qb, &fb)
    }

    fn make_monic(&self, mut t: Vec<Term<F>>) -> Vec<Term<F>> {
        let inv = t[0].2.inv().expect("nonzero");
        if !inv.is_one() {
            for term in t.iter_mut() {
                term.2 = term.2.mul(&inv);
            }
        }
        t
    }

    fn buchberger(
        &mut self,
        gens: &[Vec<Poly<F>>],
        stop: &dyn Fn() -> bool,
    ) -> Result<(), Interrupted> {
        let mut pairs: Vec<Pair> = Vec::new();
        let mut redundant: Vec<bool> = Vec::new();
        let mut inputs: Vec<Vec<Term<F>>> = gens
            .iter()
            .map(|v| self.to_terms(v))
            .filter(|t| !t.is_empty())
            .collect();
        // smaller inputs first keeps the intermediate basis small
        inputs.sort_by(|a, b| self.cmp.cmp_term(&a[0].0, a[0].1, &b[0].0, b[0].1));
        for t in inputs {
            let sugar = t.iter().map(|x| x.0.degree()).max().unwrap_or(0);
            let r = self.reduce(t, None);
            if !r.is_empty() {
                let r = self.make_monic(r);
                self.insert(r, sugar, &mut pairs, &mut redundant);
            }
        }
        while !pairs.is_empty() {
            if stop() {
                return Err(Interrupted);
            }
            let best = (0..pairs.len())
                .min_by(|&a, &b| {
                    let (pa, pb) = (&pairs[a], &pairs[b]);
                    pa.sugar
                        .cmp(&pb.sugar)
                        .then_with(|| self.cmp.cmp_term(&pa.lcm, pa.pos, &pb.lcm, pb.pos))
                })
                .unwrap();
            let pair = pairs.swap_remove(best);
            let s = self.spoly(pair.i, pair.j, &pair.lcm);
            let r = self.reduce(s, None);
            if !r.is_empty() {
                let r = self.make_monic(r);
                self.insert(r, pair.sugar, &mut pairs, &mut redundant);
            }
        }
        self.finish(&redundant);
        Ok(())
    }

    /// Adds an element and updates the pair set (Gebauer–Möller).
    fn insert(
        &mut self,
        terms: Vec<Term<F>>,
        sugar: u32,
        pairs: &mut Vec<Pair>,
        redundant: &mut Vec<bool>,
    ) {
        let h = self.elems.len();
        let (hm, hp) = (terms[0].0.clone(), terms[0].1);
        let sugar = sugar.max(terms.iter().map(|t| t.0.degree()).max().unwrap_or(0));
        self.elems.push(Elem { terms, sugar });
        redundant.push(false);
        let ideal = self.rank == 1;

        let mut cands: Vec<Pair> = Vec::new();
        for (i, &red) in redundant.iter().enumerate().take(h) {
            if red || self.elems[i].lead().1 != hp {
                continue;
            }
            let im = &self.elems[i].lead().0;
            let lcm = im.lcm(&hm);
            let s = (self.elems[i].sugar + lcm.degree() - im.degree())
                .max(self.elems[h].sugar + lcm.degree() - hm.degree());
            cands.push(Pair {
                i,
                j: h,
                lcm,
                pos: hp,
                sugar: s,
            });
        }
        let coprime = |p: &Pair, els: &[Elem<F>]| ideal && els[p.i].lead().0.coprime(&hm);
        let mut kept: Vec<Pair> = Vec::new();
        let mut rest = cands;
        while let Some(p) = rest.pop() {
            let dominated = rest
                .iter()
                .chain(kept.iter())
                .any(|q| q.lcm.divides(&p.lcm));
            if coprime(&p, &self.elems) || !dominated {
                kept.push(p);
            }
        }
        kept.retain(|p| !coprime(p, &self.elems));

        pairs.retain(|p| {
            if p.pos != hp || !hm.divides(&p.lcm) {
                return true;
            }
            let li = self.elems[p.i].lead().0.lcm(&hm);
            let lj = self.elems[p.j].lead().0.lcm(&hm);
            li == p.lcm || lj == p.lcm
        });
        pairs.extend(kept);
        for (i, red) in redundant.iter_mut().enumerate().take(h) {
            if !*red && self.elems[i].lead().1 == hp && hm.divides(&self.elems[i].lead().0) {
                *red = true;
            }
        }
    }

    /// Drops redundant elements and inter-reduces the rest.
    fn finish(&mut self, redundant: &[bool]) {
        let mut keep: Vec<Elem<F>> = Vec::new();
        let elems = std::mem::take(&mut self.elems);
        for (k, e) in elems.into_iter().enumerate() {
            if !redundant[k] {
                keep.push(e);
            }
        }
        // minimalize: drop elements whose lead is divisible by another lead
        let mut minimal: Vec<Elem<F>> = Vec::new();
        for (k, e) in keep.iter().enumerate() {
            let (m, p) = (&e.lead().0, e.lead().1);
            let dominated = keep.iter().enumerate().any(|(l, o)| {
                l != k && o.lead().1 == p && o.lead().0.divides(m) && (o.lead().0 != *m || l < k)
            });
            if !dominated {
                minimal.push(e.clone());
            }
        }
        minimal.sort_by(|a, b| {
            self.cmp
                .cmp_term(&a.lead().0, a.lead().1, &b.lead().0, b.lead().1)
        });
        self.elems = minimal;
        for k in 0..self.elems.len() {
            let terms = self.elems[k].terms.clone();
            let lead = terms[0].clone();
            let tail = self.reduce_by(terms[1..].to_vec(), self.elems.len(), Some(k), None);
            let mut t = vec![lead];
            t.extend(tail);
            self.elems[k].terms = t;
        }
    }

    /// Number of variables the order was compiled for.
    pub fn nvars(&self) -> usize {
        self.nvars
    }
}
