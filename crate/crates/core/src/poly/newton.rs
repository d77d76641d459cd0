//! Newton polygon of a polynomial in two distinguished variables.

use num_integer::Integer;

use super::Poly;
use crate::field::Field;

/// An edge of the Newton polygon whose outward normal has two positive
/// entries. A single support point yields a degenerate edge with
/// `start == end`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NewtonEdge<F: Field> {
    /// Primitive outward normal `(w_s, w_t)`.
    pub normal: (u32, u32),
    /// Endpoint with the larger `s`-degree.
    pub start: (u32, u32),
    pub end: (u32, u32),
    /// The terms of the polynomial lying on the edge.
    pub poly: Poly<F>,
}

impl<F: Field> NewtonEdge<F> {
    pub fn is_degenerate(&self) -> bool {
        self.start == self.end
    }

    /// Whether the edge runs from the `s`-axis to the `t`-axis.
    pub fn is_axis_to_axis(&self) -> bool {
        !self.is_degenerate() && self.start.1 == 0 && self.end.0 == 0
    }
}

/// Support points `(deg_s, deg_t)`, sorted and deduplicated.
pub fn support<F: Field>(p: &Poly<F>, s: usize, t: usize) -> Vec<(u32, u32)> {
    let mut pts: Vec<(u32, u32)> = p.monomials().map(|m| (m.exp(s), m.exp(t))).collect();
    pts.sort_unstable();
    pts.dedup();
    pts
}

fn cross(o: (i64, i64), a: (i64, i64), b: (i64, i64)) -> i64 {
    (a.0 - o.0) * (b.1 - o.1) - (a.1 - o.1) * (b.0 - o.0)
}

/// Counterclockwise convex hull without collinear points.
fn hull(pts: &[(u32, u32)]) -> Vec<(i64, i64)> {
    let p: Vec<(i64, i64)> = pts.iter().map(|&(a, b)| (a as i64, b as i64)).collect();
    if p.len() <= 2 {
        return p;
    }
    let mut lower: Vec<(i64, i64)> = Vec::new();
    for &q in &p {
        while lower.len() >= 2 && cross(lower[lower.len() - 2], lower[lower.len() - 1], q) <= 0 {
            lower.pop();
        }
        lower.push(q);
    }
    let mut upper: Vec<(i64, i64)> = Vec::new();
    for &q in p.iter().rev() {
        while upper.len() >= 2 && cross(upper[upper.len() - 2], upper[upper.len() - 1], q) <= 0 {
            upper.pop();
        }
        upper.push(q);
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Edges of the Newton polygon of `p` in the variables `s`, `t` with
/// positive outward normals; `None` for the zero polynomial.
pub fn newton_edges<F: Field>(p: &Poly<F>, s: usize, t: usize) -> Option<Vec<NewtonEdge<F>>> {
    let pts = support(p, s, t);
    if pts.is_empty() {
        return None;
    }
    if pts.len() == 1 {
        return Some(vec![NewtonEdge {
            normal: (1, 1),
            start: pts[0],
            end: pts[0],
            poly: p.clone(),
        }]);
    }
    let h = hull(&pts);
    let mut out = Vec::new();
    for i in 0..h.len() {
        let a = h[i];
        let b = h[(i + 1) % h.len()];
        let (dx, dy) = (b.0 - a.0, b.1 - a.1);
        let (ws, wt) = (dy, -dx);
        if ws <= 0 || wt <= 0 {
            continue;
        }
        let g = ws.gcd(&wt);
        let (ws, wt) = (ws / g, wt / g);
        let level = ws * a.0 + wt * a.1;
        let poly = Poly::from_terms(
            p.terms()
                .filter(|(m, _)| ws * m.exp(s) as i64 + wt * m.exp(t) as i64 == level)
                .map(|(m, c)| (m.clone(), c.clone())),
        );
        let (start, end) = if a.0 >= b.0 { (a, b) } else { (b, a) };
        out.push(NewtonEdge {
            normal: (ws as u32, wt as u32),
            start: (start.0 as u32, start.1 as u32),
            end: (end.0 as u32, end.1 as u32),
            poly,
        });
    }
    out.sort_by_key(|e| std::cmp::Reverse(e.start.0));
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{rat, Rational};
    use crate::poly::Monomial;
    use proptest::prelude::*;

    // variables: s = 0, t = 1, x1 = 2, x2 = 3, y = 4
    fn v(i: usize) -> Poly<Rational> {
        Poly::var(i)
    }

    #[test]
    fn collinear_support() {
        let p = v(0).pow(2).add(&v(0).mul(&v(1))).add(&v(1).pow(2));
        let es = newton_edges(&p, 0, 1).unwrap();
        assert_eq!(es.len(), 1);
        assert_eq!(es[0].normal, (1, 1));
        assert_eq!((es[0].start, es[0].end), ((2, 0), (0, 2)));
        assert_eq!(es[0].poly, p);
    }

    #[test]
    fn skewed_edge() {
        let p = v(0).pow(3).add(&v(1));
        let es = newton_edges(&p, 0, 1).unwrap();
        assert_eq!(es.len(), 1);
        assert_eq!(es[0].normal, (1, 3));
        assert_eq!((es[0].start, es[0].end), ((3, 0), (0, 1)));
    }

    #[test]
    fn interior_point_is_dropped() {
        let (s, t) = (v(0), v(1));
        let q = v(2).pow(2).add(&v(2).mul(&v(3))).add(&v(3).pow(2));
        let edge = s
            .pow(2)
            .mul(&q)
            .add(&s.mul(&t).mul(&v(2)).mul(&v(4)))
            .add(&t.pow(2).mul(&v(4).pow(2)));
        let p = edge.add(&t.mul(&v(3)));
        let es = newton_edges(&p, 0, 1).unwrap();
        assert_eq!(es.len(), 1);
        assert_eq!(es[0].poly, edge);
        assert!(es[0].is_axis_to_axis());
        assert!(newton_edges(&Poly::<Rational>::zero(), 0, 1).is_none());
        let single = newton_edges(&v(0).mul(&v(2)), 0, 1).unwrap();
        assert!(single[0].is_degenerate());
    }

    proptest! {
        #[test]
        fn support_lies_below_every_edge(pts in prop::collection::vec((0u32..6, 0u32..6), 1..8)) {
            let p = Poly::from_terms(pts.iter().map(|&(a, b)| (Monomial::from_exps(&[a, b]), rat(1))));
            for e in newton_edges(&p, 0, 1).unwrap() {
                let (ws, wt) = e.normal;
                prop_assert!(ws > 0 && wt > 0);
                let level = ws * e.start.0 + wt * e.start.1;
                prop_assert_eq!(level, ws * e.end.0 + wt * e.end.1);
                for (m, _) in p.terms() {
                    let val = ws * m.exp(0) + wt * m.exp(1);
                    prop_assert!(val <= level);
                    prop_assert_eq!(val == level, e.poly.coeff(m) != rat(0));
                }
            }
        }
    }
}
