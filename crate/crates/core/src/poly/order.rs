use std::cmp::Ordering;

use super::Monomial;

/// Monomial orders used by the Gröbner engine.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MonomialOrder {
    /// Lexicographic with `x0 > x1 > ...`.
    Lex,
    /// Graded reverse lexicographic with `x0 > x1 > ...`.
    Grevlex,
    /// Product of grevlex blocks; earlier blocks dominate. Variables missing
    /// from every block form a final grevlex block.
    Block(Vec<Vec<usize>>),
}

impl MonomialOrder {
    /// Order eliminating `vars`: any monomial involving them is larger than
    /// every monomial free of them.
    pub fn eliminating(vars: &[usize]) -> Self {
        MonomialOrder::Block(vec![vars.to_vec()])
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block(blocks) => {
                for blk in blocks {
                    let o = grevlex_in(a, b, blk.iter().copied());
                    if o != Ordering::Equal {
                        return o;
                    }
                }
                let n = a.len().max(b.len());
                let rest = (0..n).filter(|i| !blocks.iter().any(|blk| blk.contains(i)));
                grevlex_in(a, b, rest)
            }
        }
    }

    pub fn max<'a>(&self, a: &'a Monomial, b: &'a Monomial) -> &'a Monomial {
        if self.cmp(a, b) == Ordering::Less {
            b
        } else {
            a
        }
    }
}

fn grevlex(a: &Monomial, b: &Monomial) -> Ordering {
    match a.degree().cmp(&b.degree()) {
        Ordering::Equal => {}
        o => return o,
    }
    let n = a.len().max(b.len());
    for i in (0..n).rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

fn grevlex_in(a: &Monomial, b: &Monomial, vars: impl Iterator<Item = usize> + Clone) -> Ordering {
    let da: u32 = vars.clone().map(|i| a.exp(i)).sum();
    let db: u32 = vars.clone().map(|i| b.exp(i)).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        o => return o,
    }
    let vs: Vec<usize> = vars.collect();
    for &i in vs.iter().rev() {
        match a.exp(i).cmp(&b.exp(i)) {
            Ordering::Equal => continue,
            o => return o.reverse(),
        }
    }
    Ordering::Equal
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exps(e)
    }

    #[test]
    fn grevlex_examples() {
        let o = MonomialOrder::Grevlex;
        // x^2 > x*y > y^2 > x > y > 1
        let seq = [m(&[2]), m(&[1, 1]), m(&[0, 2]), m(&[1]), m(&[0, 1]), m(&[])];
        for w in seq.windows(2) {
            assert_eq!(o.cmp(&w[0], &w[1]), Ordering::Greater);
        }
        // x*z^2 vs y^3 at degree 3: last variable decides, more z is smaller
        assert_eq!(o.cmp(&m(&[1, 0, 2]), &m(&[0, 3])), Ordering::Less);
    }

    #[test]
    fn elimination_order() {
        let o = MonomialOrder::eliminating(&[2]);
        assert_eq!(o.cmp(&m(&[0, 0, 1]), &m(&[5, 5])), Ordering::Greater);
        assert_eq!(o.cmp(&m(&[2]), &m(&[1, 1])), Ordering::Greater);
    }
}
