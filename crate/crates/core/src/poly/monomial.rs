use smallvec::SmallVec;

/// Exponent vector. Trailing zero exponents are never stored, so the number
/// of variables is implicit and the derived ordering is lex with `x0 > x1 > ...`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug, Default)]
pub struct Monomial(SmallVec<[u32; 8]>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(SmallVec::new())
    }

    pub fn var(i: usize) -> Self {
        Self::var_pow(i, 1)
    }

    pub fn var_pow(i: usize, e: u32) -> Self {
        let mut m = Monomial::one();
        m.set(i, e);
        m
    }

    pub fn from_exps(exps: &[u32]) -> Self {
        let mut v: SmallVec<[u32; 8]> = SmallVec::from_slice(exps);
        while v.last() == Some(&0) {
            v.pop();
        }
        Monomial(v)
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    /// One past the largest variable index with a nonzero exponent.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.0.get(i).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, e: u32) {
        if e == 0 {
            if i < self.0.len() {
                self.0[i] = 0;
                while self.0.last() == Some(&0) {
                    self.0.pop();
                }
            }
            return;
        }
        if i >= self.0.len() {
            self.0.resize(i + 1, 0);
        }
        self.0[i] = e;
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    /// Total degree in the given variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&i| self.exp(i)).sum()
    }

    pub fn mul(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Monomial((0..n).map(|i| self.exp(i) + o.exp(i)).collect())
    }

    pub fn pow(&self, e: u32) -> Self {
        if e == 0 {
            return Monomial::one();
        }
        Monomial(self.0.iter().map(|x| x * e).collect())
    }

    pub fn divides(&self, o: &Self) -> bool {
        self.0.len() <= o.0.len() && self.0.iter().zip(o.0.iter()).all(|(a, b)| a <= b)
    }

    /// `o / self`'s counterpart: `self / o` if `o` divides `self`.
    pub fn div(&self, o: &Self) -> Option<Self> {
        if !o.divides(self) {
            return None;
        }
        Some(Self::from_exps(
            &(0..self.0.len())
                .map(|i| self.exp(i) - o.exp(i))
                .collect::<Vec<_>>(),
        ))
    }

    pub fn lcm(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        Monomial((0..n).map(|i| self.exp(i).max(o.exp(i))).collect())
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let n = self.0.len().min(o.0.len());
        Self::from_exps(
            &(0..n)
                .map(|i| self.exp(i).min(o.exp(i)))
                .collect::<Vec<_>>(),
        )
    }

    pub fn coprime(&self, o: &Self) -> bool {
        self.0
            .iter()
            .zip(o.0.iter())
            .all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Whether every variable with a nonzero exponent lies in `vars`.
    pub fn only_in(&self, vars: &[usize]) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, &e)| e == 0 || vars.contains(&i))
    }

    /// Whether no variable in `vars` appears.
    pub fn free_of(&self, vars: &[usize]) -> bool {
        vars.iter().all(|&i| self.exp(i) == 0)
    }

    /// Splits into the part in `vars` and the remaining part.
    pub fn split(&self, vars: &[usize]) -> (Self, Self) {
        let mut inside = Monomial::one();
        let mut outside = self.clone();
        for &v in vars {
            let e = self.exp(v);
            if e > 0 {
                inside.set(v, e);
                outside.set(v, 0);
            }
        }
        (inside, outside)
    }

    /// Relocates variable `i` to `map(i)`.
    pub fn rename(&self, map: impl Fn(usize) -> usize) -> Self {
        let mut out = Monomial::one();
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                let j = map(i);
                out.set(j, out.exp(j) + e);
            }
        }
        out
    }

    /// Renders as `x^2*y`, or the empty string for `1`.
    pub fn render(&self, names: &[String]) -> String {
        let mut parts = Vec::new();
        for (i, &e) in self.0.iter().enumerate() {
            if e == 0 {
                continue;
            }
            let name = names.get(i).cloned().unwrap_or_else(|| format!("v{i}"));
            if e == 1 {
                parts.push(name);
            } else {
                parts.push(format!("{name}^{e}"));
            }
        }
        parts.join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trimming_and_arithmetic() {
        let a = Monomial::from_exps(&[1, 2, 0, 0]);
        assert_eq!(a.len(), 2);
        let b = Monomial::var(2);
        let ab = a.mul(&b);
        assert_eq!(ab.exps(), &[1, 2, 1]);
        assert_eq!(ab.div(&b), Some(a.clone()));
        assert_eq!(b.div(&a), None);
        assert_eq!(a.lcm(&b).degree(), 4);
        assert!(a.gcd(&b).is_one());
        assert!(a.coprime(&b));
        let mut c = ab.clone();
        c.set(2, 0);
        assert_eq!(c, a);
    }

    #[test]
    fn derived_order_is_lex() {
        // x0 > x1^5
        assert!(Monomial::var(0) > Monomial::var_pow(1, 5));
        assert!(Monomial::from_exps(&[1, 1]) > Monomial::var(0));
        assert!(Monomial::one() < Monomial::var(3));
    }
}
