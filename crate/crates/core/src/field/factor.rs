//! Factorization of univariate polynomials over `Q`.
//!
//! Squarefree decomposition, a rational-root fast path, factorization modulo
//! a small prime (distinct-degree plus Cantor–Zassenhaus splitting), linear
//! Hensel lifting and naive recombination of the lifted factors.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{Field, Rational, UPoly};

/// Monic irreducible factors of `f` with multiplicities. Constants yield an
/// empty list.
pub fn factor(f: &UPoly<Rational>) -> Vec<(UPoly<Rational>, usize)> {
    let mut out = Vec::new();
    for (part, mult) in squarefree_decomposition(f) {
        for fac in factor_squarefree(&part) {
            out.push((fac, mult));
        }
    }
    out.sort_by(|a, b| a.0.deg().cmp(&b.0.deg()).then_with(|| a.1.cmp(&b.1)));
    out
}

pub fn is_irreducible(f: &UPoly<Rational>) -> bool {
    if f.deg() == 0 {
        return false;
    }
    let fs = factor(f);
    fs.len() == 1 && fs[0].1 == 1
}

/// Yun's algorithm: `f = prod a_i^i` with squarefree, pairwise coprime, monic `a_i`.
pub fn squarefree_decomposition(f: &UPoly<Rational>) -> Vec<(UPoly<Rational>, usize)> {
    let mut out = Vec::new();
    if f.is_constant() {
        return out;
    }
    let f = f.monic();
    let df = f.derivative();
    let a0 = f.gcd(&df);
    let mut b = f.div_exact(&a0).unwrap();
    let mut c = df.div_exact(&a0).unwrap();
    let mut d = c.sub(&b.derivative());
    let mut i = 1;
    while !b.is_constant() {
        let a = b.gcd(&d);
        b = b.div_exact(&a).unwrap();
        c = d.div_exact(&a).unwrap();
        d = c.sub(&b.derivative());
        if !a.is_constant() {
            out.push((a.monic(), i));
        }
        i += 1;
    }
    out
}

fn to_primitive_int(f: &UPoly<Rational>) -> Vec<BigInt> {
    let den = f
        .coeffs()
        .iter()
        .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let ints: Vec<BigInt> = f
        .coeffs()
        .iter()
        .map(|c| (c * Rational::from_integer(den.clone())).to_integer())
        .collect();
    primitive(ints)
}

fn primitive(mut v: Vec<BigInt>) -> Vec<BigInt> {
    let g = v.iter().fold(BigInt::zero(), |acc, c| acc.gcd(c));
    if !g.is_zero() && !g.is_one() {
        for c in v.iter_mut() {
            *c /= &g;
        }
    }
    if v.last().is_some_and(|c| c.is_negative()) {
        for c in v.iter_mut() {
            *c = -c.clone();
        }
    }
    v
}

fn int_to_upoly(v: &[BigInt]) -> UPoly<Rational> {
    UPoly::new(
        v.iter()
            .map(|c| Rational::from_integer(c.clone()))
            .collect(),
    )
}

fn factor_squarefree(f: &UPoly<Rational>) -> Vec<UPoly<Rational>> {
    if f.deg() <= 1 {
        return vec![f.monic()];
    }
    let mut out = Vec::new();
    let mut rest = to_primitive_int(f);
    if rest[0].is_zero() {
        out.push(UPoly::x());
        rest.remove(0);
    }
    rest = rational_roots(rest, &mut out);
    if rest.len() > 1 {
        for fac in zassenhaus(&rest) {
            out.push(int_to_upoly(&fac).monic());
        }
    }
    out
}

fn divisors_small(n: &BigInt) -> Option<Vec<i64>> {
    let n = n.abs().to_i64()?;
    if n > 1_000_000 {
        return None;
    }
    Some((1..=n).filter(|d| n % d == 0).collect())
}

/// Splits off linear factors `e*u - d` with small `d`, `e`.
fn rational_roots(mut f: Vec<BigInt>, out: &mut Vec<UPoly<Rational>>) -> Vec<BigInt> {
    if f.len() <= 2 {
        if f.len() == 2 {
            out.push(int_to_upoly(&f).monic());
            return vec![BigInt::one()];
        }
        return f;
    }
    let (Some(ds), Some(es)) = (divisors_small(&f[0]), divisors_small(f.last().unwrap())) else {
        return f;
    };
    for &e in &es {
        for &d in &ds {
            for sign in [1i64, -1] {
                let root = Rational::new(BigInt::from(sign * d), BigInt::from(e));
                loop {
                    let p = int_to_upoly(&f);
                    if p.deg() < 1 || !Field::is_zero(&p.eval(&root)) {
                        break;
                    }
                    let lin = UPoly::new(vec![Field::neg(&root), <Rational as Field>::one()]);
                    out.push(lin.clone());
                    f = to_primitive_int(&p.div_exact(&lin).unwrap());
                }
            }
        }
    }
    f
}

// ---- arithmetic modulo a word-sized prime -------------------------------

type Zp = Vec<u64>;

fn zp_trim(mut a: Zp) -> Zp {
    while a.last() == Some(&0) {
        a.pop();
    }
    a
}

fn zp_from_int(f: &[BigInt], p: u64) -> Zp {
    let pb = BigInt::from(p);
    zp_trim(
        f.iter()
            .map(|c| c.mod_floor(&pb).to_u64().unwrap())
            .collect(),
    )
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod_u64(a, p - 2, p)
}

fn pow_mod_u64(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut acc = 1u64;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * a as u128) % p as u128) as u64;
        }
        a = ((a as u128 * a as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

fn zp_sub(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    zp_trim(
        (0..n)
            .map(|i| {
                let x = a.get(i).copied().unwrap_or(0);
                let y = b.get(i).copied().unwrap_or(0);
                (x + p - y) % p
            })
            .collect(),
    )
}

fn zp_add(a: &Zp, b: &Zp, p: u64) -> Zp {
    let n = a.len().max(b.len());
    zp_trim(
        (0..n)
            .map(|i| (a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0)) % p)
            .collect(),
    )
}

fn zp_mul(a: &Zp, b: &Zp, p: u64) -> Zp {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = ((out[i + j] as u128 + x as u128 * y as u128) % p as u128) as u64;
        }
    }
    zp_trim(out)
}

fn zp_divrem(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp) {
    let db = b.len() - 1;
    let inv = inv_mod(*b.last().unwrap(), p);
    let mut r = a.clone();
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut q = vec![0u64; r.len() - db];
    for k in (db..r.len()).rev() {
        let c = ((r[k] as u128 * inv as u128) % p as u128) as u64;
        if c == 0 {
            continue;
        }
        for (j, &bc) in b.iter().enumerate() {
            let t = ((c as u128 * bc as u128) % p as u128) as u64;
            r[k - db + j] = (r[k - db + j] + p - t) % p;
        }
        q[k - db] = c;
    }
    r.truncate(db);
    (zp_trim(q), zp_trim(r))
}

fn zp_monic(a: &Zp, p: u64) -> Zp {
    let inv = inv_mod(*a.last().unwrap(), p);
    a.iter()
        .map(|&c| ((c as u128 * inv as u128) % p as u128) as u64)
        .collect()
}

fn zp_gcd(a: &Zp, b: &Zp, p: u64) -> Zp {
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_empty() {
        let r = zp_divrem(&a, &b, p).1;
        a = b;
        b = r;
    }
    if a.is_empty() {
        a
    } else {
        zp_monic(&a, p)
    }
}

fn zp_xgcd(a: &Zp, b: &Zp, p: u64) -> (Zp, Zp, Zp) {
    let (mut r0, mut r1) = (a.clone(), b.clone());
    let (mut s0, mut s1) = (vec![1u64], Vec::new());
    let (mut t0, mut t1) = (Vec::new(), vec![1u64]);
    while !r1.is_empty() {
        let (q, r) = zp_divrem(&r0, &r1, p);
        r0 = std::mem::replace(&mut r1, r);
        let s = zp_sub(&s0, &zp_mul(&q, &s1, p), p);
        s0 = std::mem::replace(&mut s1, s);
        let t = zp_sub(&t0, &zp_mul(&q, &t1, p), p);
        t0 = std::mem::replace(&mut t1, t);
    }
    let inv = inv_mod(*r0.last().unwrap(), p);
    let sc = |v: &Zp| {
        zp_trim(
            v.iter()
                .map(|&c| ((c as u128 * inv as u128) % p as u128) as u64)
                .collect(),
        )
    };
    (sc(&r0), sc(&s0), sc(&t0))
}

fn zp_derivative(a: &Zp, p: u64) -> Zp {
    zp_trim(
        a.iter()
            .enumerate()
            .skip(1)
            .map(|(i, &c)| ((i as u128 % p as u128) * c as u128 % p as u128) as u64)
            .collect(),
    )
}

fn zp_powmod(base: &Zp, e: &BigUint, m: &Zp, p: u64) -> Zp {
    let mut acc = zp_divrem(&vec![1u64], m, p).1;
    let b = zp_divrem(base, m, p).1;
    for i in (0..e.bits()).rev() {
        acc = zp_divrem(&zp_mul(&acc, &acc, p), m, p).1;
        if e.bit(i) {
            acc = zp_divrem(&zp_mul(&acc, &b, p), m, p).1;
        }
    }
    acc
}

/// Distinct-degree factorization of a monic squarefree polynomial.
fn ddf(f: &Zp, p: u64) -> Vec<(Zp, usize)> {
    let mut out = Vec::new();
    let mut f = f.clone();
    let x = vec![0u64, 1];
    let mut h = x.clone();
    let mut i = 1;
    while f.len() > 2 * i {
        h = zp_powmod(&h, &BigUint::from(p), &f, p);
        let g = zp_gcd(&f, &zp_sub(&h, &x, p), p);
        if g.len() > 1 {
            f = zp_divrem(&f, &g, p).0;
            h = zp_divrem(&h, &f, p).1;
            out.push((g, i));
        }
        i += 1;
    }
    if f.len() > 1 {
        let d = f.len() - 1;
        out.push((f, d));
    }
    out
}

/// Cantor–Zassenhaus equal-degree splitting.
fn edf(f: &Zp, d: usize, p: u64, rng: &mut ChaCha8Rng, out: &mut Vec<Zp>) {
    let n = f.len() - 1;
    if n == d {
        out.push(f.clone());
        return;
    }
    let e = (BigUint::from(p).pow(d as u32) - 1u32) / 2u32;
    loop {
        let a: Zp = zp_trim((0..n).map(|_| rng.gen_range(0..p)).collect());
        if a.len() <= 1 {
            continue;
        }
        let b = zp_sub(&zp_powmod(&a, &e, f, p), &vec![1u64], p);
        let g = zp_gcd(f, &b, p);
        if g.len() > 1 && g.len() < f.len() {
            let q = zp_monic(&zp_divrem(f, &g, p).0, p);
            edf(&g, d, p, rng, out);
            edf(&q, d, p, rng, out);
            return;
        }
    }
}

fn small_primes() -> impl Iterator<Item = u64> {
    (3u64..).filter(|n| (2..*n).take_while(|d| d * d <= *n).all(|d| n % d != 0))
}

fn zassenhaus(f: &[BigInt]) -> Vec<Vec<BigInt>> {
    let n = f.len() - 1;
    let lc = f.last().unwrap().clone();
    // pick the best of a few suitable primes
    let mut best: Option<(u64, Vec<Zp>)> = None;
    let mut tried = 0;
    let mut rng = ChaCha8Rng::seed_from_u64(0x5e9a_7a7e);
    for p in small_primes() {
        if (&lc % BigInt::from(p)).is_zero() {
            continue;
        }
        let fp = zp_from_int(f, p);
        if fp.len() != n + 1 {
            continue;
        }
        let fm = zp_monic(&fp, p);
        if zp_gcd(&fm, &zp_derivative(&fm, p), p).len() != 1 {
            continue;
        }
        let mut facs = Vec::new();
        for (g, d) in ddf(&fm, p) {
            edf(&g, d, p, &mut rng, &mut facs);
        }
        if best.as_ref().is_none_or(|(_, b)| facs.len() < b.len()) {
            best = Some((p, facs));
        }
        tried += 1;
        if tried >= 4 {
            break;
        }
    }
    let (p, facs) = best.expect("a suitable prime exists for squarefree input");
    if facs.len() == 1 {
        return vec![f.to_vec()];
    }
    let maxc = f.iter().map(|c| c.abs()).max().unwrap();
    let bound = lc.abs() * (BigInt::one() << n) * BigInt::from(n + 1) * maxc;
    let pb = BigInt::from(p);
    let mut k = 1u32;
    let mut pk = pb.clone();
    while pk <= &bound * 2 {
        pk *= &pb;
        k += 1;
    }
    let lifted = hensel_lift(f, &facs, p, k);
    recombine(f.to_vec(), lifted, &pk)
}

fn zz_mul(a: &[BigInt], b: &[BigInt]) -> Vec<BigInt> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn zz_mod(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    a.iter().map(|c| c.mod_floor(m)).collect()
}

fn zp_to_zz(a: &Zp) -> Vec<BigInt> {
    a.iter().map(|&c| BigInt::from(c)).collect()
}

/// Lifts `f = lc * prod facs (mod p)` to the same shape modulo `p^k`; the
/// returned factors are monic.
fn hensel_lift(f: &[BigInt], facs: &[Zp], p: u64, k: u32) -> Vec<Vec<BigInt>> {
    let pk = BigInt::from(p).pow(k);
    let mut target = zz_mod(f, &pk);
    let mut out = Vec::new();
    for (idx, g0) in facs.iter().enumerate() {
        if idx + 1 == facs.len() {
            let lc = target.last().unwrap().clone();
            let inv = lc.modinv(&pk).expect("unit leading coefficient");
            out.push(zz_mod(
                &target.iter().map(|c| c * &inv).collect::<Vec<_>>(),
                &pk,
            ));
            break;
        }
        let lc = target
            .last()
            .unwrap()
            .mod_floor(&BigInt::from(p))
            .to_u64()
            .unwrap();
        let mut h0: Zp = vec![lc];
        for g in &facs[idx + 1..] {
            h0 = zp_mul(&h0, g, p);
        }
        let (g, h) = lift_pair(&target, g0, &h0, p, k);
        out.push(g);
        target = h;
    }
    out
}

fn lift_pair(t: &[BigInt], g0: &Zp, h0: &Zp, p: u64, k: u32) -> (Vec<BigInt>, Vec<BigInt>) {
    let (_, s, tt) = zp_xgcd(g0, h0, p);
    let mut g = zp_to_zz(g0);
    let mut h = zp_to_zz(h0);
    let pb = BigInt::from(p);
    let mut pj = pb.clone();
    for _ in 1..k {
        let pj1 = &pj * &pb;
        let prod = zz_mul(&g, &h);
        let n = t.len().max(prod.len());
        let e: Vec<BigInt> = (0..n)
            .map(|i| {
                let a = t.get(i).cloned().unwrap_or_default();
                let b = prod.get(i).cloned().unwrap_or_default();
                (a - b).mod_floor(&pj1) / &pj
            })
            .collect();
        let ep = zp_from_int(&e, p);
        let te = zp_mul(&tt, &ep, p);
        let (q, a) = zp_divrem(&te, g0, p);
        let b = zp_add(&zp_mul(&s, &ep, p), &zp_mul(&q, h0, p), p);
        let grow = |base: &mut Vec<BigInt>, delta: &Zp| {
            if base.len() < delta.len() {
                base.resize(delta.len(), BigInt::zero());
            }
            for (i, &c) in delta.iter().enumerate() {
                base[i] = (&base[i] + &pj * BigInt::from(c)).mod_floor(&pj1);
            }
        };
        grow(&mut g, &a);
        grow(&mut h, &b);
        pj = pj1;
    }
    (g, h)
}

fn symmetric(a: &[BigInt], m: &BigInt) -> Vec<BigInt> {
    let half: BigInt = m / 2;
    a.iter()
        .map(|c| {
            let r = c.mod_floor(m);
            if r > half {
                r - m
            } else {
                r
            }
        })
        .collect()
}

fn zz_div_exact(a: &[BigInt], b: &[BigInt]) -> Option<Vec<BigInt>> {
    let q = int_to_upoly(a).div_exact(&int_to_upoly(b))?;
    if q.coeffs().iter().all(|c| c.is_integer()) {
        Some(q.coeffs().iter().map(|c| c.to_integer()).collect())
    } else {
        None
    }
}

fn recombine(mut f: Vec<BigInt>, mut facs: Vec<Vec<BigInt>>, pk: &BigInt) -> Vec<Vec<BigInt>> {
    let mut out = Vec::new();
    let mut size = 1;
    while 2 * size <= facs.len() {
        let mut found = false;
        for subset in subsets(facs.len(), size) {
            let lc = f.last().unwrap().clone();
            let mut cand = vec![lc];
            for &i in &subset {
                cand = zz_mod(&zz_mul(&cand, &facs[i]), pk);
            }
            let cand = primitive(symmetric(&cand, pk));
            if let Some(q) = zz_div_exact(&f, &cand) {
                out.push(cand);
                f = q;
                facs = facs
                    .into_iter()
                    .enumerate()
                    .filter(|(i, _)| !subset.contains(i))
                    .map(|(_, v)| v)
                    .collect();
                found = true;
                break;
            }
        }
        if !found {
            size += 1;
        }
    }
    if f.len() > 1 {
        out.push(primitive(f));
    }
    out
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> UPoly<Rational> {
        UPoly::from_ints(c)
    }

    fn product(fs: &[(UPoly<Rational>, usize)]) -> UPoly<Rational> {
        fs.iter()
            .fold(UPoly::one(), |acc, (f, m)| acc.mul(&f.pow(*m as u64)))
    }

    #[test]
    fn factors_multiply_back() {
        let cases = [
            p(&[-1, 0, 0, 0, 1]),                     // u^4 - 1
            p(&[1, 0, 0, 0, 1]),                      // u^4 + 1, irreducible over Q
            p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1])),      // (u^2-2)(u^2-3)
            p(&[1, 1, 1]).pow(2).mul(&p(&[5, 0, 3])), // repeated factor
            p(&[-1, 0, 0, 0, 0, 0, 1]),               // u^6 - 1
            p(&[7, 0, 0, 11, 0, 0, 0, 0, 13]),
        ];
        for f in cases {
            let fs = factor(&f);
            assert_eq!(product(&fs), f.monic(), "{f}");
            for (g, _) in &fs {
                assert!(g.deg() >= 1);
            }
        }
    }

    #[test]
    fn irreducibility() {
        assert!(is_irreducible(&p(&[1, 0, 0, 0, 1])));
        assert!(is_irreducible(&p(&[1, 0, 1])));
        assert!(!is_irreducible(&p(&[-1, 0, 0, 0, 1])));
        assert_eq!(factor(&p(&[-1, 0, 0, 0, 0, 0, 1])).len(), 4);
        // Swinnerton-Dyer style: (u^2-2)(u^2-3) splits mod every prime into linears or quadratics
        assert_eq!(factor(&p(&[-2, 0, 1]).mul(&p(&[-3, 0, 1]))).len(), 2);
        // x^4 - 10x^2 + 1 is irreducible over Q but reducible mod every prime
        assert!(is_irreducible(&p(&[1, 0, -10, 0, 1])));
    }
}
