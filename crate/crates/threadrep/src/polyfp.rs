//! Polynomial arithmetic over F_p: gcd, modular exponentiation,
//! squarefree/distinct-degree/equal-degree splitting, and irreducible
//! modulus search. Polynomials are coefficient vectors, low degree first,
//! normalized so the leading coefficient is nonzero.

use crate::scalar::{invm, Rng64};

fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}

pub fn trim(mut f: Vec<u64>) -> Vec<u64> {
    while f.last() == Some(&0) {
        f.pop();
    }
    f
}

pub fn deg(f: &[u64]) -> Option<usize> {
    if f.is_empty() {
        None
    } else {
        Some(f.len() - 1)
    }
}

pub fn add(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let n = f.len().max(g.len());
    let mut out = vec![0; n];
    for (i, o) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *o = (a + b) % p;
    }
    trim(out)
}

pub fn sub(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let n = f.len().max(g.len());
    let mut out = vec![0; n];
    for (i, o) in out.iter_mut().enumerate() {
        let a = f.get(i).copied().unwrap_or(0);
        let b = g.get(i).copied().unwrap_or(0);
        *o = (a + p - b) % p;
    }
    trim(out)
}

pub fn mul(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    if f.is_empty() || g.is_empty() {
        return vec![];
    }
    let mut out = vec![0u64; f.len() + g.len() - 1];
    for (i, a) in f.iter().enumerate() {
        if *a == 0 {
            continue;
        }
        for (j, b) in g.iter().enumerate() {
            out[i + j] = (out[i + j] + mulm(*a, *b, p)) % p;
        }
    }
    trim(out)
}

pub fn scale(f: &[u64], c: u64, p: u64) -> Vec<u64> {
    trim(f.iter().map(|a| mulm(*a, c, p)).collect())
}

/// Division with remainder by a nonzero divisor; returns (quotient, remainder).
pub fn divrem(f: &[u64], g: &[u64], p: u64) -> (Vec<u64>, Vec<u64>) {
    let g = trim(g.to_vec());
    assert!(!g.is_empty(), "division by zero polynomial");
    let mut r = trim(f.to_vec());
    let dg = g.len() - 1;
    if r.len() <= dg && !(r.len() == g.len()) && r.len() < g.len() {
        return (vec![], r);
    }
    let lginv = invm(*g.last().unwrap(), p);
    let mut q = vec![0u64; r.len().saturating_sub(dg)];
    while !r.is_empty() && r.len() - 1 >= dg {
        let shift = r.len() - 1 - dg;
        let c = mulm(*r.last().unwrap(), lginv, p);
        q[shift] = c;
        for (j, gj) in g.iter().enumerate() {
            let idx = shift + j;
            r[idx] = (r[idx] + p - mulm(c, *gj, p)) % p;
        }
        r = trim(r);
        if dg == 0 {
            break;
        }
    }
    (trim(q), r)
}

pub fn rem(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    divrem(f, g, p).1
}

pub fn monic(f: &[u64], p: u64) -> Vec<u64> {
    let f = trim(f.to_vec());
    match f.last() {
        None => f,
        Some(&l) if l == 1 => f,
        Some(&l) => scale(&f, invm(l, p), p),
    }
}

pub fn gcd(f: &[u64], g: &[u64], p: u64) -> Vec<u64> {
    let mut a = trim(f.to_vec());
    let mut b = trim(g.to_vec());
    while !b.is_empty() {
        let r = rem(&a, &b, p);
        a = b;
        b = r;
    }
    monic(&a, p)
}

pub fn derivative(f: &[u64], p: u64) -> Vec<u64> {
    if f.len() <= 1 {
        return vec![];
    }
    trim(
        f.iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| mulm(i as u64 % p, *c, p))
            .collect(),
    )
}

pub fn mulmod(f: &[u64], g: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    rem(&mul(f, g, p), m, p)
}

/// Computes base^e mod m in F_p[t].
pub fn powmod(base: &[u64], mut e: u128, m: &[u64], p: u64) -> Vec<u64> {
    let mut result = rem(&[1], m, p);
    let mut b = rem(base, m, p);
    while e > 0 {
        if e & 1 == 1 {
            result = mulmod(&result, &b, m, p);
        }
        b = mulmod(&b, &b, m, p);
        e >>= 1;
    }
    result
}

/// Inverse of f modulo m (extended Euclid); panics when not coprime.
pub fn invert_mod(f: &[u64], m: &[u64], p: u64) -> Vec<u64> {
    // maintain r0 = s0*f mod m invariantly
    let mut r0 = trim(m.to_vec());
    let mut r1 = rem(f, m, p);
    let mut s0: Vec<u64> = vec![];
    let mut s1: Vec<u64> = vec![1];
    while !r1.is_empty() {
        let (q, r) = divrem(&r0, &r1, p);
        let s = sub(&s0, &mul(&q, &s1, p), p);
        r0 = r1;
        r1 = r;
        s0 = s1;
        s1 = s;
    }
    assert_eq!(deg(&r0), Some(0), "inverse of non-unit modulo m");
    let c = invm(r0[0], p);
    let mut out = scale(&s0, c, p);
    out = rem(&out, m, p);
    let d = m.len() - 1;
    out.resize(d, 0);
    out
}

/// Squarefree part f / gcd(f, f'). Valid whenever deg f < p, which holds
/// everywhere in this crate (minimal polynomials of algebras of dimension
/// below the characteristic).
pub fn squarefree_part(f: &[u64], p: u64) -> Vec<u64> {
    let f = monic(f, p);
    let d = derivative(&f, p);
    if d.is_empty() {
        return f;
    }
    let g = gcd(&f, &d, p);
    monic(&divrem(&f, &g, p).0, p)
}

/// Splits a squarefree monic f into a nontrivial coprime pair when its
/// irreducible factors do not all share one degree. Returns (g, f/g).
pub fn distinct_degree_split(f: &[u64], p: u64) -> Option<(Vec<u64>, Vec<u64>)> {
    let f = monic(f, p);
    let n = deg(&f)?;
    if n < 2 {
        return None;
    }
    let x = vec![0, 1];
    let mut xpk = x.clone();
    for _k in 1..=n / 2 + 1 {
        // x^{p^k} mod f, iterated
        xpk = powmod(&xpk, p as u128, &f, p);
        let g = gcd(&sub(&xpk, &x, p), &f, p);
        if !g.is_empty() && deg(&g) != Some(0) && deg(&g) != Some(n) {
            let (q, r) = divrem(&f, &g, p);
            assert!(r.is_empty());
            return Some((g, q));
        }
    }
    None
}

/// Cantor–Zassenhaus equal-degree splitting for odd p; f squarefree monic
/// with all irreducible factors of degree d, at least two of them.
pub fn equal_degree_split(f: &[u64], d: usize, p: u64, rng: &mut Rng64) -> (Vec<u64>, Vec<u64>) {
    let f = monic(f, p);
    let n = deg(&f).unwrap();
    assert!(n > d && n % d == 0);
    let e: u128 = (p as u128).pow(d as u32) / 2; // (p^d - 1)/2 for odd p
    loop {
        let a: Vec<u64> = (0..n).map(|_| rng.below(p)).collect();
        let a = trim(a);
        if deg(&a).map_or(true, |x| x == 0) {
            continue;
        }
        let g = gcd(&a, &f, p);
        if deg(&g) != Some(0) {
            let (q, _) = divrem(&f, &g, p);
            return (g, q);
        }
        let b = powmod(&a, e, &f, p);
        let g = gcd(&sub(&b, &[1], p), &f, p);
        if !g.is_empty() && deg(&g) != Some(0) && deg(&g) != Some(n) {
            let (q, r) = divrem(&f, &g, p);
            assert!(r.is_empty());
            return (g, q);
        }
    }
}

/// Splits a squarefree monic polynomial with at least two irreducible
/// factors into a coprime pair. Deterministic when factor degrees differ;
/// seeded Cantor–Zassenhaus otherwise.
pub fn coprime_split(f: &[u64], p: u64, rng: &mut Rng64) -> Option<(Vec<u64>, Vec<u64>)> {
    let f = monic(f, p);
    let n = deg(&f)?;
    if n < 2 {
        return None;
    }
    if let Some(pair) = distinct_degree_split(&f, p) {
        return Some(pair);
    }
    // all factors share a degree d: find it via x^{p^d} = x mod f
    let x = vec![0, 1];
    let mut xpk = x.clone();
    for d in 1..=n {
        xpk = powmod(&xpk, p as u128, &f, p);
        if sub(&xpk, &x, p).is_empty() {
            if d == n {
                return None; // irreducible
            }
            return Some(equal_degree_split(&f, d, p, rng));
        }
    }
    None
}

pub fn is_irreducible(f: &[u64], p: u64) -> bool {
    let f = monic(f, p);
    let n = match deg(&f) {
        Some(n) if n >= 1 => n,
        _ => return false,
    };
    if n == 1 {
        return true;
    }
    let x = vec![0, 1];
    // x^{p^n} = x mod f and gcd(x^{p^{n/q}} - x, f) = 1 for prime q | n
    let mut xpk = x.clone();
    let mut powers = Vec::with_capacity(n);
    for _ in 0..n {
        xpk = powmod(&xpk, p as u128, &f, p);
        powers.push(xpk.clone());
    }
    if !sub(&powers[n - 1], &x, p).is_empty() {
        return false;
    }
    let mut m = n;
    let mut primes = vec![];
    let mut q = 2;
    while q * q <= m {
        if m % q == 0 {
            primes.push(q);
            while m % q == 0 {
                m /= q;
            }
        }
        q += 1;
    }
    if m > 1 {
        primes.push(m);
    }
    for q in primes {
        let g = gcd(&sub(&powers[n / q - 1], &x, p), &f, p);
        if deg(&g) != Some(0) {
            return false;
        }
    }
    true
}

/// Finds a monic irreducible polynomial of degree d over F_p by a
/// deterministic sweep.
pub fn find_irreducible(p: u64, d: usize) -> Vec<u64> {
    assert!(d >= 2);
    let mut rng = Rng64::new(0x1dea1);
    // try sparse candidates first: t^d + a t + b
    for b in 1..p.min(200) {
        for a in 0..p.min(200) {
            let mut f = vec![0u64; d + 1];
            f[d] = 1;
            f[1] = a;
            f[0] = b;
            if is_irreducible(&f, p) {
                return f;
            }
        }
    }
    loop {
        let mut f: Vec<u64> = (0..d).map(|_| rng.below(p)).collect();
        f.push(1);
        if is_irreducible(&f, p) {
            return f;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn divrem_roundtrip() {
        let p = 13;
        let f = vec![1, 2, 3, 4, 5];
        let g = vec![7, 1, 2];
        let (q, r) = divrem(&f, &g, p);
        let back = add(&mul(&q, &g, p), &r, p);
        assert_eq!(trim(f), back);
    }

    #[test]
    fn gcd_of_multiples() {
        let p = 13;
        let a = vec![1, 1]; // t + 1
        let b = vec![2, 1]; // t + 2
        let f = mul(&a, &b, p);
        assert_eq!(gcd(&f, &a, p), monic(&a, p));
    }

    #[test]
    fn splits_product_of_linears() {
        let p = 32003;
        // t(t-1): the split behind every idempotent search
        let f = vec![0, p - 1, 1];
        let mut rng = Rng64::new(7);
        let (g, h) = coprime_split(&f, p, &mut rng).unwrap();
        assert_eq!(deg(&g), Some(1));
        assert_eq!(deg(&h), Some(1));
    }

    #[test]
    fn irreducible_search() {
        let f = find_irreducible(32003, 2);
        assert!(is_irreducible(&f, 32003));
        assert_eq!(deg(&f), Some(2));
        assert!(coprime_split(&f, 32003, &mut Rng64::new(1)).is_none());
    }

    #[test]
    fn equal_degree_case() {
        let p = 32003;
        // product of two distinct irreducible quadratics
        let f1 = find_irreducible(p, 2);
        let mut f2 = f1.clone();
        // shift t -> t+1 gives another irreducible quadratic
        // f2(t) = f1(t+1)
        let t1 = vec![1, 1];
        let mut acc = vec![f1[0]];
        let mut pow = vec![1];
        for c in f1.iter().skip(1) {
            pow = mul(&pow, &t1, p);
            acc = add(&acc, &scale(&pow, *c, p), p);
        }
        f2 = acc;
        let f = mul(&f1, &f2, p);
        let mut rng = Rng64::new(3);
        if gcd(&f1, &f2, p).len() > 1 {
            return; // degenerate shift; nothing to test
        }
        let (g, h) = coprime_split(&f, p, &mut rng).unwrap();
        assert_eq!(deg(&g).unwrap() + deg(&h).unwrap(), 4);
    }
}
