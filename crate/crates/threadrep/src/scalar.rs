//! Exact field arithmetic: arbitrary-precision rationals, prime fields
//! F_p, and prime-power extensions F_{p^d} behind a single runtime tag.
//!
//! All arithmetic is exact; there is no floating point anywhere in the
//! crate. Mixing elements of different fields is a caller bug and panics;
//! the matrix layer checks uniformity up front and reports
//! [`Error::FieldMismatch`](crate::Error::FieldMismatch) instead.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Zero};
use std::fmt;
use std::sync::Arc;

/// Default prime used by the CLI and the test suites: large enough that
/// the trace-form radical criterion is valid for every desk-scale algebra.
pub const DEFAULT_PRIME: u64 = 32003;

/// Context for an extension field F_{p^d} = F_p[t]/(modulus).
#[derive(Debug, PartialEq, Eq)]
pub struct ExtFieldCtx {
    pub p: u64,
    /// Monic irreducible modulus, low degree first, length d+1.
    pub modulus: Vec<u64>,
}

impl ExtFieldCtx {
    pub fn degree(&self) -> usize {
        self.modulus.len() - 1
    }
}

/// Handle describing which field scalars live in.
#[derive(Debug, Clone)]
pub enum FieldCtx {
    Rational,
    Prime(u64),
    PrimePower(Arc<ExtFieldCtx>),
}

impl PartialEq for FieldCtx {
    fn eq(&self, other: &Self) -> bool {
        match (self, other) {
            (FieldCtx::Rational, FieldCtx::Rational) => true,
            (FieldCtx::Prime(p), FieldCtx::Prime(q)) => p == q,
            (FieldCtx::PrimePower(a), FieldCtx::PrimePower(b)) => {
                a.p == b.p && a.modulus == b.modulus
            }
            _ => false,
        }
    }
}
impl Eq for FieldCtx {}

impl FieldCtx {
    pub fn zero(&self) -> Scalar {
        match self {
            FieldCtx::Rational => Scalar::Rat(BigRational::zero()),
            FieldCtx::Prime(p) => Scalar::Fp { p: *p, v: 0 },
            FieldCtx::PrimePower(ctx) => Scalar::Fq {
                ctx: ctx.clone(),
                coeffs: vec![0; ctx.degree()],
            },
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldCtx::Rational => Scalar::Rat(BigRational::one()),
            FieldCtx::Prime(p) => Scalar::Fp { p: *p, v: 1 % *p },
            FieldCtx::PrimePower(ctx) => {
                let mut c = vec![0; ctx.degree()];
                c[0] = 1;
                Scalar::Fq { ctx: ctx.clone(), coeffs: c }
            }
        }
    }

    pub fn from_i64(&self, n: i64) -> Scalar {
        match self {
            FieldCtx::Rational => Scalar::Rat(BigRational::from(BigInt::from(n))),
            FieldCtx::Prime(p) => Scalar::Fp { p: *p, v: n.rem_euclid(*p as i64) as u64 },
            FieldCtx::PrimePower(ctx) => {
                let mut c = vec![0; ctx.degree()];
                c[0] = n.rem_euclid(ctx.p as i64) as u64;
                Scalar::Fq { ctx: ctx.clone(), coeffs: c }
            }
        }
    }

    /// Characteristic of the field (0 for the rationals).
    pub fn characteristic(&self) -> u64 {
        match self {
            FieldCtx::Rational => 0,
            FieldCtx::Prime(p) => *p,
            FieldCtx::PrimePower(ctx) => ctx.p,
        }
    }

    /// Builds F_{p^d} over this prime field. Panics when called on the
    /// rationals (extension requests only arise over finite fields).
    pub fn extend(&self, d: usize) -> FieldCtx {
        let p = match self {
            FieldCtx::Prime(p) => *p,
            FieldCtx::PrimePower(ctx) => {
                // Tower collapse: F_{p^a} extended by degree d is modeled
                // as F_{p^{a*d}} over the prime field.
                return FieldCtx::Prime(ctx.p).extend(ctx.degree() * d);
            }
            FieldCtx::Rational => panic!("field extension over the rationals is not supported"),
        };
        if d <= 1 {
            return FieldCtx::Prime(p);
        }
        let modulus = crate::polyfp::find_irreducible(p, d);
        FieldCtx::PrimePower(Arc::new(ExtFieldCtx { p, modulus }))
    }

    /// Embeds a scalar of the base field into this (extension) field.
    pub fn embed(&self, s: &Scalar) -> Scalar {
        match (self, s) {
            (FieldCtx::PrimePower(ctx), Scalar::Fp { p, v }) => {
                assert_eq!(ctx.p, *p, "embedding across different characteristics");
                let mut c = vec![0; ctx.degree()];
                c[0] = *v;
                Scalar::Fq { ctx: ctx.clone(), coeffs: c }
            }
            _ if self == &s.ctx() => s.clone(),
            _ => panic!("unsupported field embedding"),
        }
    }
}

/// An exact field element.
#[derive(Debug, Clone)]
pub enum Scalar {
    /// Arbitrary-precision rational, kept in lowest terms with positive
    /// denominator by `num`.
    Rat(BigRational),
    /// Element of F_p.
    Fp { p: u64, v: u64 },
    /// Element of F_{p^d}: coefficients low degree first, length d.
    Fq { ctx: Arc<ExtFieldCtx>, coeffs: Vec<u64> },
}

fn addm(a: u64, b: u64, p: u64) -> u64 {
    let s = a + b;
    if s >= p { s - p } else { s }
}
fn subm(a: u64, b: u64, p: u64) -> u64 {
    if a >= b { a - b } else { a + p - b }
}
fn mulm(a: u64, b: u64, p: u64) -> u64 {
    ((a as u128 * b as u128) % p as u128) as u64
}
pub(crate) fn powm(mut a: u64, mut e: u64, p: u64) -> u64 {
    let mut r = 1u64 % p;
    a %= p;
    while e > 0 {
        if e & 1 == 1 {
            r = mulm(r, a, p);
        }
        a = mulm(a, a, p);
        e >>= 1;
    }
    r
}
pub(crate) fn invm(a: u64, p: u64) -> u64 {
    assert!(a % p != 0, "inverse of zero in F_p");
    powm(a, p - 2, p)
}

impl Scalar {
    pub fn ctx(&self) -> FieldCtx {
        match self {
            Scalar::Rat(_) => FieldCtx::Rational,
            Scalar::Fp { p, .. } => FieldCtx::Prime(*p),
            Scalar::Fq { ctx, .. } => FieldCtx::PrimePower(ctx.clone()),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
            Scalar::Fq { coeffs, .. } => coeffs.iter().all(|&c| c == 0),
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { p, v } => *v == 1 % *p,
            Scalar::Fq { coeffs, .. } => coeffs[0] == 1 && coeffs[1..].iter().all(|&c| c == 0),
        }
    }

    fn same_field(&self, other: &Scalar) -> bool {
        self.ctx() == other.ctx()
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        assert!(self.same_field(other), "scalar arithmetic across fields");
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a + b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { p: *p, v: addm(*a, *b, *p) }
            }
            (Scalar::Fq { ctx, coeffs: a }, Scalar::Fq { coeffs: b, .. }) => Scalar::Fq {
                ctx: ctx.clone(),
                coeffs: a.iter().zip(b).map(|(x, y)| addm(*x, *y, ctx.p)).collect(),
            },
            _ => unreachable!(),
        }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        assert!(self.same_field(other), "scalar arithmetic across fields");
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a - b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { p: *p, v: subm(*a, *b, *p) }
            }
            (Scalar::Fq { ctx, coeffs: a }, Scalar::Fq { coeffs: b, .. }) => Scalar::Fq {
                ctx: ctx.clone(),
                coeffs: a.iter().zip(b).map(|(x, y)| subm(*x, *y, ctx.p)).collect(),
            },
            _ => unreachable!(),
        }
    }

    pub fn neg(&self) -> Scalar {
        self.ctx().zero().sub(self)
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        assert!(self.same_field(other), "scalar arithmetic across fields");
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat(a * b),
            (Scalar::Fp { p, v: a }, Scalar::Fp { v: b, .. }) => {
                Scalar::Fp { p: *p, v: mulm(*a, *b, *p) }
            }
            (Scalar::Fq { ctx, coeffs: a }, Scalar::Fq { coeffs: b, .. }) => {
                let d = ctx.degree();
                let mut prod = vec![0u64; 2 * d - 1];
                for (i, x) in a.iter().enumerate() {
                    if *x == 0 {
                        continue;
                    }
                    for (j, y) in b.iter().enumerate() {
                        prod[i + j] = addm(prod[i + j], mulm(*x, *y, ctx.p), ctx.p);
                    }
                }
                // reduce modulo the monic modulus
                for i in (d..prod.len()).rev() {
                    let c = prod[i];
                    if c == 0 {
                        continue;
                    }
                    prod[i] = 0;
                    for (j, m) in ctx.modulus[..d].iter().enumerate() {
                        let idx = i - d + j;
                        prod[idx] = subm(prod[idx], mulm(c, *m, ctx.p), ctx.p);
                    }
                }
                prod.truncate(d);
                Scalar::Fq { ctx: ctx.clone(), coeffs: prod }
            }
            _ => unreachable!(),
        }
    }

    /// Multiplicative inverse of a nonzero element.
    pub fn inv(&self) -> Scalar {
        assert!(!self.is_zero(), "inverse of zero");
        match self {
            Scalar::Rat(a) => Scalar::Rat(a.recip()),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: invm(*v, *p) },
            Scalar::Fq { ctx, coeffs } => {
                // extended Euclid in F_p[t] against the modulus
                let inv = crate::polyfp::invert_mod(coeffs, &ctx.modulus, ctx.p);
                Scalar::Fq { ctx: ctx.clone(), coeffs: inv }
            }
        }
    }

    pub fn div(&self, other: &Scalar) -> Scalar {
        self.mul(&other.inv())
    }

    pub fn eq_scalar(&self, other: &Scalar) -> bool {
        self.same_field(other) && self.sub(other).is_zero()
    }
}

impl PartialEq for Scalar {
    fn eq(&self, other: &Self) -> bool {
        self.eq_scalar(other)
    }
}
impl Eq for Scalar {}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{v}"),
            Scalar::Fq { coeffs, .. } => {
                let terms: Vec<String> = coeffs
                    .iter()
                    .enumerate()
                    .filter(|(_, c)| **c != 0)
                    .map(|(i, c)| match i {
                        0 => format!("{c}"),
                        1 => format!("{c}t"),
                        _ => format!("{c}t^{i}"),
                    })
                    .collect();
                if terms.is_empty() {
                    write!(f, "0")
                } else {
                    write!(f, "{}", terms.join("+"))
                }
            }
        }
    }
}

/// Parses a rational written as `"p/q"` or `"p"`.
pub fn parse_rational(s: &str) -> Option<BigRational> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: BigInt = s.parse().ok()?;
        Some(BigRational::from(n))
    }
}

/// Formats a rational as `"p/q"` (or `"p"` when integral).
pub fn format_rational(r: &BigRational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Deterministic splitmix-style generator used for idempotent probing and
/// the randomized test drivers. Not cryptographic.
#[derive(Debug, Clone)]
pub struct Rng64 {
    state: u64,
}

impl Rng64 {
    pub fn new(seed: u64) -> Self {
        Rng64 { state: seed.wrapping_add(0x9e3779b97f4a7c15) }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        assert!(n > 0);
        self.next_u64() % n
    }

    pub fn scalar(&mut self, ctx: &FieldCtx) -> Scalar {
        match ctx {
            FieldCtx::Rational => {
                let n = self.below(19) as i64 - 9;
                Scalar::Rat(BigRational::from(BigInt::from(n)))
            }
            FieldCtx::Prime(p) => Scalar::Fp { p: *p, v: self.below(*p) },
            FieldCtx::PrimePower(ctx_) => {
                let coeffs = (0..ctx_.degree()).map(|_| self.below(ctx_.p)).collect();
                Scalar::Fq { ctx: ctx_.clone(), coeffs }
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rational_lowest_terms() {
        let a = parse_rational("6/4").unwrap();
        assert_eq!(format_rational(&a), "3/2");
        let b = parse_rational("-3/-6").unwrap();
        assert_eq!(format_rational(&b), "1/2");
    }

    #[test]
    fn fp_field_ops() {
        let f = FieldCtx::Prime(7);
        let a = f.from_i64(3);
        let b = f.from_i64(5);
        assert!(a.mul(&b).eq_scalar(&f.from_i64(1)));
        assert!(a.inv().eq_scalar(&b));
        assert!(a.add(&b).eq_scalar(&f.from_i64(1)));
        assert!(a.sub(&b).eq_scalar(&f.from_i64(-2)));
    }

    #[test]
    fn fq_field_ops() {
        let f = FieldCtx::Prime(3).extend(2);
        // every nonzero element of F_9 has an inverse
        if let FieldCtx::PrimePower(ctx) = &f {
            for a0 in 0..3u64 {
                for a1 in 0..3u64 {
                    if a0 == 0 && a1 == 0 {
                        continue;
                    }
                    let s = Scalar::Fq { ctx: ctx.clone(), coeffs: vec![a0, a1] };
                    assert!(s.mul(&s.inv()).is_one());
                }
            }
        } else {
            panic!("expected extension field");
        }
    }

    #[test]
    #[should_panic]
    fn mixed_fields_panic() {
        let a = FieldCtx::Prime(7).one();
        let b = FieldCtx::Prime(11).one();
        let _ = a.add(&b);
    }
}
