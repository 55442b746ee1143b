//! `p`-adic valuations, prime-power cyclotomic polynomials, and the
//! Weierstrass invariants of `f(1+T)` over the `p`-adic integers.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::laurent::UniPoly;
use crate::{Error, Result};

/// A rational prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::NotPrime(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }

    pub fn big(self) -> BigInt {
        BigInt::from(self.0)
    }

    /// `p^n` as a big integer.
    pub fn pow(self, n: u32) -> BigInt {
        num_traits::pow(self.big(), n as usize)
    }

    /// `p^{n-1} (p - 1)`, the degree of `Phi_{p^n}`; `n >= 1`.
    pub fn phi_degree(self, n: u32) -> u64 {
        assert!(n >= 1);
        self.0.pow(n - 1) * (self.0 - 1)
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Additive `p`-adic valuation; zero has valuation `Infinity`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Valuation {
    Finite(u64),
    Infinity,
}

impl Valuation {
    pub fn finite(self) -> Option<u64> {
        match self {
            Valuation::Finite(v) => Some(v),
            Valuation::Infinity => None,
        }
    }
}

impl fmt::Display for Valuation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Valuation::Finite(v) => v.fmt(f),
            Valuation::Infinity => f.write_str("inf"),
        }
    }
}

pub fn vp(x: &BigInt, p: Prime) -> Valuation {
    vp_unsigned(x.magnitude(), p)
}

/// Valuation of a natural number. Divides by `p^(2^j)` with doubling
/// exponents first so that very large orders stay cheap.
pub fn vp_unsigned(x: &BigUint, p: Prime) -> Valuation {
    if x.is_zero() {
        return Valuation::Infinity;
    }
    let mut x = x.clone();
    let mut powers = vec![BigUint::from(p.get())];
    let mut v = 0u64;
    loop {
        let top = powers.last().unwrap();
        let (q, r) = x.div_rem(top);
        if !r.is_zero() {
            break;
        }
        x = q;
        v += 1 << (powers.len() - 1);
        let sq = top * top;
        powers.push(sq);
    }
    for (j, pw) in powers.iter().enumerate().rev() {
        loop {
            let (q, r) = x.div_rem(pw);
            if !r.is_zero() {
                break;
            }
            x = q;
            v += 1 << j;
        }
    }
    Valuation::Finite(v)
}

pub fn vp_i64(x: i64, p: Prime) -> Valuation {
    vp(&BigInt::from(x), p)
}

/// `Phi_{p^n}(t) = sum_{i<p} t^{i p^{n-1}}`, for `n >= 1`.
pub fn cyclotomic(p: Prime, n: u32) -> UniPoly {
    assert!(n >= 1, "cyclotomic level must be at least 1");
    let step = p.get().pow(n - 1) as usize;
    let mut coeffs = vec![BigInt::zero(); step * (p.get() as usize - 1) + 1];
    for i in 0..p.get() as usize {
        coeffs[i * step] = BigInt::one();
    }
    UniPoly::from_coeffs(coeffs)
}

/// `f(1 + T)`.
pub fn shift_to_t(f: &UniPoly) -> UniPoly {
    f.taylor_shift_one()
}

/// `mu` and `lambda` of `f(1+T) = p^mu P(T) U(T)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct WeierstrassData {
    pub mu: u64,
    pub lambda: u64,
    pub shifted_degree: u64,
}

/// For integer polynomials the decomposition is read off directly: `mu` is
/// the least valuation among the coefficients of `f(1+T)` and `lambda` the
/// first index attaining it.
pub fn weierstrass_invariants(f: &UniPoly, p: Prime) -> Result<WeierstrassData> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let shifted = shift_to_t(f);
    let mut best: Option<(u64, usize)> = None;
    for (i, c) in shifted.coeffs().iter().enumerate() {
        if let Valuation::Finite(v) = vp(c, p) {
            if best.is_none_or(|(b, _)| v < b) {
                best = Some((v, i));
            }
        }
    }
    let (mu, lambda) = best.expect("nonzero polynomial has a nonzero shifted coefficient");
    Ok(WeierstrassData {
        mu,
        lambda: lambda as u64,
        shifted_degree: shifted.degree().unwrap() as u64,
    })
}

/// The distinguished polynomial `P(T)` modulo `p^k`, with the cofactor
/// `U(T)` such that `f(1+T) / p^mu = P(T) U(T)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DistinguishedPart {
    pub p: Prime,
    pub precision: u32,
    pub modulus: BigInt,
    pub mu: u64,
    /// Coefficients of `P` reduced into `[0, p^k)`; monic of degree lambda.
    pub coeffs: Vec<BigInt>,
    /// Coefficients of `U` reduced into `[0, p^k)`.
    pub unit: Vec<BigInt>,
}

impl DistinguishedPart {
    pub fn lambda(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `P(x) mod p^k`.
    pub fn eval_mod(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(&self.modulus))
    }
}

pub const DEFAULT_PRECISION: u32 = 8;

fn reduce(v: &mut [BigInt], m: &BigInt) {
    for c in v.iter_mut() {
        *c = c.mod_floor(m);
    }
}

fn mul_trunc(a: &[BigInt], b: &[BigInt], len: usize, m: &BigInt) -> Vec<BigInt> {
    let mut out = vec![BigInt::zero(); len];
    for (i, x) in a.iter().enumerate().take(len) {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(len - i) {
            out[i + j] += x * y;
        }
    }
    reduce(&mut out, m);
    out
}

fn inverse_series(b: &[BigInt], len: usize, m: &BigInt) -> Vec<BigInt> {
    let b0_inv = mod_inverse(&b[0], m).expect("constant term is a unit");
    let mut inv = vec![BigInt::zero(); len];
    inv[0] = b0_inv.clone();
    for n in 1..len {
        let mut s = BigInt::zero();
        for i in 1..=n.min(b.len() - 1) {
            s += &b[i] * &inv[n - i];
        }
        inv[n] = (-s * &b0_inv).mod_floor(m);
    }
    inv
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

/// Computes `P` modulo `p^k` by Weierstrass division of `T^lambda` by
/// `g = f(1+T) / p^mu`, then checks `g = P U` by dividing `g` by the monic
/// `P` over `Z/p^k`.
pub fn distinguished_part(f: &UniPoly, p: Prime, k: u32) -> Result<DistinguishedPart> {
    if k == 0 {
        return Err(Error::InvalidParameter("precision must be at least 1".into()));
    }
    let data = weierstrass_invariants(f, p)?;
    let modulus = p.pow(k);
    let pmu = p.pow(data.mu as u32);
    let lambda = data.lambda as usize;
    let mut g: Vec<BigInt> = shift_to_t(f).coeffs().iter().map(|c| c / &pmu).collect();
    reduce(&mut g, &modulus);

    let p_coeffs = if lambda == 0 {
        vec![BigInt::one()]
    } else {
        // g = A + T^lambda B with A = 0 mod p and B(0) a unit.
        let len = (k as usize + 2) * lambda + 1;
        let a: Vec<BigInt> = g[..lambda].to_vec();
        let mut b: Vec<BigInt> = g[lambda..].to_vec();
        b.resize(len, BigInt::zero());
        let b_inv = inverse_series(&b, len, &modulus);
        let a_over_b = mul_trunc(&a, &b_inv, len, &modulus);

        // q B = sum_j (-S)^j (1) with S(h) = tau(h A / B); tau drops lambda
        // low coefficients. S gains a factor p each time.
        let mut h = vec![BigInt::zero(); len];
        h[0] = BigInt::one();
        let mut acc = vec![BigInt::zero(); len];
        for _ in 0..=k {
            for (x, y) in acc.iter_mut().zip(&h) {
                *x += y;
            }
            let prod = mul_trunc(&h, &a_over_b, len, &modulus);
            h = prod
                .into_iter()
                .skip(lambda)
                .chain(std::iter::repeat_n(BigInt::zero(), lambda))
                .map(|c| -c)
                .collect();
        }
        reduce(&mut acc, &modulus);
        let q = mul_trunc(&acc, &b_inv, len, &modulus);
        // P = q g; its coefficients below lambda are what we keep.
        let qg = mul_trunc(&q, &g, len, &modulus);
        let mut coeffs: Vec<BigInt> = qg[..lambda].to_vec();
        coeffs.push(BigInt::one());
        coeffs
    };

    // Back-multiplication: g = P U exactly over Z/p^k.
    let dp = lambda;
    let mut rem = g.clone();
    let dg = rem.len() - 1;
    let mut unit = vec![BigInt::zero(); dg - dp + 1];
    for i in (dp..=dg).rev() {
        let c = rem[i].mod_floor(&modulus);
        if c.is_zero() {
            continue;
        }
        for (j, pc) in p_coeffs.iter().enumerate() {
            rem[i - dp + j] -= &c * pc;
        }
        unit[i - dp] = c;
    }
    reduce(&mut rem, &modulus);
    if rem.iter().any(|c| !c.is_zero()) || unit[0].mod_floor(&p.big()).is_zero() {
        return Err(Error::CertificateFailure(
            "distinguished polynomial does not divide f(1+T) modulo p^k".into(),
        ));
    }
    if p_coeffs[..dp].iter().any(|c| !(c % p.big()).is_zero()) {
        return Err(Error::CertificateFailure("polynomial is not distinguished".into()));
    }
    Ok(DistinguishedPart {
        p,
        precision: k,
        modulus,
        mu: data.mu,
        coeffs: p_coeffs,
        unit,
    })
}
