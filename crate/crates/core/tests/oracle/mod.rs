//! Exact products of polynomial values over roots of unity, computed as
//! Galois norms in `Z[x] / Phi_d(x)`. Shares no code with the library's
//! resultant or root-power paths.

#![allow(dead_code)]

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type Poly = Vec<BigInt>;

fn trim(mut a: Poly) -> Poly {
    while a.last().is_some_and(Zero::is_zero) {
        a.pop();
    }
    a
}

fn mul(a: &[BigInt], b: &[BigInt]) -> Poly {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![BigInt::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

/// Remainder modulo a monic polynomial.
fn rem_monic(a: &[BigInt], m: &[BigInt]) -> Poly {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    while r.len() > dm {
        let top = r.pop().unwrap();
        if top.is_zero() {
            continue;
        }
        let off = r.len() - dm;
        for (j, c) in m[..dm].iter().enumerate() {
            r[off + j] -= &top * c;
        }
    }
    trim(r)
}

fn div_monic_exact(a: &[BigInt], m: &[BigInt]) -> Poly {
    let dm = m.len() - 1;
    let mut r = a.to_vec();
    let mut q = vec![BigInt::zero(); r.len() - dm];
    for i in (dm..r.len()).rev() {
        let c = r[i].clone();
        q[i - dm] = c.clone();
        for (j, mc) in m.iter().enumerate() {
            r[i - dm + j] -= &c * mc;
        }
    }
    assert!(r.iter().all(Zero::is_zero), "inexact cyclotomic division");
    trim(q)
}

/// `Phi_d` by dividing `x^d - 1` by every `Phi_e`, `e | d`, `e < d`.
pub fn cyclotomic(d: u64) -> Poly {
    let mut f = vec![BigInt::zero(); d as usize + 1];
    f[0] = -BigInt::one();
    f[d as usize] = BigInt::one();
    for e in 1..d {
        if d.is_multiple_of(e) {
            f = div_monic_exact(&f, &cyclotomic(e));
        }
    }
    f
}

fn eval(f: &[BigInt], x: &BigInt) -> BigInt {
    f.iter().rev().fold(BigInt::zero(), |acc, c| acc * x + c)
}

/// `prod f(zeta)` over the primitive `d`-th roots of unity.
pub fn norm(f: &[BigInt], d: u64) -> BigInt {
    if d == 1 {
        return eval(f, &BigInt::one());
    }
    let phi = cyclotomic(d);
    let mut acc: Poly = vec![BigInt::one()];
    for k in (1..d).filter(|k| k.gcd(&d) == 1) {
        // f(x^k) mod Phi_d
        let mut conj = vec![BigInt::zero(); (f.len().max(1) - 1) * k as usize + 1];
        for (i, c) in f.iter().enumerate() {
            conj[i * k as usize] += c;
        }
        let conj = rem_monic(&trim(conj), &phi);
        acc = rem_monic(&mul(&acc, &conj), &phi);
    }
    match acc.len() {
        0 => BigInt::zero(),
        1 => acc[0].clone(),
        _ => panic!("norm is not rational"),
    }
}

/// `|prod f(zeta)|` over all `zeta` with `zeta^{p^n} = 1` and
/// `zeta^{p^v} != 1`.
pub fn tower_product(f: &[BigInt], p: u64, v: u32, n: u32) -> BigInt {
    let mut acc = BigInt::one();
    for m in v + 1..=n {
        acc *= norm(f, p.pow(m));
    }
    num_traits::Signed::abs(&acc)
}

pub fn from_i64s(c: &[i64]) -> Poly {
    trim(c.iter().map(|&x| BigInt::from(x)).collect())
}
