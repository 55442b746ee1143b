//! Per-level factors `Res(Phi_{p^m}, f) = prod f(zeta)` over the primitive
//! `p^m`-th roots of unity.
//!
//! `Phi_{p^m}(t) = Phi_p(t^{p^{m-1}})`, so the product only depends on the
//! `p^{m-1}`-th powers of the roots of `f`. We keep an integer polynomial
//! `G_j` whose roots are the `p^j`-th powers of the roots of `f` (with
//! leading coefficient `lead(f)^{p^j}`) and get each level from a resultant
//! against the fixed, tiny `Phi_p`. Degrees never grow past `deg f`.

use num_bigint::BigInt;
use num_traits::Zero;
use rayon::prelude::*;

use crate::laurent::{resultant, UniPoly};
use crate::padic::{cyclotomic, Prime};

/// Polynomial whose roots are the `p`-th powers of the roots of `g`, with
/// leading coefficient `lead(g)^p`.
///
/// Uses `H(x^p) = (-1)^{(p+1) d} prod_{j<p} g(w^j x)` for a primitive `p`-th
/// root of unity `w`, computed in `Z[y]/(y^p - 1)`. An integer `c` of `Z[w]`
/// is represented there as `(c + k, k, ..., k)`, so `c = a_0 - a_{p-1}`.
pub fn root_power(g: &UniPoly, p: Prime) -> UniPoly {
    let Some(d) = g.degree() else {
        return UniPoly::zero();
    };
    let p_us = p.get() as usize;
    let gc = g.coeffs();
    // acc[i][s]: coefficient of x^i y^s
    let mut acc: Vec<Vec<BigInt>> = gc
        .iter()
        .map(|c| {
            let mut v = vec![BigInt::zero(); p_us];
            v[0] = c.clone();
            v
        })
        .collect();
    for j in 1..p_us {
        let mut next = vec![vec![BigInt::zero(); p_us]; acc.len() + d];
        for (a, row) in acc.iter().enumerate() {
            for (i, c) in gc.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                let rot = (i * j) % p_us;
                let target = &mut next[a + i];
                for (s, v) in row.iter().enumerate() {
                    if !v.is_zero() {
                        target[(s + rot) % p_us] += v * c;
                    }
                }
            }
        }
        acc = next;
    }
    let negate = (p.get() + 1) * d as u64 % 2 == 1;
    let coeffs = (0..=d)
        .map(|k| {
            let cell = &acc[k * p_us];
            debug_assert!(acc
                .iter()
                .enumerate()
                .filter(|(i, _)| i % p_us != 0)
                .all(|(_, v)| v.iter().skip(1).all(|x| x == &v[p_us - 1]) && v[0] == v[p_us - 1]));
            let c = &cell[0] - &cell[p_us - 1];
            if negate {
                -c
            } else {
                c
            }
        })
        .collect();
    UniPoly::from_coeffs(coeffs)
}

/// `Res(Phi_{p^m}, f)` for every `m` in `1..=top`, index `m - 1`.
///
/// The integer content of `f` is split off first since it contributes
/// `c^{deg Phi}` exactly. Resultants for different levels run in parallel
/// on the current rayon pool; the output order is fixed.
pub fn level_factors(f: &UniPoly, p: Prime, top: u32) -> Vec<BigInt> {
    level_factors_from(f, p, 1, top)
}

/// `Res(Phi_{p^m}, f)` for `m` in `first..=top` (with `first >= 1`), index
/// `m - first`. Levels below `first` still cost one root-power step each.
pub fn level_factors_from(f: &UniPoly, p: Prime, first: u32, top: u32) -> Vec<BigInt> {
    assert!(first >= 1);
    if top < first {
        return Vec::new();
    }
    assert!(!f.is_zero(), "level factors of the zero polynomial");
    let (content, prim) = f.primitive_split();
    let d = prim.degree().unwrap() as u64;
    let mut chain = Vec::with_capacity(top as usize);
    chain.push(prim);
    for _ in 1..top {
        let next = root_power(chain.last().unwrap(), p);
        chain.push(next);
    }
    let phi_p = cyclotomic(p, 1);
    (first..=top)
        .into_par_iter()
        .map(|m| {
            let g = &chain[m as usize - 1];
            let big_d = p.phi_degree(m);
            // Res(Phi_{p^m}, f) = (-1)^{d D} Res(G_{m-1}, Phi_p)
            let mut r = resultant(g, &phi_p).expect("nonzero inputs");
            if d * big_d % 2 == 1 {
                r = -r;
            }
            r * num_traits::pow(content.clone(), big_d as usize)
        })
        .collect()
}

/// `Res(Phi_{p^m}, f)` for a single level `m >= 1`.
pub fn level_factor(f: &UniPoly, p: Prime, m: u32) -> BigInt {
    assert!(m >= 1);
    level_factors(f, p, m).pop().unwrap()
}
