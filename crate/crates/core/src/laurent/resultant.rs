//! Resultants of integer polynomials.
//!
//! Convention: `Res(f, g) = lead(f)^{deg g} * prod g(a)` over the roots `a`
//! of `f`, which is the determinant of the Sylvester matrix with the rows of
//! `f` on top.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::UniPoly;
use crate::{Error, Result};

/// Resultant by the subresultant polynomial remainder sequence.
pub fn resultant(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    let (Some(df), Some(dg)) = (f.degree(), g.degree()) else {
        return if f.is_zero() && g.is_zero() {
            Err(Error::BothZero)
        } else {
            Ok(BigInt::zero())
        };
    };
    let mut negate = false;
    let (mut a, mut b) = if df >= dg {
        (f.clone(), g.clone())
    } else {
        if df % 2 == 1 && dg % 2 == 1 {
            negate = true;
        }
        (g.clone(), f.clone())
    };
    let (da, db) = (a.degree().unwrap(), b.degree().unwrap());
    if db == 0 {
        let r = num_traits::pow(b.coeff(0), da);
        return Ok(if negate { -r } else { r });
    }

    let ca = a.content();
    let cb = b.content();
    a = a.div_scalar_exact(&ca);
    b = b.div_scalar_exact(&cb);
    let scale = num_traits::pow(ca, db) * num_traits::pow(cb, da);

    let mut g_acc = BigInt::one();
    let mut h_acc = BigInt::one();
    loop {
        let da = a.degree().unwrap();
        let db = b.degree().unwrap();
        let delta = da - db;
        if da % 2 == 1 && db % 2 == 1 {
            negate = !negate;
        }
        let r = a.pseudo_rem(&b);
        if r.is_zero() {
            return Ok(BigInt::zero());
        }
        a = b;
        let divisor = &g_acc * num_traits::pow(h_acc.clone(), delta);
        b = r.div_scalar_exact(&divisor);
        g_acc = a.lead().unwrap().clone();
        h_acc = match delta {
            0 => h_acc,
            _ => {
                let num = num_traits::pow(g_acc.clone(), delta);
                let den = num_traits::pow(h_acc, delta - 1);
                exact(num, &den)
            }
        };
        if b.degree() == Some(0) {
            break;
        }
    }
    let da = a.degree().unwrap();
    let num = num_traits::pow(b.coeff(0), da);
    let den = num_traits::pow(h_acc, da - 1);
    let res = scale * exact(num, &den);
    Ok(if negate { -res } else { res })
}

fn exact(num: BigInt, den: &BigInt) -> BigInt {
    let (q, r) = num.div_rem(den);
    debug_assert!(r.is_zero(), "inexact subresultant division");
    q
}

/// Sylvester matrix of `f` (degree `m`) and `g` (degree `n`): `n` shifted
/// rows of `f` followed by `m` shifted rows of `g`, highest coefficient first.
pub fn sylvester_matrix(f: &UniPoly, g: &UniPoly) -> Vec<Vec<BigInt>> {
    let m = f.degree().unwrap_or(0);
    let n = g.degree().unwrap_or(0);
    let size = m + n;
    let mut rows = Vec::with_capacity(size);
    for (poly, count, deg) in [(f, n, m), (g, m, n)] {
        for shift in 0..count {
            let mut row = vec![BigInt::zero(); size];
            for k in 0..=deg {
                row[shift + k] = poly.coeff(deg - k);
            }
            rows.push(row);
        }
    }
    rows
}

/// Fraction-free (Bareiss) determinant with row pivoting.
pub fn determinant(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    if n == 0 {
        return BigInt::one();
    }
    let mut negate = false;
    let mut prev = BigInt::one();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            let Some(swap) = (k + 1..n).find(|&i| !m[i][k].is_zero()) else {
                return BigInt::zero();
            };
            m.swap(k, swap);
            negate = !negate;
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &m[i][j] * &m[k][k] - &m[i][k] * &m[k][j];
                m[i][j] = exact(v, &prev);
            }
        }
        prev = m[k][k].clone();
    }
    let d = m[n - 1][n - 1].clone();
    if negate {
        -d
    } else {
        d
    }
}

/// Resultant as the determinant of the Sylvester matrix. Slow; kept as an
/// independent check on [`resultant`].
pub fn resultant_sylvester(f: &UniPoly, g: &UniPoly) -> Result<BigInt> {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => Err(Error::BothZero),
        (true, false) | (false, true) => Ok(BigInt::zero()),
        _ => Ok(determinant(sylvester_matrix(f, g))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;
    use proptest::prelude::*;

    fn p(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn trefoil_at_square_roots_of_unity() {
        // Res(t^2 - 1, t^2 - t + 1) = D(1) * D(-1) = 1 * 3
        let a = p(&[-1, 0, 1]);
        let b = p(&[1, -1, 1]);
        assert_eq!(resultant(&a, &b).unwrap(), BigInt::from(3));
        assert_eq!(resultant_sylvester(&a, &b).unwrap(), BigInt::from(3));
    }

    #[test]
    fn linear_first_argument_evaluates() {
        let f = p(&[3, -2, 0, 5, 1]);
        let lin = p(&[-1, 1]);
        assert_eq!(resultant(&lin, &f).unwrap(), f.eval(&BigInt::one()));
        assert_eq!(resultant_sylvester(&lin, &f).unwrap(), f.eval(&BigInt::one()));
    }

    #[test]
    fn phi8_against_t3_plus_1() {
        // prod over primitive 8th roots of (z^3 + 1) = Phi_8(-1) = 2
        let phi8 = p(&[1, 0, 0, 0, 1]);
        let g = p(&[1, 0, 0, 1]);
        assert_eq!(resultant(&phi8, &g).unwrap(), BigInt::from(2));
        assert_eq!(resultant_sylvester(&phi8, &g).unwrap(), BigInt::from(2));
    }

    #[test]
    fn zero_and_constant_inputs() {
        assert_eq!(resultant(&UniPoly::zero(), &UniPoly::zero()), Err(Error::BothZero));
        assert_eq!(resultant_sylvester(&UniPoly::zero(), &UniPoly::zero()), Err(Error::BothZero));
        assert_eq!(resultant(&UniPoly::zero(), &p(&[1, 1])).unwrap(), BigInt::zero());
        assert_eq!(resultant(&p(&[3]), &p(&[1, 1, 1])).unwrap(), BigInt::from(9));
        assert_eq!(resultant_sylvester(&p(&[3]), &p(&[1, 1, 1])).unwrap(), BigInt::from(9));
        assert_eq!(resultant(&p(&[3]), &p(&[5])).unwrap(), BigInt::one());
    }

    #[test]
    fn sign_follows_argument_order() {
        // deg 3 and deg 1: Res(g, f) = (-1)^3 Res(f, g)
        let f = p(&[1, 2, 0, 1]);
        let g = p(&[5, 2]);
        let fg = resultant(&f, &g).unwrap();
        let gf = resultant(&g, &f).unwrap();
        assert_eq!(fg, -gf.clone());
        assert_eq!(fg, resultant_sylvester(&f, &g).unwrap());
        assert_eq!(gf, resultant_sylvester(&g, &f).unwrap());
    }

    #[test]
    fn bareiss_needs_pivot() {
        let m = vec![
            vec![BigInt::from(0), BigInt::from(1)],
            vec![BigInt::from(1), BigInt::from(0)],
        ];
        assert_eq!(determinant(m), BigInt::from(-1));
    }

    fn small_poly() -> impl Strategy<Value = UniPoly> {
        prop::collection::vec(-20i64..=20, 1..7).prop_map(|c| UniPoly::from_i64s(&c))
    }

    proptest! {
        #[test]
        fn prs_matches_sylvester(f in small_poly(), g in small_poly()) {
            prop_assume!(!(f.is_zero() && g.is_zero()));
            prop_assert_eq!(resultant(&f, &g).unwrap(), resultant_sylvester(&f, &g).unwrap());
        }

        #[test]
        fn multiplicative_in_first_argument(f in small_poly(), g in small_poly(), h in small_poly()) {
            prop_assume!(!f.is_zero() && !g.is_zero() && !h.is_zero());
            let lhs = resultant(&(&f * &g), &h).unwrap().abs();
            let rhs = resultant(&f, &h).unwrap().abs() * resultant(&g, &h).unwrap().abs();
            prop_assert_eq!(lhs, rhs);
        }
    }
}
