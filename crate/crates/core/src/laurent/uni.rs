use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Dense univariate polynomial over the integers.
///
/// `coeffs[i]` is the coefficient of `t^i`. The vector never ends in a zero,
/// so the zero polynomial is the empty vector.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<BigInt>,
}

impl UniPoly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// `c * t^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); k + 1];
        coeffs[k] = c.into();
        Self::from_coeffs(coeffs)
    }

    /// The polynomial `t`.
    pub fn t() -> Self {
        Self::monomial(1, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    pub fn from_i64s(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn lead(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * x + c)
    }

    /// Non-negative gcd of the coefficients; zero for the zero polynomial.
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides every coefficient by `c`, which must divide all of them.
    pub fn div_scalar_exact(&self, c: &BigInt) -> Self {
        Self::from_coeffs(
            self.coeffs
                .iter()
                .map(|a| {
                    debug_assert!((a % c).is_zero());
                    a / c
                })
                .collect(),
        )
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    /// Content-free part with positive leading coefficient, together with the
    /// signed content so that `self = content * primitive`.
    pub fn primitive_split(&self) -> (BigInt, UniPoly) {
        if self.is_zero() {
            return (BigInt::zero(), Self::zero());
        }
        let mut c = self.content();
        if self.lead().is_some_and(Signed::is_negative) {
            c = -c;
        }
        let prim = self.div_scalar_exact(&c);
        (c, prim)
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// `f(t^k)`.
    pub fn compose_power(&self, k: usize) -> Self {
        assert!(k >= 1);
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); (self.coeffs.len() - 1) * k + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs[i * k] = c.clone();
        }
        Self::from_coeffs(coeffs)
    }

    /// `f(1 + T)` by repeated synthetic division (Taylor shift by one).
    pub fn taylor_shift_one(&self) -> Self {
        let mut a = self.coeffs.clone();
        let n = a.len();
        for i in 0..n {
            for j in (i..n.saturating_sub(1)).rev() {
                let next = a[j + 1].clone();
                a[j] += next;
            }
        }
        Self::from_coeffs(a)
    }

    /// Pseudo-remainder `lead(g)^(deg f - deg g + 1) * f mod g`.
    pub fn pseudo_rem(&self, g: &UniPoly) -> UniPoly {
        let dg = g.degree().expect("pseudo-division by zero polynomial");
        let Some(df) = self.degree() else {
            return Self::zero();
        };
        if df < dg {
            return self.clone();
        }
        let lg = g.lead().unwrap();
        let mut r = self.coeffs.clone();
        for i in (dg..=df).rev() {
            let top = std::mem::take(&mut r[i]);
            for c in r.iter_mut().take(i) {
                *c *= lg;
            }
            if !top.is_zero() {
                let off = i - dg;
                for (j, gc) in g.coeffs.iter().enumerate().take(dg) {
                    r[off + j] -= &top * gc;
                }
            }
            r.truncate(i);
        }
        Self::from_coeffs(r)
    }

    /// Quotient and remainder over `Z`, defined whenever every leading-term
    /// division is exact. Returns `None` otherwise.
    pub fn div_rem_exact(&self, g: &UniPoly) -> Option<(UniPoly, UniPoly)> {
        let dg = g.degree()?;
        let lg = g.lead().unwrap();
        let Some(df) = self.degree() else {
            return Some((Self::zero(), Self::zero()));
        };
        if df < dg {
            return Some((Self::zero(), self.clone()));
        }
        let mut r = self.coeffs.clone();
        let mut q = vec![BigInt::zero(); df - dg + 1];
        for i in (dg..=df).rev() {
            if r[i].is_zero() {
                continue;
            }
            let (qc, rem) = r[i].div_rem(lg);
            if !rem.is_zero() {
                return None;
            }
            let off = i - dg;
            for (j, gc) in g.coeffs.iter().enumerate() {
                r[off + j] -= &qc * gc;
            }
            q[off] = qc;
        }
        r.truncate(dg);
        Some((Self::from_coeffs(q), Self::from_coeffs(r)))
    }

    /// `self / g` when the division is exact in `Z[t]`.
    pub fn exact_div(&self, g: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.div_rem_exact(g)?;
        r.is_zero().then_some(q)
    }

    pub fn divides(&self, f: &UniPoly) -> bool {
        f.exact_div(self).is_some()
    }

    /// Renders the polynomial in the variable `var` using the expression
    /// grammar accepted by [`crate::expr::parse_poly`].
    pub fn display_in(&self, var: &str) -> String {
        let terms = self
            .coeffs
            .iter()
            .enumerate()
            .rev()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let mono = match i {
                    0 => String::new(),
                    1 => var.to_string(),
                    _ => format!("{var}^{i}"),
                };
                (c.clone(), mono)
            });
        super::format_terms(terms)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_in("t"))
    }
}

impl Add for &UniPoly {
    type Output = UniPoly;

    fn add(self, rhs: &UniPoly) -> UniPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        UniPoly::from_coeffs(coeffs)
    }
}

impl Neg for &UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub for &UniPoly {
    type Output = UniPoly;

    fn sub(self, rhs: &UniPoly) -> UniPoly {
        self + &(-rhs)
    }
}

impl Mul for &UniPoly {
    type Output = UniPoly;

    fn mul(self, rhs: &UniPoly) -> UniPoly {
        if self.is_zero() || rhs.is_zero() {
            return UniPoly::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        UniPoly::from_coeffs(out)
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for UniPoly {
            type Output = UniPoly;
            fn $m(self, rhs: UniPoly) -> UniPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}

forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for UniPoly {
    type Output = UniPoly;

    fn neg(self) -> UniPoly {
        -&self
    }
}
