use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{format_terms, Sign, UniPoly, UnitNormalForm};
use crate::{Error, Result};

/// Largest exponent accepted by [`MultiLaurent::pow`] for a base that is not
/// a monomial.
const MAX_EXPANDED_POWER: i64 = 4096;

/// Sparse Laurent polynomial in `t_1, ..., t_r` with big-integer
/// coefficients.
///
/// Terms are keyed by exponent vector; a missing key means a zero
/// coefficient and no zero coefficient is ever stored, so structural
/// equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiLaurent {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, BigInt>,
}

impl MultiLaurent {
    pub fn zero(nvars: usize) -> Self {
        assert!(nvars >= 1, "a Laurent polynomial needs at least one variable");
        Self {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(nvars: usize, c: impl Into<BigInt>) -> Self {
        Self::monomial(nvars, vec![0; nvars], c)
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, 1)
    }

    pub fn monomial(nvars: usize, exps: Vec<i64>, c: impl Into<BigInt>) -> Self {
        assert_eq!(exps.len(), nvars);
        let mut out = Self::zero(nvars);
        let c = c.into();
        if !c.is_zero() {
            out.terms.insert(exps, c);
        }
        out
    }

    /// The variable `t_{index+1}` (zero-based index).
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars);
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        Self::monomial(nvars, exps, 1)
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<i64>, BigInt)>,
    {
        let mut out = Self::zero(nvars);
        for (e, c) in terms {
            assert_eq!(e.len(), nvars);
            out.add_term(e, c);
        }
        out
    }

    /// Embeds `f(t_{index+1})`.
    pub fn from_uni(f: &UniPoly, nvars: usize, index: usize) -> Self {
        Self::from_terms(
            nvars,
            f.coeffs().iter().enumerate().map(|(i, c)| {
                let mut e = vec![0; nvars];
                e[index] = i as i64;
                (e, c.clone())
            }),
        )
    }

    fn add_term(&mut self, exps: Vec<i64>, c: BigInt) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &BigInt)> {
        self.terms.iter()
    }

    pub fn coeff(&self, exps: &[i64]) -> BigInt {
        self.terms.get(exps).cloned().unwrap_or_default()
    }

    /// True for `c * t^e` with a single term.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    /// True for units of the Laurent ring, `±t^e`.
    pub fn is_unit(&self) -> bool {
        self.is_monomial() && self.terms.values().all(|c| c.abs().is_one())
    }

    fn check_vars(&self, other: &Self) -> Result<()> {
        if self.nvars != other.nvars {
            return Err(Error::VariableMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::from_terms(
            self.nvars,
            self.terms.iter().map(|(e, a)| (e.clone(), a * c)),
        )
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_vars(other)?;
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(e, ca * cb);
            }
        }
        Ok(out)
    }

    /// Integer power. Negative exponents are allowed only for units and
    /// monomials whose coefficient is `±1`.
    pub fn pow(&self, e: i64) -> Result<Self> {
        if e < 0 {
            if !self.is_unit() {
                return Err(Error::NotInvertible);
            }
            let (exps, c) = self.terms.iter().next().unwrap();
            let exps = exps.iter().map(|x| x * e).collect();
            let c = if e % 2 == 0 { BigInt::one() } else { c.clone() };
            return Ok(Self::monomial(self.nvars, exps, c));
        }
        if self.is_monomial() {
            let (exps, c) = self.terms.iter().next().unwrap();
            let exps = exps.iter().map(|x| x * e).collect();
            return Ok(Self::monomial(self.nvars, exps, num_traits::pow(c.clone(), e as usize)));
        }
        if e > MAX_EXPANDED_POWER {
            return Err(Error::InvalidParameter(format!(
                "exponent {e} exceeds {MAX_EXPANDED_POWER} for a non-monomial base"
            )));
        }
        let mut acc = Self::one(self.nvars);
        let mut base = self.clone();
        let mut e = e as u64;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base)?;
            }
        }
        Ok(acc)
    }

    fn min_exponents(&self) -> Vec<i64> {
        let mut lo = vec![i64::MAX; self.nvars];
        for e in self.terms.keys() {
            for (l, x) in lo.iter_mut().zip(e) {
                *l = (*l).min(*x);
            }
        }
        lo
    }

    fn max_exponents(&self) -> Vec<i64> {
        let mut hi = vec![i64::MIN; self.nvars];
        for e in self.terms.keys() {
            for (h, x) in hi.iter_mut().zip(e) {
                *h = (*h).max(*x);
            }
        }
        hi
    }

    fn shifted(&self, by: &[i64]) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().zip(by).map(|(x, s)| x + s).collect(), c.clone()))
                .collect(),
        }
    }

    /// Exact quotient `self / g` in the Laurent ring.
    ///
    /// Both sides are first shifted into the polynomial ring with every
    /// minimal exponent zero; the quotient is then a polynomial and is found
    /// by lex-leading-term division confined to the box of admissible
    /// exponents.
    pub fn divide_exact(&self, g: &Self) -> Result<Self> {
        self.check_vars(g)?;
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if self.is_zero() {
            return Ok(Self::zero(self.nvars));
        }
        let f_lo = self.min_exponents();
        let g_lo = g.min_exponents();
        let f0 = self.shifted(&f_lo.iter().map(|x| -x).collect::<Vec<_>>());
        let g0 = g.shifted(&g_lo.iter().map(|x| -x).collect::<Vec<_>>());
        let bound: Vec<i64> = f0
            .max_exponents()
            .iter()
            .zip(g0.max_exponents())
            .map(|(a, b)| a - b)
            .collect();
        if bound.iter().any(|b| *b < 0) {
            return Err(Error::NotDivisible);
        }
        let (lt_e, lt_c) = g0.terms.last_key_value().map(|(e, c)| (e.clone(), c.clone())).unwrap();
        let mut rem = f0;
        let mut quot = Self::zero(self.nvars);
        while let Some((e, c)) = rem.terms.last_key_value() {
            let diff: Vec<i64> = e.iter().zip(&lt_e).map(|(a, b)| a - b).collect();
            if diff.iter().zip(&bound).any(|(d, b)| *d < 0 || d > b) {
                return Err(Error::NotDivisible);
            }
            let (qc, r) = c.div_rem(&lt_c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            for (ge, gc) in &g0.terms {
                let e = ge.iter().zip(&diff).map(|(a, b)| a + b).collect();
                rem.add_term(e, -(&qc * gc));
            }
            quot.add_term(diff, qc);
        }
        let back: Vec<i64> = f_lo.iter().zip(&g_lo).map(|(a, b)| a - b).collect();
        Ok(quot.shifted(&back))
    }

    /// Substitutes `t_i -> t^{z_i}` and returns the one-variable result in
    /// unit normal form.
    pub fn specialize(&self, z: &[i64]) -> Result<UnitNormalForm> {
        if z.len() != self.nvars {
            return Err(Error::DirectionLength {
                expected: self.nvars,
                got: z.len(),
            });
        }
        if let Some(index) = z.iter().position(|&x| x == 0) {
            return Err(Error::ZeroDirection { index });
        }
        UnitNormalForm::from_sparse(self.terms.iter().map(|(e, c)| {
            let exp = e.iter().zip(z).map(|(a, b)| a * b).sum::<i64>();
            (exp, c.clone())
        }))
        .ok_or(Error::ZeroPolynomial)
    }

    /// Value at `t_1 = ... = t_r = 1`.
    pub fn eval_ones(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// `t_i -> t_i^{-1}` for every variable.
    pub fn involution(&self) -> Self {
        Self {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.iter().map(|x| -x).collect(), c.clone()))
                .collect(),
        }
    }

    /// Non-negative gcd of the coefficients.
    pub fn content(&self) -> BigInt {
        self.terms.values().fold(BigInt::zero(), |g, c| g.gcd(c))
    }

    pub fn div_scalar_exact(&self, c: &BigInt) -> Result<Self> {
        let mut terms = BTreeMap::new();
        for (e, a) in &self.terms {
            let (q, r) = a.div_rem(c);
            if !r.is_zero() {
                return Err(Error::NotDivisible);
            }
            terms.insert(e.clone(), q);
        }
        Ok(Self {
            nvars: self.nvars,
            terms,
        })
    }

    /// Representative of `self` modulo units `±t^a`: all minimal exponents
    /// zero and a positive lex-leading coefficient. Also returns the sign
    /// that was divided out.
    pub fn unit_normalized(&self) -> (Self, Sign) {
        if self.is_zero() {
            return (self.clone(), Sign::Plus);
        }
        let lo = self.min_exponents();
        let shifted = self.shifted(&lo.iter().map(|x| -x).collect::<Vec<_>>());
        let sign = Sign::of(shifted.terms.last_key_value().unwrap().1);
        match sign {
            Sign::Plus => (shifted, sign),
            Sign::Minus => (shifted.neg(), sign),
        }
    }

    /// Equality up to multiplication by a unit `±t^a`.
    pub fn is_associate(&self, other: &Self) -> bool {
        self.nvars == other.nvars && self.unit_normalized().0 == other.unit_normalized().0
    }

    /// `f(x)` for a univariate `f`, evaluated by Horner's rule.
    pub fn compose(f: &UniPoly, x: &Self) -> Result<Self> {
        let mut acc = Self::zero(x.nvars);
        for c in f.coeffs().iter().rev() {
            acc = acc.mul(x)?.add(&Self::constant(x.nvars, c.clone()))?;
        }
        Ok(acc)
    }

    fn var_name(&self, i: usize) -> String {
        if self.nvars == 1 {
            "t".to_string()
        } else {
            format!("t{}", i + 1)
        }
    }
}

impl fmt::Display for MultiLaurent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.terms.iter().rev().map(|(e, c)| {
            let mono = e
                .iter()
                .enumerate()
                .filter(|(_, x)| **x != 0)
                .map(|(i, x)| {
                    if *x == 1 {
                        self.var_name(i)
                    } else {
                        format!("{}^{}", self.var_name(i), x)
                    }
                })
                .collect::<Vec<_>>()
                .join("*");
            (c.clone(), mono)
        });
        f.write_str(&format_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(n: usize, i: usize) -> MultiLaurent {
        MultiLaurent::var(n, i)
    }

    fn c(n: usize, v: i64) -> MultiLaurent {
        MultiLaurent::constant(n, v)
    }

    fn u(n: usize) -> MultiLaurent {
        t(n, 0).mul(&t(n, 1)).unwrap()
    }

    #[test]
    fn add_examples() {
        let a = t(1, 0).sub(&c(1, 1)).unwrap();
        let b = c(1, 1).sub(&t(1, 0)).unwrap();
        assert!(a.add(&b).unwrap().is_zero());

        let x = u(2).add(&c(2, 1)).unwrap();
        let doubled = x.add(&x).unwrap();
        assert_eq!(doubled, u(2).scale(&2.into()).add(&c(2, 2)).unwrap());

        let fig = t(2, 0)
            .sub(&c(2, 1))
            .unwrap()
            .mul(&t(2, 1).sub(&c(2, 1)).unwrap().pow(3).unwrap())
            .unwrap()
            .scale(&5.into());
        assert_eq!(fig.add(&MultiLaurent::zero(2)).unwrap(), fig);
    }

    #[test]
    fn mismatch_is_reported() {
        assert_eq!(
            t(1, 0).add(&t(2, 0)),
            Err(Error::VariableMismatch { left: 1, right: 2 })
        );
        assert!(t(1, 0).mul(&t(3, 2)).is_err());
    }

    #[test]
    fn mul_examples() {
        let a = t(1, 0).sub(&c(1, 1)).unwrap();
        assert_eq!(a.mul(&a).unwrap().to_string(), "t^2-2*t+1");
        let l = u(2).sub(&c(2, 1)).unwrap();
        let r = u(2).add(&c(2, 1)).unwrap();
        assert_eq!(l.mul(&r).unwrap().to_string(), "t1^2*t2^2-1");
    }

    #[test]
    fn divide_exact_examples() {
        let num = u(2).pow(3).unwrap().sub(&c(2, 1)).unwrap();
        let den = u(2).sub(&c(2, 1)).unwrap();
        let q = num.divide_exact(&den).unwrap();
        assert_eq!(q.to_string(), "t1^2*t2^2+t1*t2+1");

        let num = t(1, 0).pow(2).unwrap().sub(&c(1, 1)).unwrap();
        let den = t(1, 0).sub(&c(1, 1)).unwrap();
        assert_eq!(num.divide_exact(&den).unwrap().to_string(), "t+1");

        let num = u(2).add(&c(2, 1)).unwrap();
        let den = t(2, 0).sub(&c(2, 1)).unwrap();
        assert_eq!(num.divide_exact(&den), Err(Error::NotDivisible));
    }

    #[test]
    fn divide_exact_handles_negative_exponents() {
        // (t1 t2 + t1^-1 t2^-1) * (t1 - 1) / (t1 t2 + t1^-1 t2^-1)
        let a = u(2)
            .add(&u(2).pow(-1).unwrap())
            .unwrap();
        let b = t(2, 0).sub(&c(2, 1)).unwrap().mul(&t(2, 1).pow(-2).unwrap()).unwrap();
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.divide_exact(&a).unwrap(), b);
        assert_eq!(prod.divide_exact(&b).unwrap(), a);
    }

    #[test]
    fn divide_by_zero() {
        assert_eq!(c(1, 1).divide_exact(&MultiLaurent::zero(1)), Err(Error::ZeroPolynomial));
    }

    #[test]
    fn specialize_examples() {
        let f = u(2).add(&c(2, 1)).unwrap();
        let s = f.specialize(&[1, 2]).unwrap();
        assert_eq!(s.poly, UniPoly::from_i64s(&[1, 0, 0, 1]));
        assert_eq!((s.shift, s.sign), (0, Sign::Plus));

        let s = t(2, 0).specialize(&[-1, 1]).unwrap();
        assert_eq!(s.poly, UniPoly::one());
        assert_eq!(s.shift, -1);

        assert_eq!(f.specialize(&[1, 0]), Err(Error::ZeroDirection { index: 1 }));
        assert_eq!(
            t(2, 0).sub(&t(2, 1)).unwrap().specialize(&[1, 1]),
            Err(Error::ZeroPolynomial)
        );
    }

    #[test]
    fn specialize_figure_one_shape() {
        let m = 4;
        let f = t(2, 0)
            .sub(&c(2, 1))
            .unwrap()
            .mul(&t(2, 1).sub(&c(2, 1)).unwrap().pow(3).unwrap())
            .unwrap()
            .scale(&m.into());
        let s = f.specialize(&[1, 3]).unwrap();
        let tm1 = UniPoly::from_i64s(&[-1, 1]);
        let t3m1 = UniPoly::from_i64s(&[-1, 0, 0, 1]);
        let want = (&tm1 * &t3m1.pow(3)).scale(&m.into());
        assert_eq!(s.poly, want);
    }

    #[test]
    fn eval_ones_examples() {
        assert_eq!(u(2).add(&c(2, 1)).unwrap().eval_ones(), BigInt::from(2));
        let f = t(2, 0).sub(&c(2, 1)).unwrap().scale(&7.into());
        assert_eq!(f.eval_ones(), BigInt::zero());
        assert_eq!(c(3, 7).eval_ones(), BigInt::from(7));
    }

    #[test]
    fn involution_examples() {
        let f = u(2).add(&c(2, 1)).unwrap();
        assert_eq!(f.involution().to_string(), "1+t1^-1*t2^-1");
        let g = t(1, 0).sub(&c(1, 1)).unwrap();
        let want = t(1, 0).pow(-1).unwrap().neg().mul(&g).unwrap();
        assert_eq!(g.involution(), want);
    }

    #[test]
    fn negative_power_of_non_unit_fails() {
        assert_eq!(t(1, 0).scale(&2.into()).pow(-1), Err(Error::NotInvertible));
        assert_eq!(t(1, 0).add(&c(1, 1)).unwrap().pow(-1), Err(Error::NotInvertible));
    }

    #[test]
    fn unit_normalization() {
        let f = u(2).add(&c(2, 1)).unwrap();
        let g = f.mul(&t(2, 0).pow(-3).unwrap().neg()).unwrap();
        assert!(f.is_associate(&g));
        assert!(!f.is_associate(&f.scale(&2.into())));
    }

    #[test]
    fn display_round_shapes() {
        let f = t(2, 1).pow(-1).unwrap().sub(&t(2, 0).scale(&3.into())).unwrap();
        assert_eq!(f.to_string(), "-3*t1+t2^-1");
    }
}
