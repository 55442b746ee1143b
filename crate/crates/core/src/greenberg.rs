//! A sufficient criterion for pseudonullity of the unramified link module:
//! no prime factor `f` of the Alexander polynomial has `f(1, ..., 1) = ±1`.
//!
//! Primality is never decided here in general. Factors come either from
//! [`structured_factor`], which only emits shapes known to be prime, or from
//! the caller, in which case the verdict records that it depends on the
//! caller's claim.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::laurent::{MultiLaurent, UniPoly};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Primality {
    /// `t_i - 1` or a cyclotomic polynomial in `t_1 ... t_r`.
    CatalogCertified,
    CallerAsserted,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifiedFactor {
    pub poly: MultiLaurent,
    pub multiplicity: u32,
    pub primality: Primality,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactorizationCertificate {
    pub r: usize,
    /// The polynomial the factors multiply back to, up to a unit.
    pub target: MultiLaurent,
    pub factors: Vec<CertifiedFactor>,
    /// Prime factorization of the integer content, as `(prime, exponent)`.
    pub integer_content: Vec<(BigInt, u32)>,
}

impl FactorizationCertificate {
    /// A certificate whose factors are claimed prime by the caller.
    pub fn caller_asserted(
        target: MultiLaurent,
        factors: Vec<(MultiLaurent, u32)>,
        integer_content: Vec<(BigInt, u32)>,
    ) -> Self {
        Self {
            r: target.nvars(),
            target,
            factors: factors
                .into_iter()
                .map(|(poly, multiplicity)| CertifiedFactor {
                    poly,
                    multiplicity,
                    primality: Primality::CallerAsserted,
                })
                .collect(),
            integer_content,
        }
    }

    /// Product of the content and the factors with multiplicity.
    pub fn product(&self) -> Result<MultiLaurent> {
        let mut c = BigInt::one();
        for (q, e) in &self.integer_content {
            c *= num_traits::pow(q.clone(), *e as usize);
        }
        let mut acc = MultiLaurent::constant(self.r, c);
        for f in &self.factors {
            acc = acc.mul(&f.poly.pow(f.multiplicity as i64)?)?;
        }
        Ok(acc)
    }

    /// Structural checks: every factor a nonzero non-unit with positive
    /// multiplicity, every content entry a prime, and the product equal to
    /// the target up to a unit.
    pub fn verify(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidCertificate(msg));
        if self.target.nvars() != self.r {
            return bad("variable count does not match the target".into());
        }
        for f in &self.factors {
            if f.poly.nvars() != self.r {
                return bad(format!("factor {} has the wrong variable count", f.poly));
            }
            if f.multiplicity == 0 {
                return bad(format!("factor {} has multiplicity 0", f.poly));
            }
            if f.poly.is_zero() || f.poly.is_unit() {
                return bad(format!("factor {} is zero or a unit", f.poly));
            }
        }
        for (q, e) in &self.integer_content {
            if *e == 0 || !is_prime_big(q) {
                return bad(format!("content entry {q}^{e} is not a prime power"));
            }
        }
        if !self.product()?.is_associate(&self.target) {
            return bad("product of factors differs from the target".into());
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Verdict {
    /// No factor evaluates to `±1` at `(1, ..., 1)`, so the module is
    /// pseudonull.
    PseudonullByThm42,
    /// One variable: never pseudonull.
    NotPseudonullKnot,
    /// Some factor evaluates to `±1`; the criterion says nothing.
    Inconclusive,
}

impl Verdict {
    pub fn as_str(self) -> &'static str {
        match self {
            Verdict::PseudonullByThm42 => "PseudonullByThm42",
            Verdict::NotPseudonullKnot => "NotPseudonullKnot",
            Verdict::Inconclusive => "Inconclusive",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudonullVerdict {
    pub verdict: Verdict,
    /// The first factor with `f(1, ..., 1) = ±1`, for `Inconclusive`.
    pub witness: Option<MultiLaurent>,
    /// Whether any factor's primality was asserted rather than certified.
    pub relies_on_caller_assertion: bool,
}

pub fn pseudonull_criterion(cert: &FactorizationCertificate) -> Result<PseudonullVerdict> {
    cert.verify()?;
    let relies = cert
        .factors
        .iter()
        .any(|f| f.primality == Primality::CallerAsserted);
    if cert.r == 1 {
        return Ok(PseudonullVerdict {
            verdict: Verdict::NotPseudonullKnot,
            witness: None,
            relies_on_caller_assertion: false,
        });
    }
    // Content primes evaluate to themselves, never ±1.
    let witness = cert
        .factors
        .iter()
        .find(|f| f.poly.eval_ones().abs().is_one())
        .map(|f| f.poly.clone());
    Ok(PseudonullVerdict {
        verdict: if witness.is_some() {
            Verdict::Inconclusive
        } else {
            Verdict::PseudonullByThm42
        },
        witness,
        relies_on_caller_assertion: relies,
    })
}

/// Verdict straight from a polynomial: one variable needs no factorization,
/// otherwise [`structured_factor`] must recognize the shape.
pub fn pseudonull_verdict(delta: &MultiLaurent) -> Result<PseudonullVerdict> {
    if delta.nvars() == 1 {
        return Ok(PseudonullVerdict {
            verdict: Verdict::NotPseudonullKnot,
            witness: None,
            relies_on_caller_assertion: false,
        });
    }
    pseudonull_criterion(&structured_factor(delta)?)
}

/// Factors `delta` as content times powers of `t_i - 1` times cyclotomic
/// polynomials `Phi_n(t_1 ... t_r)`. Any other residual is `Unsupported`.
pub fn structured_factor(delta: &MultiLaurent) -> Result<FactorizationCertificate> {
    if delta.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let r = delta.nvars();
    let (mut rest, _) = delta.unit_normalized();
    let content = rest.content();
    rest = rest.div_scalar_exact(&content)?;
    let integer_content = factor_integer(&content)?;

    let mut factors = Vec::new();
    let one = MultiLaurent::one(r);
    for i in 0..r {
        let lin = MultiLaurent::var(r, i).sub(&one)?;
        let mut k = 0;
        while let Ok(q) = rest.divide_exact(&lin) {
            rest = q;
            k += 1;
        }
        if k > 0 {
            factors.push(CertifiedFactor {
                poly: lin,
                multiplicity: k,
                primality: Primality::CatalogCertified,
            });
        }
    }

    let unsupported = || Error::Unsupported(format!("cannot factor {delta}: unrecognized residual"));
    let (rest, _) = rest.unit_normalized();
    let mut h = in_product_variable(&rest).ok_or_else(unsupported)?;
    let u = product_variable(r);
    // phi(n) >= sqrt(n / 2), so no Phi_n with n > 2 d^2 fits in degree d.
    let d0 = h.degree().unwrap_or(0) as u64;
    for n in 1..=2 * d0 * d0 {
        let deg = h.degree().unwrap_or(0) as u64;
        if deg == 0 {
            break;
        }
        if euler_phi(n) > deg {
            continue;
        }
        let phi = cyclotomic_n(n);
        let mut k = 0;
        while let Some(q) = h.exact_div(&phi) {
            h = q;
            k += 1;
        }
        if k > 0 {
            factors.push(CertifiedFactor {
                poly: MultiLaurent::compose(&phi, &u)?,
                multiplicity: k,
                primality: Primality::CatalogCertified,
            });
        }
    }
    if h.degree() != Some(0) || !h.coeff(0).abs().is_one() {
        return Err(unsupported());
    }
    let cert = FactorizationCertificate {
        r,
        target: delta.clone(),
        factors,
        integer_content,
    };
    cert.verify()?;
    Ok(cert)
}

fn product_variable(r: usize) -> MultiLaurent {
    MultiLaurent::monomial(r, vec![1; r], 1)
}

/// `h` with `f = h(t_1 ... t_r)`, when every exponent vector of `f` has all
/// entries equal and nonnegative.
fn in_product_variable(f: &MultiLaurent) -> Option<UniPoly> {
    let mut coeffs = Vec::new();
    for (e, c) in f.terms() {
        let k = *e.first()?;
        if k < 0 || e.iter().any(|&x| x != k) {
            return None;
        }
        let k = k as usize;
        if coeffs.len() <= k {
            coeffs.resize(k + 1, BigInt::zero());
        }
        coeffs[k] = c.clone();
    }
    Some(UniPoly::from_coeffs(coeffs))
}

/// `Phi_n` for any `n >= 1`, as `prod_{d | n} (t^d - 1)^{mobius(n / d)}`.
pub fn cyclotomic_n(n: u64) -> UniPoly {
    assert!(n >= 1);
    let mut num = UniPoly::one();
    let mut den = UniPoly::one();
    for d in (1..=n).filter(|d| n.is_multiple_of(*d)) {
        let f = &UniPoly::monomial(1, d as usize) - &UniPoly::one();
        match mobius(n / d) {
            1 => num = &num * &f,
            -1 => den = &den * &f,
            _ => {}
        }
    }
    num.exact_div(&den).expect("cyclotomic quotient is exact")
}

fn mobius(mut n: u64) -> i32 {
    let mut sign = 1;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            n /= d;
            if n.is_multiple_of(d) {
                return 0;
            }
            sign = -sign;
        }
        d += 1;
    }
    if n > 1 {
        sign = -sign;
    }
    sign
}

fn euler_phi(mut n: u64) -> u64 {
    let mut out = n;
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            while n.is_multiple_of(d) {
                n /= d;
            }
            out -= out / d;
        }
        d += 1;
    }
    if n > 1 {
        out -= out / n;
    }
    out
}

/// Largest integer content factored by trial division.
const MAX_FACTORED_CONTENT: u64 = 1 << 40;

fn factor_integer(c: &BigInt) -> Result<Vec<(BigInt, u32)>> {
    let mut n = c
        .abs()
        .to_u64()
        .filter(|&n| n <= MAX_FACTORED_CONTENT)
        .ok_or_else(|| Error::Unsupported(format!("content {c} is too large to factor")))?;
    let mut out = Vec::new();
    let mut d = 2u64;
    while d * d <= n {
        let mut e = 0;
        while n % d == 0 {
            n /= d;
            e += 1;
        }
        if e > 0 {
            out.push((BigInt::from(d), e));
        }
        d += 1;
    }
    if n > 1 {
        out.push((BigInt::from(n), 1));
    }
    Ok(out)
}

fn is_prime_big(q: &BigInt) -> bool {
    match q.to_u64() {
        Some(n) if n <= MAX_FACTORED_CONTENT => crate::padic::is_prime(n),
        _ => {
            // beyond trial-division range: accept only if no small factor
            q > &BigInt::one()
                && (2u64..1_000_000).all(|d| !q.is_multiple_of(&BigInt::from(d)))
        }
    }
}
