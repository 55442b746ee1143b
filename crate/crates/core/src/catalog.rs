//! Link families with known Alexander polynomials and closed-form
//! invariants, the Torres conditions, and the Bezout construction for
//! prescribed `(lambda, mu)` at `p = 2`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::covers::{CoverSpec, CoverTower};
use crate::laurent::{resultant, MultiLaurent, UniPoly, UnitNormalForm};
use crate::padic::{vp_i64, Prime, Valuation};
use crate::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyKind {
    /// `m (t1-1)(t2-1)^3`, linking number 0.
    Figure1 { m: u64 },
    /// The 2-bridge link `C(2a, 2b, -2a)`.
    ConwayTwoBridge { a: i64, b: i64 },
    /// The 2-bridge link `C(4)`.
    C4,
    /// Reduced polynomial `p^m (t-1)^{r-1+2l}` at `z = (1, ..., 1)`.
    HosokawaReduced { r: u32, ell: u32, m: u32, p: Prime },
    /// `2^m (t1-1)(t2-1)(t1 t2 + t1^-1 t2^-1)^{max(0, l-2)}`.
    BaileyEven { ell: u32, m: u32 },
    /// The linking-number `2^{m+1}` link built from a Bezout certificate,
    /// with the free exponent `s` on `F(t1 t2 + t1^-1 t2^-1)`.
    BaileyBezout { m: u32, s: u32 },
    Knot,
}

impl FamilyKind {
    pub fn name(&self) -> &'static str {
        match self {
            FamilyKind::Figure1 { .. } => "figure1",
            FamilyKind::ConwayTwoBridge { .. } => "conway",
            FamilyKind::C4 => "c4",
            FamilyKind::HosokawaReduced { .. } => "hosokawa",
            FamilyKind::BaileyEven { .. } => "bailey",
            FamilyKind::BaileyBezout { .. } => "bezout",
            FamilyKind::Knot => "knot",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FamilyKind::Figure1 { m } => write!(f, "figure1(m={m})"),
            FamilyKind::ConwayTwoBridge { a, b } => write!(f, "conway(a={a},b={b})"),
            FamilyKind::C4 => f.write_str("c4"),
            FamilyKind::HosokawaReduced { r, ell, m, p } => {
                write!(f, "hosokawa(r={r},ell={ell},m={m},p={p})")
            }
            FamilyKind::BaileyEven { ell, m } => write!(f, "bailey(ell={ell},m={m})"),
            FamilyKind::BaileyBezout { m, s } => write!(f, "bezout(m={m},s={s})"),
            FamilyKind::Knot => f.write_str("knot"),
        }
    }
}

/// The polynomial a family is given by: a full link polynomial, or only the
/// reduced polynomial of one tower.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FamilyDelta {
    Link(MultiLaurent),
    Reduced { reduced: UnitNormalForm, components: u32 },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinkFamily {
    pub kind: FamilyKind,
    pub delta: FamilyDelta,
    /// `l12` for two-component families, as its nonnegative representative.
    pub linking_number: Option<BigInt>,
    pub recommended_z: Option<Vec<i64>>,
}

impl LinkFamily {
    pub fn components(&self) -> usize {
        match &self.delta {
            FamilyDelta::Link(d) => d.nvars(),
            FamilyDelta::Reduced { components, .. } => *components as usize,
        }
    }

    pub fn link_delta(&self) -> Option<&MultiLaurent> {
        match &self.delta {
            FamilyDelta::Link(d) => Some(d),
            FamilyDelta::Reduced { .. } => None,
        }
    }

    /// The tower in direction `z` at `p`. Families given by a reduced
    /// polynomial only support `z = (1, ..., 1)`.
    pub fn tower(&self, z: &[i64], p: Prime) -> Result<CoverTower> {
        match &self.delta {
            FamilyDelta::Link(d) => CoverTower::from_spec(&CoverSpec::new(d.clone(), z.to_vec(), p)?),
            FamilyDelta::Reduced { reduced, components } => {
                if z.len() != *components as usize || z.iter().any(|&x| x != 1) {
                    return Err(Error::Unsupported(format!(
                        "{} is only defined at z = (1, ..., 1)",
                        self.kind
                    )));
                }
                Ok(CoverTower::from_reduced(reduced.clone(), p))
            }
        }
    }
}

fn vars2() -> (MultiLaurent, MultiLaurent, MultiLaurent) {
    (MultiLaurent::var(2, 0), MultiLaurent::var(2, 1), MultiLaurent::one(2))
}

fn product(fs: &[MultiLaurent]) -> MultiLaurent {
    fs.iter()
        .skip(1)
        .fold(fs[0].clone(), |acc, f| acc.mul(f).expect("same variable count"))
}

/// `1 + u + ... + u^{n-1}`.
fn geometric(u: &MultiLaurent, n: u64) -> MultiLaurent {
    let mut acc = MultiLaurent::zero(u.nvars());
    let mut pw = MultiLaurent::one(u.nvars());
    for _ in 0..n {
        acc = acc.add(&pw).expect("same variable count");
        pw = pw.mul(u).expect("same variable count");
    }
    acc
}

pub fn figure1_link(m: u64) -> Result<LinkFamily> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    let (t1, t2, one) = vars2();
    let a = t1.sub(&one)?;
    let b = t2.sub(&one)?.pow(3)?;
    let delta = a.mul(&b)?.scale(&BigInt::from(m));
    Ok(LinkFamily {
        kind: FamilyKind::Figure1 { m },
        delta: FamilyDelta::Link(delta),
        linking_number: Some(BigInt::zero()),
        recommended_z: None,
    })
}

/// `b (t1-1)(t2-1) ((t1 t2)^|a| - 1)/(t1 t2 - 1)`; a negative `a` only
/// changes the polynomial by a unit.
pub fn conway_two_bridge(a: i64, b: i64) -> Result<LinkFamily> {
    if a == 0 || b == 0 {
        return Err(Error::InvalidParameter("a and b must be nonzero".into()));
    }
    let (t1, t2, one) = vars2();
    let u = t1.mul(&t2)?;
    let delta = product(&[t1.sub(&one)?, t2.sub(&one)?, geometric(&u, a.unsigned_abs())])
        .scale(&BigInt::from(b));
    Ok(LinkFamily {
        kind: FamilyKind::ConwayTwoBridge { a, b },
        delta: FamilyDelta::Link(delta),
        linking_number: Some(BigInt::zero()),
        recommended_z: None,
    })
}

pub fn c4_link() -> LinkFamily {
    let (t1, t2, one) = vars2();
    let delta = t1.mul(&t2).unwrap().add(&one).unwrap();
    LinkFamily {
        kind: FamilyKind::C4,
        delta: FamilyDelta::Link(delta),
        linking_number: Some(BigInt::from(2)),
        recommended_z: Some(vec![1, 2]),
    }
}

/// `p^m (t-1)^{r-1+2l}` in unit normal form.
pub fn hosokawa_reduced(r: u32, ell: u32, m: u32, p: Prime) -> Result<UnitNormalForm> {
    if r < 2 {
        return Err(Error::InvalidParameter("r must be at least 2".into()));
    }
    let poly = UniPoly::from_i64s(&[-1, 1]).pow(r - 1 + 2 * ell).scale(&p.pow(m));
    Ok(UnitNormalForm::from_poly(&poly).expect("nonzero"))
}

pub fn hosokawa_family(r: u32, ell: u32, m: u32, p: Prime) -> Result<LinkFamily> {
    Ok(LinkFamily {
        kind: FamilyKind::HosokawaReduced { r, ell, m, p },
        delta: FamilyDelta::Reduced {
            reduced: hosokawa_reduced(r, ell, m, p)?,
            components: r,
        },
        linking_number: None,
        recommended_z: Some(vec![1; r as usize]),
    })
}

pub fn bailey_even_family(ell: u32, m: u32) -> Result<LinkFamily> {
    if ell == 0 {
        return Err(Error::InvalidParameter("ell must be at least 1".into()));
    }
    let (t1, t2, one) = vars2();
    let u = t1.mul(&t2)?;
    let sym = u.add(&u.pow(-1)?)?;
    let delta = product(&[
        t1.sub(&one)?,
        t2.sub(&one)?,
        sym.pow(ell.saturating_sub(2) as i64)?,
    ])
    .scale(&num_traits::pow(BigInt::from(2), m as usize));
    Ok(LinkFamily {
        kind: FamilyKind::BaileyEven { ell, m },
        delta: FamilyDelta::Link(delta),
        linking_number: Some(BigInt::zero()),
        recommended_z: Some(if ell >= 2 { vec![1, 4] } else { vec![1, 2] }),
    })
}

/// `N F + B G = 2^m` with `N(t + 1/t) = nu(t)` and `B(t + 1/t) = beta(t)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BezoutCertificate {
    pub m: u32,
    pub n: UniPoly,
    pub b: UniPoly,
    pub f: UniPoly,
    pub g: UniPoly,
    pub res: BigInt,
}

/// `t^k + t^-k` as a polynomial in `x = t + 1/t`, for `k = 0..=top`.
fn chebyshev_table(top: usize) -> Vec<UniPoly> {
    let x = UniPoly::t();
    let mut s = vec![UniPoly::constant(2), x.clone()];
    for k in 2..=top {
        let next = &(&x * &s[k - 1]) - &s[k - 2];
        s.push(next);
    }
    s.truncate(top + 1);
    s
}

/// Rewrites a symmetric Laurent polynomial `sum a_k t^k` (`a_k = a_{-k}`)
/// as a polynomial in `x = t + 1/t`. `coeffs[k]` is `a_k` for `k >= 0`.
fn symmetric_to_x(coeffs: &[BigInt]) -> UniPoly {
    let s = chebyshev_table(coeffs.len().max(1));
    let mut out = UniPoly::constant(coeffs.first().cloned().unwrap_or_default());
    for (k, a) in coeffs.iter().enumerate().skip(1) {
        out = &out + &s[k].scale(a);
    }
    out
}

/// `f(t + 1/t)` as a one-variable Laurent polynomial.
fn eval_at_t_plus_inv(f: &UniPoly) -> Result<MultiLaurent> {
    let t = MultiLaurent::var(1, 0);
    MultiLaurent::compose(f, &t.add(&t.pow(-1)?)?)
}

/// Solves `N F + B G = c` with `deg F < deg B`, `deg G < deg N` over the
/// rationals. `None` if the system is singular.
fn solve_bezout(n: &UniPoly, b: &UniPoly, c: &BigInt) -> Option<(Vec<BigRational>, Vec<BigRational>)> {
    let dn = n.degree()?;
    let db = b.degree()?;
    let size = dn + db;
    // columns: F_0..F_{db-1}, G_0..G_{dn-1}; row i: coefficient of x^i
    let mut rows = vec![vec![BigRational::zero(); size + 1]; size];
    for j in 0..db {
        for (k, c) in n.coeffs().iter().enumerate() {
            rows[j + k][j] = BigRational::from_integer(c.clone());
        }
    }
    for j in 0..dn {
        for (k, c) in b.coeffs().iter().enumerate() {
            rows[j + k][db + j] = BigRational::from_integer(c.clone());
        }
    }
    rows[0][size] = BigRational::from_integer(c.clone());
    for col in 0..size {
        let pivot = (col..size).find(|&r| !rows[r][col].is_zero())?;
        rows.swap(col, pivot);
        let inv = rows[col][col].recip();
        for v in rows[col].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[col].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != col && !row[col].is_zero() {
                let factor = row[col].clone();
                for (v, pv) in row.iter_mut().zip(&pivot_row) {
                    *v -= &factor * pv;
                }
            }
        }
    }
    let sol: Vec<BigRational> = rows.into_iter().map(|r| r[size].clone()).collect();
    let (f, g) = sol.split_at(db);
    Some((f.to_vec(), g.to_vec()))
}

fn integral(v: &[BigRational]) -> Option<UniPoly> {
    v.iter()
        .map(|q| q.is_integer().then(|| q.to_integer()))
        .collect::<Option<Vec<_>>>()
        .map(UniPoly::from_coeffs)
}

pub fn bezout_certificate(m: u32) -> Result<BezoutCertificate> {
    if m == 0 {
        return Err(Error::InvalidParameter("m must be at least 1".into()));
    }
    if m > 12 {
        return Err(Error::InvalidParameter("m is limited to 12".into()));
    }
    let big_m = 1usize << m;
    // nu(t) = t^{M-1} + t^{M-3} + ... + t^{1-M}
    let mut nu = vec![BigInt::zero(); big_m];
    for k in (1..big_m).step_by(2) {
        nu[k] = BigInt::one();
    }
    // beta(t) = t^M - t^{M-1} - t^{1-M} + t^{-M}
    let mut beta = vec![BigInt::zero(); big_m + 1];
    beta[big_m] = BigInt::one();
    beta[big_m - 1] = -BigInt::one();
    let n = symmetric_to_x(&nu);
    let b = symmetric_to_x(&beta);

    let fail = |msg: &str| Error::CertificateFailure(format!("m = {m}: {msg}"));
    let t = MultiLaurent::var(1, 0);
    let nu_t = {
        let num = t.pow(big_m as i64)?.sub(&t.pow(-(big_m as i64))?)?;
        num.divide_exact(&t.sub(&t.pow(-1)?)?)?
    };
    let beta_t = product(&[
        t.pow(-(big_m as i64))?,
        t.sub(&MultiLaurent::one(1))?,
        t.pow(2 * big_m as i64 - 1)?.sub(&MultiLaurent::one(1))?,
    ]);
    if eval_at_t_plus_inv(&n)? != nu_t || eval_at_t_plus_inv(&b)? != beta_t {
        return Err(fail("x = t + 1/t rewriting does not reproduce nu, beta"));
    }
    if n.degree() != Some(big_m - 1) || b.degree() != Some(big_m) {
        return Err(fail("unexpected degrees"));
    }

    let two_m = num_traits::pow(BigInt::from(2), m as usize);
    let (fq, gq) = solve_bezout(&n, &b, &two_m).ok_or_else(|| fail("singular Sylvester system"))?;
    let f = integral(&fq).ok_or_else(|| fail("F has non-integral coefficients"))?;
    let g = integral(&gq).ok_or_else(|| fail("G has non-integral coefficients"))?;
    if &(&n * &f) + &(&b * &g) != UniPoly::constant(two_m.clone()) {
        return Err(fail("N F + B G != 2^m"));
    }
    let res = resultant(&n, &b)?;
    if res.abs() != two_m {
        return Err(fail("|Res(N, B)| != 2^m"));
    }
    if !f.eval(&BigInt::from(2)).is_one() {
        return Err(fail("F(2) != 1"));
    }
    Ok(BezoutCertificate { m, n, b, f, g, res })
}

/// The two-variable polynomial
/// `f^s * [ (u^{2M} - 1)/(u - 1) f - (t1-1)(t2-1) (u^{2M-1} - 1)/(u - 1) g ]`
/// with `u = t1 t2`, `M = 2^m`, `f = F(u + 1/u)` and `g = G(u + 1/u)`.
pub fn bezout_link(cert: &BezoutCertificate, s: u32) -> Result<LinkFamily> {
    let (t1, t2, one) = vars2();
    let u = t1.mul(&t2)?;
    let x = u.add(&u.pow(-1)?)?;
    let f = MultiLaurent::compose(&cert.f, &x)?;
    let g = MultiLaurent::compose(&cert.g, &x)?;
    let big_m = 1u64 << cert.m;
    let first = geometric(&u, 2 * big_m).mul(&f)?;
    let second = product(&[t1.sub(&one)?, t2.sub(&one)?, geometric(&u, 2 * big_m - 1), g]);
    let delta = f.pow(s as i64)?.mul(&first.sub(&second)?)?;
    Ok(LinkFamily {
        kind: FamilyKind::BaileyBezout { m: cert.m, s },
        delta: FamilyDelta::Link(delta),
        linking_number: Some(BigInt::from(2 * big_m)),
        recommended_z: Some(vec![2, -1]),
    })
}

/// Outcome of [`torres_check`]; `reasons` lists every failed condition.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TorresVerdict {
    pub passed: bool,
    pub reasons: Vec<String>,
}

/// `|delta(1,1)| = |l12|` and `delta(1/t1, 1/t2)` equal to `delta` up to a
/// unit `±t1^a t2^b`.
pub fn torres_check(delta: &MultiLaurent, l12: &BigInt) -> TorresVerdict {
    let mut reasons = Vec::new();
    if delta.nvars() != 2 {
        reasons.push(format!("expected 2 variables, got {}", delta.nvars()));
    } else {
        let at_one = delta.eval_ones();
        if at_one.abs() != l12.abs() {
            reasons.push(format!("delta(1,1) = {at_one}, expected ±{}", l12.abs()));
        }
        if !delta.involution().is_associate(delta) {
            reasons.push("delta(1/t1, 1/t2) is not a unit multiple of delta".into());
        }
    }
    TorresVerdict {
        passed: reasons.is_empty(),
        reasons,
    }
}

fn v(x: i64, p: Prime) -> Option<u32> {
    match vp_i64(x, p) {
        Valuation::Finite(v) => Some(v as u32),
        Valuation::Infinity => None,
    }
}

fn checked_pow(p: Prime, e: u32) -> Result<u64> {
    p.get()
        .checked_pow(e)
        .ok_or_else(|| Error::Unsupported("closed form overflows".into()))
}

fn two_z(z: &[i64]) -> Result<(i64, i64)> {
    match z {
        [a, b] if *a != 0 && *b != 0 => Ok((*a, *b)),
        _ => Err(Error::Unsupported("expected a two-entry direction with nonzero entries".into())),
    }
}

/// `(lambda, mu)` predicted by the family's closed form.
pub fn closed_form_invariants(family: &LinkFamily, z: &[i64], p: Prime) -> Result<(u64, u64)> {
    let unsupported = || Error::Unsupported(format!("no closed form for {} at z = {z:?}, p = {p}", family.kind));
    match &family.kind {
        FamilyKind::Figure1 { m } => {
            let (z1, z2) = two_z(z)?;
            let lambda = 1 + checked_pow(p, v(z1, p).unwrap())? + 3 * checked_pow(p, v(z2, p).unwrap())?;
            let mu = vp_i64(*m as i64, p).finite().unwrap();
            Ok((lambda, mu))
        }
        FamilyKind::ConwayTwoBridge { a, b } => {
            let (z1, z2) = two_z(z)?;
            let sum = v(z1 + z2, p).ok_or_else(unsupported)?;
            let prod = v(z1, p).unwrap() + v(z2, p).unwrap();
            let va = v(*a, p).unwrap();
            let lambda = 2 + checked_pow(p, prod)? + (checked_pow(p, va)? - 1) * checked_pow(p, sum)?;
            Ok((lambda, v(*b, p).unwrap() as u64))
        }
        FamilyKind::C4 => {
            two_z(z)?;
            if p.get() != 2 {
                Ok((1, 0))
            } else if z == [1, 2] || z == [2, 1] {
                Ok((2, 0))
            } else {
                Err(unsupported())
            }
        }
        FamilyKind::HosokawaReduced { r, ell, m, p: q } => {
            if z.len() != *r as usize || z.iter().any(|&x| x != 1) {
                return Err(unsupported());
            }
            let mu = if *q == p { *m as u64 } else { 0 };
            Ok(((r - 1 + 2 * ell) as u64, mu))
        }
        FamilyKind::BaileyEven { ell, m } => {
            if p.get() == 2 && family.recommended_z.as_deref() == Some(z) {
                Ok((2 + 2 * *ell as u64, *m as u64))
            } else {
                Err(unsupported())
            }
        }
        FamilyKind::BaileyBezout { m, .. } => {
            two_z(z)?;
            if p.get() != 2 {
                Ok((1, 0))
            } else if z == [2, -1] {
                Ok((2, *m as u64))
            } else {
                Err(unsupported())
            }
        }
        FamilyKind::Knot => Ok((0, 0)),
    }
}

/// Whether every cover of `C(2a, 2b, -2a)` in direction `z` has finite
/// homology: `v_p(z1 z2) >= v_p(a)`.
pub fn conway_nonvanishing(a: i64, z: (i64, i64), p: Prime) -> bool {
    let vz = vp_i64(z.0, p).finite().unwrap() + vp_i64(z.1, p).finite().unwrap();
    vz >= vp_i64(a, p).finite().unwrap()
}

/// A knot family from its one-variable Alexander polynomial.
pub fn knot_family(delta_k: &UniPoly) -> Result<LinkFamily> {
    if delta_k.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(LinkFamily {
        kind: FamilyKind::Knot,
        delta: FamilyDelta::Link(MultiLaurent::from_uni(delta_k, 1, 0)),
        linking_number: None,
        recommended_z: Some(vec![1]),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pr(n: u64) -> Prime {
        Prime::new(n).unwrap()
    }

    fn poly(c: &[i64]) -> UniPoly {
        UniPoly::from_i64s(c)
    }

    #[test]
    fn figure1_shape() {
        let fam = figure1_link(1).unwrap();
        let d = fam.link_delta().unwrap();
        assert_eq!(d.eval_ones(), BigInt::zero());
        let f = d.specialize(&[1, 3]).unwrap();
        let want = &poly(&[-1, 1]) * &poly(&[-1, 0, 0, 1]).pow(3);
        assert_eq!(f.poly, want);
        assert!(figure1_link(0).is_err());
    }

    #[test]
    fn conway_small_cases() {
        let (t1, t2, one) = vars2();
        let base = t1.sub(&one).unwrap().mul(&t2.sub(&one).unwrap()).unwrap();
        assert_eq!(conway_two_bridge(1, 1).unwrap().link_delta().unwrap(), &base);
        let neg = conway_two_bridge(-3, 2).unwrap();
        let pos = conway_two_bridge(3, 2).unwrap();
        assert!(neg.link_delta().unwrap().is_associate(pos.link_delta().unwrap()));
        assert!(conway_two_bridge(0, 1).is_err());
    }

    #[test]
    fn conway_prime_power_is_cyclotomic_product() {
        // a = 4 at p = 2: (u^4 - 1)/(u - 1) = Phi_2(u) Phi_4(u)
        let (t1, t2, one) = vars2();
        let u = t1.mul(&t2).unwrap();
        let phi2 = u.add(&one).unwrap();
        let phi4 = u.pow(2).unwrap().add(&one).unwrap();
        let want = product(&[t1.sub(&one).unwrap(), t2.sub(&one).unwrap(), phi2, phi4]).scale(&3.into());
        assert_eq!(conway_two_bridge(4, 3).unwrap().link_delta().unwrap(), &want);
    }

    #[test]
    fn hosokawa_examples() {
        assert_eq!(hosokawa_reduced(2, 0, 0, pr(2)).unwrap().poly, poly(&[-1, 1]));
        let f = hosokawa_reduced(3, 1, 2, pr(5)).unwrap();
        assert_eq!(f.poly, poly(&[-1, 1]).pow(4).scale(&25.into()));
        let f = hosokawa_reduced(2, 2, 1, pr(2)).unwrap();
        assert_eq!(f.poly, poly(&[-1, 1]).pow(5).scale(&2.into()));
    }

    #[test]
    fn bailey_reduced_shapes() {
        let fam = bailey_even_family(1, 0).unwrap();
        let tower = fam.tower(&[1, 2], pr(2)).unwrap();
        let want = &poly(&[-1, 1]).pow(2) * &poly(&[-1, 0, 1]);
        assert_eq!(tower.reduced().poly, want);

        let fam = bailey_even_family(3, 0).unwrap();
        let tower = fam.tower(&[1, 4], pr(2)).unwrap();
        assert!(poly(&[1, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1]).divides(&tower.reduced().poly));
    }

    #[test]
    fn chebyshev_rewrite() {
        // t^2 + t^-2 = x^2 - 2
        let s = chebyshev_table(3);
        assert_eq!(s[2], poly(&[-2, 0, 1]));
        assert_eq!(s[3], poly(&[0, -3, 0, 1]));
    }

    #[test]
    fn bezout_small() {
        let c = bezout_certificate(1).unwrap();
        assert_eq!(c.res.abs(), BigInt::from(2));
        assert_eq!(c.n, poly(&[0, 1]));
        let c = bezout_certificate(2).unwrap();
        assert_eq!(&(&c.n * &c.f) + &(&c.b * &c.g), UniPoly::constant(4));
        assert_eq!(c.n.degree(), Some(3));
        assert_eq!(c.b.degree(), Some(4));
    }

    #[test]
    fn bezout_link_torres() {
        let c = bezout_certificate(2).unwrap();
        for s in [0, 1] {
            let fam = bezout_link(&c, s).unwrap();
            let v = torres_check(fam.link_delta().unwrap(), fam.linking_number.as_ref().unwrap());
            assert!(v.passed, "{:?}", v.reasons);
        }
    }

    #[test]
    fn torres_examples() {
        let c4 = c4_link();
        assert!(torres_check(c4.link_delta().unwrap(), &2.into()).passed);
        let fig = figure1_link(5).unwrap();
        assert!(torres_check(fig.link_delta().unwrap(), &0.into()).passed);
        let bad = MultiLaurent::from_terms(2, [(vec![1, 0], 1.into()), (vec![0, 0], 2.into())]);
        let v = torres_check(&bad, &0.into());
        assert!(!v.passed);
        assert!(v.reasons.iter().any(|r| r.contains("unit multiple")));
    }

    #[test]
    fn closed_forms() {
        let fig = figure1_link(1).unwrap();
        assert_eq!(closed_form_invariants(&fig, &[1, 5], pr(5)).unwrap(), (17, 0));
        assert_eq!(closed_form_invariants(&fig, &[1, 1], pr(7)).unwrap(), (5, 0));
        let con = conway_two_bridge(4, 6).unwrap();
        assert_eq!(closed_form_invariants(&con, &[1, 1], pr(2)).unwrap(), (9, 1));
        assert!(closed_form_invariants(&con, &[1, -1], pr(2)).is_err());
        let knot = knot_family(&poly(&[1, -1, 1])).unwrap();
        assert_eq!(closed_form_invariants(&knot, &[1], pr(3)).unwrap(), (0, 0));
    }

    #[test]
    fn conway_predicate() {
        assert!(!conway_nonvanishing(2, (1, 1), pr(2)));
        assert!(conway_nonvanishing(2, (1, 2), pr(2)));
        assert!(conway_nonvanishing(3, (1, 1), pr(2)));
    }
}
