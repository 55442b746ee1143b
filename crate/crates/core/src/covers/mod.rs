//! Cover towers `M_{z,p^n}`: reduced polynomials, exact homology orders
//! level by level, and the Iwasawa invariants of their growth.

mod levels;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::laurent::{MultiLaurent, UniPoly, UnitNormalForm};
use crate::padic::{cyclotomic, vp, vp_i64, weierstrass_invariants, Prime, Valuation};
use crate::{Error, Result};

pub use levels::{level_factor, level_factors, level_factors_from, root_power};

/// One tower: a link polynomial, a direction and a prime.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverSpec {
    delta: MultiLaurent,
    z: Vec<i64>,
    p: Prime,
    component_knot_polys: Option<Vec<UniPoly>>,
}

impl CoverSpec {
    pub fn new(delta: MultiLaurent, z: Vec<i64>, p: Prime) -> Result<Self> {
        check_direction(delta.nvars(), &z)?;
        Ok(Self {
            delta,
            z,
            p,
            component_knot_polys: None,
        })
    }

    /// Alexander polynomials of the components, one per variable. Only used
    /// for the base of the tower when `v > 0`.
    pub fn with_component_knot_polys(mut self, polys: Vec<UniPoly>) -> Result<Self> {
        if polys.len() != self.delta.nvars() {
            return Err(Error::InvalidParameter(format!(
                "expected {} component polynomials, got {}",
                self.delta.nvars(),
                polys.len()
            )));
        }
        for k in &polys {
            check_knot_poly(k)?;
        }
        self.component_knot_polys = Some(polys);
        Ok(self)
    }

    pub fn delta(&self) -> &MultiLaurent {
        &self.delta
    }

    pub fn z(&self) -> &[i64] {
        &self.z
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn component_knot_polys(&self) -> Option<&[UniPoly]> {
        self.component_knot_polys.as_deref()
    }

    /// `max v_p(z_i)`.
    pub fn v(&self) -> u32 {
        direction_v(&self.z, self.p)
    }
}

fn check_direction(nvars: usize, z: &[i64]) -> Result<()> {
    if z.len() != nvars {
        return Err(Error::DirectionLength {
            expected: nvars,
            got: z.len(),
        });
    }
    if let Some(index) = z.iter().position(|&x| x == 0) {
        return Err(Error::ZeroDirection { index });
    }
    let g = z.iter().fold(0u64, |g, &x| g.gcd(&x.unsigned_abs()));
    if g != 1 {
        return Err(Error::DirectionNotPrimitive { gcd: g });
    }
    Ok(())
}

fn direction_v(z: &[i64], p: Prime) -> u32 {
    z.iter()
        .map(|&x| vp_i64(x, p).finite().expect("nonzero direction entry") as u32)
        .max()
        .unwrap_or(0)
}

fn check_knot_poly(k: &UniPoly) -> Result<()> {
    let at_one = k.eval(&BigInt::one());
    if at_one.abs().is_one() {
        Ok(())
    } else {
        Err(Error::NotAKnotPolynomial {
            value: at_one.to_string(),
        })
    }
}

/// `(t - 1) * delta(t^{z_1}, ..., t^{z_r})` for `r >= 2`, and `delta(t)` for
/// `r = 1`, in unit normal form.
pub fn reduced_polynomial(delta: &MultiLaurent, z: &[i64]) -> Result<UnitNormalForm> {
    check_direction(delta.nvars(), z)?;
    let mut f = delta.specialize(z)?;
    if delta.nvars() >= 2 {
        f.poly = &f.poly * &UniPoly::from_i64s(&[-1, 1]);
    }
    Ok(f)
}

/// Every `n >= 1` with `Phi_{p^n} | f`. The search stops once
/// `deg Phi_{p^n}` exceeds `deg f`.
pub fn vanishing_levels(f: &UniPoly, p: Prime) -> Result<Vec<u32>> {
    let d = f.degree().ok_or(Error::ZeroPolynomial)? as u64;
    let mut out = Vec::new();
    let mut n = 1;
    while p.phi_degree(n) <= d {
        if cyclotomic(p, n).divides(f) {
            out.push(n);
        }
        n += 1;
    }
    Ok(out)
}

/// `|H_1|` of the `p^n`-fold cyclic branched cover along a knot:
/// `|prod_{zeta^{p^n} = 1} deltaK(zeta)|`, never zero.
pub fn knot_base_order(delta_k: &UniPoly, p: Prime, n: u32) -> Result<BigUint> {
    Ok(knot_base_orders(delta_k, p, n)?.pop().unwrap())
}

/// Orders for levels `0..=n`.
fn knot_base_orders(delta_k: &UniPoly, p: Prime, n: u32) -> Result<Vec<BigUint>> {
    check_knot_poly(delta_k)?;
    let mut acc = BigUint::one();
    let mut out = vec![acc.clone()];
    for factor in level_factors(delta_k, p, n) {
        acc *= factor.magnitude();
        out.push(acc.clone());
    }
    Ok(out)
}

/// One row of a growth table. `order` is zero when the group is infinite,
/// in which case `e` is `None`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GrowthRow {
    pub n: u32,
    pub order: BigUint,
    pub e: Option<u64>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct GrowthTable {
    pub rows: Vec<GrowthRow>,
}

impl GrowthTable {
    pub fn order(&self, n: u32) -> Option<&BigUint> {
        self.rows.iter().find(|r| r.n == n).map(|r| &r.order)
    }

    pub fn e(&self, n: u32) -> Option<u64> {
        self.rows.iter().find(|r| r.n == n).and_then(|r| r.e)
    }

    pub fn all_nonzero(&self) -> bool {
        self.rows.iter().all(|r| !r.order.is_zero())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IwasawaInvariants {
    pub lambda: u64,
    pub mu: u64,
    /// `None` when some level of the tower has infinite homology.
    pub nu: Option<i64>,
    pub v: u32,
    pub n0: u32,
    /// Levels `n > v` with `Phi_{p^n} | Delta_{L,z}`. From the first of them
    /// on, every cover has infinite `H_1`.
    pub vanishing_levels: Vec<u32>,
}

/// A tower reduced to the data the order formula needs: the reduced
/// polynomial, the prime, `v`, and a knot polynomial whose covers give the
/// orders up to level `v`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverTower {
    reduced: UnitNormalForm,
    p: Prime,
    v: u32,
    base_knot: UniPoly,
}

impl CoverTower {
    pub fn from_spec(spec: &CoverSpec) -> Result<Self> {
        let reduced = reduced_polynomial(&spec.delta, &spec.z)?;
        let v = spec.v();
        let r = spec.delta.nvars();
        let base_knot = if v == 0 {
            UniPoly::one()
        } else if r >= 3 {
            return Err(Error::BaseUnavailable { components: r, v });
        } else {
            // gcd(z) = 1, so exactly one component has v_p(z_i) = 0; the
            // covers up to level v branch along it alone.
            let i = spec
                .z
                .iter()
                .position(|&x| vp_i64(x, spec.p) == Valuation::Finite(0))
                .expect("primitive direction");
            spec.component_knot_polys
                .as_ref()
                .map(|ks| ks[i].clone())
                .unwrap_or_else(UniPoly::one)
        };
        Ok(Self {
            reduced,
            p: spec.p,
            v,
            base_knot,
        })
    }

    /// A tower given directly by its reduced polynomial, with `v = 0`.
    pub fn from_reduced(reduced: UnitNormalForm, p: Prime) -> Self {
        Self {
            reduced,
            p,
            v: 0,
            base_knot: UniPoly::one(),
        }
    }

    pub fn reduced(&self) -> &UnitNormalForm {
        &self.reduced
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn v(&self) -> u32 {
        self.v
    }

    /// Exact orders `|H_1(M_{z,p^n})|` for `n = 0..=n_max`.
    pub fn orders(&self, n_max: u32) -> Result<GrowthTable> {
        let p = self.p;
        let base_top = self.v.min(n_max);
        let base = knot_base_orders(&self.base_knot, p, base_top)?;
        let mut rows: Vec<GrowthRow> = base
            .into_iter()
            .enumerate()
            .map(|(n, order)| GrowthRow {
                n: n as u32,
                e: vp_unsigned_finite(&order, p),
                order,
            })
            .collect();
        if n_max > self.v {
            let factors = level_factors_from(&self.reduced.poly, p, self.v + 1, n_max);
            let mut order = rows.last().unwrap().order.clone();
            for (i, factor) in factors.into_iter().enumerate() {
                order *= factor.magnitude();
                rows.push(GrowthRow {
                    n: self.v + 1 + i as u32,
                    e: vp_unsigned_finite(&order, p),
                    order: order.clone(),
                });
            }
        }
        Ok(GrowthTable { rows })
    }

    /// `(lambda, mu)` from the reduced polynomial and `nu` from the orders
    /// at `n0, ..., n0 + 3`, which must all give the same value.
    pub fn invariants(&self) -> Result<IwasawaInvariants> {
        let p = self.p;
        let w = weierstrass_invariants(&self.reduced.poly, p)?;
        let vanishing: Vec<u32> = vanishing_levels(&self.reduced.poly, p)?
            .into_iter()
            .filter(|&n| n > self.v)
            .collect();
        let mut n0 = self.v + 1;
        while p.phi_degree(n0) <= w.lambda {
            n0 += 1;
        }
        let nu = if vanishing.is_empty() {
            let table = self.orders(n0 + 3)?;
            let mut nu = None;
            for n in n0..=n0 + 3 {
                let e = table.e(n).ok_or(Error::StabilizationFailure { level: n })?;
                let val = BigInt::from(e)
                    - BigInt::from(w.lambda) * n
                    - BigInt::from(w.mu) * p.pow(n);
                let val = val.to_i64().ok_or(Error::StabilizationFailure { level: n })?;
                match nu {
                    None => nu = Some(val),
                    Some(prev) if prev != val => {
                        return Err(Error::StabilizationFailure { level: n })
                    }
                    Some(_) => {}
                }
            }
            nu
        } else {
            None
        };
        Ok(IwasawaInvariants {
            lambda: w.lambda,
            mu: w.mu,
            nu,
            v: self.v,
            n0,
            vanishing_levels: vanishing,
        })
    }
}

fn vp_unsigned_finite(x: &BigUint, p: Prime) -> Option<u64> {
    vp(&BigInt::from(x.clone()), p).finite()
}

/// The growth table of `spec` for `n = 0..=n_max`.
pub fn homology_orders(spec: &CoverSpec, n_max: u32) -> Result<GrowthTable> {
    CoverTower::from_spec(spec)?.orders(n_max)
}

pub fn iwasawa_invariants(spec: &CoverSpec) -> Result<IwasawaInvariants> {
    CoverTower::from_spec(spec)?.invariants()
}
