//! Exact polynomial arithmetic: sparse multivariate Laurent polynomials,
//! dense univariate polynomials, unit normal forms and resultants.

mod multi;
mod resultant;
mod uni;

use num_bigint::BigInt;
use num_traits::{Signed, Zero};

pub use multi::MultiLaurent;
pub use resultant::{determinant, resultant, resultant_sylvester, sylvester_matrix};
pub use uni::UniPoly;

/// `+1` or `-1`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub fn of(x: &BigInt) -> Sign {
        if x.is_negative() {
            Sign::Minus
        } else {
            Sign::Plus
        }
    }

    pub fn flip(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }

    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

/// A nonzero one-variable Laurent polynomial written as `sign * t^shift * poly`
/// where `poly` has a nonzero constant term and a positive leading
/// coefficient. This fixes the `±t^k` ambiguity of Alexander polynomials.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UnitNormalForm {
    pub poly: UniPoly,
    pub shift: i64,
    pub sign: Sign,
}

impl UnitNormalForm {
    /// Normalizes a sparse one-variable Laurent polynomial given as
    /// `(exponent, coefficient)` pairs. Returns `None` if it is zero.
    pub fn from_sparse<I>(terms: I) -> Option<Self>
    where
        I: IntoIterator<Item = (i64, BigInt)>,
    {
        let mut collected = std::collections::BTreeMap::<i64, BigInt>::new();
        for (e, c) in terms {
            *collected.entry(e).or_default() += c;
        }
        collected.retain(|_, c| !c.is_zero());
        let (&lo, _) = collected.first_key_value()?;
        let (&hi, lead) = collected.last_key_value()?;
        let sign = Sign::of(lead);
        let mut coeffs = vec![BigInt::zero(); (hi - lo) as usize + 1];
        for (e, c) in collected {
            coeffs[(e - lo) as usize] = if sign == Sign::Minus { -c } else { c };
        }
        Some(Self {
            poly: UniPoly::from_coeffs(coeffs),
            shift: lo,
            sign,
        })
    }

    /// Normal form of an ordinary polynomial.
    pub fn from_poly(f: &UniPoly) -> Option<Self> {
        Self::from_sparse(
            f.coeffs()
                .iter()
                .enumerate()
                .map(|(i, c)| (i as i64, c.clone())),
        )
    }

    /// The full Laurent polynomial as `(exponent, coefficient)` pairs.
    pub fn to_sparse(&self) -> Vec<(i64, BigInt)> {
        self.poly
            .coeffs()
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| {
                let c = if self.sign == Sign::Minus { -c } else { c.clone() };
                (i as i64 + self.shift, c)
            })
            .collect()
    }

    /// Drops the unit: the normalized polynomial itself.
    pub fn into_poly(self) -> UniPoly {
        self.poly
    }
}

/// Joins `(coefficient, monomial)` pairs into an expression string. The
/// monomial is empty for constants. Pairs with zero coefficients must already
/// be filtered out.
pub(crate) fn format_terms(terms: impl Iterator<Item = (BigInt, String)>) -> String {
    let mut out = String::new();
    for (c, mono) in terms {
        let neg = c.is_negative();
        let mag = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push(if neg { '-' } else { '+' });
        }
        if mono.is_empty() {
            out.push_str(&mag.to_string());
        } else if mag == BigInt::from(1) {
            out.push_str(&mono);
        } else {
            out.push_str(&mag.to_string());
            out.push('*');
            out.push_str(&mono);
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_normal_form_strips_monomial_and_sign() {
        // -t^-1 + t^-3  ->  -(t^-3) * (t^2 - 1)
        let f = UnitNormalForm::from_sparse([(-1, BigInt::from(-1)), (-3, BigInt::from(1))]).unwrap();
        assert_eq!(f.poly, UniPoly::from_i64s(&[-1, 0, 1]));
        assert_eq!(f.shift, -3);
        assert_eq!(f.sign, Sign::Minus);
        let round: Vec<_> = f.to_sparse();
        assert_eq!(round, vec![(-3, BigInt::from(1)), (-1, BigInt::from(-1))]);
    }

    #[test]
    fn zero_has_no_normal_form() {
        assert!(UnitNormalForm::from_sparse([(2, BigInt::from(1)), (2, BigInt::from(-1))]).is_none());
    }
}
