//! Integer Laurent polynomials, used for Alexander polynomials.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

/// Finitely supported map from exponent to nonzero coefficient.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPolyZ {
    coeffs: BTreeMap<i64, i64>,
}

impl LaurentPolyZ {
    pub fn zero() -> Self {
        LaurentPolyZ::default()
    }

    pub fn one() -> Self {
        LaurentPolyZ::monomial(1, 0)
    }

    pub fn monomial(coeff: i64, exp: i64) -> Self {
        LaurentPolyZ::from_terms([(exp, coeff)])
    }

    /// Terms given as `(exponent, coefficient)`; repeated exponents add up.
    pub fn from_terms(terms: impl IntoIterator<Item = (i64, i64)>) -> Self {
        let mut coeffs = BTreeMap::new();
        for (e, c) in terms {
            *coeffs.entry(e).or_insert(0) += c;
        }
        coeffs.retain(|_, c| *c != 0);
        LaurentPolyZ { coeffs }
    }

    /// `t^n - 1`.
    pub fn t_pow_minus_one(n: i64) -> Self {
        LaurentPolyZ::from_terms([(n, 1), (0, -1)])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, exp: i64) -> i64 {
        self.coeffs.get(&exp).copied().unwrap_or(0)
    }

    /// `(exponent, coefficient)` pairs in increasing exponent order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, i64)> + '_ {
        self.coeffs.iter().map(|(&e, &c)| (e, c))
    }

    pub fn max_exp(&self) -> Option<i64> {
        self.coeffs.keys().next_back().copied()
    }

    pub fn min_exp(&self) -> Option<i64> {
        self.coeffs.keys().next().copied()
    }

    pub fn shift(&self, by: i64) -> Self {
        LaurentPolyZ { coeffs: self.coeffs.iter().map(|(&e, &c)| (e + by, c)).collect() }
    }

    /// `p(t) ↦ p(t^k)`.
    pub fn substitute_power(&self, k: i64) -> Self {
        LaurentPolyZ::from_terms(self.coeffs.iter().map(|(&e, &c)| (e * k, c)))
    }

    /// `p(t) ↦ p(t^{-1})`.
    pub fn invert_variable(&self) -> Self {
        self.substitute_power(-1)
    }

    pub fn is_symmetric(&self) -> bool {
        self.coeffs.iter().all(|(&e, &c)| self.coeff(-e) == c)
    }

    /// Shifts the support to be centred on 0. Fails if the support has odd width.
    pub fn symmetrize(&self) -> Result<Self> {
        let (Some(lo), Some(hi)) = (self.min_exp(), self.max_exp()) else {
            return Ok(self.clone());
        };
        if (lo + hi) % 2 != 0 {
            return Err(Error::InvalidParameter(format!("support [{lo}, {hi}] has no centre")));
        }
        Ok(self.shift(-(lo + hi) / 2))
    }

    /// Exact division; the divisor's leading coefficient must be `±1` and the
    /// remainder must vanish.
    pub fn div_exact(&self, divisor: &LaurentPolyZ) -> Result<Self> {
        let (dlo, dhi) = match (divisor.min_exp(), divisor.max_exp()) {
            (Some(lo), Some(hi)) => (lo, hi),
            _ => return Err(Error::InvalidParameter("division by the zero polynomial".into())),
        };
        let lead = divisor.coeff(dhi);
        if lead.abs() != 1 {
            return Err(Error::InvalidParameter(format!("divisor leading coefficient {lead} is not a unit")));
        }
        let mut rem = self.clone();
        let mut quotient = BTreeMap::new();
        while let Some(hi) = rem.max_exp() {
            if hi - dhi < rem.min_exp().unwrap() - dlo {
                break;
            }
            let c = rem.coeff(hi) * lead;
            let e = hi - dhi;
            quotient.insert(e, c);
            rem = &rem - &(divisor * &LaurentPolyZ::monomial(c, e));
        }
        if !rem.is_zero() {
            return Err(Error::InvalidParameter(format!("{self} is not divisible by {divisor}")));
        }
        Ok(LaurentPolyZ::from_terms(quotient))
    }
}

impl<'a> Mul<&'a LaurentPolyZ> for &'a LaurentPolyZ {
    type Output = LaurentPolyZ;
    fn mul(self, rhs: &LaurentPolyZ) -> LaurentPolyZ {
        LaurentPolyZ::from_terms(self.terms().flat_map(|(e1, c1)| rhs.terms().map(move |(e2, c2)| (e1 + e2, c1 * c2))))
    }
}

impl<'a> std::ops::Sub<&'a LaurentPolyZ> for &'a LaurentPolyZ {
    type Output = LaurentPolyZ;
    fn sub(self, rhs: &LaurentPolyZ) -> LaurentPolyZ {
        LaurentPolyZ::from_terms(self.terms().chain(rhs.terms().map(|(e, c)| (e, -c))))
    }
}

impl fmt::Display for LaurentPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (k, (e, c)) in self.terms().rev().enumerate() {
            let sign = if c < 0 { "-" } else { "+" };
            if k == 0 {
                if c < 0 {
                    f.write_str("-")?;
                }
            } else {
                write!(f, " {sign} ")?;
            }
            let a = c.abs();
            match (a, e) {
                (_, 0) => write!(f, "{a}")?,
                (1, 1) => f.write_str("t")?,
                (1, _) => write!(f, "t^{e}")?,
                (_, 1) => write!(f, "{a}t")?,
                _ => write!(f, "{a}t^{e}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolyZ {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolyZ({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn display() {
        let p = LaurentPolyZ::from_terms([(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(p.to_string(), "t - 1 + t^-1");
        assert_eq!(LaurentPolyZ::from_terms([(2, -3), (0, 2)]).to_string(), "-3t^2 + 2");
        assert_eq!(LaurentPolyZ::zero().to_string(), "0");
    }

    #[test]
    fn exact_division() {
        // (t^6 - 1) / (t^2 - 1) = t^4 + t^2 + 1
        let q = LaurentPolyZ::t_pow_minus_one(6).div_exact(&LaurentPolyZ::t_pow_minus_one(2)).unwrap();
        assert_eq!(q, LaurentPolyZ::from_terms([(4, 1), (2, 1), (0, 1)]));
        assert!(LaurentPolyZ::t_pow_minus_one(5).div_exact(&LaurentPolyZ::t_pow_minus_one(2)).is_err());
        assert!(LaurentPolyZ::one().div_exact(&LaurentPolyZ::zero()).is_err());
    }

    #[test]
    fn symmetrize_centres_support() {
        let p = LaurentPolyZ::from_terms([(2, 1), (1, -1), (0, 1)]).symmetrize().unwrap();
        assert_eq!(p, LaurentPolyZ::from_terms([(1, 1), (0, -1), (-1, 1)]));
        assert!(p.is_symmetric());
        assert!(LaurentPolyZ::from_terms([(1, 1), (0, 1)]).symmetrize().is_err());
    }

    #[test]
    fn substitution() {
        let p = LaurentPolyZ::from_terms([(1, 1), (0, -1), (-1, 1)]);
        assert_eq!(p.substitute_power(2), LaurentPolyZ::from_terms([(2, 1), (0, -1), (-2, 1)]));
        assert_eq!(p.invert_variable(), p);
    }
}
