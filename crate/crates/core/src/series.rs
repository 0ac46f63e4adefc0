//! Truncated formal power series in one variable with exact integer coefficients.
//!
//! A [`Series`] of order `N` stores `c_0..=c_N`. Binary operations truncate to
//! the smaller of the two operand orders, so a result never claims more
//! coefficients than both inputs determine.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Series {
    coeffs: Vec<BigInt>,
}

impl Series {
    /// Builds a series of order `coeffs.len() - 1`. An empty vector is
    /// treated as the zero series of order 0.
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        if coeffs.is_empty() {
            coeffs.push(BigInt::zero());
        }
        Series { coeffs }
    }

    /// Builds a series from small coefficients, padding with zeros up to `order`.
    pub fn from_i64s(values: &[i64], order: usize) -> Self {
        let coeffs = (0..=order)
            .map(|k| values.get(k).copied().map(BigInt::from).unwrap_or_default())
            .collect();
        Series { coeffs }
    }

    pub fn zero(order: usize) -> Self {
        Series {
            coeffs: vec![BigInt::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Self::constant(BigInt::one(), order)
    }

    pub fn constant(value: BigInt, order: usize) -> Self {
        let mut s = Self::zero(order);
        s.coeffs[0] = value;
        s
    }

    /// `coeff * x^power`, or zero if `power > order`.
    pub fn monomial(coeff: BigInt, power: usize, order: usize) -> Self {
        let mut s = Self::zero(order);
        if power <= order {
            s.coeffs[power] = coeff;
        }
        s
    }

    /// The formal variable `x` at the given order.
    pub fn x(order: usize) -> Self {
        Self::monomial(BigInt::one(), 1, order)
    }

    /// Builds `sum_k f(k) x^k` for `k = 0..=order`.
    pub fn from_fn(order: usize, f: impl FnMut(usize) -> BigInt) -> Self {
        Series {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    /// Highest power of `x` whose coefficient is known.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<BigInt> {
        self.coeffs
    }

    /// Coefficient of `x^k`. Panics if `k` exceeds the truncation order.
    pub fn coeff(&self, k: usize) -> &BigInt {
        &self.coeffs[k]
    }

    pub fn get(&self, k: usize) -> Option<&BigInt> {
        self.coeffs.get(k)
    }

    pub fn constant_term(&self) -> &BigInt {
        &self.coeffs[0]
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Index of the first nonzero coefficient, or `None` for the zero series.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Drops every coefficient above `order`. Panics if `order` exceeds the
    /// current order; a series cannot gain information by truncation.
    pub fn truncate(&self, order: usize) -> Series {
        assert!(
            order <= self.order(),
            "cannot extend series of order {} to {}",
            self.order(),
            order
        );
        Series {
            coeffs: self.coeffs[..=order].to_vec(),
        }
    }

    pub fn add(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..=n).map(|k| &self.coeffs[k] + &other.coeffs[k]).collect(),
        }
    }

    pub fn sub(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        Series {
            coeffs: (0..=n).map(|k| &self.coeffs[k] - &other.coeffs[k]).collect(),
        }
    }

    pub fn neg(&self) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn scale(&self, factor: &BigInt) -> Series {
        Series {
            coeffs: self.coeffs.iter().map(|c| c * factor).collect(),
        }
    }

    pub fn scale_i64(&self, factor: i64) -> Series {
        self.scale(&BigInt::from(factor))
    }

    /// Adds an integer to the constant term.
    pub fn add_constant(&self, value: i64) -> Series {
        let mut out = self.clone();
        out.coeffs[0] += value;
        out
    }

    /// Cauchy product truncated to the smaller order.
    pub fn mul(&self, other: &Series) -> Series {
        let n = self.order().min(other.order());
        let mut out = vec![BigInt::zero(); n + 1];
        for (i, a) in self.coeffs[..=n].iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=n - i].iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] += a * b;
                }
            }
        }
        Series { coeffs: out }
    }

    pub fn pow(&self, exp: u32) -> Series {
        let mut result = Series::one(self.order());
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                result = &result * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        result
    }

    /// Multiplies by `x^m`, keeping the truncation order.
    pub fn shift_up(&self, m: usize) -> Series {
        let n = self.order();
        Series::from_fn(n, |k| {
            if k >= m {
                self.coeffs[k - m].clone()
            } else {
                BigInt::zero()
            }
        })
    }

    /// Multiplicative inverse; the constant term must be 1 or -1.
    pub fn reciprocal(&self) -> Result<Series> {
        let c0 = self.constant_term();
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstantTerm(c0.clone()));
        }
        // c0 is its own inverse
        let n = self.order();
        let mut r: Vec<BigInt> = Vec::with_capacity(n + 1);
        r.push(c0.clone());
        for m in 1..=n {
            let mut acc = BigInt::zero();
            for j in 1..=m {
                let c = &self.coeffs[j];
                if !c.is_zero() {
                    acc += c * &r[m - j];
                }
            }
            r.push(-(c0 * acc));
        }
        Ok(Series { coeffs: r })
    }

    /// `self / divisor` where the divisor has a unit constant term.
    pub fn div(&self, divisor: &Series) -> Result<Series> {
        Ok(self.mul(&divisor.reciprocal()?))
    }

    /// Division that first cancels the common factor `x^m`, where `m` is the
    /// valuation of `divisor`. The result order is `min(orders) - m`.
    pub fn div_cancel(&self, divisor: &Series) -> Result<Series> {
        let m = divisor
            .valuation()
            .ok_or_else(|| Error::NonUnitConstantTerm(BigInt::zero()))?;
        if m == 0 {
            return self.div(divisor);
        }
        if let Some(v) = self.valuation() {
            if v < m {
                return Err(Error::ValuationMismatch {
                    numerator: Some(v),
                    denominator: m,
                });
            }
        }
        let n = self.order().min(divisor.order());
        // the divisor's valuation can only be certified up to its own order
        if m > n {
            return Err(Error::ValuationMismatch {
                numerator: self.valuation(),
                denominator: m,
            });
        }
        let num = Series::new(self.coeffs[m..=n].to_vec());
        let den = Series::new(divisor.coeffs[m..=n].to_vec());
        num.div(&den)
    }

    /// `1 / (1 - self)`, i.e. `sum_j self^j`; requires a zero constant term.
    pub fn geometric_sum(&self) -> Result<Series> {
        if !self.constant_term().is_zero() {
            return Err(Error::NonzeroConstantTerm(self.constant_term().clone()));
        }
        Series::one(self.order()).sub(self).reciprocal()
    }
}

/// A quotient of two series whose denominator has constant term `±1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalSeries {
    numerator: Series,
    denominator: Series,
}

impl RationalSeries {
    pub fn new(numerator: Series, denominator: Series) -> Result<Self> {
        let c0 = denominator.constant_term();
        if c0.abs() != BigInt::one() {
            return Err(Error::NonUnitConstantTerm(c0.clone()));
        }
        Ok(RationalSeries {
            numerator,
            denominator,
        })
    }

    pub fn numerator(&self) -> &Series {
        &self.numerator
    }

    pub fn denominator(&self) -> &Series {
        &self.denominator
    }

    pub fn expand(&self) -> Series {
        self.numerator
            .div(&self.denominator)
            .expect("denominator validated at construction")
    }
}

impl fmt::Debug for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Series[")?;
        for (i, c) in self.coeffs.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "; O(x^{})]", self.order() + 1)
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let sign = if c.is_negative() { "-" } else { "+" };
            let mag = c.abs();
            if wrote {
                write!(f, " {sign} ")?;
            } else if c.is_negative() {
                write!(f, "-")?;
            }
            let show_mag = k == 0 || !mag.is_one();
            match (k, show_mag) {
                (0, _) => write!(f, "{mag}")?,
                (1, true) => write!(f, "{mag}x")?,
                (1, false) => write!(f, "x")?,
                (_, true) => write!(f, "{mag}x^{k}")?,
                (_, false) => write!(f, "x^{k}")?,
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        write!(f, " + O(x^{})", self.order() + 1)
    }
}

macro_rules! forward_binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                Series::$method(self, rhs)
            }
        }
        impl $tr<Series> for Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                Series::$method(&self, &rhs)
            }
        }
        impl $tr<&Series> for Series {
            type Output = Series;
            fn $method(self, rhs: &Series) -> Series {
                Series::$method(&self, rhs)
            }
        }
        impl $tr<Series> for &Series {
            type Output = Series;
            fn $method(self, rhs: Series) -> Series {
                Series::$method(self, &rhs)
            }
        }
    };
}

forward_binop!(Add, add);
forward_binop!(Sub, sub);
forward_binop!(Mul, mul);

impl Neg for &Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(self)
    }
}

impl Neg for Series {
    type Output = Series;
    fn neg(self) -> Series {
        Series::neg(&self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(values: &[i64], order: usize) -> Series {
        Series::from_i64s(values, order)
    }

    #[test]
    fn add_examples() {
        assert_eq!(s(&[1, 1], 3) + s(&[], 3), s(&[1, 1], 3));
        assert!((s(&[1, 1], 3) + s(&[-1, -1], 3)).is_zero());
        assert_eq!(s(&[0, 1, 2], 2) + s(&[0, 0, 1], 2), s(&[0, 1, 3], 2));
    }

    #[test]
    fn add_truncates_to_min_order() {
        let sum = s(&[1, 2, 3, 4], 3) + s(&[1, 1], 1);
        assert_eq!(sum.order(), 1);
        assert_eq!(sum, s(&[2, 3], 1));
    }

    #[test]
    fn mul_examples() {
        let a = s(&[3, -1, 4, 1, 5], 4);
        assert_eq!(&a * &Series::one(4), a);
        assert_eq!(s(&[1, 1], 2) * s(&[1, -1], 2), s(&[1, 0, -1], 2));
        let b = s(&[0, 1, 1, 2], 4);
        assert_eq!(&b * &b, s(&[0, 0, 1, 2, 5], 4));
    }

    #[test]
    fn reciprocal_examples() {
        assert_eq!(s(&[1, -1], 3).reciprocal().unwrap(), s(&[1, 1, 1, 1], 3));
        assert_eq!(Series::one(0).reciprocal().unwrap(), Series::one(0));
        let a = s(&[1, 1, 2, 6], 3);
        let r = a.reciprocal().unwrap();
        assert_eq!(r, s(&[1, -1, -1, -3], 3));
        assert_eq!(&a * &r, Series::one(3));
    }

    #[test]
    fn reciprocal_negative_unit() {
        let a = s(&[-1, 2, 0, 1], 3);
        assert_eq!(&a * &a.reciprocal().unwrap(), Series::one(3));
    }

    #[test]
    fn reciprocal_rejects_non_unit() {
        assert_eq!(
            s(&[2, 1], 2).reciprocal(),
            Err(Error::NonUnitConstantTerm(BigInt::from(2)))
        );
        assert!(s(&[0, 1], 2).reciprocal().is_err());
    }

    #[test]
    fn div_examples() {
        assert_eq!(s(&[0, 0, 1], 2).div_cancel(&s(&[0, 1], 2)).unwrap(), s(&[0, 1], 1));
        let q = s(&[0, 1, 2, 5], 3).div(&s(&[1, 1, 1, 2], 3)).unwrap();
        assert_eq!(q, s(&[0, 1, 1, 3], 3));
        assert_eq!(q * s(&[1, 1, 1, 2], 3), s(&[0, 1, 2, 5], 3));
        assert_eq!(
            s(&[1, 1], 3).div_cancel(&s(&[0, 1], 3)),
            Err(Error::ValuationMismatch {
                numerator: Some(0),
                denominator: 1
            })
        );
    }

    #[test]
    fn div_cancel_with_unit_divisor_is_plain_division() {
        let a = s(&[0, 1, 2, 5], 3);
        let b = s(&[1, 1, 1, 2], 3);
        assert_eq!(a.div_cancel(&b).unwrap(), a.div(&b).unwrap());
    }

    #[test]
    fn div_cancel_rejects_zero_divisor() {
        assert!(s(&[0, 1], 2).div_cancel(&Series::zero(2)).is_err());
    }

    #[test]
    fn geometric_sum_examples() {
        assert_eq!(s(&[0, 1], 3).geometric_sum().unwrap(), s(&[1, 1, 1, 1], 3));
        assert_eq!(Series::zero(4).geometric_sum().unwrap(), Series::one(4));
        assert_eq!(s(&[0, 1, 1], 3).geometric_sum().unwrap(), s(&[1, 1, 2, 3], 3));
        assert!(matches!(
            s(&[1, 1], 3).geometric_sum(),
            Err(Error::NonzeroConstantTerm(_))
        ));
    }

    #[test]
    fn geometric_sum_matches_explicit_powers() {
        let a = s(&[0, 1, 1], 6);
        let mut explicit = Series::zero(6);
        for j in 0..=6 {
            explicit = explicit + a.pow(j);
        }
        assert_eq!(a.geometric_sum().unwrap(), explicit);
    }

    #[test]
    fn pow_and_shift() {
        let a = s(&[1, 1], 4);
        assert_eq!(a.pow(3), s(&[1, 3, 3, 1], 4));
        assert_eq!(a.pow(0), Series::one(4));
        assert_eq!(a.shift_up(2), s(&[0, 0, 1, 1], 4));
        assert_eq!(a.shift_up(9), Series::zero(4));
    }

    #[test]
    fn display() {
        assert_eq!(s(&[1, -1, 0, 3], 3).to_string(), "1 - x + 3x^3 + O(x^4)");
        assert_eq!(Series::zero(2).to_string(), "0 + O(x^3)");
        assert_eq!(s(&[0, -2, 1], 2).to_string(), "-2x + x^2 + O(x^3)");
    }

    #[test]
    fn valuation() {
        assert_eq!(s(&[0, 0, 3], 3).valuation(), Some(2));
        assert_eq!(Series::zero(3).valuation(), None);
    }
}
