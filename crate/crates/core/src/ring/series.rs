//! Truncated formal power series in `t`.

use alloc::vec::Vec;

use super::ratfunc::RatFunc;
use super::Coefficient;
use crate::error::Error;

/// `c_0 + c_1 t + ... + c_order t^order`, everything above `order`
/// discarded.
#[derive(Clone, Debug, PartialEq)]
pub struct FormalSeries<C> {
    coeffs: Vec<C>,
}

impl<C: Coefficient> FormalSeries<C> {
    /// Pads or truncates `coeffs` to `order + 1` entries.
    pub fn new(mut coeffs: Vec<C>, order: usize) -> Self {
        coeffs.resize_with(order + 1, C::zero);
        Self { coeffs }
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> C) -> Self {
        Self {
            coeffs: (0..=order).map(f).collect(),
        }
    }

    pub fn one(order: usize) -> Self {
        Self::from_fn(order, |i| if i == 0 { C::one() } else { C::zero() })
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, i: usize) -> &C {
        &self.coeffs[i]
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<C> {
        self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |i| self.coeffs[i].clone() + other.coeffs[i].clone())
    }

    pub fn sub(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |i| self.coeffs[i].clone() - other.coeffs[i].clone())
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self::from_fn(self.order(), |i| self.coeffs[i].scale(c))
    }

    /// Truncated product, at the smaller of the two orders.
    pub fn mul(&self, other: &Self) -> Self {
        let order = self.order().min(other.order());
        Self::from_fn(order, |n| {
            let mut acc = C::zero();
            for k in 0..=n {
                if self.coeffs[k].is_zero() || other.coeffs[n - k].is_zero() {
                    continue;
                }
                acc = acc + self.coeffs[k].clone() * other.coeffs[n - k].clone();
            }
            acc
        })
    }

    fn require_unit(&self) -> Result<(), Error> {
        if self.coeffs[0] == C::one() {
            Ok(())
        } else {
            Err(Error::NonUnitConstantTerm)
        }
    }

    /// Multiplicative inverse; the constant term must be 1.
    pub fn inverse(&self) -> Result<Self, Error> {
        self.require_unit()?;
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::one());
        for n in 1..=self.order() {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].clone() * out[n - k].clone();
                }
            }
            out.push(-acc);
        }
        Ok(Self { coeffs: out })
    }

    /// `log(a) = sum_{k>=1} (-1)^(k+1) (a - 1)^k / k`; the constant term
    /// must be 1.
    pub fn log(&self) -> Result<Self, Error> {
        self.require_unit()?;
        let order = self.order();
        let mut u = self.clone();
        u.coeffs[0] = C::zero();
        let mut power = u.clone();
        let mut acc = Self::new(Vec::new(), order);
        for k in 1..=order {
            let term = power.scale(&RatFunc::ratio(if k % 2 == 1 { 1 } else { -1 }, k as i64));
            acc = acc.add(&term);
            if k < order {
                power = power.mul(&u);
            }
        }
        Ok(acc)
    }

    /// `exp(a)` for a series with zero constant term, via
    /// `n e_n = sum_k k a_k e_{n-k}`.
    pub fn exp(&self) -> Result<Self, Error> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonUnitConstantTerm);
        }
        let mut out: Vec<C> = Vec::with_capacity(self.coeffs.len());
        out.push(C::one());
        for n in 1..=self.order() {
            let mut acc = C::zero();
            for k in 1..=n {
                if !self.coeffs[k].is_zero() {
                    acc = acc + self.coeffs[k].scale(&RatFunc::integer(k as i64)) * out[n - k].clone();
                }
            }
            out.push(acc.scale(&RatFunc::ratio(1, n as i64)));
        }
        Ok(Self { coeffs: out })
    }
}
