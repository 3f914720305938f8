//! Quotients of Laurent polynomials.

use core::fmt;
use core::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Signed;

use super::gcd;
use super::laurent::LaurentPoly;
use crate::error::Error;

/// `num / den` with `den != 0`.
///
/// Values are kept reduced: numerator and denominator share no polynomial
/// factor, the denominator carries no monomial factor, and its
/// lexicographically greatest term is positive. Equality is nonetheless
/// decided by cross-multiplication.
#[derive(Clone)]
pub struct RatFunc {
    num: LaurentPoly,
    den: LaurentPoly,
}

impl RatFunc {
    pub fn zero() -> Self {
        Self::from_poly(LaurentPoly::zero())
    }

    pub fn one() -> Self {
        Self::from_poly(LaurentPoly::one())
    }

    pub fn from_poly(p: LaurentPoly) -> Self {
        Self {
            num: p,
            den: LaurentPoly::one(),
        }
    }

    pub fn integer<T: Into<BigInt>>(c: T) -> Self {
        Self::from_poly(LaurentPoly::constant(c))
    }

    /// The rational number `p / q`. Panics if `q == 0`.
    pub fn ratio(p: i64, q: i64) -> Self {
        Self::new(LaurentPoly::constant(p), LaurentPoly::constant(q)).expect("nonzero denominator")
    }

    pub fn monomial<T: Into<BigInt>>(c: T, exp_v: i32, exp_s: i32) -> Self {
        Self::from_poly(LaurentPoly::monomial(c, exp_v, exp_s))
    }

    pub fn z() -> Self {
        Self::from_poly(LaurentPoly::z())
    }

    pub fn new(num: LaurentPoly, den: LaurentPoly) -> Result<Self, Error> {
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Self::reduced(num, den))
    }

    fn reduced(num: LaurentPoly, den: LaurentPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let g = gcd::gcd(&num, &den);
        let (mut num, mut den) = if g.is_one() {
            (num, den)
        } else {
            (
                gcd::div_exact(&num, &g).expect("gcd divides numerator"),
                gcd::div_exact(&den, &g).expect("gcd divides denominator"),
            )
        };
        if let Some((a, b)) = den.min_exponents() {
            if (a, b) != (0, 0) {
                den = den.shift(-a, -b);
                num = num.shift(-a, -b);
            }
        }
        if den.terms().next_back().is_some_and(|(_, c)| c.is_negative()) {
            den = -den;
            num = -num;
        }
        Self { num, den }
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &LaurentPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num == self.den
    }

    /// True when the value lies in `Z[v^±1, s^±1]`.
    pub fn is_polynomial(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_polynomial(&self) -> Option<&LaurentPoly> {
        self.is_polynomial().then_some(&self.num)
    }

    pub fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(Self::reduced(self.den.clone(), self.num.clone()))
        }
    }

    pub fn checked_div(&self, rhs: &Self) -> Option<Self> {
        rhs.inv().map(|r| self * &r)
    }

    pub fn pow(&self, k: i32) -> Self {
        let base = if k < 0 {
            self.inv().expect("negative power of zero")
        } else {
            self.clone()
        };
        let mut acc = Self::one();
        for _ in 0..k.unsigned_abs() {
            acc = &acc * &base;
        }
        acc
    }

    fn map(&self, f: impl Fn(&LaurentPoly) -> LaurentPoly) -> Self {
        Self::reduced(f(&self.num), f(&self.den))
    }

    /// `v -> v^-1, s -> s^-1`.
    pub fn mirror(&self) -> Self {
        self.map(LaurentPoly::mirror)
    }

    /// `s -> -s^-1`, `v` fixed.
    pub fn he_involution(&self) -> Self {
        self.map(LaurentPoly::he_involution)
    }

    /// `v -> v^n, s -> s^n`.
    pub fn psi(&self, n: u32) -> Self {
        self.map(|p| p.psi(n as i32))
    }

    /// `v -> s^-n`.
    pub fn specialize_v(&self, n: u32) -> Result<Self, Error> {
        let den = self.den.specialize_v(n as i32);
        if den.is_zero() {
            return Err(Error::Specialization { n });
        }
        Ok(Self::reduced(self.num.specialize_v(n as i32), den))
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        self * &Self::from_poly(p.clone())
    }
}

impl Default for RatFunc {
    fn default() -> Self {
        Self::zero()
    }
}

impl From<LaurentPoly> for RatFunc {
    fn from(p: LaurentPoly) -> Self {
        Self::from_poly(p)
    }
}

impl From<i64> for RatFunc {
    fn from(c: i64) -> Self {
        Self::integer(c)
    }
}

impl PartialEq for RatFunc {
    fn eq(&self, other: &Self) -> bool {
        if self.num == other.num && self.den == other.den {
            return true;
        }
        &self.num * &other.den == &other.num * &self.den
    }
}

impl Eq for RatFunc {}

impl Add for &RatFunc {
    type Output = RatFunc;
    fn add(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return RatFunc::reduced(&self.num + &rhs.num, self.den.clone());
        }
        if self.den.is_one() || rhs.den.is_one() || self.den.is_monomial() && rhs.den.is_monomial() {
            return RatFunc::reduced(
                &(&self.num * &rhs.den) + &(&rhs.num * &self.den),
                &self.den * &rhs.den,
            );
        }
        let g = gcd::gcd(&self.den, &rhs.den);
        let d1 = gcd::div_exact(&self.den, &g).expect("gcd divides");
        let d2 = gcd::div_exact(&rhs.den, &g).expect("gcd divides");
        let num = &(&self.num * &d2) + &(&rhs.num * &d1);
        RatFunc::reduced(num, &d1 * &rhs.den)
    }
}

impl Sub for &RatFunc {
    type Output = RatFunc;
    fn sub(self, rhs: &RatFunc) -> RatFunc {
        self + &(-rhs)
    }
}

impl Mul for &RatFunc {
    type Output = RatFunc;
    fn mul(self, rhs: &RatFunc) -> RatFunc {
        if self.is_zero() || rhs.is_zero() {
            return RatFunc::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return RatFunc::from_poly(&self.num * &rhs.num);
        }
        // cross-cancel before multiplying
        let g1 = gcd::gcd(&self.num, &rhs.den);
        let g2 = gcd::gcd(&rhs.num, &self.den);
        let n1 = gcd::div_exact(&self.num, &g1).expect("gcd divides");
        let d2 = gcd::div_exact(&rhs.den, &g1).expect("gcd divides");
        let n2 = gcd::div_exact(&rhs.num, &g2).expect("gcd divides");
        let d1 = gcd::div_exact(&self.den, &g2).expect("gcd divides");
        RatFunc::reduced(&n1 * &n2, &d1 * &d2)
    }
}

impl Div for &RatFunc {
    type Output = RatFunc;
    /// Panics on division by zero; see [`RatFunc::checked_div`].
    fn div(self, rhs: &RatFunc) -> RatFunc {
        self.checked_div(rhs).expect("division by zero RatFunc")
    }
}

impl Neg for &RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        RatFunc {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for RatFunc {
            type Output = RatFunc;
            fn $m(self, rhs: RatFunc) -> RatFunc {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul, Div div);

impl Neg for RatFunc {
    type Output = RatFunc;
    fn neg(self) -> RatFunc {
        -&self
    }
}

/// `num/den`, with either side parenthesized when it has several terms;
/// the denominator is omitted when it is one.
impl fmt::Display for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |p: &LaurentPoly| {
            if p.len() <= 1 {
                alloc::format!("{p}")
            } else {
                alloc::format!("({p})")
            }
        };
        if self.den.is_one() {
            f.write_str(&side(&self.num))
        } else {
            write!(f, "{}/{}", side(&self.num), side(&self.den))
        }
    }
}

impl fmt::Debug for RatFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "RatFunc({self})")
    }
}

impl RatFunc {
    /// True when the value is `c·m` for a positive integer `c` and a
    /// monomial `m`, i.e. a unit-free "positive" coefficient for printing.
    pub fn is_signed_monomial(&self) -> bool {
        self.den.is_one() && self.num.is_monomial()
    }

    /// Sign of the single numerator term, if [`Self::is_signed_monomial`].
    pub fn monomial_is_negative(&self) -> bool {
        self.is_signed_monomial() && self.num.least_term().is_some_and(|(_, c)| c.is_negative())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn reduction_is_canonical() {
        // (s^2 - 1) / (s^2 + s) = (s - 1)/s = 1 - s^-1
        let num = LaurentPoly::from_terms([((0, 2), 1), ((0, 0), -1)]);
        let den = LaurentPoly::from_terms([((0, 2), 1), ((0, 1), 1)]);
        let r = RatFunc::new(num, den).unwrap();
        assert!(r.is_polynomial());
        assert_eq!(r.numerator(), &LaurentPoly::from_terms([((0, 0), 1), ((0, -1), -1)]));
    }

    #[test]
    fn denominator_sign_normalized() {
        let r = RatFunc::new(LaurentPoly::one(), LaurentPoly::constant(-3)).unwrap();
        assert_eq!(r.denominator(), &LaurentPoly::constant(3));
        assert_eq!(r.numerator(), &LaurentPoly::constant(-1));
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(
            RatFunc::new(LaurentPoly::one(), LaurentPoly::zero()).unwrap_err(),
            Error::ZeroDenominator
        );
    }

    #[test]
    fn arithmetic_with_distinct_denominators() {
        let a = RatFunc::ratio(1, 2);
        let b = RatFunc::ratio(1, 3);
        assert_eq!(&a + &b, RatFunc::ratio(5, 6));
        let z = RatFunc::z();
        let inv = z.inv().unwrap();
        assert_eq!(&z * &inv, RatFunc::one());
        assert_eq!(&(&inv + &inv) - &inv, inv);
    }

    #[test]
    fn display() {
        assert_eq!(RatFunc::ratio(-1, 2).to_string(), "-1/2");
        assert_eq!(RatFunc::monomial(1, 0, -1).to_string(), "s^-1");
        assert_eq!(RatFunc::z().to_string(), "(s - s^-1)");
        let r = RatFunc::z().inv().unwrap();
        assert_eq!(r.to_string(), "s/(s^2 - 1)");
    }
}
