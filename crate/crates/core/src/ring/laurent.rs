//! Sparse Laurent polynomials in `v` and `s` with arbitrary-precision
//! integer coefficients.

use alloc::collections::BTreeMap;
use core::fmt;
use core::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Exponent pair `(exp_v, exp_s)`.
pub type Exponent = (i32, i32);

/// An element of `Z[v^±1, s^±1]`.
///
/// Terms are keyed by `(exp_v, exp_s)`; zero coefficients are never stored,
/// so the empty map is the zero polynomial.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    terms: BTreeMap<Exponent, BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::monomial(c, 0, 0)
    }

    pub fn monomial<T: Into<BigInt>>(c: T, exp_v: i32, exp_s: i32) -> Self {
        let mut p = Self::zero();
        p.add_term((exp_v, exp_s), c.into());
        p
    }

    /// `v^e`.
    pub fn v_pow(e: i32) -> Self {
        Self::monomial(1, e, 0)
    }

    /// `s^e`.
    pub fn s_pow(e: i32) -> Self {
        Self::monomial(1, 0, e)
    }

    /// `z = s - s^-1`.
    pub fn z() -> Self {
        Self::from_terms([((0, 1), 1), ((0, -1), -1)])
    }

    /// Builds a polynomial from `(exponent, coefficient)` pairs, combining
    /// repeated exponents.
    pub fn from_terms<I, T>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Exponent, T)>,
        T: Into<BigInt>,
    {
        let mut p = Self::zero();
        for (e, c) in terms {
            p.add_term(e, c.into());
        }
        p
    }

    pub fn add_term(&mut self, e: Exponent, c: BigInt) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(e) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms.get(&(0, 0)).is_some_and(|c| c.is_one())
    }

    /// True when the polynomial is a single term `c·v^a·s^b`.
    pub fn is_monomial(&self) -> bool {
        self.terms.len() == 1
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending `(exp_v, exp_s)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Exponent, &BigInt)> + '_ {
        self.terms.iter().map(|(e, c)| (*e, c))
    }

    pub fn coefficient(&self, e: Exponent) -> BigInt {
        self.terms.get(&e).cloned().unwrap_or_default()
    }

    /// The term of lexicographically least exponent pair.
    pub fn least_term(&self) -> Option<(Exponent, &BigInt)> {
        self.terms.iter().next().map(|(e, c)| (*e, c))
    }

    /// Componentwise minimum of the exponents, i.e. the largest monomial
    /// dividing every term.
    pub fn min_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), &(x, y)| (a.min(x), b.min(y))))
    }

    pub fn max_exponents(&self) -> Option<Exponent> {
        let mut it = self.terms.keys();
        let first = *it.next()?;
        Some(it.fold(first, |(a, b), &(x, y)| (a.max(x), b.max(y))))
    }

    /// Does the polynomial mention `v` at all?
    pub fn has_v(&self) -> bool {
        self.terms.keys().any(|&(a, _)| a != 0)
    }

    /// gcd of the integer coefficients (non-negative; zero for the zero
    /// polynomial).
    pub fn integer_content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in self.terms.values() {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Multiplies by `v^dv s^ds`.
    pub fn shift(&self, dv: i32, ds: i32) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(&(a, b), c)| ((a + dv, b + ds), c.clone()))
                .collect(),
        }
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        if k.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// Exact division of every coefficient by `k`. Panics if `k` does not
    /// divide some coefficient.
    pub fn div_integer(&self, k: &BigInt) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let (q, r) = c.div_rem(k);
                    assert!(r.is_zero(), "inexact integer division");
                    (*e, q)
                })
                .collect(),
        }
    }

    /// Applies an exponent substitution; `f` returns the new exponent and
    /// whether the term changes sign.
    pub fn map_exponents(&self, f: impl Fn(Exponent) -> (Exponent, bool)) -> Self {
        let mut out = Self::zero();
        for (&e, c) in &self.terms {
            let (e2, negate) = f(e);
            out.add_term(e2, if negate { -c } else { c.clone() });
        }
        out
    }

    /// `v -> v^-1, s -> s^-1`.
    pub fn mirror(&self) -> Self {
        self.map_exponents(|(a, b)| ((-a, -b), false))
    }

    /// `s -> -s^-1`, `v` fixed.
    pub fn he_involution(&self) -> Self {
        self.map_exponents(|(a, b)| ((a, -b), b.rem_euclid(2) == 1))
    }

    /// `v -> v^n, s -> s^n`.
    pub fn psi(&self, n: i32) -> Self {
        self.map_exponents(|(a, b)| ((a * n, b * n), false))
    }

    /// `v -> s^-n`; the result has no `v`.
    pub fn specialize_v(&self, n: i32) -> Self {
        self.map_exponents(|(a, b)| ((0, b - n * a), false))
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Inverse of a unit `±v^a s^b`.
    pub fn unit_inverse(&self) -> Option<Self> {
        if self.terms.len() != 1 {
            return None;
        }
        let (&(a, b), c) = self.terms.iter().next()?;
        if c.abs().is_one() {
            Some(Self::monomial(c.clone(), -a, -b))
        } else {
            None
        }
    }
}

impl From<i64> for LaurentPoly {
    fn from(c: i64) -> Self {
        Self::constant(c)
    }
}

impl From<BigInt> for LaurentPoly {
    fn from(c: BigInt) -> Self {
        Self::constant(c)
    }
}

impl AddAssign<&LaurentPoly> for LaurentPoly {
    fn add_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, c.clone());
        }
    }
}

impl SubAssign<&LaurentPoly> for LaurentPoly {
    fn sub_assign(&mut self, rhs: &LaurentPoly) {
        for (&e, c) in &rhs.terms {
            self.add_term(e, -c);
        }
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;
    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;
    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;
    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        let mut out = LaurentPoly::zero();
        for (&(a1, b1), c1) in &self.terms {
            for (&(a2, b2), c2) in &rhs.terms {
                out.add_term((a1 + a2, b1 + b2), c1 * c2);
            }
        }
        out
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        LaurentPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for LaurentPoly {
            type Output = LaurentPoly;
            fn $m(self, rhs: LaurentPoly) -> LaurentPoly {
                (&self).$m(&rhs)
            }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for LaurentPoly {
    type Output = LaurentPoly;
    fn neg(self) -> LaurentPoly {
        -&self
    }
}

fn write_var(f: &mut fmt::Formatter<'_>, name: &str, e: i32, first: &mut bool) -> fmt::Result {
    if e == 0 {
        return Ok(());
    }
    if !*first {
        f.write_str("*")?;
    }
    *first = false;
    if e == 1 {
        f.write_str(name)
    } else {
        write!(f, "{name}^{e}")
    }
}

impl LaurentPoly {
    /// Writes `|c|*v^a*s^b` for one term, omitting unit coefficients and
    /// zero exponents.
    pub(crate) fn fmt_term_abs(f: &mut fmt::Formatter<'_>, (a, b): Exponent, c: &BigInt) -> fmt::Result {
        let mag = c.abs();
        let mut first = true;
        if !mag.is_one() || (a == 0 && b == 0) {
            write!(f, "{mag}")?;
            first = false;
        }
        write_var(f, "v", a, &mut first)?;
        write_var(f, "s", b, &mut first)
    }
}

/// Terms in descending `(exp_v, exp_s)` order, `c*v^a*s^b` joined by
/// ` + ` / ` - `.
impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (&e, c)) in self.terms.iter().rev().enumerate() {
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            Self::fmt_term_abs(f, e, c)?;
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    #[test]
    fn zero_coefficients_are_dropped() {
        let p = LaurentPoly::from_terms([((1, 2), 3), ((1, 2), -3), ((0, 0), 0)]);
        assert!(p.is_zero());
        assert_eq!(p.len(), 0);
    }

    #[test]
    fn rendering() {
        let p = LaurentPoly::from_terms([((0, 1), 1), ((0, -1), -1), ((-1, 2), 3), ((0, 0), -2)]);
        assert_eq!(p.to_string(), "s - 2 - s^-1 + 3*v^-1*s^2");
        assert_eq!(LaurentPoly::zero().to_string(), "0");
        assert_eq!(LaurentPoly::monomial(-1, 2, -3).to_string(), "-v^2*s^-3");
        assert_eq!(LaurentPoly::constant(-1).to_string(), "-1");
    }

    #[test]
    fn he_involution_signs() {
        // s -> -s^-1 turns s^3 into -s^-3 and fixes s^2
        let p = LaurentPoly::from_terms([((0, 3), 1), ((0, 2), 1)]);
        let q = LaurentPoly::from_terms([((0, -3), -1), ((0, -2), 1)]);
        assert_eq!(p.he_involution(), q);
        assert_eq!(LaurentPoly::z().he_involution(), LaurentPoly::z());
    }

    #[test]
    fn specialization_drops_v() {
        let p = LaurentPoly::v_pow(-1);
        assert_eq!(p.specialize_v(2), LaurentPoly::s_pow(2));
    }
}
