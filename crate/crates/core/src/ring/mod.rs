//! Exact coefficient arithmetic: `Z[v^±1, s^±1]`, its fraction field, the
//! quantum constants, the coefficient involutions, and truncated power
//! series.

mod gcd;
mod laurent;
mod quantum;
mod ratfunc;
mod series;

use core::ops::{Add, Mul, Neg, Sub};

pub use gcd::{div_exact, gcd};
pub use laurent::{Exponent, LaurentPoly};
pub use quantum::{alpha, brace, delta_const, quantum_int};
pub use ratfunc::RatFunc;
pub use series::FormalSeries;

use crate::error::Error;

/// A commutative algebra over [`RatFunc`]; the coefficient type of a
/// [`FormalSeries`].
pub trait Coefficient:
    Clone + PartialEq + Add<Output = Self> + Sub<Output = Self> + Mul<Output = Self> + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn scale(&self, c: &RatFunc) -> Self;
}

impl Coefficient for RatFunc {
    fn zero() -> Self {
        RatFunc::zero()
    }
    fn one() -> Self {
        RatFunc::one()
    }
    fn is_zero(&self) -> bool {
        RatFunc::is_zero(self)
    }
    fn scale(&self, c: &RatFunc) -> Self {
        self * c
    }
}

/// Substitutes `v -> v^-1, s -> s^-1`.
pub fn mirror_coeff(f: &RatFunc) -> RatFunc {
    f.mirror()
}

/// Substitutes `s -> -s^-1`, fixing `v`.
pub fn he_involution(f: &RatFunc) -> RatFunc {
    f.he_involution()
}

/// Substitutes `v -> v^n, s -> s^n`.
pub fn psi_n(f: &RatFunc, n: u32) -> Result<RatFunc, Error> {
    if n == 0 {
        return Err(Error::NonPositive { what: "psi_N", value: 0 });
    }
    Ok(f.psi(n))
}

/// Substitutes `v -> s^-n`.
pub fn specialize_sl_n(f: &RatFunc, n: u32) -> Result<RatFunc, Error> {
    if n == 0 {
        return Err(Error::NonPositive { what: "sl(N) rank", value: 0 });
    }
    f.specialize_v(n)
}
