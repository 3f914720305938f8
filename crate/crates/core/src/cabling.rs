//! Decorations of torus patterns: the cabling map `F_m^n`, power-sum
//! decorated torus links, and the action of the meridian maps on power sums.

use num_integer::Integer;

use crate::error::Error;
use crate::partitions::{hooks_of, omega};
use crate::ring::{brace, RatFunc};
use crate::skein::{delta_pn, fractional_twist, framing_twist, TwistExponent};
use crate::symfunc::{plethysm_by_pm, power_sum, schur, SymElement};

/// The `(m, n)` torus pattern: `m` strings with `n` full twists of the
/// framed braid `beta_m`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CableSpec {
    pub m: u32,
    pub n: i64,
    pub coprime: bool,
}

impl CableSpec {
    pub fn new(m: u32, n: i64) -> Result<Self, Error> {
        if m == 0 {
            return Err(Error::NonPositive { what: "strings m", value: 0 });
        }
        Ok(Self {
            m,
            n,
            coprime: (m as i64).gcd(&n) == 1,
        })
    }

    fn require_coprime(&self) -> Result<(), Error> {
        if self.coprime {
            Ok(())
        } else {
            Err(Error::NotCoprime { m: self.m, n: self.n })
        }
    }
}

/// `F_m^n(Q) = tau^(n/m)(Q[P_m])`.
pub fn cable_decorate(spec: CableSpec, q: &SymElement) -> Result<SymElement, Error> {
    spec.require_coprime()?;
    let plethysm = plethysm_by_pm(q, spec.m as usize)?;
    fractional_twist(&plethysm, spec.n, spec.m)
}

/// `T_m^n * P_d` as the explicit sum over `md`-hooks
/// `sum (tau_nu)^(n/m) omega_nu Q_nu`.
pub fn torus_power_sum(spec: CableSpec, d: usize) -> Result<SymElement, Error> {
    spec.require_coprime()?;
    let mut acc = SymElement::zero();
    for hook in hooks_of(spec.m as usize * d)? {
        let nu = hook.to_partition();
        let twist = TwistExponent::new(&nu, spec.n, spec.m).eigenvalue(&nu)?;
        acc = &acc + &schur(&nu).scale(&(&twist * &RatFunc::integer(omega(&nu))));
    }
    Ok(acc)
}

/// Both sides of `Delta_{P_N}(P_M) = {MN} T_m^n * P_d`, where
/// `d = gcd(M, N)`, `M = md`, `N = nd`.
#[derive(Clone, Debug, PartialEq)]
pub struct PowerHopf {
    pub lhs: SymElement,
    pub rhs: SymElement,
    pub equal: bool,
}

pub fn power_hopf_check(big_m: u32, big_n: u32) -> Result<PowerHopf, Error> {
    if big_m == 0 || big_n == 0 {
        return Err(Error::NonPositive { what: "M, N", value: 0 });
    }
    let d = big_m.gcd(&big_n);
    let lhs = delta_pn(&power_sum(big_m as usize), big_n)?;
    let spec = CableSpec::new(big_m / d, (big_n / d) as i64)?;
    let factor = RatFunc::from_poly(brace(big_m as i64 * big_n as i64)?);
    let rhs = torus_power_sum(spec, d as usize)?.scale(&factor);
    let equal = lhs == rhs;
    Ok(PowerHopf { lhs, rhs, equal })
}

/// `Delta_{P_M}(P_M) = {M^2} tau(P_M)`.
pub fn framing_change_identity(big_m: u32) -> Result<bool, Error> {
    if big_m == 0 {
        return Err(Error::NonPositive { what: "M", value: 0 });
    }
    let p = power_sum(big_m as usize);
    let lhs = delta_pn(&p, big_m)?;
    let factor = RatFunc::from_poly(brace((big_m * big_m) as i64)?);
    Ok(lhs == framing_twist(&p).scale(&factor))
}
