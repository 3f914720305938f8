//! Operators on `C+` that are diagonal in the Schur basis: the mirror map,
//! meridian maps, `Delta_{P_N}`, and framing twists.

use alloc::string::ToString;

use num_rational::Ratio;

use crate::error::Error;
use crate::partitions::{content_power_sum, content_sum, Partition};
use crate::ring::{brace, delta_const, LaurentPoly, RatFunc};
use crate::symfunc::{from_basis, to_basis, Basis, BasisExpansion, SymElement};

/// Multiplies each Schur coefficient of `f` by `eigen(lambda)`.
pub fn schur_diagonal(
    f: &SymElement,
    eigen: impl Fn(&Partition) -> Result<RatFunc, Error>,
) -> Result<SymElement, Error> {
    let schur = to_basis(f, Basis::Schur);
    let scaled = schur.terms.try_map_terms(|lambda, c| Ok(c * &eigen(lambda)?))?;
    Ok(from_basis(&BasisExpansion::new(Basis::Schur, scaled)))
}

fn infallible(f: &SymElement, eigen: impl Fn(&Partition) -> RatFunc) -> SymElement {
    schur_diagonal(f, |l| Ok(eigen(l))).expect("eigenvalue is total")
}

/// Conjugates coefficients while fixing every `Q_lambda`.
pub fn mirror(f: &SymElement) -> SymElement {
    let schur = to_basis(f, Basis::Schur);
    from_basis(&BasisExpansion::new(Basis::Schur, schur.terms.map_coeffs(RatFunc::mirror)))
}

/// `t_lambda = {1} v^-1 sum_{x in lambda} s^(2c(x))`.
pub fn meridian_eigenvalue(lambda: &Partition) -> RatFunc {
    psi_eigenvalue(lambda, 1)
}

/// `psi_N(t_lambda) = {N} v^-N sum s^(2N c(x))`.
fn psi_eigenvalue(lambda: &Partition, n: u32) -> RatFunc {
    let b = brace(n as i64).expect("n >= 1");
    let sum = content_power_sum(lambda, n).expect("n >= 1");
    RatFunc::from_poly(&(&b * &sum) * &LaurentPoly::v_pow(-(n as i32)))
}

fn check_n(n: u32) -> Result<(), Error> {
    if n == 0 {
        Err(Error::NonPositive { what: "N", value: 0 })
    } else {
        Ok(())
    }
}

/// `Delta_phi = phi - delta`.
pub fn delta_phi(f: &SymElement) -> SymElement {
    infallible(f, meridian_eigenvalue)
}

/// `Delta_phibar`, eigenvalue `mirror(t_lambda)`.
pub fn delta_phibar(f: &SymElement) -> SymElement {
    infallible(f, |l| meridian_eigenvalue(l).mirror())
}

/// The meridian map `phi`.
pub fn meridian_phi(f: &SymElement) -> SymElement {
    &delta_phi(f) + &f.scale(&delta_const())
}

/// The reversed meridian map `phibar`.
pub fn meridian_phibar(f: &SymElement) -> SymElement {
    &delta_phibar(f) + &f.scale(&delta_const())
}

/// `Delta_{P_N}`, eigenvalue `psi_N(t_lambda)`.
pub fn delta_pn(f: &SymElement, n: u32) -> Result<SymElement, Error> {
    check_n(n)?;
    Ok(infallible(f, |l| psi_eigenvalue(l, n)))
}

/// `Delta_{P_N*}` for the orientation-reversed decoration, eigenvalue
/// `psi_N(mirror(t_lambda)) = -{N} v^N sum s^(-2N c(x))`.
pub fn delta_pn_star(f: &SymElement, n: u32) -> Result<SymElement, Error> {
    check_n(n)?;
    Ok(infallible(f, |l| psi_eigenvalue(l, n).mirror()))
}

/// Exponents of `(tau_lambda)^(n/m) = v^(-|lambda| n/m) s^(2 n c(lambda)/m)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TwistExponent {
    pub v_exp: Ratio<i64>,
    pub s_exp: Ratio<i64>,
}

impl TwistExponent {
    /// Panics if `m == 0`.
    pub fn new(lambda: &Partition, n: i64, m: u32) -> Self {
        let m = m as i64;
        Self {
            v_exp: Ratio::new(-(lambda.weight() as i64) * n, m),
            s_exp: Ratio::new(2 * n * content_sum(lambda), m),
        }
    }

    pub fn integral(&self) -> Option<(i32, i32)> {
        (self.v_exp.is_integer() && self.s_exp.is_integer())
            .then(|| (self.v_exp.to_integer() as i32, self.s_exp.to_integer() as i32))
    }

    /// The monomial `v^a s^b`, or the fractional-exponent error naming `lambda`.
    pub fn eigenvalue(&self, lambda: &Partition) -> Result<RatFunc, Error> {
        let (a, b) = self.integral().ok_or_else(|| Error::FractionalExponent {
            partition: lambda.clone(),
            v_exp: self.v_exp.to_string(),
            s_exp: self.s_exp.to_string(),
        })?;
        Ok(RatFunc::monomial(1, a, b))
    }
}

/// `tau(Q_lambda) = v^(-|lambda|) s^(2 sum c(x)) Q_lambda`.
pub fn framing_twist(f: &SymElement) -> SymElement {
    fractional_twist(f, 1, 1).expect("integral exponents")
}

/// `tau^(n/m)`; fails naming the first Schur-support partition whose
/// eigenvalue would need a fractional exponent.
pub fn fractional_twist(f: &SymElement, n: i64, m: u32) -> Result<SymElement, Error> {
    if m == 0 {
        return Err(Error::NonPositive { what: "twist denominator", value: 0 });
    }
    schur_diagonal(f, |lambda| TwistExponent::new(lambda, n, m).eigenvalue(lambda))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::Hook;
    use crate::symfunc::{power_sum, schur};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn delta_phi_on_single_box() {
        let q1 = schur(&p(&[1]));
        let expected = q1.scale(&RatFunc::from_poly(&LaurentPoly::z() * &LaurentPoly::v_pow(-1)));
        assert_eq!(delta_phi(&q1), expected);
    }

    #[test]
    fn delta_pn_on_row() {
        let q2 = schur(&p(&[2]));
        let eig = &(&brace(2).unwrap() * &LaurentPoly::v_pow(-2)) * &LaurentPoly::from_terms([((0, 0), 1), ((0, 4), 1)]);
        assert_eq!(delta_pn(&q2, 2).unwrap(), q2.scale(&RatFunc::from_poly(eig)));
        assert_eq!(delta_pn(&q2, 1).unwrap(), delta_phi(&q2));
        assert!(delta_pn(&q2, 0).is_err());
    }

    #[test]
    fn framing_twist_on_row() {
        let q2 = schur(&p(&[2]));
        assert_eq!(framing_twist(&q2), q2.scale(&RatFunc::monomial(1, -2, 2)));
    }

    #[test]
    fn half_twist() {
        let err = fractional_twist(&schur(&p(&[1])), 1, 2).unwrap_err();
        assert!(matches!(err, Error::FractionalExponent { ref partition, .. } if *partition == p(&[1])));
        let got = fractional_twist(&power_sum(2), 1, 2).unwrap();
        let expected = &schur(&Hook::new(1, 0).to_partition()).scale(&RatFunc::monomial(1, -1, 1))
            - &schur(&Hook::new(0, 1).to_partition()).scale(&RatFunc::monomial(1, -1, -1));
        assert_eq!(got, expected);
    }

    #[test]
    fn meridian_adds_delta() {
        let q = schur(&p(&[2, 1]));
        assert_eq!(&meridian_phi(&q) - &delta_phi(&q), q.scale(&delta_const()));
        assert_eq!(&meridian_phibar(&q) - &delta_phibar(&q), q.scale(&delta_const()));
    }
}
