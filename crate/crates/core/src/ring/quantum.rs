//! Quantum integers and the distinguished constants of the skein.

use super::laurent::LaurentPoly;
use super::ratfunc::RatFunc;
use crate::error::Error;

fn check_positive(what: &'static str, n: i64) -> Result<(), Error> {
    if n < 1 {
        Err(Error::NonPositive { what, value: n })
    } else {
        Ok(())
    }
}

/// `[n] = s^(n-1) + s^(n-3) + ... + s^(1-n)`.
pub fn quantum_int(n: i64) -> Result<LaurentPoly, Error> {
    check_positive("quantum integer", n)?;
    let n = n as i32;
    Ok(LaurentPoly::from_terms((0..n).map(|k| ((0, n - 1 - 2 * k), 1))))
}

/// `{n} = s^n - s^-n`.
pub fn brace(n: i64) -> Result<LaurentPoly, Error> {
    check_positive("brace", n)?;
    let n = n as i32;
    Ok(LaurentPoly::from_terms([((0, n), 1), ((0, -n), -1)]))
}

/// `alpha_m = s^(m(m-1)/2) [1][2]...[m]`.
pub fn alpha(m: i64) -> Result<LaurentPoly, Error> {
    check_positive("alpha", m)?;
    let mut acc = LaurentPoly::s_pow((m * (m - 1) / 2) as i32);
    for k in 1..=m {
        acc = &acc * &quantum_int(k)?;
    }
    Ok(acc)
}

/// `delta = (v^-1 - v) / (s - s^-1)`, the value of the unknot.
pub fn delta_const() -> RatFunc {
    let num = LaurentPoly::from_terms([((-1, 0), 1), ((1, 0), -1)]);
    RatFunc::new(num, LaurentPoly::z()).expect("z is nonzero")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_quantum_integers() {
        assert_eq!(quantum_int(1).unwrap(), LaurentPoly::one());
        assert_eq!(quantum_int(2).unwrap(), LaurentPoly::from_terms([((0, 1), 1), ((0, -1), 1)]));
        assert_eq!(
            quantum_int(3).unwrap(),
            LaurentPoly::from_terms([((0, 2), 1), ((0, 0), 1), ((0, -2), 1)])
        );
        assert!(matches!(quantum_int(0), Err(Error::NonPositive { .. })));
        assert!(matches!(brace(-2), Err(Error::NonPositive { .. })));
    }

    #[test]
    fn brace_values() {
        assert_eq!(brace(1).unwrap(), LaurentPoly::z());
        assert_eq!(brace(4).unwrap(), LaurentPoly::from_terms([((0, 4), 1), ((0, -4), -1)]));
        for n in 1..=20 {
            assert_eq!(brace(n).unwrap(), &quantum_int(n).unwrap() * &LaurentPoly::z());
        }
    }

    #[test]
    fn alpha_values() {
        assert_eq!(alpha(1).unwrap(), LaurentPoly::one());
        // s (s + s^-1) = s^2 + 1
        assert_eq!(alpha(2).unwrap(), LaurentPoly::from_terms([((0, 2), 1), ((0, 0), 1)]));
        // s^3 (s + s^-1)(s^2 + 1 + s^-2), expanded by hand
        let expected = LaurentPoly::from_terms([((0, 6), 1), ((0, 4), 2), ((0, 2), 2), ((0, 0), 1)]);
        assert_eq!(alpha(3).unwrap(), expected);
    }

    #[test]
    fn delta_parts() {
        let d = delta_const();
        assert_eq!(d, RatFunc::new(LaurentPoly::from_terms([((-1, 0), 1), ((1, 0), -1)]), LaurentPoly::z()).unwrap());
        assert_eq!(d.mirror(), d);
        // v = s^-2: (s^2 - s^-2)/(s - s^-1) = [2]
        assert_eq!(d.specialize_v(2).unwrap(), RatFunc::from_poly(quantum_int(2).unwrap()));
        assert_eq!(d.specialize_v(3).unwrap(), RatFunc::from_poly(quantum_int(3).unwrap()));
    }
}
