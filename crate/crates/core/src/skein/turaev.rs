//! Turaev's basis `A_lambda` and the elements defined from it: the mirror
//! images `Abar_m`, the closed-braid sums `X_m`, and `A_{i,j}`.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Error;
use crate::partitions::{k_lambda, partitions_of, Partition};
use crate::ring::{quantum_int, FormalSeries, LaurentPoly, RatFunc};
use crate::symfunc::{power_sum, Basis, BasisExpansion, Combination, SymElement};

fn require_positive(what: &'static str, m: usize) -> Result<(), Error> {
    if m == 0 {
        Err(Error::NonPositive { what, value: 0 })
    } else {
        Ok(())
    }
}

/// `(-z)^k`.
fn neg_z_pow(k: usize) -> RatFunc {
    RatFunc::from_poly((-LaurentPoly::z()).pow(k as u32))
}

/// `A_0 .. A_m` in the power-sum basis, from
/// `1 + z sum A_k t^k = exp(z sum [k] p_k t^k / k)`.
///
/// Index 0 holds the unit so the vector can be used directly as generator
/// images; the alternative convention `A_0 = 1/z` is not used here.
pub fn turaev_a_upto(m: usize) -> Vec<SymElement> {
    let z = RatFunc::z();
    let exponent = FormalSeries::from_fn(m, |k| {
        if k == 0 {
            SymElement::zero()
        } else {
            let c = RatFunc::from_poly(quantum_int(k as i64).expect("k >= 1")) * RatFunc::ratio(1, k as i64);
            power_sum(k).scale(&(&c * &z))
        }
    });
    let inv_z = z.inv().expect("z is nonzero");
    let mut out: Vec<SymElement> = exponent
        .exp()
        .expect("zero constant term")
        .into_coeffs()
        .into_iter()
        .map(|c| c.scale(&inv_z))
        .collect();
    out[0] = SymElement::unit();
    out
}

/// `A_m`, the closure of the braid `sigma_{m-1} ... sigma_1`.
pub fn turaev_a(m: usize) -> Result<SymElement, Error> {
    require_positive("A_m", m)?;
    Ok(turaev_a_upto(m).pop().expect("nonempty"))
}

/// Evaluates an `A`-monomial combination in the power-sum basis.
pub fn evaluate_a(terms: &Combination) -> SymElement {
    let gens: Vec<Combination> = turaev_a_upto(terms.max_part())
        .into_iter()
        .map(SymElement::into_p_terms)
        .collect();
    SymElement::from_p_terms(terms.substitute(&gens))
}

/// `p_m = (m/[m]) sum_{lambda |- m} (k_lambda / l) (-z)^(l-1) A_lambda`.
pub fn power_sum_in_a(m: usize) -> Result<Combination, Error> {
    require_positive("p_m", m)?;
    let scale = RatFunc::new(LaurentPoly::constant(m as i64), quantum_int(m as i64)?)?;
    Ok(x_terms(m).scale(&scale).scale(&RatFunc::ratio(1, m as i64)))
}

/// `X_m` as `A`-monomials: `m sum (k_lambda / l) (-z)^(l-1) A_lambda`.
fn x_terms(m: usize) -> Combination {
    partitions_of(m)
        .into_iter()
        .map(|lambda| {
            let c = x_coefficient(&lambda);
            (lambda, c)
        })
        .collect()
}

/// Coefficient of `A_lambda` in `X_m`, `m = |lambda|`.
pub fn x_coefficient(lambda: &Partition) -> RatFunc {
    let l = lambda.len();
    let k = BigInt::from(k_lambda(lambda));
    let m = lambda.weight() as i64;
    RatFunc::new(LaurentPoly::constant(k * m), LaurentPoly::constant(l as i64)).expect("l >= 1")
        * neg_z_pow(l - 1)
}

/// Coefficient of `A_lambda` in `Abar_m`: `k_lambda (-z)^(l-1)`.
///
/// Computed directly from the partition, so single coefficients of large
/// `Abar_m` are cheap.
pub fn abar_coefficient(lambda: &Partition) -> RatFunc {
    let l = lambda.len();
    RatFunc::integer(BigInt::from(k_lambda(lambda))) * neg_z_pow(l.saturating_sub(1))
}

/// `Abar_m = sum_{lambda |- m} k_lambda (-z)^(l-1) A_lambda`.
pub fn abar(m: usize) -> Result<BasisExpansion, Error> {
    require_positive("Abar_m", m)?;
    let terms = partitions_of(m)
        .into_iter()
        .map(|lambda| {
            let c = abar_coefficient(&lambda);
            (lambda, c)
        })
        .collect();
    Ok(BasisExpansion::new(Basis::A, terms))
}

/// `Abar_m` evaluated in the power-sum basis.
pub fn abar_elem(m: usize) -> Result<SymElement, Error> {
    Ok(evaluate_a(&abar(m)?.terms))
}

/// `X_m`, evaluated from its `A`-monomial expansion.
pub fn x_elem(m: usize) -> Result<SymElement, Error> {
    require_positive("X_m", m)?;
    Ok(evaluate_a(&x_terms(m)))
}

/// `A_{i,j} = A_{i+j+1} - z sum_{k=i+1}^{i+j} A_k Abar_{i+j+1-k}`, so that
/// `A_{m-1,0} = A_m` and `A_{0,m-1} = Abar_m`.
pub fn a_ij(i: usize, j: usize) -> SymElement {
    let m = i + j + 1;
    let a = turaev_a_upto(m);
    let z = RatFunc::z();
    let mut out = a[m].clone();
    for k in (i + 1)..=(i + j) {
        let abar_k = abar_elem(m - k).expect("m - k >= 1");
        out = &out - &(&a[k] * &abar_k).scale(&z);
    }
    out
}

/// Rewrites `f` in `A`-monomials by substituting the `A`-expansion of each
/// power sum.
pub fn a_basis_expand(f: &SymElement) -> BasisExpansion {
    let max = f.p_terms().max_part();
    let mut images = vec![Combination::unit()];
    for k in 1..=max {
        images.push(power_sum_in_a(k).expect("k >= 1"));
    }
    BasisExpansion::new(Basis::A, f.p_terms().substitute(&images))
}
