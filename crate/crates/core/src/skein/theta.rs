//! The complete and elementary symmetric functions in Turaev's basis.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::error::Error;
use crate::partitions::{k_lambda, partitions_of, Partition};
use crate::ring::{brace, quantum_int, FormalSeries, LaurentPoly, RatFunc};
use crate::symfunc::{Basis, BasisExpansion, Combination};

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::from(1), |acc, k| acc * BigInt::from(k))
}

/// Recursive coefficients `theta_lambda` of `h_m = sum theta_lambda A_lambda`.
#[derive(Default)]
pub struct ThetaTable {
    memo: BTreeMap<Partition, RatFunc>,
}

impl ThetaTable {
    pub fn new() -> Self {
        Self::default()
    }

    /// `theta_lambda = 1/(s^m [m]) sum_i s^(lambda_i) / l_i · theta_{lambda - lambda_i}`,
    /// `theta_empty = 1`, where `l_i` is the multiplicity of `lambda_i`.
    pub fn theta(&mut self, lambda: &Partition) -> RatFunc {
        if lambda.is_empty() {
            return RatFunc::one();
        }
        if let Some(hit) = self.memo.get(lambda) {
            return hit.clone();
        }
        let m = lambda.weight();
        let mults = lambda.multiplicities();
        let mut acc = RatFunc::zero();
        for &part in lambda.parts() {
            let li = mults.iter().find(|(p, _)| *p == part).map(|&(_, c)| c).expect("part present");
            let rest = lambda.without_part(part).expect("part present");
            let term = RatFunc::new(LaurentPoly::s_pow(part as i32), LaurentPoly::constant(li as i64))
                .expect("li > 0")
                * self.theta(&rest);
            acc = &acc + &term;
        }
        let den = LaurentPoly::s_pow(m as i32) * quantum_int(m as i64).expect("m >= 1");
        let out = &acc * &RatFunc::new(LaurentPoly::one(), den).expect("nonzero");
        self.memo.insert(lambda.clone(), out.clone());
        out
    }
}

pub fn theta_rec(lambda: &Partition) -> RatFunc {
    ThetaTable::new().theta(lambda)
}

/// Distinct orderings of `parts`, each with the number of permutations in
/// `S_l` that produce it.
fn rearrangements(lambda: &Partition) -> (Vec<Vec<usize>>, BigInt) {
    let mut seq: Vec<usize> = lambda.parts().to_vec();
    seq.sort_unstable();
    let mut out = vec![seq.clone()];
    while next_permutation(&mut seq) {
        out.push(seq.clone());
    }
    let weight = lambda
        .multiplicities()
        .iter()
        .fold(BigInt::from(1), |acc, &(_, m)| acc * factorial(m));
    (out, weight)
}

fn next_permutation(seq: &mut [usize]) -> bool {
    let n = seq.len();
    if n < 2 {
        return false;
    }
    let Some(i) = (0..n - 1).rev().find(|&i| seq[i] < seq[i + 1]) else {
        return false;
    };
    let j = (i + 1..n).rev().find(|&j| seq[j] > seq[i]).expect("exists");
    seq.swap(i, j);
    seq[i + 1..].reverse();
    true
}

/// `prod_i f(S_i)` over the partial sums `S_i` of `seq`.
fn partial_sum_product(seq: &[usize], f: impl Fn(usize) -> LaurentPoly) -> LaurentPoly {
    let mut total = 0;
    let mut acc = LaurentPoly::one();
    for &x in seq {
        total += x;
        acc = &acc * &f(total);
    }
    acc
}

/// `sum_{alpha in S_l} g(lambda_alpha)`, grouping equal rearrangements.
fn sum_over_orderings(lambda: &Partition, g: impl Fn(&[usize]) -> RatFunc) -> RatFunc {
    let (seqs, weight) = rearrangements(lambda);
    let mut acc = RatFunc::zero();
    for seq in &seqs {
        acc = &acc + &g(seq);
    }
    acc * RatFunc::integer(weight)
}

/// `theta_lambda = (k_lambda / l!) s^m sum_{alpha in S_l} c_{lambda_alpha}`
/// with `c_mu = prod_i 1 / ([mu_1 + ... + mu_i] s^(mu_1 + ... + mu_i))`.
pub fn theta_closed(lambda: &Partition) -> RatFunc {
    if lambda.is_empty() {
        return RatFunc::one();
    }
    let m = lambda.weight();
    let l = lambda.len();
    let sum = sum_over_orderings(lambda, |seq| {
        let den = partial_sum_product(seq, |t| {
            quantum_int(t as i64).expect("t >= 1").shift(0, t as i32)
        });
        RatFunc::new(LaurentPoly::one(), den).expect("nonzero")
    });
    let prefactor = RatFunc::new(
        LaurentPoly::monomial(BigInt::from(k_lambda(lambda)), 0, m as i32),
        LaurentPoly::constant(factorial(l)),
    )
    .expect("l! > 0");
    prefactor * sum
}

/// Coefficient of `A_lambda` in `e_m`:
/// `(-1)^(m+l) (k_lambda / l!) s^-m sum_alpha prod_i s^(S_i) / [S_i]`.
pub fn tau_closed(lambda: &Partition) -> RatFunc {
    if lambda.is_empty() {
        return RatFunc::one();
    }
    let m = lambda.weight();
    let l = lambda.len();
    let sum = sum_over_orderings(lambda, |seq| {
        let num = LaurentPoly::s_pow(seq.iter().scan(0, |t, &x| {
            *t += x;
            Some(*t as i32)
        }).sum());
        let den = partial_sum_product(seq, |t| quantum_int(t as i64).expect("t >= 1"));
        RatFunc::new(num, den).expect("nonzero")
    });
    let sign = if (m + l).is_multiple_of(2) { 1 } else { -1 };
    let prefactor = RatFunc::new(
        LaurentPoly::monomial(BigInt::from(k_lambda(lambda)) * sign, 0, -(m as i32)),
        LaurentPoly::constant(factorial(l)),
    )
    .expect("l! > 0");
    prefactor * sum
}

fn check_degree(m: usize) -> Result<(), Error> {
    if m == 0 {
        Err(Error::NonPositive { what: "degree", value: 0 })
    } else {
        Ok(())
    }
}

/// `h_m = sum_{lambda |- m} theta_lambda A_lambda`, coefficients from the
/// recursion.
pub fn h_in_a(m: usize) -> Result<BasisExpansion, Error> {
    check_degree(m)?;
    let mut table = ThetaTable::new();
    let terms = partitions_of(m)
        .into_iter()
        .map(|lambda| {
            let c = table.theta(&lambda);
            (lambda, c)
        })
        .collect();
    Ok(BasisExpansion::new(Basis::A, terms))
}

/// `e_m = sum_{lambda |- m} tau_lambda A_lambda` from the closed form.
pub fn e_in_a(m: usize) -> Result<BasisExpansion, Error> {
    check_degree(m)?;
    let terms = partitions_of(m)
        .into_iter()
        .map(|lambda| {
            let c = tau_closed(&lambda);
            (lambda, c)
        })
        .collect();
    Ok(BasisExpansion::new(Basis::A, terms))
}

/// `h_1 .. h_m` in `A`-monomials by series manipulation alone, treating
/// the `A_k` as free variables: with `A(t) = 1 + z sum A_k t^k`,
/// `log A(t) = sum {k} p_k t^k / k`, then Newton's relation
/// `k h_k = sum p_i h_{k-i}` rebuilds the `h_k`. Index 0 holds the unit.
pub fn h_in_a_by_series(m: usize) -> Vec<Combination> {
    let z = RatFunc::z();
    let a_series = FormalSeries::from_fn(m, |k| {
        if k == 0 {
            Combination::unit()
        } else {
            Combination::generator(k).scale(&z)
        }
    });
    let log = a_series.log().expect("unit constant term");
    let mut p = vec![Combination::zero()];
    for k in 1..=m {
        let factor = RatFunc::new(LaurentPoly::constant(k as i64), brace(k as i64).expect("k >= 1"))
            .expect("nonzero");
        p.push(log.coeff(k).scale(&factor));
    }
    let mut h = vec![Combination::unit()];
    for k in 1..=m {
        let mut acc = Combination::zero();
        for i in 1..=k {
            acc += &(&p[i] * &h[k - i]);
        }
        h.push(acc.scale(&RatFunc::ratio(1, k as i64)));
    }
    h
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn poly(terms: &[(i32, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().map(|&(e, c)| ((0, e), c)))
    }

    #[test]
    fn h2_coefficients() {
        let h2 = h_in_a(2).unwrap();
        let den = poly(&[(2, 1), (0, 1)]);
        assert_eq!(h2.coefficient(&p(&[2])), RatFunc::new(poly(&[(1, 1)]), den.clone()).unwrap());
        assert_eq!(h2.coefficient(&p(&[1, 1])), RatFunc::new(LaurentPoly::one(), den).unwrap());
    }

    #[test]
    fn theta_21() {
        // s(s^2+2) / ((s^4+s^2+1)(s^2+1))
        let num = poly(&[(3, 1), (1, 2)]);
        let den = poly(&[(4, 1), (2, 1), (0, 1)]) * poly(&[(2, 1), (0, 1)]);
        let expected = RatFunc::new(num, den).unwrap();
        assert_eq!(theta_closed(&p(&[2, 1])), expected);
        assert_eq!(theta_rec(&p(&[2, 1])), expected);
    }

    #[test]
    fn theta_extremes() {
        for m in 1..=6usize {
            let qm = RatFunc::from_poly(quantum_int(m as i64).unwrap());
            assert_eq!(theta_rec(&Partition::row(m)), qm.inv().unwrap());
            let am = RatFunc::from_poly(crate::ring::alpha(m as i64).unwrap());
            assert_eq!(theta_rec(&Partition::column(m)), am.inv().unwrap());
        }
    }

    #[test]
    fn rearrangement_counts() {
        let (seqs, w) = rearrangements(&p(&[3, 3, 2]));
        assert_eq!(seqs.len(), 3);
        assert_eq!(w, BigInt::from(2));
    }

    #[test]
    fn e2_leading_coefficient() {
        let e2 = e_in_a(2).unwrap();
        // he-involution of s/(s^2+1): -s^-1/(s^-2+1)
        let expected = RatFunc::new(poly(&[(-1, -1)]), poly(&[(-2, 1), (0, 1)])).unwrap();
        assert_eq!(e2.coefficient(&p(&[2])), expected);
        assert_eq!(e_in_a(1).unwrap().terms, Combination::generator(1));
    }
}
