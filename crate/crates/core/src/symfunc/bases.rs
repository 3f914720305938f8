//! The classical generators and the change-of-basis maps among `p`, `h`,
//! `e` and Schur functions.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;

use super::combination::Combination;
use super::element::{Basis, BasisExpansion, SymElement};
use crate::error::Error;
use crate::partitions::{partitions_of, z_mu, CharacterCache, Partition};
use crate::ring::RatFunc;

/// `p_m`; the unit for `m = 0`.
pub fn power_sum(m: usize) -> SymElement {
    SymElement::p_monomial(Partition::row(m), RatFunc::one())
}

/// `h_0, ..., h_m` from `k h_k = sum_{i=1..k} p_i h_{k-i}`.
pub fn complete_upto(m: usize) -> Vec<SymElement> {
    newton(m, |_| RatFunc::one())
}

/// `e_0, ..., e_m` from `k e_k = sum_{i=1..k} (-1)^(i-1) p_i e_{k-i}`.
pub fn elementary_upto(m: usize) -> Vec<SymElement> {
    newton(m, |i| RatFunc::integer(if i % 2 == 1 { 1 } else { -1 }))
}

fn newton(m: usize, sign: impl Fn(usize) -> RatFunc) -> Vec<SymElement> {
    let mut out = vec![SymElement::unit()];
    for k in 1..=m {
        let mut acc = SymElement::zero();
        for i in 1..=k {
            acc = &acc + &(&power_sum(i) * &out[k - i]).scale(&sign(i));
        }
        out.push(acc.scale(&RatFunc::ratio(1, k as i64)));
    }
    out
}

pub fn complete(m: usize) -> SymElement {
    complete_upto(m).pop().expect("nonempty")
}

pub fn elementary(m: usize) -> SymElement {
    elementary_upto(m).pop().expect("nonempty")
}

/// Power sums `p_1..p_m` written in `h`-monomials (index 0 holds the unit),
/// by solving Newton's identity for `p_k`.
fn power_sums_in(m: usize, basis: Basis) -> Vec<Combination> {
    let sign = |i: usize| -> RatFunc {
        match basis {
            Basis::E if i.is_multiple_of(2) => RatFunc::integer(-1),
            _ => RatFunc::one(),
        }
    };
    let mut p: Vec<Combination> = vec![Combination::unit()];
    for k in 1..=m {
        // sign(k) p_k = k g_k - sum_{i<k} sign(i) p_i g_{k-i}
        let mut acc = Combination::generator(k).scale(&RatFunc::integer(k as i64));
        for i in 1..k {
            acc -= &(&p[i] * &Combination::generator(k - i)).scale(&sign(i));
        }
        p.push(acc.scale(&sign(k)));
    }
    p
}

/// Coefficient of `s_lambda` in `f`, for each `lambda` of each weight
/// present: `<f, s_lambda> = sum_mu f_mu chi_lambda(mu)`.
fn to_schur(f: &SymElement, cache: &mut CharacterCache) -> Combination {
    let mut out = Combination::zero();
    for w in f.p_terms().weights() {
        for lambda in partitions_of(w) {
            let mut acc = RatFunc::zero();
            for (mu, c) in f.p_terms().iter().filter(|(mu, _)| mu.weight() == w) {
                let chi = cache.character(&lambda, mu).expect("equal weights");
                if chi != 0 {
                    acc = &acc + &(c * &RatFunc::integer(chi));
                }
            }
            out.add_term(lambda, acc);
        }
    }
    out
}

/// `s_lambda = sum_mu chi_lambda(mu) / z_mu · p_mu`.
pub fn schur(lambda: &Partition) -> SymElement {
    schur_with(lambda, &mut CharacterCache::new())
}

fn schur_with(lambda: &Partition, cache: &mut CharacterCache) -> SymElement {
    let mut out = Combination::zero();
    for mu in partitions_of(lambda.weight()) {
        let chi = cache.character(lambda, &mu).expect("equal weights");
        if chi != 0 {
            let z = BigInt::from(z_mu(&mu));
            let c = RatFunc::new(chi.into(), z.into()).expect("z_mu > 0");
            out.add_term(mu, c);
        }
    }
    SymElement::from_p_terms(out)
}

/// Expands `f` in `basis`.
pub fn to_basis(f: &SymElement, basis: Basis) -> BasisExpansion {
    let terms = match basis {
        Basis::P => f.p_terms().clone(),
        Basis::H | Basis::E => f.p_terms().substitute(&power_sums_in(f.p_terms().max_part(), basis)),
        Basis::Schur => to_schur(f, &mut CharacterCache::new()),
        Basis::A => return crate::skein::a_basis_expand(f),
    };
    BasisExpansion::new(basis, terms)
}

/// Parses the basis tag and expands.
pub fn to_basis_named(f: &SymElement, tag: &str) -> Result<BasisExpansion, Error> {
    Ok(to_basis(f, tag.parse()?))
}

/// Inverse of [`to_basis`].
pub fn from_basis(exp: &BasisExpansion) -> SymElement {
    let max = exp.terms.max_part();
    match exp.basis {
        Basis::P => SymElement::from_p_terms(exp.terms.clone()),
        Basis::H => substitute(&exp.terms, complete_upto(max)),
        Basis::E => substitute(&exp.terms, elementary_upto(max)),
        Basis::A => substitute(&exp.terms, crate::skein::turaev_a_upto(max)),
        Basis::Schur => {
            let mut cache = CharacterCache::new();
            let mut out = SymElement::zero();
            for (lambda, c) in exp.terms.iter() {
                out = &out + &schur_with(lambda, &mut cache).scale(c);
            }
            out
        }
    }
}

fn substitute(terms: &Combination, generators: Vec<SymElement>) -> SymElement {
    let images: Vec<Combination> = generators.into_iter().map(SymElement::into_p_terms).collect();
    SymElement::from_p_terms(terms.substitute(&images))
}

/// `det(h_{lambda_i + j - i})` expanded in `h`-monomials, with `h_0 = 1`
/// and `h_k = 0` for `k < 0`.
pub fn jacobi_trudi_h(lambda: &Partition) -> Combination {
    let l = lambda.len();
    let entry = |i: usize, j: usize| -> Option<usize> {
        let k = lambda.parts()[i] as i64 + j as i64 - i as i64;
        (k >= 0).then_some(k as usize)
    };
    let mut out = Combination::zero();
    let mut perm: Vec<usize> = (0..l).collect();
    permutations(&mut perm, &mut |sigma, sign| {
        let mut parts = Vec::with_capacity(l);
        for (i, &j) in sigma.iter().enumerate() {
            match entry(i, j) {
                Some(0) => {}
                Some(k) => parts.push(k),
                None => return,
            }
        }
        out.add_term(Partition::from_unsorted(parts), RatFunc::integer(sign));
    });
    out
}

/// Schur function via Jacobi–Trudi, converted to the power-sum basis.
pub fn jacobi_trudi(lambda: &Partition) -> SymElement {
    from_basis(&BasisExpansion::new(Basis::H, jacobi_trudi_h(lambda)))
}

/// Heap's algorithm, reporting the sign of each permutation.
fn permutations(perm: &mut [usize], visit: &mut impl FnMut(&[usize], i64)) {
    let n = perm.len();
    let mut c = vec![0usize; n];
    let mut sign = 1i64;
    visit(perm, sign);
    let mut i = 0;
    while i < n {
        if c[i] < i {
            if i % 2 == 0 {
                perm.swap(0, i);
            } else {
                perm.swap(c[i], i);
            }
            sign = -sign;
            visit(perm, sign);
            c[i] += 1;
            i = 0;
        } else {
            c[i] = 0;
            i += 1;
        }
    }
}

/// `f[p_m]`: substitutes `p_j -> p_{jm}`, coefficients untouched.
pub fn plethysm_by_pm(f: &SymElement, m: usize) -> Result<SymElement, Error> {
    if m == 0 {
        return Err(Error::NonPositive { what: "plethysm by p_m", value: 0 });
    }
    Ok(SymElement::from_p_terms(f.p_terms().map_partitions(|mu| mu.scaled(m))))
}
