use proptest::prelude::*;

use skeinkit_core::cabling::{cable_decorate, torus_power_sum, CableSpec};
use skeinkit_core::partitions::{partitions_of, Partition};
use skeinkit_core::ring::{delta_const, RatFunc};
use skeinkit_core::skein::{
    a_ij, abar_elem, delta_phi, delta_phibar, fractional_twist, framing_twist, meridian_phi, mirror, turaev_a,
};
use skeinkit_core::symfunc::{
    complete, from_basis, plethysm_by_pm, power_sum, schur, to_basis, Basis, Combination, SymElement,
};

fn coeff() -> impl Strategy<Value = RatFunc> {
    (-3i64..=3, -2i32..=2, -3i32..=3).prop_map(|(c, a, b)| RatFunc::monomial(c, a, b))
}

/// Random elements of weight at most 4 in the power-sum basis.
fn element() -> impl Strategy<Value = SymElement> {
    let support: Vec<Partition> = (1..=4).flat_map(partitions_of).collect();
    prop::collection::vec((0..support.len(), coeff()), 1..4).prop_map(move |terms| {
        let c: Combination = terms.into_iter().map(|(i, c)| (support[i].clone(), c)).collect();
        SymElement::from_p_terms(c)
    })
}

fn basis() -> impl Strategy<Value = Basis> {
    prop::sample::select(Basis::ALL.to_vec())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn basis_round_trip(f in element(), b in basis()) {
        prop_assert_eq!(from_basis(&to_basis(&f, b)), f);
    }

    #[test]
    fn mirror_is_an_involution(f in element(), g in element()) {
        prop_assert_eq!(mirror(&mirror(&f)), f.clone());
        prop_assert_eq!(mirror(&(&f * &g)), &mirror(&f) * &mirror(&g));
    }

    #[test]
    fn plethysm_is_a_homomorphism(f in element(), g in element(), m in 1usize..4) {
        let lhs = plethysm_by_pm(&(&f * &g), m).unwrap();
        let rhs = &plethysm_by_pm(&f, m).unwrap() * &plethysm_by_pm(&g, m).unwrap();
        prop_assert_eq!(lhs, rhs);
        let twice = plethysm_by_pm(&plethysm_by_pm(&f, m).unwrap(), 2).unwrap();
        prop_assert_eq!(twice, plethysm_by_pm(&f, 2 * m).unwrap());
    }

    #[test]
    fn meridian_is_linear(f in element(), g in element(), c in coeff()) {
        let lhs = delta_phi(&(&f + &g.scale(&c)));
        prop_assert_eq!(lhs, &delta_phi(&f) + &delta_phi(&g).scale(&c));
        prop_assert_eq!(&meridian_phi(&f) - &delta_phi(&f), f.scale(&delta_const()));
    }

    #[test]
    fn twist_by_minus_n_inverts(d in 1usize..4, m in 1u32..4, n in -4i64..=4) {
        prop_assume!(num_integer::gcd(m as i64, n) == 1);
        let spec = CableSpec::new(m, n).unwrap();
        let q = plethysm_by_pm(&power_sum(d), m as usize).unwrap();
        let there = fractional_twist(&q, n, m).unwrap();
        prop_assert_eq!(fractional_twist(&there, -n, m).unwrap(), q);
        prop_assert_eq!(cable_decorate(spec, &power_sum(d)).unwrap(), torus_power_sum(spec, d).unwrap());
    }
}

#[test]
fn mirror_exchanges_turaev_generators() {
    for m in 1..=6 {
        let a = turaev_a(m).unwrap();
        assert_eq!(mirror(&a), abar_elem(m).unwrap());
        assert_eq!(mirror(&complete(m)), complete(m));
        assert_eq!(a_ij(m - 1, 0), a);
        assert_eq!(a_ij(0, m - 1), abar_elem(m).unwrap());
    }
}

#[test]
fn meridian_pair_on_hooks() {
    // Delta_phibar Delta_phi = -{m}^2 on the span of m-hooks
    for m in 1..=6usize {
        let b = RatFunc::from_poly(skeinkit_core::ring::brace(m as i64).unwrap());
        let p = power_sum(m);
        assert_eq!(delta_phibar(&delta_phi(&p)), p.scale(&-(&b * &b)));
    }
}

#[test]
fn framing_twist_matches_fractional() {
    let f = &schur(&Partition::new(vec![3, 1]).unwrap()) + &power_sum(2);
    assert_eq!(framing_twist(&f), fractional_twist(&f, 1, 1).unwrap());
    assert_eq!(fractional_twist(&f, 2, 2).unwrap(), framing_twist(&f));
    assert_eq!(fractional_twist(&f, 0, 3).unwrap(), f);
}
