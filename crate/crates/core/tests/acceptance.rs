//! End-to-end acceptance run: each criterion is timed against its budget
//! and reported on a single PASS/FAIL line.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use num_bigint::BigUint;
use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};

use skeinkit_core::cabling::{cable_decorate, framing_change_identity, power_hopf_check, CableSpec};
use skeinkit_core::partitions::{
    hooks_of, k_lambda, mn_character, omega, partitions_of, z_mu, CharacterCache, Partition,
};
use skeinkit_core::ring::{brace, quantum_int, FormalSeries, LaurentPoly, RatFunc};
use skeinkit_core::skein::{
    abar_coefficient, abar_elem, delta_phi, delta_pn, delta_pn_star, e_in_a, evaluate_a, h_in_a,
    h_in_a_by_series, mirror, theta_closed, theta_rec, turaev_a_upto, x_coefficient, ThetaTable,
};
use skeinkit_core::symfunc::{complete_upto, elementary_upto, power_sum, schur, Combination, SymElement};
use skeinkit_core::verify::run_suite;

type Outcome = Result<(), String>;

/// Name, time budget in seconds, and the check itself.
type Criterion = (&'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, what: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn part(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn s_poly(terms: &[(i32, i64)]) -> LaurentPoly {
    LaurentPoly::from_terms(terms.iter().map(|&(e, c)| ((0, e), c)))
}

fn frac(num: LaurentPoly, den: LaurentPoly) -> RatFunc {
    RatFunc::new(num, den).unwrap()
}

fn q_int(n: i64) -> RatFunc {
    RatFunc::from_poly(quantum_int(n).unwrap())
}

fn suite_passes(suite: &str, max: usize) -> Outcome {
    let checks = run_suite(suite, max).map_err(|e| e.to_string())?;
    match checks.iter().find(|c| !c.passed) {
        Some(c) => Err(format!("{suite}: {} failed", c.name)),
        None => Ok(()),
    }
}

fn golden_values() -> Outcome {
    let s4s2 = s_poly(&[(4, 1), (2, 1), (0, 1)]);
    let s2 = s_poly(&[(2, 1), (0, 1)]);
    let theta21 = frac(s_poly(&[(3, 1), (1, 2)]), &s4s2 * &s2);
    ensure(theta_rec(&part(&[2, 1])) == theta21, || "theta_(2,1) recursion".into())?;
    ensure(theta_closed(&part(&[2, 1])) == theta21, || "theta_(2,1) closed form".into())?;

    let h2: Combination = [
        (part(&[2]), frac(s_poly(&[(1, 1)]), s2.clone())),
        (part(&[1, 1]), frac(LaurentPoly::one(), s2.clone())),
    ]
    .into_iter()
    .collect();
    ensure(h_in_a(2).unwrap().terms == h2, || "h_2 in A".into())?;
    let h3: Combination = [
        (part(&[3]), frac(s_poly(&[(2, 1)]), s4s2.clone())),
        (part(&[2, 1]), theta21.clone()),
        (part(&[1, 1, 1]), frac(LaurentPoly::one(), &s4s2 * &s2)),
    ]
    .into_iter()
    .collect();
    ensure(h_in_a(3).unwrap().terms == h3, || "h_3 in A".into())?;

    let big = part(&[4, 4, 4, 2, 2, 1, 1, 1]);
    ensure(k_lambda(&big) == BigUint::from(560u32), || "k_lambda".into())?;
    let z7 = RatFunc::from_poly(LaurentPoly::z().pow(7));
    ensure(abar_coefficient(&big) == -(&z7 * &RatFunc::integer(560)), || "Abar_19 coefficient".into())?;
    let z4 = RatFunc::from_poly(LaurentPoly::z().pow(4));
    ensure(x_coefficient(&part(&[3, 3, 1, 1, 1])) == &z4 * &RatFunc::integer(18), || "X_9 coefficient".into())?;

    let term = |shift: i32, qs: [i64; 3]| {
        let den = qs.iter().fold(RatFunc::monomial(1, 0, shift), |acc, &n| &acc * &q_int(n));
        den.inv().unwrap()
    };
    let theta332 = &(&(&term(17, [3, 6, 8]) + &term(16, [3, 5, 8])) + &term(15, [2, 5, 8]))
        * &RatFunc::monomial(1, 0, 8);
    let lambda = part(&[3, 3, 2]);
    ensure(theta_rec(&lambda) == theta332, || "theta_(3,3,2) recursion".into())?;
    ensure(theta_closed(&lambda) == theta332, || "theta_(3,3,2) closed form".into())
}

fn series_of(gens: &[SymElement], coeff: &RatFunc) -> FormalSeries<SymElement> {
    FormalSeries::from_fn(gens.len() - 1, |k| if k == 0 { SymElement::unit() } else { gens[k].scale(coeff) })
}

fn series_identities() -> Outcome {
    let z = RatFunc::z();
    let a10 = series_of(&turaev_a_upto(10), &z);
    let mut abars = vec![SymElement::unit()];
    abars.extend((1..=10).map(|k| abar_elem(k).unwrap()));
    let prod = a10.mul(&series_of(&abars, &-&z));
    ensure(prod == FormalSeries::one(10), || "A(t) Abar(t) = 1".into())?;

    let a8 = series_of(&turaev_a_upto(8), &z);
    let log = a8.log().map_err(|e| e.to_string())?;
    for m in 1..=8 {
        let lhs = skeinkit_core::skein::x_elem(m).unwrap().scale(&(&z * &RatFunc::ratio(1, m as i64)));
        ensure(&lhs == log.coeff(m), || format!("log A(t) at t^{m}"))?;
    }

    let hs = complete_upto(10);
    let es = elementary_upto(10);
    let h = FormalSeries::new(hs.clone(), 10);
    let e_neg = FormalSeries::from_fn(10, |k| if k % 2 == 0 { es[k].clone() } else { -&es[k] });
    ensure(h.mul(&e_neg) == FormalSeries::one(10), || "H(t) E(-t) = 1".into())?;

    let h_scaled = |e: i32| FormalSeries::from_fn(8, |k| hs[k].scale(&RatFunc::monomial(1, 0, e * k as i32)));
    ensure(a8.mul(&h_scaled(-1)) == h_scaled(1), || "A(t) H(s^-1 t) = H(s t)".into())
}

fn triple_route_h() -> Outcome {
    let series = h_in_a_by_series(8);
    let mut table = ThetaTable::new();
    let hs = complete_upto(7);
    for m in 1..=8 {
        let mut rec = Combination::zero();
        for lambda in partitions_of(m) {
            let t = table.theta(&lambda);
            ensure(t == theta_closed(&lambda), || format!("theta {lambda}: recursion vs closed form"))?;
            rec.add_term(lambda, t);
        }
        ensure(rec == series[m], || format!("h_{m}: recursion vs series"))?;
        if m <= 7 {
            ensure(evaluate_a(&rec) == hs[m], || format!("evaluate h_{m}"))?;
        }
    }
    Ok(())
}

fn hook_structure() -> Outcome {
    suite_passes("ahook", 10)?;
    suite_passes("pieri", 8)?;
    suite_passes("jacobitrudi", 7)
}

fn operator_identities() -> Outcome {
    suite_passes("xdelta", 8)?;
    for m in 1..=5usize {
        for big_n in 1..=5u32 {
            let b = RatFunc::from_poly(brace(m as i64 * big_n as i64).unwrap());
            let scalar = -(&b * &b);
            for hook in hooks_of(m).unwrap() {
                let q = schur(&hook.to_partition());
                let got = delta_pn_star(&delta_pn(&q, big_n).unwrap(), big_n).unwrap();
                ensure(got == q.scale(&scalar), || format!("Delta_P{big_n}* Delta_P{big_n} on {hook}"))?;
            }
        }
    }
    Ok(())
}

fn power_hopf_grid() -> Outcome {
    let mut cases = 0;
    for big_m in 1..=6u32 {
        for big_n in 1..=6u32 {
            let r = power_hopf_check(big_m, big_n).map_err(|e| e.to_string())?;
            ensure(r.equal, || format!("powerHopf M={big_m} N={big_n}"))?;
            cases += 1;
            if num_integer::gcd(big_m, big_n) == 1 {
                let spec = CableSpec::new(big_m, big_n as i64).unwrap();
                let b = RatFunc::from_poly(brace((big_m * big_n) as i64).unwrap());
                let torus = cable_decorate(spec, &power_sum(1)).unwrap().scale(&b);
                ensure(r.rhs == torus, || format!("coprime torus link M={big_m} N={big_n}"))?;
            }
        }
    }
    ensure(cases == 36, || format!("{cases} grid cases"))?;
    let a = turaev_a_upto(6);
    for m in 1..=6u32 {
        ensure(framing_change_identity(m).unwrap(), || format!("framing change M={m}"))?;
        let b = RatFunc::from_poly(brace(m as i64).unwrap());
        let expected = a[m as usize].scale(&(&b * &RatFunc::monomial(1, -1, 0)));
        ensure(delta_phi(&power_sum(m as usize)) == expected, || format!("Delta_phi(P_{m})"))?;
    }
    Ok(())
}

fn involution_suite() -> Outcome {
    suite_passes("involutions", 8)?;
    let a = turaev_a_upto(8);
    ensure(mirror(&mirror(&a[8])) == a[8], || "mirror^2 on A_8".into())?;
    for m in 1..=8 {
        let swapped = h_in_a(m).unwrap().terms.map_coeffs(RatFunc::he_involution);
        ensure(e_in_a(m).unwrap().terms == swapped, || format!("he_involution h_{m} -> e_{m}"))?;
    }
    Ok(())
}

fn small_laurent() -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec(((-2i32..=2, -3i32..=3), -4i64..=4), 1..4).prop_map(LaurentPoly::from_terms)
}

fn ratfunc() -> impl Strategy<Value = RatFunc> {
    (small_laurent(), small_laurent().prop_filter("nonzero", |p| !p.is_zero()))
        .prop_map(|(n, d)| RatFunc::new(n, d).unwrap())
}

fn property_suites() -> Outcome {
    let mut runner = TestRunner::new(Config { cases: 500, failure_persistence: None, ..Config::default() });
    runner
        .run(&(ratfunc(), ratfunc(), ratfunc()), |(a, b, c)| {
            prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
            prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
            prop_assert_eq!(&a + &b, &b + &a);
            prop_assert_eq!(&a * &b, &b * &a);
            prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
            prop_assert!((&a + &(-&a)).is_zero());
            prop_assert_eq!(&a + &RatFunc::zero(), a.clone());
            prop_assert_eq!(&a * &RatFunc::one(), a.clone());
            if let Some(inv) = a.inv() {
                prop_assert!((&a * &inv).is_one());
            }
            Ok(())
        })
        .map_err(|e| e.to_string())?;

    let mut cache = CharacterCache::new();
    for n in 1..=7 {
        let parts = partitions_of(n);
        for lambda in &parts {
            for nu in &parts {
                // sum_mu chi_lambda(mu) chi_nu(mu) / z_mu, scaled by n!
                let n_fact: BigUint = (1..=n).map(BigUint::from).product();
                let mut total = num_bigint::BigInt::from(0);
                for mu in &parts {
                    let x = cache.character(lambda, mu).unwrap() * cache.character(nu, mu).unwrap();
                    total += num_bigint::BigInt::from(x) * num_bigint::BigInt::from(&n_fact / z_mu(mu));
                }
                let expected = if lambda == nu { n_fact.into() } else { num_bigint::BigInt::from(0) };
                ensure(total == expected, || format!("orthogonality {lambda} {nu}"))?;
            }
        }
    }
    for m in 1..=9 {
        let cycle = Partition::row(m);
        for lambda in partitions_of(m) {
            ensure(mn_character(&lambda, &cycle).unwrap() == omega(&lambda), || {
                format!("chi_{lambda}(({m}))")
            })?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 8] = [
        ("golden values", 5, golden_values),
        ("series identities", 30, series_identities),
        ("triple-route h_m", 60, triple_route_h),
        ("hook structure", 60, hook_structure),
        ("operator identities", 30, operator_identities),
        ("power-sum meridian grid", 60, power_hopf_grid),
        ("involutions", 15, involution_suite),
        ("ring and partition properties", 30, property_suites),
    ];
    let mut failed = 0;
    for (i, (name, budget, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let verdict = match outcome {
            Ok(()) if elapsed <= Duration::from_secs(*budget) => "PASS".to_string(),
            Ok(()) => format!("FAIL (over the {budget} s budget)"),
            Err(why) => format!("FAIL ({why})"),
        };
        if !verdict.starts_with("PASS") {
            failed += 1;
        }
        println!("criterion {}: {name}: {verdict} in {:.2} s", i + 1, elapsed.as_secs_f64());
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criterion(s) failed");
        ExitCode::FAILURE
    }
}
