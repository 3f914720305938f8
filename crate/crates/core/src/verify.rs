//! Named suites of exact identities, each reporting one line per check.

use alloc::format;
use alloc::string::{String, ToString};
use alloc::vec::Vec;

use crate::cabling::power_hopf_check;
use crate::error::Error;
use crate::partitions::{hooks_of, partitions_of, Hook, Partition};
use crate::ring::{brace, quantum_int, FormalSeries, LaurentPoly, RatFunc};
use crate::skein::{
    abar_elem, delta_phi, delta_phibar, e_in_a, evaluate_a, h_in_a, h_in_a_by_series, mirror, theta_closed,
    turaev_a_upto, x_elem, ThetaTable,
};
use crate::symfunc::{
    complete_upto, elementary_upto, jacobi_trudi, power_sum, schur, to_basis, Basis, Combination, SymElement,
};

/// Suite names accepted by [`run_suite`].
pub const SUITES: [&str; 12] = [
    "aabar",
    "ax",
    "ambarra",
    "xm",
    "hfroma",
    "efroma",
    "ahook",
    "xdelta",
    "pieri",
    "jacobitrudi",
    "powerhopf",
    "involutions",
];

/// Outcome of a single identity.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Check {
    pub name: String,
    pub passed: bool,
}

impl Check {
    fn new(name: impl Into<String>, passed: bool) -> Self {
        Self { name: name.into(), passed }
    }
}

/// The `--max` used when none is given.
pub fn default_max(suite: &str) -> Result<usize, Error> {
    Ok(match suite {
        "aabar" | "ax" | "xm" | "ahook" | "involutions" => 10,
        "powerhopf" => 6,
        "hfroma" | "efroma" | "ambarra" | "xdelta" | "pieri" => 8,
        "jacobitrudi" => 7,
        other => return Err(Error::UnknownSuite(other.to_string())),
    })
}

/// Runs `suite` up to degree `max`; checks are sorted by name.
pub fn run_suite(suite: &str, max: usize) -> Result<Vec<Check>, Error> {
    if max == 0 {
        return Err(Error::NonPositive { what: "--max", value: 0 });
    }
    let mut checks = match suite {
        "aabar" => aabar(max),
        "ax" => ax(max),
        "ambarra" => ambarra(max),
        "xm" => xm(max),
        "hfroma" => hfroma(max),
        "efroma" => efroma(max),
        "ahook" => ahook(max),
        "xdelta" => xdelta(max),
        "pieri" => pieri(max),
        "jacobitrudi" => jacobitrudi(max),
        "powerhopf" => powerhopf(max)?,
        "involutions" => involutions(max),
        other => return Err(Error::UnknownSuite(other.to_string())),
    };
    checks.sort();
    Ok(checks)
}

fn poly(p: LaurentPoly) -> RatFunc {
    RatFunc::from_poly(p)
}

/// `1 + c z sum A_k t^k` with `c = ±1`.
fn a_series(gens: &[SymElement], sign: i64) -> FormalSeries<SymElement> {
    let z = RatFunc::z() * RatFunc::integer(sign);
    FormalSeries::from_fn(gens.len() - 1, |k| if k == 0 { SymElement::unit() } else { gens[k].scale(&z) })
}

fn h_series(hs: &[SymElement], scale_s: i32) -> FormalSeries<SymElement> {
    FormalSeries::from_fn(hs.len() - 1, |k| hs[k].scale(&RatFunc::monomial(1, 0, scale_s * k as i32)))
}

/// `A(t) Abar(t) = 1`, one check per degree.
fn aabar(max: usize) -> Vec<Check> {
    let a = a_series(&turaev_a_upto(max), 1);
    let mut abars = Vec::from([SymElement::unit()]);
    abars.extend((1..=max).map(|k| abar_elem(k).expect("k >= 1")));
    let prod = a.mul(&a_series(&abars, -1));
    (1..=max).map(|k| Check::new(format!("aabar t^{k:02}"), prod.coeff(k).is_zero())).collect()
}

/// `z sum X_m t^m / m = log A(t)` and, alongside, `A(t) H(s^-1 t) = H(s t)`.
fn ax(max: usize) -> Vec<Check> {
    let a = a_series(&turaev_a_upto(max), 1);
    let log = a.log().expect("unit constant term");
    let z = RatFunc::z();
    let mut out: Vec<Check> = (1..=max)
        .map(|m| {
            let lhs = x_elem(m).expect("m >= 1").scale(&(&z * &RatFunc::ratio(1, m as i64)));
            Check::new(format!("ax t^{m:02}"), &lhs == log.coeff(m))
        })
        .collect();
    let hs = complete_upto(max);
    let lhs = a.mul(&h_series(&hs, -1));
    let rhs = h_series(&hs, 1);
    out.extend((1..=max).map(|m| Check::new(format!("ah t^{m:02}"), lhs.coeff(m) == rhs.coeff(m))));
    out
}

/// The closed form for `Abar_m` against the mirror image of `A_m`.
fn ambarra(max: usize) -> Vec<Check> {
    let a = turaev_a_upto(max);
    (1..=max)
        .map(|m| Check::new(format!("ambarra m={m:02}"), abar_elem(m).expect("m >= 1") == mirror(&a[m])))
        .collect()
}

/// `X_m = [m] P_m`.
fn xm(max: usize) -> Vec<Check> {
    (1..=max)
        .map(|m| {
            let q = poly(quantum_int(m as i64).expect("m >= 1"));
            Check::new(format!("xm m={m:02}"), x_elem(m).expect("m >= 1") == power_sum(m).scale(&q))
        })
        .collect()
}

/// Three routes to the `A`-expansion of `h_m`, and its evaluation.
fn hfroma(max: usize) -> Vec<Check> {
    let series = h_in_a_by_series(max);
    let hs = complete_upto(max);
    let mut table = ThetaTable::new();
    let mut out = Vec::new();
    for m in 1..=max {
        let rec = h_in_a(m).expect("m >= 1");
        let closed = partitions_of(m).iter().all(|l| table.theta(l) == theta_closed(l));
        out.push(Check::new(format!("hfroma m={m:02} closed"), closed));
        out.push(Check::new(format!("hfroma m={m:02} series"), rec.terms == series[m]));
        out.push(Check::new(format!("hfroma m={m:02} evaluate"), evaluate_a(&rec.terms) == hs[m]));
    }
    out
}

/// `e_m` from `A`, its relation to `h_m`, and `H(t) E(-t) = 1`.
fn efroma(max: usize) -> Vec<Check> {
    let es = elementary_upto(max);
    let hs = complete_upto(max);
    let mut out = Vec::new();
    for m in 1..=max {
        let e = e_in_a(m).expect("m >= 1");
        let swapped = h_in_a(m).expect("m >= 1").terms.map_coeffs(RatFunc::he_involution);
        out.push(Check::new(format!("efroma m={m:02} involution"), e.terms == swapped));
        out.push(Check::new(format!("efroma m={m:02} evaluate"), evaluate_a(&e.terms) == es[m]));
        let mut sum = SymElement::zero();
        for j in 0..=m {
            let term = &hs[m - j] * &es[j];
            sum = if j % 2 == 0 { &sum + &term } else { &sum - &term };
        }
        out.push(Check::new(format!("he t^{m:02}"), sum.is_zero()));
    }
    out
}

fn hook_sum(m: usize, coeff: impl Fn(&Hook) -> RatFunc) -> Combination {
    hooks_of(m)
        .expect("m >= 1")
        .into_iter()
        .map(|h| (h.to_partition(), coeff(&h)))
        .collect()
}

fn sign(b: usize) -> i64 {
    if b.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Schur expansions of `A_m` and `P_m` are sums over hooks.
fn ahook(max: usize) -> Vec<Check> {
    let a = turaev_a_upto(max);
    let mut out = Vec::new();
    for m in 1..=max {
        let expected = hook_sum(m, |h| RatFunc::monomial(sign(h.leg), 0, h.arm as i32 - h.leg as i32));
        out.push(Check::new(format!("ahook A m={m:02}"), to_basis(&a[m], Basis::Schur).terms == expected));
        let expected = hook_sum(m, |h| RatFunc::integer(sign(h.leg)));
        out.push(Check::new(
            format!("ahook P m={m:02}"),
            to_basis(&power_sum(m), Basis::Schur).terms == expected,
        ));
    }
    out
}

/// `{m} P_m = v Delta_phi(Abar_m) = -v^-1 Delta_phibar(A_m)` and
/// `Delta_phibar Delta_phi = -{m}^2` on `m`-hooks.
fn xdelta(max: usize) -> Vec<Check> {
    let a = turaev_a_upto(max);
    let mut out = Vec::new();
    for m in 1..=max {
        let bm = poly(brace(m as i64).expect("m >= 1"));
        let target = power_sum(m).scale(&bm);
        let via_abar = delta_phi(&abar_elem(m).expect("m >= 1")).scale(&RatFunc::monomial(1, 1, 0));
        let via_a = delta_phibar(&a[m]).scale(&RatFunc::monomial(-1, -1, 0));
        out.push(Check::new(format!("xdelta m={m:02} abar"), via_abar == target));
        out.push(Check::new(format!("xdelta m={m:02} a"), via_a == target));
        let scalar = -(&bm * &bm);
        let hooks_ok = hooks_of(m).expect("m >= 1").into_iter().all(|h| {
            let q = schur(&h.to_partition());
            delta_phibar(&delta_phi(&q)) == q.scale(&scalar)
        });
        out.push(Check::new(format!("xdelta m={m:02} hooks"), hooks_ok));
    }
    out
}

/// `h_i e_j = Q_(i-1|j) + Q_(i|j-1)` for `i, j >= 1`, `i + j <= max`.
fn pieri(max: usize) -> Vec<Check> {
    let hs = complete_upto(max);
    let es = elementary_upto(max);
    let mut out = Vec::new();
    for i in 1..max {
        for j in 1..=(max - i) {
            let lhs = &hs[i] * &es[j];
            let rhs = &schur(&Hook::new(i - 1, j).to_partition()) + &schur(&Hook::new(i, j - 1).to_partition());
            out.push(Check::new(format!("pieri h{i} e{j}"), lhs == rhs));
        }
    }
    out
}

/// Jacobi-Trudi against the character route, `1 <= |lambda| <= max`.
fn jacobitrudi(max: usize) -> Vec<Check> {
    (1..=max)
        .flat_map(partitions_of)
        .map(|l: Partition| Check::new(format!("jacobitrudi {l}"), jacobi_trudi(&l) == schur(&l)))
        .collect()
}

/// `Delta_{P_N}(P_M) = {MN} T_m^n * P_d` for `1 <= M, N <= max`.
fn powerhopf(max: usize) -> Result<Vec<Check>, Error> {
    let mut out = Vec::new();
    for big_m in 1..=max as u32 {
        for big_n in 1..=max as u32 {
            let r = power_hopf_check(big_m, big_n)?;
            out.push(Check::new(format!("powerhopf M={big_m} N={big_n}"), r.equal));
        }
    }
    Ok(out)
}

/// The mirror map and its relation to the generators.
fn involutions(max: usize) -> Vec<Check> {
    let a = turaev_a_upto(max);
    let hs = complete_upto(max);
    let mut out = Vec::new();
    for m in 1..=max {
        let p = power_sum(m);
        let mixed = &(&a[m] * &hs[1]) + &p.scale(&RatFunc::monomial(3, 1, -2));
        out.push(Check::new(format!("involutions m={m:02} mirror^2"), mirror(&mirror(&mixed)) == mixed));
        out.push(Check::new(format!("involutions m={m:02} h"), mirror(&hs[m]) == hs[m]));
        out.push(Check::new(format!("involutions m={m:02} p"), mirror(&p) == p));
        out.push(Check::new(
            format!("involutions m={m:02} A"),
            mirror(&a[m]) == abar_elem(m).expect("m >= 1"),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite() {
        assert_eq!(run_suite("nosuch", 3).unwrap_err(), Error::UnknownSuite("nosuch".into()));
        assert!(default_max("nosuch").is_err());
    }

    #[test]
    fn every_suite_passes_at_small_degree() {
        for suite in SUITES {
            let checks = run_suite(suite, 3).unwrap();
            assert!(!checks.is_empty(), "{suite}");
            for c in checks {
                assert!(c.passed, "{suite}: {}", c.name);
            }
        }
    }

    #[test]
    fn powerhopf_grid_size() {
        assert_eq!(run_suite("powerhopf", 3).unwrap().len(), 9);
    }
}
