//! Polynomial gcd and exact division for `LaurentPoly`.
//!
//! Polynomials are shifted to have non-negative exponents and viewed as
//! dense univariate polynomials in `s` whose coefficients are dense
//! polynomials in `v` over `Z`. The gcd is computed by the primitive
//! pseudo-remainder sequence, recursively on the coefficient ring.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::laurent::LaurentPoly;

/// Minimal interface of a coefficient domain with gcd.
trait Domain: Clone + PartialEq {
    fn zero() -> Self;
    fn is_zero(&self) -> bool;
    fn is_one(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn div_exact(&self, o: &Self) -> Option<Self>;
    fn gcd(&self, o: &Self) -> Self;
    /// True when the leading part is negative, so that gcds can be made
    /// unique up to sign.
    fn is_negative(&self) -> bool;
    fn neg(&self) -> Self;
}

impl Domain for BigInt {
    fn zero() -> Self {
        Zero::zero()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn is_one(&self) -> bool {
        One::is_one(self)
    }
    fn add(&self, o: &Self) -> Self {
        self + o
    }
    fn sub(&self, o: &Self) -> Self {
        self - o
    }
    fn mul(&self, o: &Self) -> Self {
        self * o
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if Zero::is_zero(o) {
            return None;
        }
        let (q, r) = self.div_rem(o);
        Zero::is_zero(&r).then_some(q)
    }
    fn gcd(&self, o: &Self) -> Self {
        Integer::gcd(self, o)
    }
    fn is_negative(&self) -> bool {
        Signed::is_negative(self)
    }
    fn neg(&self) -> Self {
        -self
    }
}

/// Dense univariate polynomial, little-endian, no trailing zeros.
#[derive(Clone, PartialEq, Debug)]
struct Dense<R>(Vec<R>);

impl<R: Domain> Dense<R> {
    fn trim(mut self) -> Self {
        while self.0.last().is_some_and(|c| c.is_zero()) {
            self.0.pop();
        }
        self
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn lead(&self) -> &R {
        self.0.last().expect("zero polynomial has no leading coefficient")
    }

    fn scale(&self, k: &R) -> Self {
        Dense(self.0.iter().map(|c| c.mul(k)).collect()).trim()
    }

    fn content(&self) -> R {
        let mut g = R::zero();
        for c in &self.0 {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    fn div_scalar(&self, k: &R) -> Option<Self> {
        self.0
            .iter()
            .map(|c| c.div_exact(k))
            .collect::<Option<Vec<_>>>()
            .map(Dense)
    }

    /// Primitive part with positive leading coefficient.
    fn primitive(&self) -> Self {
        let c = self.content();
        let mut p = self.div_scalar(&c).expect("content divides");
        if p.lead().is_negative() {
            p = Dense(p.0.iter().map(Domain::neg).collect());
        }
        p
    }

    /// `lc(b)^k · a mod b` for the appropriate `k`.
    fn pseudo_rem(&self, b: &Self) -> Self {
        let db = b.degree().expect("nonzero divisor");
        let lb = b.lead().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.lead().clone();
            let shift = dr - db;
            let mut next: Vec<R> = r.0.iter().map(|c| c.mul(&lb)).collect();
            for (i, c) in b.0.iter().enumerate() {
                next[i + shift] = next[i + shift].sub(&c.mul(&lr));
            }
            r = Dense(next).trim();
        }
        r
    }

    /// Exact division, `None` when `b` does not divide `self`.
    fn div_exact(&self, b: &Self) -> Option<Self> {
        let db = b.degree()?;
        let mut r = self.clone();
        let Some(dr) = r.degree() else {
            return Some(Dense(Vec::new()));
        };
        if dr < db {
            return None;
        }
        let mut q = vec![R::zero(); dr - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let c = r.lead().div_exact(b.lead())?;
            let shift = dr - db;
            for (i, bc) in b.0.iter().enumerate() {
                r.0[i + shift] = r.0[i + shift].sub(&bc.mul(&c));
            }
            q[shift] = c;
            r = r.trim();
        }
        Some(Dense(q).trim())
    }

    fn gcd(a: &Self, b: &Self) -> Self {
        if a.0.is_empty() {
            return b.normalized();
        }
        if b.0.is_empty() {
            return a.normalized();
        }
        let g = a.content().gcd(&b.content());
        let (mut x, mut y) = (a.primitive(), b.primitive());
        if x.degree() < y.degree() {
            core::mem::swap(&mut x, &mut y);
        }
        while y.degree().is_some_and(|d| d > 0) {
            let r = x.pseudo_rem(&y);
            x = y;
            if r.0.is_empty() {
                return x.scale(&g).normalized();
            }
            y = r.primitive();
        }
        if y.0.is_empty() {
            x.scale(&g).normalized()
        } else {
            // nonzero constant remainder: coprime primitive parts
            Dense(vec![g]).normalized()
        }
    }

    fn normalized(&self) -> Self {
        if self.0.last().is_some_and(|c| c.is_negative()) {
            Dense(self.0.iter().map(Domain::neg).collect())
        } else {
            self.clone()
        }
    }
}

impl<R: Domain> Domain for Dense<R> {
    fn zero() -> Self {
        Dense(Vec::new())
    }
    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }
    fn is_one(&self) -> bool {
        self.0.len() == 1 && self.0[0].is_one()
    }
    fn add(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = R::zero();
        Dense(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z).add(o.0.get(i).unwrap_or(&z)))
                .collect(),
        )
        .trim()
    }
    fn sub(&self, o: &Self) -> Self {
        let n = self.0.len().max(o.0.len());
        let z = R::zero();
        Dense(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z).sub(o.0.get(i).unwrap_or(&z)))
                .collect(),
        )
        .trim()
    }
    fn mul(&self, o: &Self) -> Self {
        if self.0.is_empty() || o.0.is_empty() {
            return Dense(Vec::new());
        }
        let mut out = vec![R::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.0.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b));
            }
        }
        Dense(out).trim()
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        Dense::div_exact(self, o)
    }
    fn gcd(&self, o: &Self) -> Self {
        Dense::gcd(self, o)
    }
    fn is_negative(&self) -> bool {
        self.0.last().is_some_and(|c| c.is_negative())
    }
    fn neg(&self) -> Self {
        Dense(self.0.iter().map(Domain::neg).collect())
    }
}

type ZPoly = Dense<BigInt>;
type ZZPoly = Dense<ZPoly>;

/// Outer variable `s`, inner `v`; `p` must have non-negative exponents.
fn to_bivariate(p: &LaurentPoly) -> ZZPoly {
    let Some((mv, ms)) = p.max_exponents() else {
        return Dense(Vec::new());
    };
    let mut rows: Vec<Vec<BigInt>> = vec![vec![<BigInt as Zero>::zero(); mv as usize + 1]; ms as usize + 1];
    for ((a, b), c) in p.terms() {
        rows[b as usize][a as usize] = c.clone();
    }
    Dense(rows.into_iter().map(|r| Dense(r).trim()).collect()).trim()
}

fn from_bivariate(p: &ZZPoly) -> LaurentPoly {
    let mut out = LaurentPoly::zero();
    for (b, row) in p.0.iter().enumerate() {
        for (a, c) in row.0.iter().enumerate() {
            out.add_term((a as i32, b as i32), c.clone());
        }
    }
    out
}

fn to_univariate_s(p: &LaurentPoly) -> ZPoly {
    let Some((_, ms)) = p.max_exponents() else {
        return Dense(Vec::new());
    };
    let mut row = vec![<BigInt as Zero>::zero(); ms as usize + 1];
    for ((_, b), c) in p.terms() {
        row[b as usize] = c.clone();
    }
    Dense(row).trim()
}

fn from_univariate_s(p: &ZPoly) -> LaurentPoly {
    LaurentPoly::from_terms(p.0.iter().enumerate().map(|(b, c)| ((0, b as i32), c.clone())))
}

/// Largest absolute coefficient.
fn norm_z(p: &ZPoly) -> BigInt {
    p.0.iter().map(|c| c.abs()).max().unwrap_or_default()
}

fn norm_zz(p: &ZZPoly) -> BigInt {
    p.0.iter().map(norm_z).max().unwrap_or_default()
}

fn integer_content_zz(p: &ZZPoly) -> BigInt {
    p.0.iter().fold(<BigInt as Zero>::zero(), |g, c| Integer::gcd(&g, &c.content()))
}

fn eval_z(p: &ZPoly, x: &BigInt) -> BigInt {
    p.0.iter().rev().fold(<BigInt as Zero>::zero(), |acc, c| acc * x + c)
}

fn eval_zz(p: &ZZPoly, x: &BigInt) -> ZPoly {
    Dense(p.0.iter().map(|c| eval_z(c, x)).collect()).trim()
}

/// Digits of `h` in base `x`, taken in the symmetric range `(-x/2, x/2]`.
fn interpolate_int(mut h: BigInt, x: &BigInt) -> ZPoly {
    let half = x >> 1;
    let mut digits = Vec::new();
    while !Zero::is_zero(&h) {
        let mut g = h.mod_floor(x);
        if g > half {
            g -= x;
        }
        h = (h - &g) / x;
        digits.push(g);
    }
    Dense(digits).trim()
}

fn next_point(x: &BigInt) -> BigInt {
    x * BigInt::from(73794) * x.sqrt().sqrt() / BigInt::from(27011)
}

fn start_point(na: &BigInt, nb: &BigInt, la: &BigInt, lb: &BigInt) -> BigInt {
    let two = BigInt::from(2);
    let by_norm = na.min(nb) * &two;
    let by_lead = (na / la.abs()).min(nb / lb.abs());
    by_norm.max(by_lead) + two
}

const HEU_ATTEMPTS: usize = 6;

/// Heuristic gcd of primitive-content inputs: evaluate at a large integer,
/// take the gcd there, and read the candidate back from its base-`x`
/// digits. A candidate is accepted only if it divides both inputs.
fn heu_gcd_z(a: &ZPoly, b: &ZPoly) -> Option<ZPoly> {
    let ca = a.content();
    let cb = b.content();
    let g = Integer::gcd(&ca, &cb);
    let (a, b) = (a.div_scalar(&ca)?, b.div_scalar(&cb)?);
    let mut x = start_point(&norm_z(&a), &norm_z(&b), a.lead(), b.lead());
    for _ in 0..HEU_ATTEMPTS {
        let (ea, eb) = (eval_z(&a, &x), eval_z(&b, &x));
        if !Zero::is_zero(&ea) && !Zero::is_zero(&eb) {
            let h = interpolate_int(Integer::gcd(&ea, &eb), &x);
            if !h.0.is_empty() {
                let h = h.primitive();
                if a.div_exact(&h).is_some() && b.div_exact(&h).is_some() {
                    return Some(h.scale(&g).normalized());
                }
            }
        }
        x = next_point(&x);
    }
    None
}

fn gcd_z(a: &ZPoly, b: &ZPoly) -> ZPoly {
    if a.0.is_empty() || b.0.is_empty() {
        return Dense::gcd(a, b);
    }
    heu_gcd_z(a, b).unwrap_or_else(|| Dense::gcd(a, b))
}

/// The bivariate analogue of [`heu_gcd_z`]: `v` is evaluated, the
/// univariate gcd in `s` is taken, and each of its integer coefficients is
/// read back as a polynomial in `v`.
fn heu_gcd_zz(a: &ZZPoly, b: &ZZPoly) -> Option<ZZPoly> {
    let ca = integer_content_zz(a);
    let cb = integer_content_zz(b);
    let g = Integer::gcd(&ca, &cb);
    let (a, b) = (a.div_scalar(&Dense(vec![ca]))?, b.div_scalar(&Dense(vec![cb]))?);
    let mut x = start_point(&norm_zz(&a), &norm_zz(&b), a.lead().lead(), b.lead().lead());
    for _ in 0..HEU_ATTEMPTS {
        let (ea, eb) = (eval_zz(&a, &x), eval_zz(&b, &x));
        if ea.degree() == a.degree() && eb.degree() == b.degree() {
            let h = gcd_z(&ea, &eb);
            let h = Dense(h.0.into_iter().map(|c| interpolate_int(c, &x)).collect::<Vec<_>>()).trim();
            if !h.0.is_empty() {
                let c = integer_content_zz(&h);
                let h = h.div_scalar(&Dense(vec![c]))?;
                if a.div_exact(&h).is_some() && b.div_exact(&h).is_some() {
                    return Some(h.scale(&Dense(vec![g])).normalized());
                }
            }
        }
        x = next_point(&x);
    }
    None
}

fn gcd_zz(a: &ZZPoly, b: &ZZPoly) -> ZZPoly {
    if a.0.is_empty() || b.0.is_empty() {
        return Dense::gcd(a, b);
    }
    heu_gcd_zz(a, b).unwrap_or_else(|| Dense::gcd(a, b))
}

/// Shifts `p` so that its minimal exponents are zero.
pub fn strip_monomial(p: &LaurentPoly) -> LaurentPoly {
    match p.min_exponents() {
        Some((a, b)) if (a, b) != (0, 0) => p.shift(-a, -b),
        _ => p.clone(),
    }
}

/// gcd of two Laurent polynomials, as a polynomial with no monomial factor
/// and positive leading coefficient. Units `v^a s^b` are ignored, so the
/// result is determined up to sign.
pub fn gcd(a: &LaurentPoly, b: &LaurentPoly) -> LaurentPoly {
    if a.is_zero() {
        return strip_monomial(b);
    }
    if b.is_zero() {
        return strip_monomial(a);
    }
    let (a, b) = (strip_monomial(a), strip_monomial(b));
    if a.is_monomial() || b.is_monomial() {
        return LaurentPoly::constant(Integer::gcd(&a.integer_content(), &b.integer_content()));
    }
    if !a.has_v() && !b.has_v() {
        let g = gcd_z(&to_univariate_s(&a), &to_univariate_s(&b));
        return from_univariate_s(&g);
    }
    from_bivariate(&gcd_zz(&to_bivariate(&a), &to_bivariate(&b)))
}

/// Exact quotient `a / b` in `Z[v^±1, s^±1]`, or `None` if `b` does not
/// divide `a`.
pub fn div_exact(a: &LaurentPoly, b: &LaurentPoly) -> Option<LaurentPoly> {
    if b.is_zero() {
        return None;
    }
    if a.is_zero() {
        return Some(LaurentPoly::zero());
    }
    let (av, as_) = a.min_exponents()?;
    let (bv, bs) = b.min_exponents()?;
    let (sa, sb) = (a.shift(-av, -as_), b.shift(-bv, -bs));
    let q = if sb.is_monomial() {
        let (_, c) = sb.least_term()?;
        let c = c.clone();
        if !sa.terms().all(|(_, x)| Zero::is_zero(&(x % &c))) {
            return None;
        }
        sa.div_integer(&c)
    } else if !sa.has_v() && !sb.has_v() {
        from_univariate_s(&to_univariate_s(&sa).div_exact(&to_univariate_s(&sb))?)
    } else {
        from_bivariate(&to_bivariate(&sa).div_exact(&to_bivariate(&sb))?)
    };
    Some(q.shift(av - bv, as_ - bs))
}
