use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use num_bigint::BigUint;
use num_traits::One;

use crate::error::Error;
use crate::ring::LaurentPoly;

/// A weakly decreasing sequence of positive integers.
///
/// Ordering is lexicographic on the parts, so within one weight the
/// `BTreeMap` order is ascending dominance-free lex order; outputs iterate
/// it in reverse.
#[derive(Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Partition(Vec<usize>);

/// The hook `(a|b) = (a + 1, 1^b)` in Frobenius notation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Hook {
    pub arm: usize,
    pub leg: usize,
}

impl Hook {
    pub fn new(arm: usize, leg: usize) -> Self {
        Self { arm, leg }
    }

    pub fn weight(&self) -> usize {
        self.arm + self.leg + 1
    }

    pub fn to_partition(self) -> Partition {
        let mut parts = Vec::with_capacity(self.leg + 1);
        parts.push(self.arm + 1);
        parts.extend(core::iter::repeat_n(1, self.leg));
        Partition(parts)
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}|{})", self.arm, self.leg)
    }
}

impl Partition {
    /// Rejects sequences that are not weakly decreasing or contain zero.
    pub fn new(parts: Vec<usize>) -> Result<Self, Error> {
        if parts.contains(&0) {
            return Err(Error::InvalidPartition("parts must be positive".into()));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::InvalidPartition("parts must be weakly decreasing".into()));
        }
        Ok(Self(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_unsorted(mut parts: Vec<usize>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The one-row partition `(m)`, or the empty partition for `m = 0`.
    pub fn row(m: usize) -> Self {
        if m == 0 {
            Self::empty()
        } else {
            Self(alloc::vec![m])
        }
    }

    /// `(1^m)`.
    pub fn column(m: usize) -> Self {
        Self(alloc::vec![1; m])
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn weight(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Union of the parts.
    pub fn concat(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Every part multiplied by `k`.
    pub fn scaled(&self, k: usize) -> Partition {
        Partition(self.0.iter().map(|p| p * k).collect())
    }

    /// Removes one copy of `part`; `None` if absent.
    pub fn without_part(&self, part: usize) -> Option<Partition> {
        let i = self.0.iter().position(|&p| p == part)?;
        let mut parts = self.0.clone();
        parts.remove(i);
        Some(Partition(parts))
    }

    /// `(part, multiplicity)` for each distinct part, largest first.
    pub fn multiplicities(&self) -> Vec<(usize, usize)> {
        let mut out: Vec<(usize, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    pub fn as_hook(&self) -> Option<Hook> {
        let (&first, rest) = self.0.split_first()?;
        rest.iter().all(|&p| p == 1).then(|| Hook::new(first - 1, rest.len()))
    }

    pub fn is_hook(&self) -> bool {
        self.as_hook().is_some()
    }

    /// Contents `j - i` of all cells, row by row (0-based).
    pub fn contents(&self) -> impl Iterator<Item = i64> + '_ {
        self.0
            .iter()
            .enumerate()
            .flat_map(|(i, &row)| (0..row).map(move |j| j as i64 - i as i64))
    }

    /// Conjugate partition.
    pub fn conjugate(&self) -> Partition {
        let Some(&first) = self.0.first() else {
            return Partition::empty();
        };
        Partition((1..=first).map(|j| self.0.iter().filter(|&&p| p >= j).count()).collect())
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str("]")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl TryFrom<Vec<usize>> for Partition {
    type Error = Error;
    fn try_from(parts: Vec<usize>) -> Result<Self, Error> {
        Partition::new(parts)
    }
}

fn parse_number(s: &str) -> Result<usize, Error> {
    s.trim()
        .parse::<usize>()
        .map_err(|_| Error::InvalidPartition(alloc::format!("`{}` is not a non-negative integer", s.trim())))
}

/// Accepts `[l1,l2,...]`, `[]` and the Frobenius hook syntax `(a|b)`.
impl FromStr for Partition {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        let s = s.trim();
        if let Some(inner) = s.strip_prefix('[').and_then(|r| r.strip_suffix(']')) {
            if inner.trim().is_empty() {
                return Ok(Partition::empty());
            }
            let parts = inner.split(',').map(parse_number).collect::<Result<Vec<_>, _>>()?;
            return Partition::new(parts);
        }
        if let Some(inner) = s.strip_prefix('(').and_then(|r| r.strip_suffix(')')) {
            let (a, b) = inner
                .split_once('|')
                .ok_or_else(|| Error::InvalidPartition("expected `(a|b)`".to_string()))?;
            return Ok(Hook::new(parse_number(a)?, parse_number(b)?).to_partition());
        }
        Err(Error::InvalidPartition(String::from("expected `[...]` or `(a|b)`")))
    }
}

/// All partitions of `n` in descending lexicographic order.
pub fn partitions_of(n: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    if n == 0 {
        out.push(Partition::empty());
        return out;
    }
    let mut cur = alloc::vec![n];
    loop {
        out.push(Partition(cur.clone()));
        // rightmost part greater than one
        let Some(k) = cur.iter().rposition(|&p| p > 1) else {
            break;
        };
        let ones = cur.len() - k - 1;
        let head = cur[k] - 1;
        cur.truncate(k);
        let mut rest = head + ones + 1;
        while rest > 0 {
            let p = head.min(rest);
            cur.push(p);
            rest -= p;
        }
    }
    out
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, k| acc * BigUint::from(k))
}

/// Number of distinct rearrangements of the parts: `l! / (m_1! ... m_r!)`.
pub fn k_lambda(lambda: &Partition) -> BigUint {
    let denom = lambda
        .multiplicities()
        .iter()
        .fold(BigUint::one(), |acc, &(_, m)| acc * factorial(m));
    factorial(lambda.len()) / denom
}

/// `z_mu = prod_i i^(m_i) m_i!`.
pub fn z_mu(mu: &Partition) -> BigUint {
    mu.multiplicities().iter().fold(BigUint::one(), |acc, &(p, m)| {
        acc * BigUint::from(p).pow(m as u32) * factorial(m)
    })
}

/// Sum of the contents over all cells.
pub fn content_sum(lambda: &Partition) -> i64 {
    lambda.contents().sum()
}

/// `sum_{x in lambda} s^(2 N c(x))`.
pub fn content_power_sum(lambda: &Partition, n: u32) -> Result<LaurentPoly, Error> {
    if n == 0 {
        return Err(Error::NonPositive { what: "content power", value: 0 });
    }
    Ok(LaurentPoly::from_terms(
        lambda.contents().map(|c| ((0, 2 * n as i32 * c as i32), 1)),
    ))
}

/// The `m` hooks of weight `m`, by descending arm.
pub fn hooks_of(m: usize) -> Result<Vec<Hook>, Error> {
    if m == 0 {
        return Err(Error::NonPositive { what: "hook weight", value: 0 });
    }
    Ok((0..m).rev().map(|a| Hook::new(a, m - 1 - a)).collect())
}

/// `(-1)^b` on the hook `(a|b)`, zero on non-hooks.
pub fn omega(nu: &Partition) -> i64 {
    match nu.as_hook() {
        Some(h) if h.leg % 2 == 1 => -1,
        Some(_) => 1,
        None => 0,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn construction_rejects_unsorted_and_zero() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert_eq!(p(&[]).weight(), 0);
        assert_eq!(p(&[]).len(), 0);
    }

    #[test]
    fn parsing() {
        assert_eq!("[4, 2,1]".parse::<Partition>().unwrap(), p(&[4, 2, 1]));
        assert_eq!("[]".parse::<Partition>().unwrap(), Partition::empty());
        assert_eq!("(2|2)".parse::<Partition>().unwrap(), p(&[3, 1, 1]));
        assert_eq!("(0|0)".parse::<Partition>().unwrap(), p(&[1]));
        assert!("[1,2]".parse::<Partition>().is_err());
        assert!("[a]".parse::<Partition>().is_err());
        assert!("4,2".parse::<Partition>().is_err());
        assert_eq!(p(&[3, 1, 1]).to_string(), "[3,1,1]");
    }

    #[test]
    fn partition_counts() {
        let counts: Vec<usize> = (0..=10).map(|n| partitions_of(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]);
        assert_eq!(partitions_of(19).len(), 490);
        assert_eq!(partitions_of(3), vec![p(&[3]), p(&[2, 1]), p(&[1, 1, 1])]);
    }

    #[test]
    fn k_lambda_values() {
        assert_eq!(k_lambda(&p(&[4, 4, 4, 2, 2, 1, 1, 1])), BigUint::from(560u32));
        assert_eq!(k_lambda(&p(&[3, 3, 1, 1, 1])), BigUint::from(10u32));
        assert_eq!(k_lambda(&p(&[7])), BigUint::from(1u32));
        assert_eq!(k_lambda(&Partition::empty()), BigUint::from(1u32));
    }

    #[test]
    fn z_mu_values() {
        assert_eq!(z_mu(&p(&[1, 1, 1])), BigUint::from(6u32));
        assert_eq!(z_mu(&p(&[2, 1])), BigUint::from(2u32));
        assert_eq!(z_mu(&p(&[3])), BigUint::from(3u32));
    }

    #[test]
    fn contents() {
        assert_eq!(content_sum(&p(&[1])), 0);
        assert_eq!(content_sum(&p(&[2, 1])), 0);
        for m in 1..=9usize {
            for h in hooks_of(m).unwrap() {
                let lam = h.to_partition();
                assert_eq!(2 * content_sum(&lam), (m as i64) * (h.arm as i64 - h.leg as i64));
            }
        }
        assert_eq!(content_power_sum(&p(&[1]), 3).unwrap(), LaurentPoly::one());
        assert_eq!(
            content_power_sum(&p(&[2]), 2).unwrap(),
            LaurentPoly::from_terms([((0, 0), 1), ((0, 4), 1)])
        );
    }

    #[test]
    fn hooks() {
        assert_eq!(hooks_of(1).unwrap(), vec![Hook::new(0, 0)]);
        assert_eq!(hooks_of(3).unwrap(), vec![Hook::new(2, 0), Hook::new(1, 1), Hook::new(0, 2)]);
        assert_eq!(hooks_of(7).unwrap().len(), 7);
        assert!(hooks_of(0).is_err());
        assert_eq!(omega(&p(&[2, 2])), 0);
        assert_eq!(omega(&p(&[3, 1, 1])), 1);
        assert_eq!(omega(&p(&[1, 1])), -1);
    }

    #[test]
    fn concat_and_conjugate() {
        assert_eq!(p(&[3, 1]).concat(&p(&[2, 2, 1])), p(&[3, 2, 2, 1, 1]));
        assert_eq!(p(&[3, 1]).conjugate(), p(&[2, 1, 1]));
    }
}
