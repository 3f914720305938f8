//! Symmetric-group characters by the Murnaghan–Nakayama rule.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;

use super::partition::Partition;
use crate::error::Error;

/// Memo table for `chi_lambda(mu)`, keyed by the shape that remains and
/// how many parts of `mu` have been stripped.
#[derive(Default)]
pub struct CharacterCache {
    memo: BTreeMap<(Partition, Partition), i64>,
}

impl CharacterCache {
    pub fn new() -> Self {
        Self::default()
    }

    /// `chi_lambda` on the class of cycle type `mu`.
    pub fn character(&mut self, lambda: &Partition, mu: &Partition) -> Result<i64, Error> {
        if lambda.weight() != mu.weight() {
            return Err(Error::WeightMismatch {
                left: lambda.weight(),
                right: mu.weight(),
            });
        }
        Ok(self.chi(lambda, mu.parts()))
    }

    fn chi(&mut self, lambda: &Partition, mu: &[usize]) -> i64 {
        let Some((&k, rest)) = mu.split_first() else {
            return if lambda.is_empty() { 1 } else { 0 };
        };
        let key = (lambda.clone(), Partition::from_unsorted(mu.to_vec()));
        if let Some(&v) = self.memo.get(&key) {
            return v;
        }
        let mut total = 0;
        for (shape, height) in border_strips(lambda, k) {
            let sign = if height % 2 == 0 { 1 } else { -1 };
            total += sign * self.chi(&shape, rest);
        }
        self.memo.insert(key, total);
        total
    }
}

/// Every way to remove a border strip of size `k`, with its height (rows
/// spanned minus one). Works on beta-numbers: removing a strip moves one
/// bead from `b` to `b - k`, crossing one bead per extra row.
fn border_strips(lambda: &Partition, k: usize) -> Vec<(Partition, usize)> {
    let l = lambda.len();
    let beta: Vec<usize> = lambda
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &p)| p + (l - 1 - i))
        .collect();
    let mut out = Vec::new();
    for (i, &b) in beta.iter().enumerate() {
        if b < k || beta.contains(&(b - k)) {
            continue;
        }
        let target = b - k;
        let height = beta.iter().filter(|&&x| x > target && x < b).count();
        let mut moved = beta.clone();
        moved[i] = target;
        moved.sort_unstable_by(|a, b| b.cmp(a));
        let parts: Vec<usize> = moved
            .iter()
            .enumerate()
            .map(|(j, &x)| x - (l - 1 - j))
            .filter(|&p| p > 0)
            .collect();
        out.push((Partition::new(parts).expect("beta-numbers give a partition"), height));
    }
    out
}

/// `chi_lambda(mu)`; errors when the weights differ.
pub fn mn_character(lambda: &Partition, mu: &Partition) -> Result<i64, Error> {
    CharacterCache::new().character(lambda, mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partitions::{hooks_of, omega};

    fn p(parts: &[usize]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn small_values() {
        assert_eq!(mn_character(&p(&[1, 1]), &p(&[2])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])).unwrap(), 2);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])).unwrap(), -1);
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[2, 1])).unwrap(), 0);
        assert_eq!(mn_character(&Partition::empty(), &Partition::empty()).unwrap(), 1);
    }

    #[test]
    fn weight_mismatch() {
        assert_eq!(
            mn_character(&p(&[2]), &p(&[1])).unwrap_err(),
            Error::WeightMismatch { left: 2, right: 1 }
        );
    }

    #[test]
    fn hooks_on_full_cycle() {
        for m in 1..=6 {
            for h in hooks_of(m).unwrap() {
                let lam = h.to_partition();
                let expected = if h.leg % 2 == 0 { 1 } else { -1 };
                assert_eq!(mn_character(&lam, &Partition::row(m)).unwrap(), expected);
                assert_eq!(omega(&lam), expected);
            }
        }
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[4])).unwrap(), 0);
    }
}
