use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::ops::{Add, Mul, Neg, Sub};

use crate::partitions::Partition;
use crate::ring::{Coefficient, RatFunc};

/// A finite linear combination `sum c_lambda b_lambda` of monomials in a
/// free commutative generating set `b_1, b_2, ...`, with
/// `b_lambda = b_lambda1 b_lambda2 ...`. Zero coefficients are never
/// stored.
///
/// Products multiply monomials by concatenating partitions, which is the
/// right rule for the `p`, `h`, `e` and `A` bases.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct Combination {
    terms: BTreeMap<Partition, RatFunc>,
}

impl Combination {
    pub fn zero() -> Self {
        Self::default()
    }

    /// The empty monomial with coefficient 1.
    pub fn unit() -> Self {
        Self::monomial(Partition::empty(), RatFunc::one())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self::monomial(Partition::empty(), c)
    }

    pub fn monomial(lambda: Partition, c: RatFunc) -> Self {
        let mut out = Self::zero();
        out.add_term(lambda, c);
        out
    }

    /// The single generator `b_k`.
    pub fn generator(k: usize) -> Self {
        Self::monomial(Partition::row(k), RatFunc::one())
    }

    pub fn add_term(&mut self, lambda: Partition, c: RatFunc) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(lambda) {
            alloc::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            alloc::collections::btree_map::Entry::Occupied(mut slot) => {
                let sum = slot.get() + &c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    pub fn coefficient(&self, lambda: &Partition) -> RatFunc {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn get(&self, lambda: &Partition) -> Option<&RatFunc> {
        self.terms.get(lambda)
    }

    /// Terms in ascending partition order.
    pub fn iter(&self) -> impl DoubleEndedIterator<Item = (&Partition, &RatFunc)> + '_ {
        self.terms.iter()
    }

    /// Terms in descending lexicographic partition order.
    pub fn iter_desc(&self) -> impl Iterator<Item = (&Partition, &RatFunc)> + '_ {
        self.terms.iter().rev()
    }

    pub fn support(&self) -> impl Iterator<Item = &Partition> + '_ {
        self.terms.keys()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Distinct weights present, ascending.
    pub fn weights(&self) -> Vec<usize> {
        let mut w: Vec<usize> = self.terms.keys().map(Partition::weight).collect();
        w.sort_unstable();
        w.dedup();
        w
    }

    pub fn max_part(&self) -> usize {
        self.terms.keys().filter_map(|p| p.parts().first().copied()).max().unwrap_or(0)
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        self.map_coeffs(|x| x * c)
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(c));
        }
        out
    }

    /// Applies `f` to every monomial index; coefficients are unchanged.
    pub fn map_partitions(&self, f: impl Fn(&Partition) -> Partition) -> Self {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out.add_term(f(p), c.clone());
        }
        out
    }

    /// Fallible coefficient map, for diagonal operators that may reject a
    /// partition.
    pub fn try_map_terms<E>(&self, f: impl Fn(&Partition, &RatFunc) -> Result<RatFunc, E>) -> Result<Self, E> {
        let mut out = Self::zero();
        for (p, c) in &self.terms {
            out.add_term(p.clone(), f(p, c)?);
        }
        Ok(out)
    }

    /// The ring homomorphism sending generator `b_k` to `images[k]`
    /// (`images[0]` is ignored), applied to `self`.
    pub fn substitute(&self, images: &[Combination]) -> Combination {
        let mut memo: BTreeMap<Partition, Combination> = BTreeMap::new();
        let mut out = Combination::zero();
        for (lambda, c) in &self.terms {
            let image = monomial_image(lambda, images, &mut memo);
            out += &image.scale(c);
        }
        out
    }
}

fn monomial_image(
    lambda: &Partition,
    images: &[Combination],
    memo: &mut BTreeMap<Partition, Combination>,
) -> Combination {
    if lambda.is_empty() {
        return Combination::unit();
    }
    if let Some(hit) = memo.get(lambda) {
        return hit.clone();
    }
    let parts = lambda.parts();
    let rest = Partition::new(parts[1..].to_vec()).expect("suffix of a partition");
    let image = &images[parts[0]] * &monomial_image(&rest, images, memo);
    memo.insert(lambda.clone(), image.clone());
    image
}

impl core::ops::AddAssign<&Combination> for Combination {
    fn add_assign(&mut self, rhs: &Combination) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), c.clone());
        }
    }
}

impl core::ops::SubAssign<&Combination> for Combination {
    fn sub_assign(&mut self, rhs: &Combination) {
        for (p, c) in &rhs.terms {
            self.add_term(p.clone(), -c);
        }
    }
}

impl Add for &Combination {
    type Output = Combination;
    fn add(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Sub for &Combination {
    type Output = Combination;
    fn sub(self, rhs: &Combination) -> Combination {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Neg for &Combination {
    type Output = Combination;
    fn neg(self) -> Combination {
        Combination {
            terms: self.terms.iter().map(|(p, c)| (p.clone(), -c)).collect(),
        }
    }
}

impl Mul for &Combination {
    type Output = Combination;
    fn mul(self, rhs: &Combination) -> Combination {
        let mut out = Combination::zero();
        for (p1, c1) in &self.terms {
            for (p2, c2) in &rhs.terms {
                out.add_term(p1.concat(p2), c1 * c2);
            }
        }
        out
    }
}

macro_rules! forward_owned {
    ($t:ty) => {
        impl Add for $t {
            type Output = $t;
            fn add(self, rhs: $t) -> $t {
                &self + &rhs
            }
        }
        impl Sub for $t {
            type Output = $t;
            fn sub(self, rhs: $t) -> $t {
                &self - &rhs
            }
        }
        impl Mul for $t {
            type Output = $t;
            fn mul(self, rhs: $t) -> $t {
                &self * &rhs
            }
        }
        impl Neg for $t {
            type Output = $t;
            fn neg(self) -> $t {
                -&self
            }
        }
    };
}
pub(crate) use forward_owned;

forward_owned!(Combination);

impl Coefficient for Combination {
    fn zero() -> Self {
        Combination::zero()
    }
    fn one() -> Self {
        Combination::unit()
    }
    fn is_zero(&self) -> bool {
        Combination::is_zero(self)
    }
    fn scale(&self, c: &RatFunc) -> Self {
        Combination::scale(self, c)
    }
}

impl FromIterator<(Partition, RatFunc)> for Combination {
    fn from_iter<I: IntoIterator<Item = (Partition, RatFunc)>>(iter: I) -> Self {
        let mut out = Combination::zero();
        for (p, c) in iter {
            out.add_term(p, c);
        }
        out
    }
}
