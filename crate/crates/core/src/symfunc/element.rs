use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use core::str::FromStr;

use alloc::string::ToString;

use super::combination::{forward_owned, Combination};
use crate::error::Error;
use crate::partitions::Partition;
use crate::ring::{Coefficient, RatFunc};

/// An element of the skein `C+`, stored as `sum c_mu p_mu` in the
/// power-sum basis.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct SymElement(Combination);

impl SymElement {
    pub fn zero() -> Self {
        Self(Combination::zero())
    }

    pub fn unit() -> Self {
        Self(Combination::unit())
    }

    pub fn scalar(c: RatFunc) -> Self {
        Self(Combination::scalar(c))
    }

    /// `c · p_mu`.
    pub fn p_monomial(mu: Partition, c: RatFunc) -> Self {
        Self(Combination::monomial(mu, c))
    }

    pub fn from_p_terms(terms: Combination) -> Self {
        Self(terms)
    }

    /// Coefficients in the power-sum basis.
    pub fn p_terms(&self) -> &Combination {
        &self.0
    }

    pub fn into_p_terms(self) -> Combination {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn scale(&self, c: &RatFunc) -> Self {
        Self(self.0.scale(c))
    }

    pub fn map_coeffs(&self, f: impl Fn(&RatFunc) -> RatFunc) -> Self {
        Self(self.0.map_coeffs(f))
    }

    /// The homogeneous component of weight `d`.
    pub fn component(&self, d: usize) -> Self {
        Self(self.0.iter().filter(|(p, _)| p.weight() == d).map(|(p, c)| (p.clone(), c.clone())).collect())
    }

    /// Weight of the terms, if all terms share one.
    pub fn homogeneous_degree(&self) -> Option<usize> {
        match self.0.weights().as_slice() {
            [d] => Some(*d),
            _ => None,
        }
    }
}

impl Add for &SymElement {
    type Output = SymElement;
    fn add(self, rhs: &SymElement) -> SymElement {
        SymElement(&self.0 + &rhs.0)
    }
}

impl Sub for &SymElement {
    type Output = SymElement;
    fn sub(self, rhs: &SymElement) -> SymElement {
        SymElement(&self.0 - &rhs.0)
    }
}

impl Mul for &SymElement {
    type Output = SymElement;
    fn mul(self, rhs: &SymElement) -> SymElement {
        SymElement(&self.0 * &rhs.0)
    }
}

impl Neg for &SymElement {
    type Output = SymElement;
    fn neg(self) -> SymElement {
        SymElement(-&self.0)
    }
}

forward_owned!(SymElement);

impl Coefficient for SymElement {
    fn zero() -> Self {
        SymElement::zero()
    }
    fn one() -> Self {
        SymElement::unit()
    }
    fn is_zero(&self) -> bool {
        SymElement::is_zero(self)
    }
    fn scale(&self, c: &RatFunc) -> Self {
        SymElement::scale(self, c)
    }
}

/// Named bases of `C+`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Basis {
    /// Power sums `p_lambda`.
    P,
    /// Complete symmetric functions `h_lambda`.
    H,
    /// Elementary symmetric functions `e_lambda`.
    E,
    /// Schur functions, represented in the skein by `Q_lambda`.
    Schur,
    /// Turaev's basis `A_lambda`.
    A,
}

impl Basis {
    pub const ALL: [Basis; 5] = [Basis::P, Basis::H, Basis::E, Basis::Schur, Basis::A];

    pub fn tag(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::Schur => "schur",
            Basis::A => "A",
        }
    }

    /// Atom name used when printing monomials.
    pub fn atom(self) -> &'static str {
        match self {
            Basis::P => "p",
            Basis::H => "h",
            Basis::E => "e",
            Basis::Schur => "Q",
            Basis::A => "A",
        }
    }

    /// Whether monomials multiply by concatenation.
    pub fn is_multiplicative(self) -> bool {
        self != Basis::Schur
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self, Error> {
        Basis::ALL
            .into_iter()
            .find(|b| b.tag() == s)
            .ok_or_else(|| Error::UnknownBasis(s.to_string()))
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// An element written in a named basis.
#[derive(Clone, Debug, PartialEq)]
pub struct BasisExpansion {
    pub basis: Basis,
    pub terms: Combination,
}

impl BasisExpansion {
    pub fn new(basis: Basis, terms: Combination) -> Self {
        Self { basis, terms }
    }

    pub fn coefficient(&self, lambda: &Partition) -> RatFunc {
        self.terms.coefficient(lambda)
    }
}

/// `c1*Q[2,1] - c2*Q[3] + ...`, terms in descending partition order.
impl fmt::Display for BasisExpansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_zero() {
            return f.write_str("0");
        }
        for (i, (lambda, c)) in self.terms.iter_desc().enumerate() {
            let negative = c.monomial_is_negative();
            match (i, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let shown = if negative { -c } else { c.clone() };
            if lambda.is_empty() {
                write!(f, "{shown}")?;
                continue;
            }
            if !shown.is_one() {
                write!(f, "{shown}*")?;
            }
            let parts = lambda.to_string();
            write!(f, "{}[{}]", self.basis.atom(), &parts[1..parts.len() - 1])?;
        }
        Ok(())
    }
}
