//! Elements of `C+` as symmetric functions over the coefficient field.

mod bases;
mod combination;
mod element;

pub use bases::{
    complete, complete_upto, elementary, elementary_upto, from_basis, jacobi_trudi, jacobi_trudi_h,
    plethysm_by_pm, power_sum, schur, to_basis, to_basis_named,
};
pub use combination::Combination;
pub use element::{Basis, BasisExpansion, SymElement};

/// `f · g`; on power-sum monomials this concatenates partitions.
pub fn mul(f: &SymElement, g: &SymElement) -> SymElement {
    f * g
}
