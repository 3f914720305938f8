//! Skein structure on `C+`: Turaev's basis and its transitions, the
//! mirror map, meridian operators, and framing twists.

mod operators;
mod theta;
mod turaev;

pub use operators::{
    delta_phi, delta_phibar, delta_pn, delta_pn_star, fractional_twist, framing_twist, meridian_eigenvalue,
    meridian_phi, meridian_phibar, mirror, schur_diagonal, TwistExponent,
};
pub use theta::{e_in_a, h_in_a, h_in_a_by_series, tau_closed, theta_closed, theta_rec, ThetaTable};
pub use turaev::{
    a_basis_expand, a_ij, abar, abar_coefficient, abar_elem, evaluate_a, power_sum_in_a, turaev_a,
    turaev_a_upto, x_coefficient, x_elem,
};
