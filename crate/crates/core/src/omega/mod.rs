//! The fake-degree matrix `Omega`: double-coset route and wreath-product oracle.

mod consistency;
mod cosets;
mod matrix;
mod wreath;

pub use consistency::{coset_consistency, ConsistencyReport, CosetCheck};
pub(crate) use cosets::coset_character_sums;
pub use cosets::{a_o, b_o, bracket, check_nonneg_integral, h_diag_prefix, omega_entry_cosets, torus_quotient};
pub use matrix::{omega_matrix, omega_matrix_bruteforce, OmegaMatrix};
pub use wreath::{
    delta_value, det_v_value, epsilon_value, fake_degree, omega_entry_bruteforce, rho_character, rho_class_values,
    wreath_charpoly, wreath_elements, wreath_group, ClassKey, WreathClass, WreathElement, WreathGroup, WREATH_BOUND,
};
