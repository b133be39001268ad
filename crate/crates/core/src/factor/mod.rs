//! The triangular factorization `P- Lambda tP+ = Omega` and its rescalings.

mod derived;
mod export;
mod sensitivity;
mod solve;

pub use derived::{
    ic_minus_matrix, ic_plus_candidate, lambda_prime, modified_pplus, theta_matrix, IcEntry, IcMatrix, IcPlusCandidate,
};
pub use export::{latex_cell, Block, Table};
pub use sensitivity::{order_sensitivity, EntryDifference, OrderSensitivity};
pub use solve::{
    reconstruct, solve_factorization, triangular_factor, unmodify_kostka, FactorizationResult, Triangular,
};
