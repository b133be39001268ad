//! Permutations, characters of `S_n` and Young subgroups, double cosets.

mod character;
mod coset;
mod perm;

pub use character::{char_perm_det, char_table, cycle_type_det, mn_character, torus_order, young_character, CharTable};
pub use coset::{
    contingency_label, coset_members, coset_tallies, coset_tallies_by_representative, double_cosets,
    intersection_elements, young_class, CosetTally, DoubleCoset, TallyKey, MAX_BRUTE_N,
};
pub use perm::{all_perms, perm_rank, Perm};
