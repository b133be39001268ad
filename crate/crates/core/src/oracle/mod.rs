//! Independent brute-force references used by the verifiers.

mod charge;

pub use charge::{charge, kostka_foulkes, modified_kostka, reading_word, ssyt};
