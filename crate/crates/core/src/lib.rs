//! Kostka functions for the complex reflection group `G(r,1,n)`.
//!
//! The library builds the fake-degree matrix `Omega` over an ordered index of
//! r-partitions and solves `P- Lambda tP+ = Omega` in exact arithmetic.
//! Polynomial types are generic over the coefficient scalar; the aliases below
//! fix the instantiations used by the pipeline.

pub mod error;
pub mod exact;
pub mod factor;
pub mod fixtures;
pub mod greencheck;
pub mod omega;
pub mod oracle;
pub mod rpart;
pub mod symgrp;
pub mod verify;

pub use error::{Error, Result};

/// Exact rational scalar.
pub type Rational = num_rational::BigRational;
/// Laurent polynomial in `t` over the rationals.
pub type Poly = exact::LaurentPoly<Rational>;
/// Element of `Q(t)`.
pub type RatFunc = exact::RationalFunction<Rational>;
/// Laurent polynomial over `Q(zeta_r)`.
pub type CycloPoly = exact::LaurentPoly<exact::Cyclotomic>;
