//! Exact scalars, Laurent polynomials, rational functions and matrices.

mod cyclotomic;
mod gcd;
mod laurent;
mod matrix;
mod parse;
mod ratfun;
mod scalar;

pub use cyclotomic::{euler_phi, Cyclotomic};
pub use gcd::{euclid_gcd, PolyGcd};
pub use laurent::LaurentPoly;
pub use matrix::Matrix;
pub use parse::{parse_laurent, parse_ratfunc, parse_ratfunc_in};
pub use ratfun::RationalFunction;
pub use scalar::{rat, rat_frac, CoeffFormat, FieldScalar, Scalar};

impl PolyGcd for f64 {}
