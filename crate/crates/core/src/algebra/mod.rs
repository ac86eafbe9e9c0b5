//! Exact arithmetic: rationals, sparse bivariate Laurent polynomials,
//! rational generating functions, the fraction-free solver and the
//! combinatorial number tables.

pub mod combinatorics;
mod gf;
mod poly;
mod solve;
mod syntax;

pub use gf::{gf_equal, RationalGF};
pub use poly::{parse_rational, Coefficient, LaurentPoly, Monomial};
pub use solve::{bareiss_solve, combine_solutions, DEFAULT_MAX_DIM};
pub use syntax::{parse_poly, parse_poly_with};

use num_bigint::BigInt;
pub use num_rational::BigRational;

/// `n / d` as a reduced big rational.
pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> BigRational {
    BigRational::new(n.into(), d.into())
}

/// Integer as a big rational.
pub fn int(n: impl Into<BigInt>) -> BigRational {
    BigRational::from(n.into())
}
