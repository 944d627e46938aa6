//! Arbitrary-precision integer, matrix, and polynomial arithmetic.
//!
//! Everything here is exact: characteristic polynomials via the
//! Faddeev–LeVerrier recurrence, resultants by fraction-free elimination on
//! the Sylvester matrix, factorization over `F_p` (Cantor–Zassenhaus) and
//! over `Z` (Zassenhaus with Hensel lifting), and integer root extraction.
//! No floating point enters any decision.

mod fppoly;
mod matrix;
mod poly;
mod zfactor;

pub mod linalg;

pub use fppoly::{factor_mod_p, is_prime_u64, poly_index_mod_p, FpFactorization, FpPoly};
pub use matrix::{char_poly, IntMatrix};
pub use poly::{discriminant, rational_integer_roots, resultant, IntPoly};
pub use zfactor::{factor_over_z, has_monic_divisor_of_degree, MAX_FACTOR_DEGREE};

pub(crate) use fppoly::{inv_mod_u64, mul_mod_u64, squarefree_parts};
pub(crate) use poly::resultant_coeffs;

use thiserror::Error;

/// Errors shared by the exact-arithmetic layer.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ExactError {
    #[error("operation requires a nonzero polynomial")]
    ZeroPolynomial,
    #[error("operation requires a non-constant polynomial")]
    ConstantPolynomial,
    #[error("operation requires a monic polynomial")]
    NotMonic,
    #[error("degree {got} exceeds the supported bound {max}")]
    UnsupportedDegree { max: usize, got: usize },
    #[error("modulus {0} is not prime")]
    CompositeModulus(u64),
    #[error("polynomial is not squarefree")]
    NotSquarefree,
    #[error("matrix dimensions are incompatible: {0}")]
    Dimension(String),
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, ExactError>;
