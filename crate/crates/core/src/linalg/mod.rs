//! Dense eigensolvers, spectra and quotient matrices.

mod jacobi;
mod matrix;
mod poly;
mod quotient;
mod spectrum;

pub use jacobi::sym_eigenvalues;
pub use matrix::{IntMatrix, SquareMatrix};
pub use poly::{characteristic_polynomial, polynomial_roots, small_eigenvalues};
pub use quotient::{quotient, Partition};
pub use spectrum::{
    energy, group, is_integral, max_deviation, spectra_equal, Spectrum, DEFAULT_COMPARE_TOL,
    DEFAULT_GROUP_TOL, DEFAULT_INTEGRAL_TOL,
};
pub(crate) use spectrum::{round12, rounded};

/// Grouped spectrum of a symmetric matrix under the default tolerance.
pub fn spectrum(m: &SquareMatrix) -> crate::error::Result<Spectrum> {
    Ok(group(&sym_eigenvalues(m)?, DEFAULT_GROUP_TOL))
}
