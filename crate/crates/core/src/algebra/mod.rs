//! Exact arithmetic: integer matrices and their Smith normal form, cyclotomic
//! field elements, multivariate Laurent polynomials, minors and gcd.

mod cyclo;
mod det;
mod gcd;
mod laurent;
mod matrix;
mod smith;

pub use cyclo::{cyclotomic_polynomial, euler_phi, Cyclo};
pub use det::{determinant, size_k_minors};
pub use gcd::laurent_gcd;
pub use laurent::{LaurentPoly, Monomial};
pub use matrix::IntMatrix;
pub use smith::{invariant_factors, smith_normal_form, SmithDecomposition};
