//! Exact univariate polynomial, Laurent polynomial, and rational-function
//! algebra over Q(zeta), plus the bivariate gcd used for common-inner-factor
//! extraction.

pub mod bipoly;
mod laurent;
pub(crate) mod linalg;
#[allow(clippy::module_inception)]
mod poly;
mod ratfunc;

pub use bipoly::{bivariate_gcd, BiPoly};
pub use laurent::{laurent_d, Laurent};
pub use poly::{chebyshev, lagrange_interpolate, Poly};
pub use ratfunc::{post_mobius, pre_mobius, Mobius, ProjValue, RatFunc};
