//! Exact-arithmetic toolkit for functional decomposition of polynomials and
//! Laurent polynomials, permutation monodromy of branched coverings, genus
//! bookkeeping for curves A(x) - B(y) = 0, and classification of double
//! decompositions of rational functions with at most two poles.

pub mod decomp;
pub mod error;
pub mod expr;
pub mod genus;
pub mod jsonio;
pub mod mono;
pub mod num;
pub mod poly;
pub mod ritt;

pub use error::{Error, Result};
