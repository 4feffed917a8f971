//! Decomposition algorithms and normal-form recognizers: complete maximal
//! decompositions of polynomials and Laurent polynomials, equivalence
//! handling, symmetry solvers, common inner factors, and generators for the
//! six double-decomposition families.

mod chain;
mod family;
mod inner;
mod laurent_decomp;
mod poly_decomp;
mod recognize;
mod rightfactor;

pub use chain::{chains_equivalent, laurent_factor, poly_factor, solve_post_mobius, DecompChain};
pub use family::{family_generator, FamilyCase, Quad};
pub use inner::{
    common_inner_factor, left_divide_ratfunc, ratfunc_field, solve_zc, symmetry_extract,
};
pub use laurent_decomp::{
    decompose_laurent, inner_power, is_indecomposable_laurent, laurent_right_factors,
};
pub use poly_decomp::{decompose_poly, is_indecomposable_poly};
pub use recognize::{recognize_chebyshev, recognize_laurent_d, recognize_power, Recognition};
pub use rightfactor::{
    inner_divide, left_divide, normalize_inner, poly_deck, poly_field, right_factor,
    roots_of_unity_in_field,
};
