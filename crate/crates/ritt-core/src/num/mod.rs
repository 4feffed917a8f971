//! Exact scalar arithmetic: rationals and cyclotomic extensions.

mod cyclo;
pub(crate) mod polyvec;
mod rational;

pub use cyclo::{
    cyclotomic_poly, divisors, euler_phi, field_conductor, lcm_u32, subfield_of, Cyclo,
};
pub use rational::Rat;
