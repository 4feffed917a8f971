//! Passport computation, both genus formulas, s-term bookkeeping,
//! special-value analysis, and irreducibility verdicts for A(x) - B(y) = 0.

mod formulas;
mod irred;
mod passport;
pub(crate) mod qring;
mod special;
mod sterm;

pub use formulas::{genus_pair_rh2, genus_sum_rh0};
pub use irred::{irreducibility, IrredVerdict};
pub use passport::{merge_passports, passport_of_poly, BranchValue, Passport, PassportEntry};
pub use special::{
    classify_partition, special_values, SpecialKind, SpecialReport, SpecialTag, SpecialVerdict,
};
pub use sterm::{clause_bound, s_term, STerm, STermClause};

/// Rational roots of a rational-coefficient polynomial (roots, cofactor).
pub fn rational_roots_public(
    poly: &[crate::num::Rat],
) -> (Vec<crate::num::Rat>, Vec<crate::num::Rat>) {
    qring::rational_roots(poly)
}
