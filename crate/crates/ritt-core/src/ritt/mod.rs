//! Double-decomposition classification against the six normal-form
//! families, solvers for the power and Chebyshev mixed equations, the
//! special-double-decomposition detector, and the weak-equivalence move
//! search establishing first-Ritt behavior at desk scale.

mod classify;
mod moves;
mod posl;
mod r2;
mod solvers;
mod special_dd;
mod witness;

pub use classify::{classify_double, solve_eq2};
pub use moves::{
    chains_of_laurent, first_ritt_check, maximal_pairs, weak_equivalence, FirstRittReport,
    MoveChain, MoveSearch,
};
pub use posl::solve_posl;
pub use r2::{r2_normalize, R2Form};
pub use solvers::{sandwich_laurent, sandwich_poly, sandwich_vs_normal};
pub use special_dd::{detect_special, SpecialVerdict};
pub use witness::{CaseTag, CaseWitness, ClassifyOutcome, WitnessParams};
