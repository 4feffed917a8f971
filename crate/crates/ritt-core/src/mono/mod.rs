//! Permutation-tuple model of branched coverings: validation, built-in
//! covering models, the fiber-product construction, component extraction,
//! block systems, and pair reduction.

mod blocks;
mod fiber;
mod perm;
mod reduce;
mod tuple;

pub use blocks::{block_sizes, block_systems, minimal_block_system, BlockSystem};
pub use fiber::{fiber_product, projection_consistent, FiberComponent, FiberComponents};
pub use perm::Perm;
pub use reduce::{reduce_pair, ReduceOutcome, ReduceStep};
pub use tuple::{
    builtin_tuple, merge_labels, BranchLabel, BuiltinKind, MonodromyTuple, TupleViolation,
};
