//! Permutation-group algorithms over point sets.

mod action;
mod bsgs;

pub use action::{
    in_alternating, is_primitive, is_transitive, minimal_block_system, orbit, BlockSystem,
};
pub use bsgs::{alternating_order, factorial, Bsgs, BsgsOptions, Certificate};
