//! Exact computation in reversible Toffoli algebras.
//!
//! Gates are bijections of `A^n` for a finite alphabet `A`, composed in
//! parallel (`⊕`) and in series (`•`, right action). The crate builds the
//! arity slices of closed gate classes as permutation groups and checks them
//! against the maximal-subgroup types.

pub mod classify;
pub mod closure;
pub mod config;
pub mod error;
pub mod field;
pub mod gate;
pub mod group;
pub mod perm;
pub mod verify;

pub use error::{Error, Result};
pub use gate::{decode, encode, Gate};
pub use perm::{Parity, Perm};
pub use closure::{ClosureMode, GateSet};
pub use config::Config;
