//! Permutation arithmetic and stabilizer chains for finite permutation groups.
//!
//! The central object is [`StabilizerChain`], a base-and-strong-generating-set
//! structure built by a randomized Schreier-Sims pass followed by a
//! deterministic Schreier closure check, so group orders are certified exact.
//! On top of it sit membership tests, pointwise stabilizers, uniform random
//! elements and the construction of coset actions.
//!
//! Points are 0-based everywhere, including the group file format.

mod chain;
mod coset;
mod error;
mod group;
mod perm;
mod rng;

pub use chain::{ChainLevel, StabilizerChain};
pub use coset::{canonical_coset_rep, coset_action, CosetActionResult};
pub use error::{Error, Result};
pub use group::{load_group_str, GroupHandle};
pub use perm::Permutation;
pub use rng::RngState;
