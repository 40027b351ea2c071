//! Exact counts and probabilities for products of permutations, centred on
//! products of two long cycles, with an exhaustive oracle to check them.
//!
//! ```
//! use sepprob::counting::{p_ncycle, sep_prob_ncycle};
//!
//! assert_eq!(p_ncycle(4, 2, 2).unwrap(), 16u32.into());
//! assert_eq!(sep_prob_ncycle(4, 2).unwrap().to_string(), "11/18");
//! ```

pub mod cli;
pub mod counting;
pub mod error;
pub mod oracle;
pub mod partition;
pub mod perm;
pub mod plane;
pub mod rational;
pub mod table;
pub mod verify;

pub use error::{Error, Result};
pub use oracle::{Oracle, OracleMode, OracleQuery};
pub use partition::{Composition, IntegerPartition};
pub use perm::{CycleForm, Permutation};
pub use plane::PlanePermutation;
pub use rational::ExactRational;
pub use table::{CountTable, Source, TableKind};
