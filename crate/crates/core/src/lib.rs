//! Exact counts of restricted solutions of linear congruences
//! `a₁x₁ + ⋯ + a_k x_k ≡ b (mod n)`.
//!
//! Closed forms cover square solutions, strictly ordered solutions, solutions
//! ordered within coefficient blocks, and pairwise distinct solutions. Every
//! counter has an independent ground truth in [`oracle`]: exhaustive
//! enumeration and a generating-function oracle in a cyclic polynomial ring.
//!
//! ```
//! use lincong::counting::{square_count, CongruenceSpec};
//!
//! let spec = CongruenceSpec::new(27, &[1, 1], 1).unwrap();
//! assert_eq!(square_count(&spec).unwrap().count, 4u32.into());
//! ```

pub mod arith;
pub mod characters;
pub mod cli;
pub mod counting;
mod error;
pub mod oracle;

pub use error::{Error, Result};
