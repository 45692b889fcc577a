//! Independent ground truth for every counter: exhaustive enumeration under
//! each restriction, a generating-function oracle in a cyclic polynomial
//! ring, and a convolution oracle for square solutions.
//!
//! None of these share code paths with [`crate::counting`] beyond residue
//! reduction and the list of squares.

mod budget;
mod convolution;
mod enumerate;
mod gf;

pub use budget::{OracleBudget, DEFAULT_MAX_STATES};
pub use convolution::oracle_square_convolution;
pub use enumerate::{
    oracle_count, oracle_count_with, oracle_distribution, oracle_find, oracle_solutions,
    state_count, Representatives, Restriction,
};
pub use gf::{gf_blocks_count, gf_count, partition_count_from_set, CyclicPoly};
