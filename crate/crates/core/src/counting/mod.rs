//! Closed-form counters for restricted solutions of
//! `a₁x₁ + ⋯ + a_k x_k ≡ b (mod n)`.

mod blocks;
mod distinct;
mod lehmer;
mod square;
mod strict;
mod types;

pub use blocks::{order_blocks_count, order_blocks_count_general};
pub use distinct::{distinct_count_equal_coeffs, distinct_count_gcd_condition};
pub use lehmer::lehmer_count;
pub use square::{
    hull_guarantees_square_solution, square_count, square_count_corollary,
    square_solution_exists, ExistenceMethod, SquareExistence,
};
pub use strict::strict_order_count;
pub use types::{BlockSpec, CongruenceSpec, CountResult, Method};
