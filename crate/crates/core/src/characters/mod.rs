//! Dirichlet characters, Gauss sums, the finite Fourier transform, and
//! squares modulo `n`.

mod character;
mod dft;
mod gauss;
mod product;
mod squares;

pub use character::{CharacterKind, DirichletCharacter};
pub use dft::{dft, idft, PeriodicFunction};
pub use gauss::{
    gauss_sum_closed, gauss_sum_direct, gauss_sum_real_prime_power, gauss_sum_real_primitive,
};
pub use product::product_identity_check;
pub use squares::{
    count_qr, count_squares, sqrt_mod_prime_power, square_decomposition_identity,
    square_indicator, square_profile, SquareProfile,
};
