//! Elementary exact number theory used by every counting formula.

mod binomial;
mod factor;
mod ramanujan;
mod symbols;

pub use binomial::{binomial, binomial_guarded, falling_factorial, multiset_count, Rational};
pub use factor::{divisors, euler_phi, factorize, moebius, phi, mu, Factorization};
pub use ramanujan::{ramanujan_sum, ramanujan_sum_direct, ramanujan_sum_direct_with_residual};
pub use symbols::{epsilon, jacobi_symbol, legendre, root_of_unity, ComplexVal};

pub(crate) use ramanujan::round_complex;
pub(crate) use symbols::mod_pow;

/// Reduces an integer into `[0, n)`.
pub fn reduce(x: i64, n: u64) -> u64 {
    x.rem_euclid(n as i64) as u64
}

pub fn gcd(a: u64, b: u64) -> u64 {
    num_integer::gcd(a, b)
}
