use num_bigint::BigUint;
use num_traits::{Pow, Zero};

use super::types::{CongruenceSpec, CountResult};

/// Unrestricted count: `ℓ n^{k-1}` when `ℓ = gcd(a₁, …, a_k, n)` divides `b`,
/// otherwise 0.
pub fn lehmer_count(spec: &CongruenceSpec) -> CountResult {
    let n = spec.n();
    let ell = spec.coeffs().iter().fold(n, |g, &a| num_integer::gcd(g, a));
    if spec.b() % ell != 0 {
        return CountResult::exact(BigUint::zero());
    }
    let power: BigUint = Pow::pow(BigUint::from(n), (spec.k() - 1) as u32);
    CountResult::exact(power * ell)
}
