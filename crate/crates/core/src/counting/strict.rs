use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::Zero;

use super::types::CountResult;
use crate::arith::{binomial_guarded, divisors, ramanujan_sum, reduce, Rational};
use crate::error::{domain, Error, Result};

/// Number of solutions `x₁ > x₂ > ⋯ > x_k` (on `[0, n)`) of
/// `a(x₁ + ⋯ + x_k) ≡ b (mod n)`.
///
/// With `f = gcd(a, n)` and `f | b` the count is
/// `((-1)^k f / n) Σ_{d | gcd(n/f, k)} (-1)^{k/d} C(n/d, k/d) C_d(b/f)`,
/// and 0 when `f ∤ b`.
pub fn strict_order_count(n: u64, k: u64, a: i64, b: i64) -> Result<CountResult> {
    if n == 0 {
        return domain("modulus must be positive");
    }
    if k == 0 {
        return domain("k must be positive");
    }
    let a = reduce(a, n);
    let b = reduce(b, n);
    let f = num_integer::gcd(a, n);
    if b % f != 0 || k > n {
        return Ok(CountResult::exact(BigUint::zero()));
    }
    let target = (b / f) as i64;
    let g = num_integer::gcd(n / f, k);

    let mut sum = BigInt::zero();
    for d in divisors(g) {
        let lower = Rational::from_integer(BigInt::from(k / d));
        let term = binomial_guarded((n / d) as i64, &lower) * ramanujan_sum(d, target);
        if (k / d).is_odd() {
            sum -= term;
        } else {
            sum += term;
        }
    }
    if k.is_odd() {
        sum = -sum;
    }
    let (count, rem) = (sum * f).div_rem(&BigInt::from(n));
    if !rem.is_zero() || count.sign() == Sign::Minus {
        return Err(Error::InternalConsistency {
            context: format!("strict-order divisor sum for n={n} k={k} a={a} b={b}"),
            residual: 1.0,
        });
    }
    Ok(CountResult::exact(count.magnitude().clone()))
}
