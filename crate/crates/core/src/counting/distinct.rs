use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::One;

use super::strict::strict_order_count;
use super::types::{CongruenceSpec, CountResult};
use crate::arith::{divisors, falling_factorial, reduce};
use crate::error::{domain, Error, Result};

const MAX_SUBSET_VARIABLES: usize = 20;

fn factorial(k: u64) -> BigInt {
    (1..=k).fold(BigInt::one(), |acc, i| acc * i)
}

/// `(-1)^{k-1}(k-1)!(g-1) + (n-1)⋯(n-k+1)` when `g | b`, and
/// `(-1)^k (k-1)! + (n-1)⋯(n-k+1)` otherwise.
fn two_case_value(n: u64, k: u64, g: u64, divides: bool) -> BigInt {
    let lead = factorial(k - 1);
    let tail = falling_factorial(n as i64 - 1, k - 1);
    if divides {
        let v = lead * (g as i64 - 1);
        if (k - 1).is_odd() {
            tail - v
        } else {
            tail + v
        }
    } else if k.is_odd() {
        tail - lead
    } else {
        tail + lead
    }
}

fn consistency(context: String) -> Error {
    Error::InternalConsistency {
        context,
        residual: 1.0,
    }
}

/// Number of solutions with pairwise distinct `xᵢ` of
/// `a(x₁ + ⋯ + x_k) ≡ b (mod n)`: `k!` times the strict-order count.
pub fn distinct_count_equal_coeffs(n: u64, k: u64, a: i64, b: i64) -> Result<CountResult> {
    let strict = strict_order_count(n, k, a, b)?;
    let count = strict.count * factorial(k).magnitude().clone();

    let a_red = reduce(a, n);
    let f = num_integer::gcd(a_red, n);
    if f == 1 && k <= n {
        let expected = if num_integer::gcd(k, n) == 1 {
            Some(falling_factorial(n as i64 - 1, k - 1))
        } else if k > 1 && divisors(n).into_iter().find(|&d| d > 1) == Some(k) {
            // k is the smallest prime divisor of n
            Some(two_case_value(n, k, k, reduce(b, n) % k == 0))
        } else {
            None
        };
        if let Some(expected) = expected {
            if BigInt::from(count.clone()) != expected {
                return Err(consistency(format!(
                    "distinct count n={n} k={k} a={a} b={b}: {count} vs special case {expected}"
                )));
            }
        }
    }
    Ok(CountResult::exact(count))
}

/// Distinct-solution count under the hypothesis that
/// `gcd(Σ_{i∈I} aᵢ, n) = 1` for every nonempty proper subset `I`.
pub fn distinct_count_gcd_condition(spec: &CongruenceSpec) -> Result<CountResult> {
    let n = spec.n();
    let k = spec.k();
    if k > MAX_SUBSET_VARIABLES {
        return domain(format!(
            "subset hypothesis check limited to {MAX_SUBSET_VARIABLES} variables, got {k}"
        ));
    }
    let coeffs = spec.coeffs();
    let full = (1u32 << k) - 1;
    for mask in 1..full {
        let sum = (0..k)
            .filter(|i| mask & (1 << i) != 0)
            .fold(0u64, |s, i| (s + coeffs[i]) % n);
        let g = num_integer::gcd(sum, n);
        if g != 1 {
            return Err(Error::Hypothesis {
                subset: (0..k).filter(|i| mask & (1 << i) != 0).collect(),
                n,
                gcd: g,
            });
        }
    }
    let total = coeffs.iter().fold(0u64, |s, &a| (s + a) % n);
    let g = num_integer::gcd(total, n);
    let value = two_case_value(n, k as u64, g, spec.b() % g == 0);
    if value.sign() == Sign::Minus {
        return Err(consistency(format!("negative distinct count for {spec:?}")));
    }
    Ok(CountResult::exact(value.magnitude().clone()))
}
