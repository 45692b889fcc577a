use std::collections::BTreeMap;

use num_bigint::{BigInt, BigUint};
use num_complex::Complex64;
use num_traits::{One, Signed, Zero};

use super::types::{BlockSpec, CountResult};
use crate::arith::{binomial_guarded, divisors, ramanujan_sum, root_of_unity, round_complex, Rational};
use crate::error::{Error, Result};

fn to_count(value: Rational, context: impl Fn() -> String) -> Result<BigUint> {
    if !value.is_integer() || value.is_negative() {
        return Err(Error::InternalConsistency {
            context: format!("{}: non-integral value {value}", context()),
            residual: 1.0,
        });
    }
    Ok(value.to_integer().magnitude().clone())
}

fn int(v: u64) -> BigInt {
    BigInt::from(v)
}

/// Number of solutions with `x ≥ x′ ≥ ⋯` inside each block.
///
/// When every block coefficient has the same `gcd(aᵢ, n) = f`, a single
/// divisor sum over `d | gcd(n/f, k₁, …, k_t)` is evaluated in exact rational
/// arithmetic. Otherwise the general divisor-tuple sum is used.
pub fn order_blocks_count(spec: &BlockSpec) -> Result<CountResult> {
    let n = spec.n();
    let gcds: Vec<u64> = spec
        .blocks()
        .iter()
        .map(|&(_, a)| num_integer::gcd(a, n))
        .collect();
    if gcds.windows(2).all(|w| w[0] == w[1]) {
        common_gcd_count(spec, gcds[0])
    } else {
        order_blocks_count_general(spec)
    }
}

fn common_gcd_count(spec: &BlockSpec, f: u64) -> Result<CountResult> {
    let n = spec.n();
    let b = spec.b();
    if b % f != 0 {
        return Ok(CountResult::exact(BigUint::zero()));
    }
    let g = spec
        .blocks()
        .iter()
        .fold(n / f, |acc, &(size, _)| num_integer::gcd(acc, size));

    let t = spec.blocks().len() as u32;
    let denominator = spec
        .blocks()
        .iter()
        .fold(BigInt::one(), |acc, &(size, _)| acc * int(n + size));
    let prefactor = Rational::new(num_traits::pow(int(n), t as usize), denominator);

    let mut sum = Rational::zero();
    for d in divisors(g) {
        let product = spec.blocks().iter().fold(BigInt::one(), |acc, &(size, _)| {
            let lower = Rational::new(int(size), int(d));
            acc * binomial_guarded(((n + size) / d) as i64, &lower)
        });
        sum += &prefactor * Rational::from_integer(product * ramanujan_sum(d, (b / f) as i64));
    }
    let value = sum * Rational::new(int(f), int(n));
    let count = to_count(value, || format!("block count {spec:?}"))?;
    Ok(CountResult::exact(count))
}

/// Weight `d/(d + kd/n) · C(d + kd/n, kd/n)` of a divisor `d` for a block of
/// size `k`; zero unless `n | kd`.
fn block_weight(n: u64, d: u64, size: u64) -> Rational {
    let j = Rational::new(int(size * d), int(n));
    if !j.is_integer() {
        return Rational::zero();
    }
    let upper = Rational::from_integer(int(d)) + &j;
    let upper_int: i64 = upper.to_integer().try_into().expect("block index fits i64");
    Rational::from_integer(int(d)) / upper * Rational::from_integer(binomial_guarded(upper_int, &j))
}

/// General evaluation: outer sum over divisor tuples `(d₁, …, d_t)`, inner
/// exponential sum over `m ∈ [1, n]` with `gcd(aᵢm, n) = dᵢ` for all `i`.
pub fn order_blocks_count_general(spec: &BlockSpec) -> Result<CountResult> {
    let n = spec.n();
    let b = spec.b();

    let mut inner: BTreeMap<Vec<u64>, Complex64> = BTreeMap::new();
    for m in 1..=n {
        let tuple: Vec<u64> = spec
            .blocks()
            .iter()
            .map(|&(_, a)| num_integer::gcd(((a as u128 * m as u128) % n as u128) as u64, n))
            .collect();
        let phase = ((b as u128 * m as u128) % n as u128) as i64;
        *inner.entry(tuple).or_insert(Complex64::new(0.0, 0.0)) += root_of_unity(-phase, n);
    }

    let mut residual = 0.0f64;
    let mut sum = Rational::zero();
    for (tuple, value) in &inner {
        let weight = spec
            .blocks()
            .iter()
            .zip(tuple)
            .fold(Rational::one(), |acc, (&(size, _), &d)| acc * block_weight(n, d, size));
        if weight.is_zero() {
            continue;
        }
        // The index set is a union of unit orbits, so the inner sum is a sum
        // of Ramanujan sums and therefore an integer.
        let (rounded, r) = round_complex(*value, &format!("block inner sum at {tuple:?}"))?;
        residual = residual.max(r);
        sum += weight * Rational::from_integer(BigInt::from(rounded));
    }
    let value = sum / Rational::from_integer(int(n));
    let count = to_count(value, || format!("general block count {spec:?}"))?;
    Ok(CountResult {
        count,
        method: super::types::Method::Formula,
        residual,
    })
}
