use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

pub type Rational = num_rational::BigRational;

/// `C(n, k)` for nonnegative arguments.
pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        acc *= n - i;
        acc /= i + 1;
    }
    acc
}

/// Number of size-`k` multisets drawn from `n` elements, `C(n+k-1, k)`.
pub fn multiset_count(n: u64, k: u64) -> BigUint {
    if k == 0 {
        return BigUint::one();
    }
    if n == 0 {
        return BigUint::zero();
    }
    binomial(n + k - 1, k)
}

/// `n (n-1) ... (n-len+1)`; the empty product for `len = 0`.
pub fn falling_factorial(n: i64, len: u64) -> BigInt {
    (0..len as i64).fold(BigInt::one(), |acc, i| acc * BigInt::from(n - i))
}

/// Binomial coefficient with an integer upper index and a rational lower
/// index.
///
/// A lower index that is not a nonnegative integer yields 0. Negative upper
/// indices follow `C(-d, j) = (-1)^j C(d+j-1, j)`.
pub fn binomial_guarded(upper: i64, lower: &Rational) -> BigInt {
    if !lower.is_integer() || lower.is_negative() {
        return BigInt::zero();
    }
    let Some(j) = lower.to_integer().to_u64() else {
        return BigInt::zero();
    };
    if j == 0 {
        return BigInt::one();
    }
    if upper >= 0 {
        BigInt::from(binomial(upper as u64, j))
    } else {
        let d = upper.unsigned_abs();
        let magnitude = BigInt::from(binomial(d + j - 1, j));
        if j.is_odd() {
            -magnitude
        } else {
            magnitude
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn guarded_examples() {
        assert_eq!(binomial_guarded(5, &q(2, 1)), BigInt::from(10));
        assert_eq!(binomial_guarded(5, &q(3, 2)), BigInt::zero());
        assert_eq!(binomial_guarded(-3, &q(2, 1)), BigInt::from(6));
        assert_eq!(binomial_guarded(7, &q(0, 1)), BigInt::one());
        assert_eq!(binomial_guarded(3, &q(-1, 1)), BigInt::zero());
        assert_eq!(binomial_guarded(3, &q(5, 1)), BigInt::zero());
    }

    #[test]
    fn negative_upper_identity() {
        for d in 1..=10i64 {
            for j in 0..=10i64 {
                let lhs = binomial_guarded(-d, &q(j, 1)) * if j % 2 == 0 { 1 } else { -1 };
                let rhs = binomial_guarded(d + j - 1, &q(j, 1));
                assert_eq!(lhs, rhs, "d={d} j={j}");
            }
        }
    }

    #[test]
    fn pascal_rule() {
        for n in 1..40u64 {
            for k in 1..=n {
                assert_eq!(binomial(n, k), binomial(n - 1, k - 1) + binomial(n - 1, k));
            }
        }
    }

    #[test]
    fn wide_binomials_do_not_overflow() {
        // C(70, 30) exceeds u64.
        let c = binomial(70, 30);
        assert_eq!(c.to_string(), "55347740058143507128");
        assert_eq!(falling_factorial(5, 3), BigInt::from(60));
        assert_eq!(falling_factorial(5, 0), BigInt::one());
        assert_eq!(multiset_count(3, 2), BigUint::from(6u32));
    }
}
