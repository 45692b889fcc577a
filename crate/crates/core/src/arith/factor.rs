use crate::error::{domain, Result};

/// A positive integer together with its prime-power decomposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Factorization {
    n: u64,
    factors: Vec<(u64, u32)>,
}

impl Factorization {
    pub fn n(&self) -> u64 {
        self.n
    }

    /// `(prime, exponent)` pairs with strictly increasing primes.
    pub fn factors(&self) -> &[(u64, u32)] {
        &self.factors
    }

    pub fn is_squarefree(&self) -> bool {
        self.factors.iter().all(|&(_, e)| e == 1)
    }

    pub fn is_prime(&self) -> bool {
        self.factors.len() == 1 && self.factors[0].1 == 1
    }

    /// The prime-power components `p^e`, in increasing order of `p`.
    pub fn prime_powers(&self) -> impl Iterator<Item = (u64, u32, u64)> + '_ {
        self.factors.iter().map(|&(p, e)| (p, e, p.pow(e)))
    }
}

/// Factors `n` by trial division.
pub fn factorize(n: u64) -> Result<Factorization> {
    if n == 0 {
        return domain("cannot factorize 0");
    }
    let mut factors = Vec::new();
    let mut rest = n;
    let mut p = 2u64;
    while p.saturating_mul(p) <= rest {
        if rest % p == 0 {
            let mut e = 0;
            while rest % p == 0 {
                rest /= p;
                e += 1;
            }
            factors.push((p, e));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if rest > 1 {
        factors.push((rest, 1));
    }
    Ok(Factorization { n, factors })
}

pub fn euler_phi(f: &Factorization) -> u64 {
    f.factors
        .iter()
        .map(|&(p, e)| p.pow(e - 1) * (p - 1))
        .product()
}

pub fn moebius(f: &Factorization) -> i8 {
    if f.is_squarefree() {
        if f.factors.len() % 2 == 0 {
            1
        } else {
            -1
        }
    } else {
        0
    }
}

/// Euler's totient of a positive integer.
///
/// Panics on `n = 0`.
pub fn phi(n: u64) -> u64 {
    euler_phi(&factorize(n).expect("phi of zero"))
}

/// Möbius function of a positive integer.
///
/// Panics on `n = 0`.
pub fn mu(n: u64) -> i8 {
    moebius(&factorize(n).expect("mu of zero"))
}

/// All positive divisors of `n` in increasing order; empty for `n = 0`.
pub fn divisors(n: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1u64;
    while d.saturating_mul(d) <= n {
        if n % d == 0 {
            small.push(d);
            if d != n / d {
                large.push(n / d);
            }
        }
        d += 1;
    }
    small.extend(large.into_iter().rev());
    small
}

#[cfg(test)]
mod tests {
    use super::*;

    fn is_prime_brute(p: u64) -> bool {
        p >= 2 && (2..p).all(|d| p % d != 0)
    }

    #[test]
    fn factorize_examples() {
        assert!(factorize(1).unwrap().factors().is_empty());
        assert_eq!(factorize(27).unwrap().factors(), &[(3, 3)]);
        assert_eq!(factorize(675).unwrap().factors(), &[(3, 3), (5, 2)]);
        assert!(factorize(0).is_err());
    }

    #[test]
    fn factorization_invariants() {
        for n in 1..3000u64 {
            let f = factorize(n).unwrap();
            let prod: u64 = f.prime_powers().map(|(_, _, q)| q).product();
            assert_eq!(prod, n);
            for w in f.factors().windows(2) {
                assert!(w[0].0 < w[1].0);
            }
            for &(p, e) in f.factors() {
                assert!(e >= 1 && is_prime_brute(p), "{n}: {p}");
            }
        }
    }

    #[test]
    fn phi_counts_units() {
        assert_eq!(phi(1), 1);
        assert_eq!(phi(9), 6);
        assert_eq!(phi(675), 360);
        for n in 1..300u64 {
            let units = (1..=n).filter(|&j| num_integer::gcd(j, n) == 1).count() as u64;
            assert_eq!(phi(n), units, "n={n}");
        }
    }

    #[test]
    fn moebius_values() {
        assert_eq!(mu(1), 1);
        assert_eq!(mu(6), 1);
        assert_eq!(mu(9), 0);
        assert_eq!(mu(30), -1);
    }

    #[test]
    fn divisors_sorted() {
        assert_eq!(divisors(12), vec![1, 2, 3, 4, 6, 12]);
        assert_eq!(divisors(1), vec![1]);
        assert_eq!(divisors(49), vec![1, 7, 49]);
    }
}
