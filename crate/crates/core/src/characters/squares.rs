use std::collections::BTreeSet;

use num_complex::Complex64;

use super::gauss::gauss_sum_real_prime_power;
use crate::arith::{factorize, legendre, mod_pow, ramanujan_sum, root_of_unity, ComplexVal};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareProfile {
    pub n: u64,
    /// Residues in `[0, n)` that are squares modulo `n`.
    pub square_set: BTreeSet<u64>,
    /// Number of squares.
    pub s: u64,
    /// Number of unit squares (quadratic residues).
    pub q: u64,
}

impl SquareProfile {
    pub fn contains(&self, x: u64) -> bool {
        self.square_set.contains(&(x % self.n))
    }
}

/// Enumerates `x² mod n` for `x` in `[0, n)`.
pub fn square_profile(n: u64) -> SquareProfile {
    assert!(n >= 1, "modulus must be positive");
    let square_set: BTreeSet<u64> = (0..n)
        .map(|x| ((x as u128 * x as u128) % n as u128) as u64)
        .collect();
    let q = square_set
        .iter()
        .filter(|&&x| num_integer::gcd(x, n) == 1)
        .count() as u64;
    SquareProfile {
        n,
        s: square_set.len() as u64,
        q,
        square_set,
    }
}

fn qr_prime_power(p: u64, r: u32) -> u64 {
    match (p, r) {
        (_, 0) => 1,
        (2, 1) | (2, 2) => 1,
        (2, _) => 1 << (r - 3),
        _ => p.pow(r - 1) * (p - 1) / 2,
    }
}

fn squares_prime_power(p: u64, r: u32) -> u64 {
    match r {
        0 => 1,
        1 => qr_prime_power(p, 1) + 1,
        _ => qr_prime_power(p, r) + squares_prime_power(p, r - 2),
    }
}

/// Number of quadratic residues modulo `n`, from the prime-power values and
/// multiplicativity.
pub fn count_qr(n: u64) -> u64 {
    factorize(n)
        .expect("modulus must be positive")
        .factors()
        .iter()
        .map(|&(p, e)| qr_prime_power(p, e))
        .product()
}

/// Number of squares modulo `n`, using `s(p^r) = q(p^r) + s(p^{r-2})` at
/// each prime power and multiplicativity across them.
pub fn count_squares(n: u64) -> u64 {
    factorize(n)
        .expect("modulus must be positive")
        .factors()
        .iter()
        .map(|&(p, e)| squares_prime_power(p, e))
        .product()
}

/// A square root of the unit `u` modulo the odd prime `p` (Tonelli–Shanks).
fn sqrt_mod_prime(u: u64, p: u64) -> Option<u64> {
    let u = u % p;
    if u == 0 {
        return Some(0);
    }
    if legendre(u as i64, p) != 1 {
        return None;
    }
    if p % 4 == 3 {
        return Some(mod_pow(u, (p + 1) / 4, p));
    }
    let mut q = p - 1;
    let mut s = 0u32;
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| legendre(z as i64, p) == -1)?;
    let mulmod = |a: u64, b: u64| ((a as u128 * b as u128) % p as u128) as u64;
    let mut m = s;
    let mut c = mod_pow(z, q, p);
    let mut t = mod_pow(u, q, p);
    let mut r = mod_pow(u, (q + 1) / 2, p);
    while t != 1 {
        let mut i = 0;
        let mut t2 = t;
        while t2 != 1 {
            t2 = mulmod(t2, t2);
            i += 1;
        }
        let b = mod_pow(c, 1 << (m - i - 1), p);
        m = i;
        c = mulmod(b, b);
        t = mulmod(t, c);
        r = mulmod(r, b);
    }
    Some(r)
}

fn mod_inverse(a: u64, m: u64) -> u64 {
    let (mut old_r, mut r) = (a as i128, m as i128);
    let (mut old_s, mut s) = (1i128, 0i128);
    while r != 0 {
        let q = old_r / r;
        (old_r, r) = (r, old_r - q * r);
        (old_s, s) = (s, old_s - q * s);
    }
    debug_assert_eq!(old_r, 1, "{a} is not invertible modulo {m}");
    old_s.rem_euclid(m as i128) as u64
}

/// Lifts a unit root `y` of `y² ≡ u (mod p)` to a root modulo `p^ell`.
fn hensel_lift(mut y: u64, u: u64, p: u64, ell: u32) -> u64 {
    let mut modulus = p;
    for _ in 1..ell {
        modulus *= p;
        let m = modulus as i128;
        let f = (y as i128 * y as i128 - u as i128).rem_euclid(m);
        let inv = mod_inverse((2 * y) % modulus, modulus) as i128;
        y = (y as i128 - f * inv).rem_euclid(m) as u64;
    }
    y
}

/// All `y` in `[0, p^ell)` with `y² ≡ a (mod p^ell)`, for an odd prime `p`.
pub fn sqrt_mod_prime_power(a: i64, p: u64, ell: u32) -> BTreeSet<u64> {
    assert!(p % 2 == 1 && ell >= 1, "odd prime and positive exponent required");
    let q = p.pow(ell);
    let a = a.rem_euclid(q as i64) as u64;
    let mut roots = BTreeSet::new();
    if a == 0 {
        // y² ≡ 0 iff p^ceil(ell/2) | y.
        let step = p.pow(ell.div_ceil(2));
        roots.extend((0..q).step_by(step as usize));
        return roots;
    }
    let mut v = 0u32;
    let mut u = a;
    while u % p == 0 {
        u /= p;
        v += 1;
    }
    if v % 2 == 1 {
        return roots;
    }
    let half = v / 2;
    let reduced_exp = ell - v;
    let reduced_mod = p.pow(reduced_exp);
    let Some(w) = sqrt_mod_prime(u % p, p) else {
        return roots;
    };
    let w = hensel_lift(w, u % reduced_mod, p, reduced_exp);
    let scale = p.pow(half);
    let stride = p.pow(ell - half);
    for base in [w, reduced_mod - w] {
        for t in 0..scale {
            roots.insert((scale * base + t * stride) % q);
        }
    }
    roots
}

/// `1` if `b` is a square modulo `n`, else `0`.
pub fn square_indicator(n: u64, b: i64) -> u8 {
    assert!(n >= 1, "modulus must be positive");
    let r = b.rem_euclid(n as i64) as u64;
    if n % 2 == 0 {
        let hit = (0..n).any(|y| ((y as u128 * y as u128) % n as u128) as u64 == r);
        return hit as u8;
    }
    let f = factorize(n).expect("positive");
    f.factors()
        .iter()
        .all(|&(p, e)| !sqrt_mod_prime_power(r as i64, p, e).is_empty()) as u8
}

/// Both sides of the square-indicator decomposition modulo `p^ell`:
///
/// `Σ_{x=1}^{p^ℓ} □(x) e(xm/p^ℓ)` against
/// `1 + ½ Σ_{j even, j<ℓ} (C_{p^{ℓ-j}}(m) + τ_m(χ_{p^{ℓ-j}}))`.
pub fn square_decomposition_identity(p: u64, ell: u32, m: i64) -> (ComplexVal, ComplexVal) {
    let q = p.pow(ell);
    let m_red = m.rem_euclid(q as i64) as u128;
    let lhs: ComplexVal = (1..=q)
        .filter(|&x| square_indicator(q, x as i64) == 1)
        .map(|x| root_of_unity(((x as u128 * m_red) % q as u128) as i64, q))
        .sum();
    let mut rhs = Complex64::new(1.0, 0.0);
    for j in (0..ell).step_by(2) {
        let level = ell - j;
        let ramanujan = ramanujan_sum(p.pow(level), m) as f64;
        rhs += (gauss_sum_real_prime_power(p, level, m) + ramanujan) * 0.5;
    }
    (lhs, rhs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn brute_roots(a: i64, q: u64) -> BTreeSet<u64> {
        let a = a.rem_euclid(q as i64) as u64;
        (0..q).filter(|&y| y * y % q == a).collect()
    }

    #[test]
    fn sqrt_examples() {
        assert_eq!(sqrt_mod_prime_power(1, 3, 3), [1, 26].into_iter().collect());
        assert_eq!(
            sqrt_mod_prime_power(9, 3, 3),
            [3, 6, 12, 15, 21, 24].into_iter().collect()
        );
        assert_eq!(sqrt_mod_prime_power(0, 3, 3), [0, 9, 18].into_iter().collect());
        assert!(sqrt_mod_prime_power(2, 3, 2).is_empty());
        assert!(sqrt_mod_prime_power(3, 3, 2).is_empty());
    }

    #[test]
    fn sqrt_matches_exhaustive_scan() {
        for p in [3u64, 5, 7, 11, 13, 17] {
            for ell in 1..=5u32 {
                let q = p.pow(ell);
                if q > 343 {
                    break;
                }
                for a in 0..q as i64 {
                    assert_eq!(sqrt_mod_prime_power(a, p, ell), brute_roots(a, q), "{a} mod {p}^{ell}");
                }
            }
        }
    }

    #[test]
    fn tonelli_shanks_on_1_mod_8_primes() {
        for p in [17u64, 41, 73, 97, 113, 193, 257] {
            for u in 1..p {
                match sqrt_mod_prime(u, p) {
                    Some(r) => assert_eq!(r * r % p, u),
                    None => assert_eq!(legendre(u as i64, p), -1),
                }
            }
        }
    }

    #[test]
    fn indicator_examples() {
        let squares9: Vec<u64> = (0..9).filter(|&b| square_indicator(9, b as i64) == 1).collect();
        assert_eq!(squares9, vec![0, 1, 4, 7]);
        for n in 1..60 {
            assert_eq!(square_indicator(n, 0), 1);
            let profile = square_profile(n);
            for b in 0..n {
                assert_eq!(square_indicator(n, b as i64) == 1, profile.contains(b), "{b} mod {n}");
            }
        }
    }

    #[test]
    fn profile_examples() {
        assert_eq!(square_profile(3).s, 2);
        let p9 = square_profile(9);
        assert_eq!(p9.s, 4);
        assert_eq!(p9.square_set, [0, 1, 4, 7].into_iter().collect());
        assert_eq!(square_profile(27).s, 11);
    }

    #[test]
    fn counts_match_enumeration() {
        for n in 1..=400u64 {
            let profile = square_profile(n);
            assert_eq!(count_squares(n), profile.s, "s({n})");
            assert_eq!(count_qr(n), profile.q, "q({n})");
        }
    }

    #[test]
    fn counts_are_multiplicative() {
        for n1 in 1..=50u64 {
            for n2 in 1..=50u64 {
                if num_integer::gcd(n1, n2) != 1 {
                    continue;
                }
                let (a, b, ab) = (square_profile(n1), square_profile(n2), square_profile(n1 * n2));
                assert_eq!(ab.s, a.s * b.s);
                assert_eq!(ab.q, a.q * b.q);
            }
        }
    }

    #[test]
    fn square_recursion() {
        for p in [3u64, 5, 7] {
            for r in 3..=5u32 {
                let lhs = square_profile(p.pow(r)).s;
                let rhs = square_profile(p.pow(r)).q + square_profile(p.pow(r - 2)).s;
                assert_eq!(lhs, rhs);
            }
            assert_eq!(square_profile(p).s, (p + 1) / 2);
            assert_eq!(square_profile(p * p).s, (p * p - p + 2) / 2);
        }
    }

    #[test]
    fn decomposition_identity_examples() {
        let (l, r) = square_decomposition_identity(3, 1, 0);
        assert!((l - Complex64::new(2.0, 0.0)).norm() < 1e-9);
        assert!((r - Complex64::new(2.0, 0.0)).norm() < 1e-9);
        for (p, ell, m) in [(3, 3, 1), (5, 2, 5)] {
            let (l, r) = square_decomposition_identity(p, ell, m);
            assert!((l - r).norm() < 1e-6);
        }
    }

    #[test]
    fn decomposition_identity_grid() {
        for p in [3u64, 5, 7] {
            for ell in 1..=3u32 {
                for m in 0..p.pow(ell) as i64 {
                    let (l, r) = square_decomposition_identity(p, ell, m);
                    assert!((l - r).norm() < 1e-6, "p={p} ell={ell} m={m}: {l} vs {r}");
                }
            }
        }
    }
}
