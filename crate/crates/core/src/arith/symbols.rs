use num_complex::Complex64;

use crate::error::{domain, Result};

/// Complex values for exponentials, Gauss sums and the Gauss-sum sign.
pub type ComplexVal = Complex64;

pub(crate) fn mod_pow(base: u64, mut exp: u64, m: u64) -> u64 {
    let m128 = m as u128;
    let mut acc = 1u128 % m128;
    let mut b = base as u128 % m128;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = acc * b % m128;
        }
        b = b * b % m128;
        exp >>= 1;
    }
    acc as u64
}

/// Jacobi symbol `(a/n)` for odd positive `n`, via quadratic reciprocity.
pub fn jacobi_symbol(a: i64, n: u64) -> Result<i8> {
    if n % 2 == 0 {
        return domain(format!("Jacobi symbol needs an odd modulus, got {n}"));
    }
    Ok(jacobi_odd(a.rem_euclid(n as i64) as u64, n))
}

pub(crate) fn jacobi_odd(mut a: u64, mut n: u64) -> i8 {
    debug_assert!(n % 2 == 1);
    a %= n;
    let mut sign = 1i8;
    while a != 0 {
        while a % 2 == 0 {
            a /= 2;
            if n % 8 == 3 || n % 8 == 5 {
                sign = -sign;
            }
        }
        std::mem::swap(&mut a, &mut n);
        if a % 4 == 3 && n % 4 == 3 {
            sign = -sign;
        }
        a %= n;
    }
    if n == 1 {
        sign
    } else {
        0
    }
}

/// Legendre symbol for an odd prime `p`.
pub fn legendre(a: i64, p: u64) -> i8 {
    jacobi_odd(a.rem_euclid(p as i64) as u64, p)
}

/// Sign of the quadratic Gauss sum: `1` for `n ≡ 1 (mod 4)`, `i` for `n ≡ 3 (mod 4)`.
pub fn epsilon(n: u64) -> Result<ComplexVal> {
    if n % 2 == 0 {
        return domain(format!("epsilon needs an odd argument, got {n}"));
    }
    let value = if n % 4 == 1 {
        Complex64::new(1.0, 0.0)
    } else {
        Complex64::new(0.0, 1.0)
    };
    if cfg!(feature = "flip-epsilon-sign") {
        Ok(-value)
    } else {
        Ok(value)
    }
}

/// `e(num/den) = exp(2πi·num/den)`, with the angle reduced exactly before
/// conversion to floating point.
pub fn root_of_unity(num: i64, den: u64) -> ComplexVal {
    assert!(den >= 1, "root_of_unity with zero denominator");
    let r = (num as i128).rem_euclid(den as i128) as u64;
    if r == 0 {
        return Complex64::new(1.0, 0.0);
    }
    // Exact values at the quarter points keep the common cases free of
    // rounding noise.
    if 4 * r == den {
        return Complex64::new(0.0, 1.0);
    }
    if 2 * r == den {
        return Complex64::new(-1.0, 0.0);
    }
    if 4 * r == 3 * den {
        return Complex64::new(0.0, -1.0);
    }
    let angle = std::f64::consts::TAU * (r as f64) / (den as f64);
    Complex64::new(angle.cos(), angle.sin())
}
