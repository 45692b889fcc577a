use num_complex::Complex64;

use super::factor::{euler_phi, factorize, moebius};
use super::symbols::root_of_unity;
use crate::error::{Error, Result};

pub(crate) const ROUNDING_TOLERANCE: f64 = 1e-6;

/// Rounds a complex value that is known to be an integer.
///
/// Returns the integer and the relative residual; a residual at or above
/// `1e-6` is an internal-consistency error.
pub(crate) fn round_complex(z: Complex64, context: &str) -> Result<(i128, f64)> {
    let scale = z.re.abs().max(1.0);
    let rounded = z.re.round();
    let residual = (z.im.abs().max((z.re - rounded).abs())) / scale;
    if residual.is_nan() || residual >= ROUNDING_TOLERANCE {
        return Err(Error::InternalConsistency {
            context: context.to_string(),
            residual,
        });
    }
    Ok((rounded as i128, residual))
}

/// `C_n(b)` by summing `e(jb/n)` over the units `j` modulo `n`.
pub fn ramanujan_sum_direct(n: u64, b: i64) -> Result<i64> {
    ramanujan_sum_direct_with_residual(n, b).map(|(v, _)| v)
}

pub fn ramanujan_sum_direct_with_residual(n: u64, b: i64) -> Result<(i64, f64)> {
    assert!(n >= 1, "Ramanujan sum with zero modulus");
    let b = b.rem_euclid(n as i64) as u64;
    let total: Complex64 = (1..=n)
        .filter(|&j| num_integer::gcd(j, n) == 1)
        .map(|j| root_of_unity(((j as u128 * b as u128) % n as u128) as i64, n))
        .sum();
    let (v, residual) = round_complex(total, &format!("direct Ramanujan sum C_{n}({b})"))?;
    Ok((v as i64, residual))
}

/// `C_n(b)` via Hölder's closed form `φ(n) μ(n/g) / φ(n/g)` with `g = gcd(b, n)`.
pub fn ramanujan_sum(n: u64, b: i64) -> i64 {
    assert!(n >= 1, "Ramanujan sum with zero modulus");
    let g = num_integer::gcd(b.rem_euclid(n as i64) as u64, n);
    let quotient = factorize(n / g).expect("nonzero");
    let mu = moebius(&quotient);
    if mu == 0 {
        return 0;
    }
    let ratio = euler_phi(&factorize(n).expect("nonzero")) / euler_phi(&quotient);
    mu as i64 * ratio as i64
}
