use num_complex::Complex64;
use num_traits::ToPrimitive;

use crate::arith::{binomial, root_of_unity, ComplexVal};

/// Expands `∏_{j=1}^{n} (1 - z e(jam/n))` and `(1 - z^{n/d})^d` with
/// `d = gcd(am, n)` as dense polynomials in `z` and returns the largest
/// coefficient-wise difference.
pub fn product_identity_check(n: u64, a: i64, m: i64) -> f64 {
    assert!(n >= 1, "modulus must be positive");
    let am = (a.rem_euclid(n as i64) as u128 * m.rem_euclid(n as i64) as u128) % n as u128;
    let len = n as usize + 1;

    let mut lhs = vec![Complex64::new(0.0, 0.0); len];
    lhs[0] = Complex64::new(1.0, 0.0);
    for j in 1..=n {
        let w = root_of_unity(((j as u128 * am) % n as u128) as i64, n);
        // multiply by (1 - w z), highest degree first
        for deg in (1..=j as usize).rev() {
            let prev = lhs[deg - 1];
            lhs[deg] -= w * prev;
        }
    }

    let d = num_integer::gcd(am as u64, n);
    let step = (n / d) as usize;
    let mut rhs: Vec<ComplexVal> = vec![Complex64::new(0.0, 0.0); len];
    for i in 0..=d {
        let c = binomial(d, i).to_f64().unwrap_or(f64::INFINITY);
        let sign = if i % 2 == 0 { 1.0 } else { -1.0 };
        rhs[i as usize * step] = Complex64::new(sign * c, 0.0);
    }

    lhs.iter()
        .zip(&rhs)
        .map(|(l, r)| (l - r).norm())
        .fold(0.0, f64::max)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(product_identity_check(4, 1, 0) < 1e-12);
        assert!(product_identity_check(6, 2, 3) < 1e-9);
        assert!(product_identity_check(5, 1, 1) < 1e-9);
    }

    #[test]
    fn identity_grid() {
        for n in 1..=12u64 {
            for a in 0..n as i64 {
                for m in 0..n as i64 {
                    let diff = product_identity_check(n, a, m);
                    assert!(diff < 1e-6, "n={n} a={a} m={m}: {diff}");
                }
            }
        }
    }
}
