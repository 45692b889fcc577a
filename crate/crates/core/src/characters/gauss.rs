use num_complex::Complex64;

use super::character::{CharacterKind, DirichletCharacter};
use crate::arith::{epsilon, factorize, legendre, moebius, phi, root_of_unity, ComplexVal};
use crate::error::{domain, Result};

/// `τ_m(χ) = Σ_{x=1}^{n} χ(x) e(mx/n)` summed term by term.
pub fn gauss_sum_direct(chi: &DirichletCharacter, m: i64) -> ComplexVal {
    let n = chi.modulus();
    let m = m.rem_euclid(n as i64) as u128;
    (1..=n)
        .filter_map(|x| match chi.eval(x as i64) {
            0 => None,
            c => Some(root_of_unity(((m * x as u128) % n as u128) as i64, n) * c as f64),
        })
        .sum()
}

/// `τ(χ) = ε_n √n` for the real primitive character of an odd squarefree
/// modulus.
pub fn gauss_sum_real_primitive(n: u64) -> Result<ComplexVal> {
    if n % 2 == 0 {
        return domain(format!("real primitive Gauss sum needs an odd modulus, got {n}"));
    }
    if !factorize(n)?.is_squarefree() {
        return domain(format!("{n} is not squarefree"));
    }
    Ok(epsilon(n)? * (n as f64).sqrt())
}

/// Closed form of `τ_m(χ)` for a non-principal character induced by the
/// primitive character `χ*` of conductor `n*`.
///
/// With `r = n / gcd(m, n)`: zero unless `n* | r`, otherwise
/// `χ*(m/gcd(m,n)) μ(r/n*) χ*(r/n*) φ(n)/φ(r) τ(χ*)`.
pub fn gauss_sum_closed(chi: &DirichletCharacter, m: i64) -> Result<ComplexVal> {
    let CharacterKind::RealInducedByLegendre { p } = chi.kind() else {
        return domain("closed-form Gauss sum is for non-principal characters; use ramanujan_sum");
    };
    let n = chi.modulus();
    let m = m.rem_euclid(n as i64) as u64;
    let g = num_integer::gcd(m, n);
    let r = n / g;
    if r % p != 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let sign = legendre((m / g) as i64, p) as i64
        * moebius(&factorize(r / p)?) as i64
        * legendre((r / p) as i64, p) as i64;
    if sign == 0 {
        return Ok(Complex64::new(0.0, 0.0));
    }
    let scale = (phi(n) / phi(r)) as f64;
    Ok(gauss_sum_real_primitive(p)? * (sign as f64 * scale))
}

/// Gauss sum of the character modulo `p^ell` induced by `(·/p)`:
/// `ε_p ((m/p^(ell-1))/p) p^(ell-1/2)` when `gcd(m, p^ell) = p^(ell-1)`, else 0.
///
/// Panics if `p` is even.
pub fn gauss_sum_real_prime_power(p: u64, ell: u32, m: i64) -> ComplexVal {
    assert!(ell >= 1, "exponent must be positive");
    let q = p.pow(ell);
    let lower = p.pow(ell - 1);
    let m = m.rem_euclid(q as i64) as u64;
    if num_integer::gcd(m, q) != lower {
        return Complex64::new(0.0, 0.0);
    }
    let symbol = legendre((m / lower) as i64, p) as f64;
    let eps = epsilon(p).expect("p must be odd");
    eps * (symbol * (p as f64).powf(ell as f64 - 0.5))
}
