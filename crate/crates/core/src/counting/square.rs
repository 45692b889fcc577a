use num_bigint::BigUint;
use num_complex::Complex64;
use num_traits::{One, Zero};

use super::types::{CongruenceSpec, CountResult, Method};
use crate::arith::{
    binomial, epsilon, factorize, gcd, legendre, phi, ramanujan_sum, reduce, root_of_unity,
    round_complex,
};
use crate::characters::{gauss_sum_real_prime_power, square_indicator};
use crate::error::{domain, Error, Result};
use crate::oracle::{oracle_count, oracle_find, OracleBudget, Restriction};

/// `T(y) = Σ_{j even, j<ℓ} [C_{p^{ℓ-j}}(y) + G_{p^{ℓ-j}}(y)]`, so that
/// `Σ_{x square} e(xy/p^ℓ) = 1 + T(y)/2`.
fn t_table(p: u64, ell: u32) -> Vec<Complex64> {
    let q = p.pow(ell);
    (0..q)
        .map(|y| {
            (0..ell)
                .step_by(2)
                .map(|j| {
                    let r = ell - j;
                    Complex64::new(ramanujan_sum(p.pow(r), y as i64) as f64, 0.0)
                        + gauss_sum_real_prime_power(p, r, y as i64)
                })
                .sum()
        })
        .collect()
}

/// Square-solution count modulo one odd prime power, with its residual.
fn prime_power_count(p: u64, ell: u32, coeffs: &[u64], b: u64) -> Result<(u64, f64)> {
    let q = p.pow(ell);
    let t = t_table(p, ell);
    let b = b % q;
    // Σ over nonempty K of 2^{-|K|} ∏_{i∈K} t_i  =  ∏ (1 + t_i/2) − 1
    let mut total = Complex64::new(if b == 0 { q as f64 } else { 0.0 }, 0.0);
    for m in 1..=q {
        let subset_sum = coeffs
            .iter()
            .map(|&a| 1.0 + t[((a as u128 * m as u128) % q as u128) as usize] / 2.0)
            .product::<Complex64>()
            - 1.0;
        total += root_of_unity(-(((b as u128 * m as u128) % q as u128) as i64), q) * subset_sum;
    }
    let context = format!("square count modulo {p}^{ell}");
    let (v, residual) = round_complex(total / q as f64, &context)?;
    if v < 0 {
        return Err(Error::InternalConsistency { context, residual: 1.0 });
    }
    Ok((v as u64, residual))
}

/// Number of solutions with every `xᵢ` a square modulo `n`.
///
/// Odd `n` uses the Gauss-sum formula per prime power and multiplies the
/// factors. Even `n` is counted by enumeration and tagged
/// [`Method::OracleFallback`].
///
/// ```
/// use lincong::counting::{square_count, CongruenceSpec};
/// let spec = CongruenceSpec::new(9, &[1, 1], 2).unwrap();
/// assert_eq!(square_count(&spec).unwrap().count, 3u32.into());
/// ```
pub fn square_count(spec: &CongruenceSpec) -> Result<CountResult> {
    let n = spec.n();
    if n % 2 == 0 {
        let count = oracle_count(spec, &Restriction::Square, &mut OracleBudget::default())?;
        return Ok(CountResult {
            count: count.into(),
            method: Method::OracleFallback,
            residual: 0.0,
        });
    }
    let mut count = BigUint::one();
    let mut worst = 0.0f64;
    for (p, ell, _) in factorize(n)?.prime_powers() {
        let (factor, residual) = prime_power_count(p, ell, spec.coeffs(), spec.b())?;
        count *= factor;
        worst = worst.max(residual);
    }
    Ok(CountResult {
        count,
        method: Method::Formula,
        residual: worst,
    })
}

/// Square-solution count modulo `p^ell` for unit coefficients and a unit
/// target, grouping subsets by how many coefficients are residues and how
/// many are non-residues.
pub fn square_count_corollary(p: u64, ell: u32, spec: &CongruenceSpec) -> Result<CountResult> {
    if ell == 0 || p < 3 || !factorize(p)?.is_prime() {
        return domain(format!("p={p} must be an odd prime and ell={ell} positive"));
    }
    let q = p
        .checked_pow(ell)
        .ok_or_else(|| Error::Domain(format!("{p}^{ell} overflows")))?;
    if spec.n() != q {
        return domain(format!("modulus {} is not {p}^{ell}", spec.n()));
    }
    if spec.b() % p == 0 {
        return domain(format!("target {} is not a unit modulo {q}", spec.b()));
    }
    let mut residues = 0u64;
    let mut non_residues = 0u64;
    for &a in spec.coeffs() {
        match legendre(a as i64, p) {
            1 => residues += 1,
            -1 => non_residues += 1,
            _ => return domain(format!("coefficient {a} is not a unit modulo {q}")),
        }
    }

    let big_a: u64 = (0..ell).step_by(2).map(|j| phi(p.pow(ell - j))).sum();
    let b0 = -(p.pow(ell - 1) as f64)
        + (2..ell).step_by(2).map(|j| phi(p.pow(ell - j)) as f64).sum::<f64>();
    let eps = epsilon(p)?;
    let scale = (p as f64).powf(ell as f64 - 0.5);
    let b = spec.b() as i64;
    let s_uv = |u: u64, v: u64| -> Complex64 {
        let mut s = Complex64::new((big_a as f64).powi((u + v) as i32), 0.0);
        for m in 1..p {
            let sign = legendre(m as i64, p) as f64;
            let plus = b0 + eps * (sign * scale);
            let minus = b0 - eps * (sign * scale);
            s += root_of_unity(-(b * m as i64).rem_euclid(p as i64), p)
                * plus.powi(u as i32)
                * minus.powi(v as i32);
        }
        s
    };

    let mut total = Complex64::zero();
    for u in 0..=residues {
        for v in 0..=non_residues {
            if u + v == 0 {
                continue;
            }
            let weight = big_to_f64(&(binomial(residues, u) * binomial(non_residues, v)))
                / 2f64.powi((u + v) as i32);
            total += s_uv(u, v) * weight;
        }
    }
    let (v, residual) = round_complex(total / q as f64, &format!("square corollary modulo {q}"))?;
    Ok(CountResult {
        count: BigUint::from(v.max(0) as u128),
        method: Method::CorollaryFastPath,
        residual,
    })
}

fn big_to_f64(x: &BigUint) -> f64 {
    x.to_string().parse().expect("decimal digits")
}

/// Which step produced the solution modulo one prime power.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExistenceMethod {
    /// `b ≡ 0`, so the zero tuple works.
    ZeroTarget,
    /// A subset sum `s` is a unit with `(s/p) = (b/p)`; set its variables
    /// to `s⁻¹b`.
    SubsetCriterion,
    /// All coefficients are 1 and Hull's bound on `k` applies; the witness
    /// comes from a search over two or three variables.
    HullCriterion,
    /// Exhaustive search modulo the prime power.
    OracleSearch,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareExistence {
    pub exists: bool,
    /// A verified square solution modulo `n` when one exists.
    pub witness: Option<Vec<u64>>,
    /// `(p^ℓ, method)` for each prime power handled before stopping.
    pub steps: Vec<(u64, ExistenceMethod)>,
}

fn hull_applies(p: u64, ell: u32, spec: &CongruenceSpec) -> bool {
    let q = p.pow(ell);
    let k = spec.k();
    spec.coeffs().iter().all(|&a| a % q == 1) && if spec.b() % p == 0 { k >= 3 } else { k >= 2 }
}

/// Hull's sufficient condition for `x₁ + ⋯ + x_k ≡ b` with odd `n`: at each
/// prime power, `k ≥ 2` when `p ∤ b` and `k ≥ 3` when `p | b`.
pub fn hull_guarantees_square_solution(spec: &CongruenceSpec) -> Result<bool> {
    let n = spec.n();
    if n % 2 == 0 {
        return domain(format!("modulus {n} must be odd"));
    }
    Ok(factorize(n)?
        .prime_powers()
        .all(|(p, ell, _)| hull_applies(p, ell, spec)))
}

fn subset_witness(p: u64, q: u64, coeffs: &[u64], b: u64) -> Option<Vec<u64>> {
    let k = coeffs.len();
    if b % p == 0 || k > 20 {
        return None;
    }
    let target = legendre(b as i64, p);
    for mask in 1u32..(1 << k) {
        let s = (0..k)
            .filter(|i| mask >> i & 1 == 1)
            .fold(0u64, |acc, i| (acc + coeffs[i]) % q);
        if s % p != 0 && legendre(s as i64, p) == target {
            let x = (inverse_mod(s, q) as u128 * b as u128 % q as u128) as u64;
            return Some((0..k).map(|i| if mask >> i & 1 == 1 { x } else { 0 }).collect());
        }
    }
    None
}

fn inverse_mod(a: u64, m: u64) -> u64 {
    let e = num_integer::Integer::extended_gcd(&(a as i128), &(m as i128));
    e.x.rem_euclid(m as i128) as u64
}

fn crt_pair(r1: u64, m1: u64, r2: u64, m2: u64) -> u64 {
    // x = r1 + m1 * ((r2 - r1) * m1⁻¹ mod m2)
    let inv = inverse_mod(m1 % m2, m2) as i128;
    let diff = (r2 as i128 - r1 as i128).rem_euclid(m2 as i128);
    let t = diff * inv % m2 as i128;
    (r1 as i128 + m1 as i128 * t) as u64
}

/// Decides whether a square solution exists modulo odd `n`, returning a
/// witness that has been checked by substitution.
///
/// Each prime power tries the zero target, the subset criterion and Hull's
/// criterion before an exhaustive search. The local witnesses are joined
/// by the Chinese remainder theorem.
pub fn square_solution_exists(spec: &CongruenceSpec) -> Result<SquareExistence> {
    let n = spec.n();
    if n % 2 == 0 {
        return domain(format!("modulus {n} must be odd"));
    }
    let k = spec.k();
    let mut witness = vec![0u64; k];
    let mut modulus = 1u64;
    let mut steps = Vec::new();
    for (p, ell, q) in factorize(n)?.prime_powers() {
        let local = spec.reduced_mod(q);
        let b = local.b();
        let (method, found) = if b == 0 {
            (ExistenceMethod::ZeroTarget, Some(vec![0; k]))
        } else if let Some(w) = subset_witness(p, q, local.coeffs(), b) {
            (ExistenceMethod::SubsetCriterion, Some(w))
        } else if hull_applies(p, ell, &local) {
            let vars = if b % p == 0 { 3 } else { 2 };
            let head = CongruenceSpec::new(q, &vec![1; vars], b as i64)?;
            let w = oracle_find(&head, &Restriction::Square, &mut OracleBudget::default())?
                .map(|mut w| {
                    w.resize(k, 0);
                    w
                });
            (ExistenceMethod::HullCriterion, w)
        } else {
            let w = oracle_find(&local, &Restriction::Square, &mut OracleBudget::default())?;
            (ExistenceMethod::OracleSearch, w)
        };
        steps.push((q, method));
        let Some(local_witness) = found else {
            return Ok(SquareExistence { exists: false, witness: None, steps });
        };
        for (x, r) in witness.iter_mut().zip(local_witness) {
            *x = crt_pair(*x, modulus, r, q);
        }
        modulus *= q;
    }

    let sum = spec
        .coeffs()
        .iter()
        .zip(&witness)
        .fold(0u128, |acc, (&a, &x)| (acc + a as u128 * x as u128) % n as u128);
    let squares = witness.iter().all(|&x| square_indicator(n, x as i64) == 1);
    if sum as u64 != reduce(spec.b() as i64, n) || !squares {
        return Err(Error::InternalConsistency {
            context: format!("square witness {witness:?} fails for n={n}"),
            residual: 1.0,
        });
    }
    debug_assert_eq!(gcd(modulus, n), n);
    Ok(SquareExistence { exists: true, witness: Some(witness), steps })
}
