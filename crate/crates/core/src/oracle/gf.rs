use num_bigint::{BigInt, BigUint};
use num_traits::{Signed, Zero};

use crate::arith::reduce;
use crate::counting::BlockSpec;

/// Polynomials in `z` and `q` with `q`-exponents taken mod `n` and
/// `z`-degree truncated at `z_degree_cap`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CyclicPoly {
    n: u64,
    z_degree_cap: usize,
    coeffs: Vec<Vec<BigInt>>,
}

impl CyclicPoly {
    /// The constant polynomial 1.
    pub fn one(n: u64, z_degree_cap: usize) -> Self {
        assert!(n > 0, "modulus must be positive");
        let mut coeffs = vec![vec![BigInt::zero(); n as usize]; z_degree_cap + 1];
        coeffs[0][0] = BigInt::from(1);
        Self { n, z_degree_cap, coeffs }
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn z_degree_cap(&self) -> usize {
        self.z_degree_cap
    }

    /// Coefficient of `z^d q^e`.
    pub fn coeff(&self, d: usize, e: i64) -> &BigInt {
        &self.coeffs[d][reduce(e, self.n) as usize]
    }

    /// The `z^d` slice as a vector over `q`-exponents.
    pub fn z_slice(&self, d: usize) -> &[BigInt] {
        &self.coeffs[d]
    }

    fn shift(&self, e: usize, a: u64) -> usize {
        let n = self.n as usize;
        (e + n - a as usize % n) % n
    }

    /// Multiply in place by `1 - z q^a`.
    pub fn mul_one_minus(&mut self, a: u64) {
        for d in (1..=self.z_degree_cap).rev() {
            for e in 0..self.n as usize {
                let src = self.shift(e, a);
                let t = self.coeffs[d - 1][src].clone();
                self.coeffs[d][e] -= t;
            }
        }
    }

    /// Multiply in place by `1 / (1 - z q^a) = Σ zʲ q^{ja}`.
    pub fn div_one_minus(&mut self, a: u64) {
        for d in 1..=self.z_degree_cap {
            for e in 0..self.n as usize {
                let src = self.shift(e, a);
                let t = self.coeffs[d - 1][src].clone();
                self.coeffs[d][e] += t;
            }
        }
    }

    /// Truncated product of two polynomials over the same modulus.
    pub fn mul(&self, other: &CyclicPoly) -> CyclicPoly {
        assert_eq!(self.n, other.n, "moduli differ");
        let cap = self.z_degree_cap.min(other.z_degree_cap);
        let n = self.n as usize;
        let mut out = vec![vec![BigInt::zero(); n]; cap + 1];
        for d1 in 0..=cap {
            for d2 in 0..=cap - d1 {
                for (e1, c1) in self.coeffs[d1].iter().enumerate() {
                    if c1.is_zero() {
                        continue;
                    }
                    for (e2, c2) in other.coeffs[d2].iter().enumerate() {
                        if !c2.is_zero() {
                            out[d1 + d2][(e1 + e2) % n] += c1 * c2;
                        }
                    }
                }
            }
        }
        CyclicPoly { n: self.n, z_degree_cap: cap, coeffs: out }
    }
}

fn nonnegative(c: BigInt) -> BigUint {
    c.to_biguint().expect("generating-function count is negative")
}

/// Number of `k`-element selections from the multiset `parts` whose sum is
/// `b` mod `n`. With `distinct` the selections are sets of positions,
/// otherwise multisets with repetition.
pub fn gf_count(n: u64, parts: &[i64], k: usize, b: i64, distinct: bool) -> BigUint {
    let mut poly = CyclicPoly::one(n, k);
    for &a in parts {
        let a = reduce(a, n);
        if distinct {
            poly.mul_one_minus(a);
        } else {
            poly.div_one_minus(a);
        }
    }
    let c = poly.coeff(k, b).clone();
    if distinct && k % 2 == 1 {
        nonnegative(-c)
    } else {
        nonnegative(c)
    }
}

/// Alias of [`gf_count`] named for the set-partition reading.
pub fn partition_count_from_set(n: u64, parts: &[i64], k: usize, b: i64, distinct: bool) -> BigUint {
    gf_count(n, parts, k, b, distinct)
}

/// Block-ordered solution count as a product of one weak-order generating
/// function per block, each over the parts `{aᵢ·j mod n : j ∈ [0, n)}`.
pub fn gf_blocks_count(spec: &BlockSpec) -> BigUint {
    let n = spec.n();
    let nu = n as usize;
    let mut acc = vec![BigInt::zero(); nu];
    acc[0] = BigInt::from(1);
    for &(size, coeff) in spec.blocks() {
        let mut poly = CyclicPoly::one(n, size as usize);
        for j in 0..n {
            poly.div_one_minus(((coeff as u128 * j as u128) % n as u128) as u64);
        }
        let slice = poly.z_slice(size as usize);
        let mut next = vec![BigInt::zero(); nu];
        for (e1, c1) in acc.iter().enumerate() {
            if c1.is_zero() {
                continue;
            }
            for (e2, c2) in slice.iter().enumerate() {
                next[(e1 + e2) % nu] += c1 * c2;
            }
        }
        acc = next;
    }
    let c = acc[spec.b() as usize].clone();
    debug_assert!(!c.is_negative());
    nonnegative(c)
}
