use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::arith::reduce;
use crate::error::{domain, Result};

/// An instance `a₁x₁ + ⋯ + a_k x_k ≡ b (mod n)` with coefficients and
/// target reduced into `[0, n)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CongruenceSpec {
    n: u64,
    coeffs: Vec<u64>,
    b: u64,
}

impl CongruenceSpec {
    pub fn new(n: u64, coeffs: &[i64], b: i64) -> Result<Self> {
        if n == 0 {
            return domain("modulus must be positive");
        }
        if n > i64::MAX as u64 {
            return domain("modulus too large");
        }
        if coeffs.is_empty() {
            return domain("at least one coefficient is required");
        }
        Ok(Self {
            n,
            coeffs: coeffs.iter().map(|&a| reduce(a, n)).collect(),
            b: reduce(b, n),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn k(&self) -> usize {
        self.coeffs.len()
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    /// Same coefficients with a different target.
    pub fn with_target(&self, b: i64) -> Self {
        Self {
            b: reduce(b, self.n),
            ..self.clone()
        }
    }

    /// Reduction of the instance modulo a divisor `m` of `n`.
    pub fn reduced_mod(&self, m: u64) -> Self {
        debug_assert!(m >= 1 && self.n % m == 0);
        Self {
            n: m,
            coeffs: self.coeffs.iter().map(|&a| a % m).collect(),
            b: self.b % m,
        }
    }
}

/// Weak-order blocks: the variables are split into consecutive blocks of
/// sizes `k₁, …, k_t`, block `i` sharing the coefficient `aᵢ` and carrying
/// its own ordering `x ≥ x′ ≥ ⋯`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BlockSpec {
    n: u64,
    blocks: Vec<(u64, u64)>,
    b: u64,
}

impl BlockSpec {
    /// `blocks` holds `(size, coefficient)` pairs.
    pub fn new(n: u64, blocks: &[(u64, i64)], b: i64) -> Result<Self> {
        if n == 0 {
            return domain("modulus must be positive");
        }
        if blocks.is_empty() {
            return domain("at least one block is required");
        }
        if blocks.iter().any(|&(size, _)| size == 0) {
            return domain("block sizes must be positive");
        }
        Ok(Self {
            n,
            blocks: blocks.iter().map(|&(size, a)| (size, reduce(a, n))).collect(),
            b: reduce(b, n),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn blocks(&self) -> &[(u64, u64)] {
        &self.blocks
    }

    pub fn sizes(&self) -> Vec<u64> {
        self.blocks.iter().map(|&(s, _)| s).collect()
    }

    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn total_size(&self) -> u64 {
        self.blocks.iter().map(|&(s, _)| s).sum()
    }

    pub fn with_target(&self, b: i64) -> Self {
        Self {
            b: reduce(b, self.n),
            ..self.clone()
        }
    }

    /// The underlying congruence with each block coefficient repeated.
    pub fn to_congruence(&self) -> CongruenceSpec {
        let coeffs: Vec<i64> = self
            .blocks
            .iter()
            .flat_map(|&(size, a)| std::iter::repeat_n(a as i64, size as usize))
            .collect();
        CongruenceSpec::new(self.n, &coeffs, self.b as i64).expect("valid block spec")
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Formula,
    CorollaryFastPath,
    OracleFallback,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Formula => "formula",
            Method::CorollaryFastPath => "corollary-fast-path",
            Method::OracleFallback => "oracle-fallback",
        })
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct CountResult {
    pub count: BigUint,
    pub method: Method,
    /// Worst rounding residual of a complex-arithmetic path; 0 for exact paths.
    pub residual: f64,
}

impl CountResult {
    pub(crate) fn exact(count: BigUint) -> Self {
        Self {
            count,
            method: Method::Formula,
            residual: 0.0,
        }
    }
}
