use num_complex::Complex64;

use crate::arith::{root_of_unity, ComplexVal};

/// An `n`-periodic arithmetic function, stored by residue: `values[j]`
/// holds `f(j)` for `j` in `[0, n)`, so `f(n)` lives at index 0.
#[derive(Debug, Clone, PartialEq)]
pub struct PeriodicFunction {
    values: Vec<ComplexVal>,
}

impl PeriodicFunction {
    /// Panics on an empty value list.
    pub fn new(values: Vec<ComplexVal>) -> Self {
        assert!(!values.is_empty(), "period must be positive");
        Self { values }
    }

    pub fn from_fn(period: u64, f: impl Fn(u64) -> ComplexVal) -> Self {
        Self::new((0..period).map(f).collect())
    }

    pub fn from_integers(values: &[i64]) -> Self {
        Self::new(values.iter().map(|&v| Complex64::new(v as f64, 0.0)).collect())
    }

    pub fn period(&self) -> u64 {
        self.values.len() as u64
    }

    pub fn at(&self, j: i64) -> ComplexVal {
        self.values[j.rem_euclid(self.period() as i64) as usize]
    }

    pub fn values(&self) -> &[ComplexVal] {
        &self.values
    }
}

/// `f̂(b) = Σ_{j=1}^{n} f(j) e(-bj/n)`.
pub fn dft(f: &PeriodicFunction, b: i64) -> ComplexVal {
    let n = f.period();
    (1..=n)
        .map(|j| f.at(j as i64) * root_of_unity(-phase(b, j, n), n))
        .sum()
}

/// `f(b) = (1/n) Σ_{j=1}^{n} f̂(j) e(bj/n)`.
pub fn idft(fhat: &PeriodicFunction, b: i64) -> ComplexVal {
    let n = fhat.period();
    let total: ComplexVal = (1..=n)
        .map(|j| fhat.at(j as i64) * root_of_unity(phase(b, j, n), n))
        .sum();
    total / n as f64
}

fn phase(b: i64, j: u64, n: u64) -> i64 {
    ((b.rem_euclid(n as i64) as u128 * j as u128) % n as u128) as i64
}
