use std::ops::ControlFlow;

use num_bigint::BigUint;
use num_traits::{One, Pow};

use super::budget::OracleBudget;
use crate::arith::{binomial, multiset_count};
use crate::characters::square_profile;
use crate::counting::CongruenceSpec;
use crate::error::{domain, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Restriction {
    All,
    /// Every `xᵢ` is a square modulo `n`.
    Square,
    /// `x₁ > x₂ > ⋯ > x_k`.
    StrictOrder,
    /// Pairwise distinct `xᵢ`.
    Distinct,
    /// Weak order `x ≥ x′ ≥ ⋯` inside consecutive blocks of the given sizes.
    Blocks(Vec<u64>),
}

/// The complete residue system whose natural order defines the orderings.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub enum Representatives {
    /// `0, 1, …, n-1`
    #[default]
    ZeroBased,
    /// `1, 2, …, n`
    OneBased,
}

impl Representatives {
    fn values(self, n: u64) -> Vec<u64> {
        match self {
            Representatives::ZeroBased => (0..n).collect(),
            Representatives::OneBased => (1..=n).collect(),
        }
    }
}

struct Walk<'a, V> {
    n: u64,
    restriction: &'a Restriction,
    domain: Vec<u64>,
    /// `weights[i][j] = aᵢ · domain[j] mod n`
    weights: Vec<Vec<u64>>,
    block_start: Vec<bool>,
    used: Vec<bool>,
    tuple: Vec<u64>,
    visit: V,
}

impl<V> Walk<'_, V>
where
    V: FnMut(&[u64], u64) -> ControlFlow<()>,
{
    fn go(&mut self, depth: usize, prev: usize, acc: u64) -> ControlFlow<()> {
        if depth == self.weights.len() {
            return (self.visit)(&self.tuple, acc);
        }
        let len = self.domain.len();
        let range = match self.restriction {
            Restriction::StrictOrder if depth > 0 => 0..prev,
            Restriction::Blocks(_) if !self.block_start[depth] => 0..prev + 1,
            _ => 0..len,
        };
        let distinct = matches!(self.restriction, Restriction::Distinct);
        for idx in range {
            if distinct {
                if self.used[idx] {
                    continue;
                }
                self.used[idx] = true;
            }
            self.tuple.push(self.domain[idx]);
            let next = acc + self.weights[depth][idx];
            let next = if next >= self.n { next - self.n } else { next };
            let flow = self.go(depth + 1, idx, next);
            self.tuple.pop();
            if distinct {
                self.used[idx] = false;
            }
            flow?;
        }
        ControlFlow::Continue(())
    }
}

fn block_starts(k: usize, restriction: &Restriction) -> Result<Vec<bool>> {
    let mut starts = vec![true; k];
    if let Restriction::Blocks(sizes) = restriction {
        if sizes.contains(&0) || sizes.iter().sum::<u64>() != k as u64 {
            return domain(format!("block sizes {sizes:?} do not partition {k} variables"));
        }
        let mut pos = 0usize;
        for &s in sizes {
            for offset in 1..s as usize {
                starts[pos + offset] = false;
            }
            pos += s as usize;
        }
    }
    Ok(starts)
}

/// Number of states the enumeration visits, from the domain size alone.
pub fn state_count(domain_size: u64, k: u64, restriction: &Restriction) -> BigUint {
    match restriction {
        Restriction::All | Restriction::Square => Pow::pow(BigUint::from(domain_size), k as u32),
        Restriction::StrictOrder => binomial(domain_size, k),
        Restriction::Distinct => (0..k).fold(BigUint::one(), |acc, i| {
            acc * BigUint::from(domain_size.saturating_sub(i))
        }),
        Restriction::Blocks(sizes) => sizes
            .iter()
            .map(|&s| multiset_count(domain_size, s))
            .product(),
    }
}

fn walk<V>(
    spec: &CongruenceSpec,
    restriction: &Restriction,
    reps: Representatives,
    budget: &mut OracleBudget,
    visit: V,
) -> Result<()>
where
    V: FnMut(&[u64], u64) -> ControlFlow<()>,
{
    let n = spec.n();
    let k = spec.k();
    let block_start = block_starts(k, restriction)?;
    let mut domain = reps.values(n);
    if matches!(restriction, Restriction::Square) {
        let squares = square_profile(n);
        domain.retain(|&x| squares.contains(x));
    }
    budget.charge(&state_count(domain.len() as u64, k as u64, restriction))?;
    let weights = spec
        .coeffs()
        .iter()
        .map(|&a| {
            domain
                .iter()
                .map(|&x| ((a as u128 * x as u128) % n as u128) as u64)
                .collect()
        })
        .collect();
    let mut state = Walk {
        n,
        restriction,
        used: vec![false; domain.len()],
        domain,
        weights,
        block_start,
        tuple: Vec::with_capacity(k),
        visit,
    };
    let _ = state.go(0, 0, 0);
    Ok(())
}

/// Solution counts for every target: entry `r` counts the restricted
/// tuples with `Σ aᵢxᵢ ≡ r (mod n)`. The target of `spec` is ignored.
pub fn oracle_distribution(
    spec: &CongruenceSpec,
    restriction: &Restriction,
    budget: &mut OracleBudget,
    reps: Representatives,
) -> Result<Vec<u64>> {
    let mut hist = vec![0u64; spec.n() as usize];
    walk(spec, restriction, reps, budget, |_, r| {
        hist[r as usize] += 1;
        ControlFlow::Continue(())
    })?;
    Ok(hist)
}

/// Exact count by enumeration over the canonical residues `[0, n)`.
pub fn oracle_count(
    spec: &CongruenceSpec,
    restriction: &Restriction,
    budget: &mut OracleBudget,
) -> Result<u64> {
    oracle_count_with(spec, restriction, budget, Representatives::ZeroBased)
}

pub fn oracle_count_with(
    spec: &CongruenceSpec,
    restriction: &Restriction,
    budget: &mut OracleBudget,
    reps: Representatives,
) -> Result<u64> {
    let target = spec.b();
    let mut count = 0u64;
    walk(spec, restriction, reps, budget, |_, r| {
        count += (r == target) as u64;
        ControlFlow::Continue(())
    })?;
    Ok(count)
}

/// Every restricted solution tuple, in enumeration order.
pub fn oracle_solutions(
    spec: &CongruenceSpec,
    restriction: &Restriction,
    budget: &mut OracleBudget,
) -> Result<Vec<Vec<u64>>> {
    let target = spec.b();
    let mut found = Vec::new();
    walk(spec, restriction, Representatives::ZeroBased, budget, |t, r| {
        if r == target {
            found.push(t.to_vec());
        }
        ControlFlow::Continue(())
    })?;
    Ok(found)
}

/// The first restricted solution found, if any.
pub fn oracle_find(
    spec: &CongruenceSpec,
    restriction: &Restriction,
    budget: &mut OracleBudget,
) -> Result<Option<Vec<u64>>> {
    let target = spec.b();
    let mut found = None;
    walk(spec, restriction, Representatives::ZeroBased, budget, |t, r| {
        if r == target {
            found = Some(t.to_vec());
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    })?;
    Ok(found)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Error;

    fn spec(n: u64, a: &[i64], b: i64) -> CongruenceSpec {
        CongruenceSpec::new(n, a, b).unwrap()
    }

    fn count(s: &CongruenceSpec, r: Restriction) -> u64 {
        oracle_count(s, &r, &mut OracleBudget::default()).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(count(&spec(27, &[1, 1], 1), Restriction::Square), 4);
        assert_eq!(count(&spec(6, &[2, 2, 3, 3], 5), Restriction::Blocks(vec![2, 2])), 63);
        assert_eq!(count(&spec(5, &[1], 2), Restriction::All), 1);
        assert_eq!(count(&spec(5, &[1, 1], 0), Restriction::StrictOrder), 2);
        assert_eq!(count(&spec(5, &[1, 1], 0), Restriction::Distinct), 4);
    }

    #[test]
    fn square_witnesses() {
        let sols = oracle_solutions(&spec(27, &[1, 1], 1), &Restriction::Square, &mut OracleBudget::default()).unwrap();
        let mut sols = sols;
        sols.sort();
        assert_eq!(sols, vec![vec![0, 1], vec![1, 0], vec![9, 19], vec![19, 9]]);
    }

    #[test]
    fn distribution_sums_to_state_count() {
        let s = spec(7, &[1, 3, 2], 0);
        for r in [
            Restriction::All,
            Restriction::Square,
            Restriction::StrictOrder,
            Restriction::Distinct,
            Restriction::Blocks(vec![1, 2]),
        ] {
            let hist = oracle_distribution(&s, &r, &mut OracleBudget::default(), Representatives::ZeroBased).unwrap();
            let domain = if r == Restriction::Square { 4 } else { 7 };
            assert_eq!(BigUint::from(hist.iter().sum::<u64>()), state_count(domain, 3, &r));
        }
    }

    #[test]
    fn representative_independence() {
        // Coefficients are equal inside each ordered group, so only the
        // multiset of values in a group matters.
        let cases: Vec<(Vec<i64>, Restriction)> = vec![
            (vec![1, 1, 1], Restriction::StrictOrder),
            (vec![3, 3], Restriction::StrictOrder),
            (vec![2, 2, 5], Restriction::Blocks(vec![2, 1])),
            (vec![1, 3, 3], Restriction::Blocks(vec![1, 2])),
            (vec![4, 4, 4], Restriction::Blocks(vec![3])),
        ];
        for n in 1..=9u64 {
            for (a, r) in &cases {
                let s = spec(n, a, 0);
                let zero = oracle_distribution(&s, r, &mut OracleBudget::default(), Representatives::ZeroBased).unwrap();
                let one = oracle_distribution(&s, r, &mut OracleBudget::default(), Representatives::OneBased).unwrap();
                assert_eq!(zero, one, "n={n} a={a:?} {r:?}");
            }
        }
    }

    #[test]
    fn budget_is_enforced_up_front() {
        let s = spec(100, &[1; 6], 0);
        let mut budget = OracleBudget::new(1000);
        let err = oracle_count(&s, &Restriction::All, &mut budget).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded { .. }));
        assert_eq!(budget.used(), 0);
    }

    #[test]
    fn bad_block_partition() {
        let s = spec(5, &[1, 1, 1], 0);
        assert!(oracle_count(&s, &Restriction::Blocks(vec![1, 1]), &mut OracleBudget::default()).is_err());
    }

    #[test]
    fn find_stops_early() {
        let s = spec(9, &[1, 1, 1], 6);
        let w = oracle_find(&s, &Restriction::Square, &mut OracleBudget::default()).unwrap().unwrap();
        let squares = square_profile(9);
        assert!(w.iter().all(|&x| squares.contains(x)));
        assert_eq!(w.iter().sum::<u64>() % 9, 6);
        assert_eq!(oracle_find(&spec(9, &[1, 1], 3), &Restriction::Square, &mut OracleBudget::default()).unwrap(), None);
    }
}
