use num_bigint::{BigInt, BigUint};

use crate::arith::{ramanujan_sum, ramanujan_sum_direct_with_residual};
use crate::counting::{
    distinct_count_equal_coeffs, distinct_count_gcd_condition, lehmer_count, order_blocks_count,
    square_count, strict_order_count, BlockSpec, CongruenceSpec, Method,
};
use crate::oracle::{
    oracle_count, oracle_distribution, oracle_square_convolution, state_count, OracleBudget,
    Representatives, Restriction,
};
use crate::{Error, Result};

/// One counting problem as the command line describes it.
#[derive(Debug, Clone)]
pub enum Query {
    All(CongruenceSpec),
    Square(CongruenceSpec),
    Strict { n: u64, k: u64, a: u64, b: u64 },
    DistinctEqual { n: u64, k: u64, a: u64, b: u64 },
    DistinctGcd(CongruenceSpec),
    Blocks(BlockSpec),
    Ramanujan { n: u64, b: u64 },
}

#[derive(Debug, Clone)]
pub struct Evaluated {
    /// Signed only for Ramanujan sums.
    pub count: BigInt,
    pub method: Method,
    pub residual: f64,
}

impl Query {
    pub fn mode(&self) -> &'static str {
        match self {
            Query::All(_) => "all",
            Query::Square(_) => "square",
            Query::Strict { .. } => "strict",
            Query::DistinctEqual { .. } => "distinct",
            Query::DistinctGcd(_) => "distinct-gcd",
            Query::Blocks(_) => "blocks",
            Query::Ramanujan { .. } => "ramanujan",
        }
    }

    pub fn n(&self) -> u64 {
        match self {
            Query::All(s) | Query::Square(s) | Query::DistinctGcd(s) => s.n(),
            Query::Strict { n, .. } | Query::DistinctEqual { n, .. } | Query::Ramanujan { n, .. } => *n,
            Query::Blocks(s) => s.n(),
        }
    }

    pub fn b(&self) -> u64 {
        match self {
            Query::All(s) | Query::Square(s) | Query::DistinctGcd(s) => s.b(),
            Query::Strict { b, .. } | Query::DistinctEqual { b, .. } | Query::Ramanujan { b, .. } => *b,
            Query::Blocks(s) => s.b(),
        }
    }

    pub fn k(&self) -> Option<u64> {
        match self {
            Query::All(s) | Query::Square(s) | Query::DistinctGcd(s) => Some(s.k() as u64),
            Query::Strict { k, .. } | Query::DistinctEqual { k, .. } => Some(*k),
            Query::Blocks(s) => Some(s.total_size()),
            Query::Ramanujan { .. } => None,
        }
    }

    pub fn coeffs(&self) -> Vec<u64> {
        match self {
            Query::All(s) | Query::Square(s) | Query::DistinctGcd(s) => s.coeffs().to_vec(),
            Query::Strict { a, .. } | Query::DistinctEqual { a, .. } => vec![*a],
            Query::Blocks(_) | Query::Ramanujan { .. } => Vec::new(),
        }
    }

    pub fn blocks(&self) -> Option<String> {
        match self {
            Query::Blocks(s) => Some(
                s.blocks()
                    .iter()
                    .map(|(size, a)| format!("{size}:{a}"))
                    .collect::<Vec<_>>()
                    .join(","),
            ),
            _ => None,
        }
    }

    /// Same problem with another target.
    pub fn with_target(&self, b: u64) -> Query {
        let b_signed = b as i64;
        match self {
            Query::All(s) => Query::All(s.with_target(b_signed)),
            Query::Square(s) => Query::Square(s.with_target(b_signed)),
            Query::DistinctGcd(s) => Query::DistinctGcd(s.with_target(b_signed)),
            Query::Blocks(s) => Query::Blocks(s.with_target(b_signed)),
            Query::Strict { n, k, a, .. } => Query::Strict { n: *n, k: *k, a: *a, b: b % n },
            Query::DistinctEqual { n, k, a, .. } => Query::DistinctEqual { n: *n, k: *k, a: *a, b: b % n },
            Query::Ramanujan { n, .. } => Query::Ramanujan { n: *n, b: b % n },
        }
    }

    /// The closed-form (or documented fallback) evaluation.
    pub fn formula(&self) -> Result<Evaluated> {
        let from = |r: crate::counting::CountResult| Evaluated {
            count: r.count.into(),
            method: r.method,
            residual: r.residual,
        };
        Ok(match self {
            Query::All(s) => from(lehmer_count(s)),
            Query::Square(s) => from(square_count(s)?),
            Query::Strict { n, k, a, b } => from(strict_order_count(*n, *k, *a as i64, *b as i64)?),
            Query::DistinctEqual { n, k, a, b } => {
                from(distinct_count_equal_coeffs(*n, *k, *a as i64, *b as i64)?)
            }
            Query::DistinctGcd(s) => from(distinct_count_gcd_condition(s)?),
            Query::Blocks(s) => from(order_blocks_count(s)?),
            Query::Ramanujan { n, b } => Evaluated {
                count: ramanujan_sum(*n, *b as i64).into(),
                method: Method::Formula,
                residual: 0.0,
            },
        })
    }

    fn enumeration(&self) -> Option<(CongruenceSpec, Restriction)> {
        let repeat = |n: u64, k: u64, a: u64, b: u64| {
            CongruenceSpec::new(n, &vec![a as i64; k as usize], b as i64).expect("valid")
        };
        Some(match self {
            Query::All(s) => (s.clone(), Restriction::All),
            Query::Square(s) => (s.clone(), Restriction::Square),
            Query::Strict { n, k, a, b } => (repeat(*n, *k, *a, *b), Restriction::StrictOrder),
            Query::DistinctEqual { n, k, a, b } => (repeat(*n, *k, *a, *b), Restriction::Distinct),
            Query::DistinctGcd(s) => (s.clone(), Restriction::Distinct),
            Query::Blocks(s) => (s.to_congruence(), Restriction::Blocks(s.sizes())),
            Query::Ramanujan { .. } => return None,
        })
    }

    /// States the oracle would visit.
    pub fn oracle_states(&self) -> BigUint {
        match self.enumeration() {
            Some((spec, restriction)) => {
                let domain = match restriction {
                    Restriction::Square => crate::characters::count_squares(spec.n()),
                    _ => spec.n(),
                };
                state_count(domain, spec.k() as u64, &restriction)
            }
            None => BigUint::from(self.n()),
        }
    }

    /// Oracle value, or `None` when the budget does not cover it.
    pub fn oracle(&self, budget: &mut OracleBudget) -> Result<Option<(BigInt, f64)>> {
        let outcome = match self.enumeration() {
            Some((spec, restriction)) => {
                oracle_count(&spec, &restriction, budget).map(|c| (BigInt::from(c), 0.0))
            }
            None => {
                let Query::Ramanujan { n, b } = self else { unreachable!() };
                budget
                    .charge(&BigUint::from(*n))
                    .and_then(|_| ramanujan_sum_direct_with_residual(*n, *b as i64))
                    .map(|(v, r)| (BigInt::from(v), r))
            }
        };
        match outcome {
            Ok(v) => Ok(Some(v)),
            Err(Error::BudgetExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Oracle values for every target at once, plus the second square
    /// oracle where one exists.
    pub fn oracle_all_targets(
        &self,
        budget: &mut OracleBudget,
    ) -> Result<Option<Vec<BigInt>>> {
        let Some((spec, restriction)) = self.enumeration() else {
            let n = self.n();
            let mut out = Vec::with_capacity(n as usize);
            for b in 0..n {
                match self.with_target(b).oracle(budget)? {
                    Some((v, _)) => out.push(v),
                    None => return Ok(None),
                }
            }
            return Ok(Some(out));
        };
        match oracle_distribution(&spec, &restriction, budget, Representatives::ZeroBased) {
            Ok(hist) => Ok(Some(hist.into_iter().map(BigInt::from).collect())),
            Err(Error::BudgetExceeded { .. }) => Ok(None),
            Err(e) => Err(e),
        }
    }

    /// Convolution count for square queries.
    pub fn second_oracle(&self) -> Option<BigInt> {
        match self {
            Query::Square(s) => Some(oracle_square_convolution(s).into()),
            _ => None,
        }
    }
}
