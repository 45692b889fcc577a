use num_bigint::BigInt;
use rayon::prelude::*;

use super::query::Query;
use super::report::{RunReport, Summary};
use crate::counting::{distinct_count_gcd_condition, BlockSpec, CongruenceSpec};
use crate::oracle::OracleBudget;
use crate::{Error, Result};

/// Coefficients for the square sweep; 3 and 5 are non-units for some moduli.
const SQUARE_GRID: [u64; 4] = [1, 2, 3, 5];
/// Per-block coefficients for the block sweep, reduced mod `n`.
const BLOCK_GRID: [u64; 5] = [1, 2, 3, 4, 6];

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum VerifyMode {
    All,
    Square,
    Strict,
    Distinct,
    Blocks,
    Ramanujan,
}

/// Nondecreasing `k`-tuples over `values`, in lexicographic order.
pub fn nondecreasing(values: &[u64], k: usize) -> Vec<Vec<u64>> {
    fn go(values: &[u64], k: usize, start: usize, cur: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..values.len() {
            cur.push(values[i]);
            go(values, k, i, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(values, k, 0, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Ordered `k`-tuples over `values`.
fn product(values: &[u64], k: usize) -> Vec<Vec<u64>> {
    (0..k).fold(vec![Vec::new()], |acc, _| {
        acc.into_iter()
            .flat_map(|prefix| {
                values.iter().map(move |&v| {
                    let mut next = prefix.clone();
                    next.push(v);
                    next
                })
            })
            .collect()
    })
}

/// Block size lists with `t ≤ 3`, each size at most 3, total at most `k_max`.
fn block_shapes(k_max: u64) -> Vec<Vec<u64>> {
    (1..=3)
        .flat_map(|t| product(&[1, 2, 3], t))
        .filter(|sizes| sizes.iter().sum::<u64>() <= k_max)
        .collect()
}

fn signed(v: &[u64]) -> Vec<i64> {
    v.iter().map(|&x| x as i64).collect()
}

/// Target-free problems of the sweep, in grid order.
pub fn sweep_queries(mode: VerifyMode, ns: &[u64], k_max: u64) -> Vec<Query> {
    let mut out = Vec::new();
    for &n in ns {
        let residues: Vec<u64> = (0..n).collect();
        match mode {
            VerifyMode::Ramanujan => out.push(Query::Ramanujan { n, b: 0 }),
            VerifyMode::Strict => {
                for k in 1..=k_max {
                    for a in 0..n {
                        out.push(Query::Strict { n, k, a, b: 0 });
                    }
                }
            }
            VerifyMode::All => {
                for k in 1..=k_max as usize {
                    for a in nondecreasing(&residues, k) {
                        out.push(Query::All(CongruenceSpec::new(n, &signed(&a), 0).expect("n > 0")));
                    }
                }
            }
            VerifyMode::Square => {
                for k in 1..=k_max as usize {
                    for a in nondecreasing(&SQUARE_GRID, k) {
                        out.push(Query::Square(CongruenceSpec::new(n, &signed(&a), 0).expect("n > 0")));
                    }
                }
            }
            VerifyMode::Distinct => {
                for k in 1..=k_max {
                    for a in 0..n {
                        out.push(Query::DistinctEqual { n, k, a, b: 0 });
                    }
                    for a in nondecreasing(&residues, k as usize) {
                        let spec = CongruenceSpec::new(n, &signed(&a), 0).expect("n > 0");
                        if !matches!(distinct_count_gcd_condition(&spec), Err(Error::Hypothesis { .. })) {
                            out.push(Query::DistinctGcd(spec));
                        }
                    }
                }
            }
            VerifyMode::Blocks => {
                let mut coeffs: Vec<u64> = BLOCK_GRID.iter().map(|a| a % n).collect();
                coeffs.sort_unstable();
                coeffs.dedup();
                for sizes in block_shapes(k_max) {
                    for a in product(&coeffs, sizes.len()) {
                        let blocks: Vec<(u64, i64)> =
                            sizes.iter().zip(&a).map(|(&s, &c)| (s, c as i64)).collect();
                        out.push(Query::Blocks(BlockSpec::new(n, &blocks, 0).expect("valid blocks")));
                    }
                }
            }
        }
    }
    out
}

/// Rows for every target of one problem.
fn check(query: &Query, budget: u64) -> Result<Vec<RunReport>> {
    let mut budget = OracleBudget::new(budget);
    let oracle = query.oracle_all_targets(&mut budget)?;
    let mut rows = Vec::with_capacity(query.n() as usize);
    for b in 0..query.n() {
        let q = query.with_target(b);
        let value = q.formula()?;
        let row = match &oracle {
            None => {
                let mut row = RunReport::new(&q, Some(&value), None);
                row.status = Some("skipped");
                row
            }
            Some(values) => {
                let expected: &BigInt = &values[b as usize];
                let second_agrees = q.second_oracle().is_none_or(|c| &c == expected);
                let mut row = RunReport::new(&q, Some(&value), Some(expected));
                let ok = value.count == *expected && second_agrees;
                row.matches = Some(ok);
                row.status = Some(if ok { "ok" } else { "mismatch" });
                row
            }
        };
        rows.push(row);
    }
    Ok(rows)
}

/// Runs the sweep on `jobs` workers; rows come back in grid order.
pub fn run_sweep(queries: &[Query], budget: u64, jobs: usize) -> Result<(Vec<RunReport>, Summary)> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::Domain(format!("cannot start workers: {e}")))?;
    let groups: Vec<Result<Vec<RunReport>>> =
        pool.install(|| queries.par_iter().map(|q| check(q, budget)).collect());
    let mut rows = Vec::new();
    for g in groups {
        rows.extend(g?);
    }
    let summary = Summary {
        cases: rows.len() as u64,
        mismatches: rows.iter().filter(|r| r.status == Some("mismatch")).count() as u64,
        skipped: rows.iter().filter(|r| r.status == Some("skipped")).count() as u64,
        max_residual: rows.iter().map(|r| r.residual).fold(0.0, f64::max),
    };
    Ok((rows, summary))
}
