use std::io::Write;
use std::time::Instant;

use serde::Serialize;

use super::query::Query;
use super::report::Format;
use super::verify::VerifyMode;
use crate::counting::{BlockSpec, CongruenceSpec};
use crate::oracle::OracleBudget;
use crate::Result;

#[derive(Debug, Clone, Serialize)]
pub struct BenchRow {
    pub n: u64,
    pub k: u64,
    pub mode: &'static str,
    pub t_formula_s: f64,
    /// `None` when the oracle would exceed the budget.
    pub t_oracle_s: Option<f64>,
    pub speedup: Option<f64>,
}

/// Default `(n, k)` grid for a mode. For blocks, `k` is the number of
/// blocks, each of size 2.
pub fn default_grid(mode: VerifyMode) -> (Vec<u64>, Vec<u64>) {
    match mode {
        VerifyMode::Strict | VerifyMode::Distinct => (vec![10, 100, 1000, 10_000], vec![2, 5, 10]),
        VerifyMode::Square => (vec![27, 81, 243], vec![1, 2, 3]),
        VerifyMode::Blocks => (vec![6, 12], vec![1, 2]),
        VerifyMode::All => (vec![10, 100, 1000], vec![2, 3]),
        VerifyMode::Ramanujan => (vec![100, 1000, 10_000], vec![1]),
    }
}

pub fn bench_query(mode: VerifyMode, n: u64, k: u64) -> Result<Query> {
    let ones = vec![1i64; k as usize];
    Ok(match mode {
        VerifyMode::Strict => Query::Strict { n, k, a: 1 % n, b: 0 },
        VerifyMode::Distinct => Query::DistinctEqual { n, k, a: 1 % n, b: 0 },
        VerifyMode::Square => Query::Square(CongruenceSpec::new(n, &ones, 1)?),
        VerifyMode::All => Query::All(CongruenceSpec::new(n, &ones, 1)?),
        VerifyMode::Blocks => {
            let blocks: Vec<(u64, i64)> = (1..=k as i64).map(|a| (2, a)).collect();
            Query::Blocks(BlockSpec::new(n, &blocks, 1)?)
        }
        VerifyMode::Ramanujan => Query::Ramanujan { n, b: 1 % n },
    })
}

pub fn time_query(mode: VerifyMode, n: u64, k: u64, budget: u64) -> Result<BenchRow> {
    let query = bench_query(mode, n, k)?;
    let start = Instant::now();
    query.formula()?;
    let t_formula_s = start.elapsed().as_secs_f64();
    let start = Instant::now();
    let t_oracle_s = query
        .oracle(&mut OracleBudget::new(budget))?
        .map(|_| start.elapsed().as_secs_f64());
    Ok(BenchRow {
        n,
        k,
        mode: query.mode(),
        t_formula_s,
        t_oracle_s,
        speedup: t_oracle_s.map(|t| t / t_formula_s.max(1e-9)),
    })
}

pub fn emit(rows: &[BenchRow], format: Format, out: &mut impl Write) -> std::io::Result<()> {
    match format {
        Format::Json => {
            for r in rows {
                writeln!(out, "{}", serde_json::to_string(r)?)?;
            }
        }
        Format::Csv => {
            writeln!(out, "n,k,mode,t_formula_s,t_oracle_s,speedup")?;
            for r in rows {
                let oracle = r.t_oracle_s.map_or("skipped".to_string(), |t| format!("{t:.9}"));
                let speedup = r.speedup.map_or(String::new(), |s| format!("{s:.1}"));
                writeln!(out, "{},{},{},{:.9},{},{}", r.n, r.k, r.mode, r.t_formula_s, oracle, speedup)?;
            }
        }
    }
    Ok(())
}
