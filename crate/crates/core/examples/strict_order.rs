//! Solutions with `x₁ > x₂ > ⋯ > x_k`, i.e. k-subsets of residues.

use lincong::arith::binomial;
use lincong::counting::strict_order_count;
use num_bigint::BigUint;

fn main() -> lincong::Result<()> {
    println!("N_5(2, 1, 0) = {}", strict_order_count(5, 2, 1, 0)?.count);
    println!("N_4(2, 2, 1) = {}", strict_order_count(4, 2, 2, 1)?.count);

    let (n, k) = (10, 4);
    let row: Vec<BigUint> = (0..n as i64)
        .map(|b| strict_order_count(n, k, 1, b).map(|r| r.count))
        .collect::<lincong::Result<_>>()?;
    println!("n={n} k={k} by target: {row:?}");
    let total: BigUint = row.iter().sum();
    assert_eq!(total, binomial(n, k));

    let start = std::time::Instant::now();
    let big = strict_order_count(10_000, 10, 1, 0)?;
    println!("n=10000 k=10: {} in {:?}", big.count, start.elapsed());
    Ok(())
}
