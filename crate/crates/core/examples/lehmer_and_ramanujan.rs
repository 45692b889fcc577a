//! Unrestricted counts and the Ramanujan sums behind every divisor-sum formula.

use lincong::arith::{divisors, ramanujan_sum, ramanujan_sum_direct};
use lincong::counting::{lehmer_count, CongruenceSpec};

fn main() -> lincong::Result<()> {
    for (n, a, b) in [(27, vec![1, 1], 1), (4, vec![2], 3), (6, vec![2, 4], 4)] {
        let spec = CongruenceSpec::new(n, &a, b)?;
        println!("n={n} a={a:?} b={b}: {} solutions", lehmer_count(&spec).count);
    }

    let n = 12;
    println!("\nC_{n}(b) for b = 0..{n}:");
    for b in 0..n as i64 {
        let closed = ramanujan_sum(n, b);
        assert_eq!(closed, ramanujan_sum_direct(n, b)?);
        print!("{closed} ");
    }
    println!();

    // Σ_{d|n} C_d(b) is n when n | b and 0 otherwise.
    let total: i64 = divisors(n).into_iter().map(|d| ramanujan_sum(d, 5)).sum();
    println!("sum over d | {n} of C_d(5) = {total}");
    Ok(())
}
