//! Three independent ways to count by brute force.

use lincong::counting::CongruenceSpec;
use lincong::oracle::{
    gf_count, oracle_count, oracle_distribution, oracle_square_convolution, OracleBudget,
    Representatives, Restriction,
};

fn main() -> lincong::Result<()> {
    let spec = CongruenceSpec::new(9, &[1, 2, 4], 0)?;
    let mut budget = OracleBudget::new(10_000);
    for r in [Restriction::All, Restriction::Square, Restriction::StrictOrder, Restriction::Distinct, Restriction::Blocks(vec![1, 2])] {
        let hist = oracle_distribution(&spec, &r, &mut budget, Representatives::ZeroBased)?;
        println!("{r:?}: {hist:?}");
    }
    println!("states used: {} of {}", budget.used(), budget.max_states());

    if let Err(e) = oracle_count(&CongruenceSpec::new(50, &[1; 6], 0)?, &Restriction::All, &mut budget) {
        println!("{e}");
    }

    let parts: Vec<i64> = (1..=7).collect();
    println!("3-subsets of 1..7 summing to 0 mod 7: {}", gf_count(7, &parts, 3, 0, true));
    println!("3-multisets: {}", gf_count(7, &parts, 3, 0, false));
    println!("squares, by convolution: {}", oracle_square_convolution(&CongruenceSpec::new(9, &[1, 1], 2)?));
    Ok(())
}
