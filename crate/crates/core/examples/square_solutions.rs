use lincong::counting::{
    hull_guarantees_square_solution, square_count, square_count_corollary, square_solution_exists,
    CongruenceSpec,
};
use lincong::oracle::{oracle_solutions, OracleBudget, Restriction};

fn main() -> lincong::Result<()> {
    let spec = CongruenceSpec::new(27, &[1, 1], 1)?;
    let r = square_count(&spec)?;
    println!("x + y = 1 mod 27 with x, y squares: {} (residual {:.1e})", r.count, r.residual);
    let sols = oracle_solutions(&spec, &Restriction::Square, &mut OracleBudget::default())?;
    println!("  solutions: {sols:?}");

    // unit coefficients and target modulo p^l
    let nine = CongruenceSpec::new(9, &[1, 1], 2)?;
    println!(
        "mod 9, b=2: general {} corollary {}",
        square_count(&nine)?.count,
        square_count_corollary(3, 2, &nine)?.count
    );

    for (n, a, b) in [(9, vec![1, 1], 3), (9, vec![1, 1, 1], 6), (45, vec![2, 7], 11)] {
        let spec = CongruenceSpec::new(n, &a, b)?;
        let e = square_solution_exists(&spec)?;
        println!(
            "n={n} a={a:?} b={b}: exists={} witness={:?} via {:?} (Hull: {})",
            e.exists,
            e.witness,
            e.steps,
            hull_guarantees_square_solution(&spec)?
        );
    }

    let even = square_count(&CongruenceSpec::new(8, &[1, 3], 4)?)?;
    println!("mod 8 is counted by enumeration: {} ({})", even.count, even.method);
    Ok(())
}
