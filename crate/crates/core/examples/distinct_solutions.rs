use lincong::counting::{distinct_count_equal_coeffs, distinct_count_gcd_condition, CongruenceSpec};
use lincong::Error;

fn main() -> lincong::Result<()> {
    for (n, a, b) in [(5, vec![1, 4], 0), (7, vec![1, 1], 1), (5, vec![1, 2, 2], 0), (11, vec![1, 1, 1, 8], 0)] {
        let spec = CongruenceSpec::new(n, &a, b)?;
        println!("D_{n}({b}; {a:?}) = {}", distinct_count_gcd_condition(&spec)?.count);
    }

    match distinct_count_gcd_condition(&CongruenceSpec::new(6, &[2, 1], 1)?) {
        Err(Error::Hypothesis { subset, gcd, .. }) => {
            println!("(6; 2, 1): subset {subset:?} has gcd {gcd} with the modulus")
        }
        other => println!("unexpected: {other:?}"),
    }

    // equal coefficients need no hypothesis
    for b in 0..9 {
        print!("{} ", distinct_count_equal_coeffs(9, 3, 1, b)?.count);
    }
    println!();
    Ok(())
}
