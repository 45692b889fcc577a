use lincong::characters::{count_qr, count_squares, sqrt_mod_prime_power, square_decomposition_identity, square_profile};

fn main() {
    println!("sqrt(9) mod 27 = {:?}", sqrt_mod_prime_power(9, 3, 3));
    println!("sqrt(0) mod 27 = {:?}", sqrt_mod_prime_power(0, 3, 3));
    println!("sqrt(2) mod 7^3 = {:?}", sqrt_mod_prime_power(2, 7, 3));

    let p = square_profile(45);
    println!("squares mod 45: {:?}", p.square_set);
    println!("s(45) = {} = {}, q(45) = {} = {}", p.s, count_squares(45), p.q, count_qr(45));

    for r in 1..=6 {
        print!("s(3^{r})={} ", count_squares(3u64.pow(r)));
    }
    println!();

    let (lhs, rhs) = square_decomposition_identity(5, 2, 5);
    println!("decomposition mod 25 at m=5: {lhs:.6} vs {rhs:.6}");
}
