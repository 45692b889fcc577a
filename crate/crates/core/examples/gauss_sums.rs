//! Characters, Gauss sums and the DFT on Z/n.

use lincong::arith::{epsilon, jacobi_symbol, legendre};
use lincong::characters::{
    dft, gauss_sum_closed, gauss_sum_direct, gauss_sum_real_prime_power, gauss_sum_real_primitive,
    idft, product_identity_check, DirichletCharacter, PeriodicFunction,
};

fn main() -> lincong::Result<()> {
    println!("(2/7) = {}, (10/21) = {}", legendre(2, 7), jacobi_symbol(10, 21)?);
    for n in [3, 5, 15] {
        println!("eps_{n} = {}, tau = {:.6}", epsilon(n)?, gauss_sum_real_primitive(n)?);
    }

    let chi = DirichletCharacter::real_induced(45, 3)?;
    println!("\nchi mod 45 induced by (./3), conductor {}", chi.conductor());
    for m in [1, 2, 9, 15, 30] {
        let closed = gauss_sum_closed(&chi, m)?;
        let direct = gauss_sum_direct(&chi, m);
        println!("  m={m:>2}: {closed:.6}  |diff| {:.1e}", (closed - direct).norm());
    }
    println!("G_27(9) = {:.6}", gauss_sum_real_prime_power(3, 3, 9));

    let f = PeriodicFunction::from_integers(&[2, 0, -1, 5, 3, 1]);
    let fhat = PeriodicFunction::from_fn(6, |j| dft(&f, j as i64));
    let back: Vec<f64> = (0..6).map(|j| idft(&fhat, j).re).collect();
    println!("\nDFT round trip: {back:.3?}");
    println!("product identity, n=12 a=4 m=3: {:.1e}", product_identity_check(12, 4, 3));
    Ok(())
}
