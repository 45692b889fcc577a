use std::io::Write;

use num_complex::Complex64;

use super::query::Query;
use crate::arith::{epsilon, ramanujan_sum};
use crate::characters::{
    dft, gauss_sum_closed, gauss_sum_direct, gauss_sum_real_prime_power, gauss_sum_real_primitive,
    idft, product_identity_check, square_decomposition_identity, square_indicator, square_profile,
    sqrt_mod_prime_power, DirichletCharacter, PeriodicFunction,
};
use crate::counting::{
    order_blocks_count, square_count, square_count_corollary, square_solution_exists, BlockSpec,
    CongruenceSpec,
};
use crate::oracle::{
    gf_count, oracle_count, oracle_solutions, oracle_square_convolution, OracleBudget, Restriction,
};

type Check = std::result::Result<(), String>;

const TOL: f64 = 1e-6;

fn close(name: &str, got: Complex64, want: Complex64) -> Check {
    if (got - want).norm() < TOL {
        Ok(())
    } else {
        Err(format!("{name}: got {got}, want {want}"))
    }
}

fn equal<T: PartialEq + std::fmt::Debug>(name: &str, got: T, want: T) -> Check {
    if got == want {
        Ok(())
    } else {
        Err(format!("{name}: got {got:?}, want {want:?}"))
    }
}

fn spec(n: u64, a: &[i64], b: i64) -> CongruenceSpec {
    CongruenceSpec::new(n, a, b).expect("valid spec")
}

fn square(n: u64, a: &[i64], b: i64) -> std::result::Result<u64, String> {
    let r = square_count(&spec(n, a, b)).map_err(|e| e.to_string())?;
    u64::try_from(r.count).map_err(|e| e.to_string())
}

fn root3() -> f64 {
    3f64.sqrt()
}

type NamedCheck = (&'static str, fn() -> Check);

fn checks() -> Vec<NamedCheck> {
    vec![
        ("epsilon", || {
            close("epsilon(5)", epsilon(5).unwrap(), Complex64::new(1.0, 0.0))?;
            close("epsilon(3)", epsilon(3).unwrap(), Complex64::new(0.0, 1.0))
        }),
        ("gauss sums of real characters", || {
            close("tau mod 3", gauss_sum_real_primitive(3).unwrap(), Complex64::new(0.0, root3()))?;
            close("tau mod 5", gauss_sum_real_primitive(5).unwrap(), Complex64::new(5f64.sqrt(), 0.0))?;
            let chi = DirichletCharacter::real_induced(3, 3).unwrap();
            close("closed form mod 3 at m=2", gauss_sum_closed(&chi, 2).unwrap(), Complex64::new(0.0, -root3()))?;
            close("prime power (3,1,1)", gauss_sum_real_prime_power(3, 1, 1), Complex64::new(0.0, root3()))
        }),
        ("principal gauss sum is a ramanujan sum", || {
            let chi = DirichletCharacter::principal(12).unwrap();
            for m in 0..12 {
                close("principal mod 12", gauss_sum_direct(&chi, m), Complex64::new(ramanujan_sum(12, m) as f64, 0.0))?;
            }
            Ok(())
        }),
        ("square roots modulo 27", || {
            equal("roots of 9", sqrt_mod_prime_power(9, 3, 3).into_iter().collect(), vec![3, 6, 12, 15, 21, 24])?;
            equal("roots of 0", sqrt_mod_prime_power(0, 3, 3).into_iter().collect(), vec![0u64, 9, 18])
        }),
        ("squares modulo 3 and 9", || {
            equal("7 is a square mod 9", square_indicator(9, 7), 1)?;
            equal("3 is not a square mod 9", square_indicator(9, 3), 0)?;
            equal("s(3)", square_profile(3).s, 2)?;
            let p = square_profile(9);
            equal("s(9)", p.s, 4)?;
            equal("squares mod 9", p.square_set.into_iter().collect(), vec![0u64, 1, 4, 7])
        }),
        ("square solution counts", || {
            equal("S_27(1; 1,1)", square(27, &[1, 1], 1)?, 4)?;
            equal("S_9(3; 1,1)", square(9, &[1, 1], 3)?, 0)?;
            equal("S_9(2; 1,1)", square(9, &[1, 1], 2)?, 3)?;
            let c = square_count_corollary(3, 2, &spec(9, &[1, 1], 2)).map_err(|e| e.to_string())?;
            equal("corollary at 9", c.count, 3u32.into())
        }),
        ("square solution witnesses", || {
            let mut sols = oracle_solutions(&spec(27, &[1, 1], 1), &Restriction::Square, &mut OracleBudget::default())
                .map_err(|e| e.to_string())?;
            sols.sort();
            equal("solutions mod 27", sols, vec![vec![0, 1], vec![1, 0], vec![9, 19], vec![19, 9]])?;
            let e = square_solution_exists(&spec(9, &[1, 1], 3)).map_err(|e| e.to_string())?;
            equal("no solution of x+y=3 mod 9", e.exists, false)?;
            let e = square_solution_exists(&spec(27, &[1, 1], 1)).map_err(|e| e.to_string())?;
            equal("witness mod 27", e.witness, Some(vec![1, 0]))?;
            let e = square_solution_exists(&spec(9, &[1, 1, 1], 6)).map_err(|e| e.to_string())?;
            equal("three squares mod 9", e.exists, true)
        }),
        ("square oracles", || {
            equal("convolution mod 27", oracle_square_convolution(&spec(27, &[1, 1], 1)), 4)?;
            equal("convolution 9, b=3", oracle_square_convolution(&spec(9, &[1, 1], 3)), 0)?;
            equal("convolution 9, b=2", oracle_square_convolution(&spec(9, &[1, 1], 2)), 3)
        }),
        ("square formula against enumeration", || {
            for n in [3u64, 9, 15, 25, 27, 45] {
                for a in [[1i64, 1], [1, 2], [2, 3], [3, 5]] {
                    for b in 0..n as i64 {
                        let s = spec(n, &a, b);
                        let want = oracle_count(&s, &Restriction::Square, &mut OracleBudget::default())
                            .map_err(|e| e.to_string())?;
                        equal(&format!("S_{n}({b}; {a:?})"), square(n, &a, b)?, want)?;
                    }
                }
            }
            Ok(())
        }),
        ("block order counts", || {
            let count = |n, blocks: &[(u64, i64)], b| {
                order_blocks_count(&BlockSpec::new(n, blocks, b).unwrap()).map(|r| r.count)
            };
            equal("n=6 blocks 2:2,2:3", count(6, &[(2, 2), (2, 3)], 5).map_err(|e| e.to_string())?, 63u32.into())?;
            equal("n=4 blocks 2:1,2:3", count(4, &[(2, 1), (2, 3)], 1).map_err(|e| e.to_string())?, 24u32.into())?;
            equal("singleton blocks", count(5, &[(1, 1), (1, 2), (1, 3)], 4).map_err(|e| e.to_string())?, 25u32.into())?;
            let blocks = spec(6, &[2, 2, 3, 3], 5);
            equal(
                "enumeration n=6",
                oracle_count(&blocks, &Restriction::Blocks(vec![2, 2]), &mut OracleBudget::default()).map_err(|e| e.to_string())?,
                63,
            )
        }),
        ("strict order and generating function", || {
            let q = Query::Strict { n: 5, k: 2, a: 1, b: 0 };
            equal("N_5(2,1,0)", q.formula().map_err(|e| e.to_string())?.count, 2.into())?;
            equal("gf distinct", gf_count(5, &[0, 1, 2, 3, 4], 2, 0, true), 2u32.into())?;
            equal("gf single part", gf_count(4, &[0, 1, 2, 3], 1, 3, false), 1u32.into())
        }),
        ("square decomposition identity", || {
            for p in [3u64, 5, 7] {
                for ell in 1..=3u32 {
                    for m in 0..p.pow(ell) as i64 {
                        let (lhs, rhs) = square_decomposition_identity(p, ell, m);
                        close(&format!("p={p} ell={ell} m={m}"), lhs, rhs)?;
                    }
                }
            }
            Ok(())
        }),
        ("product identity", || {
            for n in 1..=12u64 {
                for a in 0..n as i64 {
                    for m in 0..n as i64 {
                        let diff = product_identity_check(n, a, m);
                        if diff >= TOL {
                            return Err(format!("n={n} a={a} m={m}: difference {diff:e}"));
                        }
                    }
                }
            }
            Ok(())
        }),
        ("dft round trip", || {
            let ones = PeriodicFunction::from_integers(&[1; 5]);
            let values = [3i64, -1, 4, 1, -5, 9, 2, 6, -5, 3, 5, 8];
            for (f, n) in [(ones, 5i64), (PeriodicFunction::from_integers(&values), 12)] {
                let fhat = PeriodicFunction::from_fn(n as u64, |j| dft(&f, j as i64));
                for j in 0..n {
                    close(&format!("n={n} j={j}"), idft(&fhat, j), f.at(j))?;
                }
            }
            Ok(())
        }),
    ]
}

/// Prints one line per check and stops at the first failure.
pub fn run(out: &mut impl Write) -> std::io::Result<bool> {
    let list = checks();
    for (name, check) in &list {
        match check() {
            Ok(()) => writeln!(out, "ok   {name}")?,
            Err(detail) => {
                writeln!(out, "FAIL {name}: {detail}")?;
                return Ok(false);
            }
        }
    }
    writeln!(out, "selftest: {} checks passed", list.len())?;
    Ok(true)
}
