//! The oracles checked against each other and against the closed forms
//! that have no complex arithmetic.

use num_bigint::BigInt;
use proptest::prelude::*;

use lincong::cli::nondecreasing;
use lincong::counting::{lehmer_count, BlockSpec, CongruenceSpec};
use lincong::oracle::{
    gf_blocks_count, oracle_count, oracle_distribution, oracle_square_convolution, CyclicPoly,
    OracleBudget, Representatives, Restriction,
};

fn dist(spec: &CongruenceSpec, r: Restriction) -> Vec<u64> {
    oracle_distribution(spec, &r, &mut OracleBudget::default(), Representatives::ZeroBased).unwrap()
}

#[test]
fn distinct_parts_generating_function_matches_strict_enumeration() {
    for n in 1..=20u64 {
        for k in 1..=4usize {
            for a in 0..n {
                let mut poly = CyclicPoly::one(n, k);
                for j in 1..=n {
                    poly.mul_one_minus(a * j % n);
                }
                let sign = if k % 2 == 0 { 1 } else { -1 };
                let hist = dist(&CongruenceSpec::new(n, &vec![a as i64; k], 0).unwrap(), Restriction::StrictOrder);
                for b in 0..n {
                    assert_eq!(poly.coeff(k, b as i64) * sign, BigInt::from(hist[b as usize]), "n={n} k={k} a={a} b={b}");
                }
            }
        }
    }
}

#[test]
fn unrestricted_enumeration_matches_lehmer() {
    for n in 1..=30u64 {
        let residues: Vec<u64> = (0..n).collect();
        for k in 1..=3 {
            for a in nondecreasing(&residues, k) {
                let a: Vec<i64> = a.iter().map(|&x| x as i64).collect();
                let base = CongruenceSpec::new(n, &a, 0).unwrap();
                let hist = dist(&base, Restriction::All);
                for b in 0..n {
                    assert_eq!(lehmer_count(&base.with_target(b as i64)).count, hist[b as usize].into());
                }
            }
        }
    }
}

proptest! {
    #[test]
    fn square_oracles_agree(n in 1u64..60, a in prop::collection::vec(0i64..60, 1..4), b in 0i64..60) {
        let spec = CongruenceSpec::new(n, &a, b).unwrap();
        let enumerated = oracle_count(&spec, &Restriction::Square, &mut OracleBudget::default()).unwrap();
        prop_assert_eq!(oracle_square_convolution(&spec), enumerated);
    }

    #[test]
    fn block_generating_function_matches_enumeration(
        n in 1u64..9,
        blocks in prop::collection::vec((1u64..4, 0i64..9), 1..4),
        b in 0i64..9,
    ) {
        let spec = BlockSpec::new(n, &blocks, b).unwrap();
        let enumerated = oracle_count(&spec.to_congruence(), &Restriction::Blocks(spec.sizes()), &mut OracleBudget::default()).unwrap();
        prop_assert_eq!(gf_blocks_count(&spec), enumerated.into());
    }

    #[test]
    fn representatives_do_not_change_ordered_counts(
        n in 1u64..10,
        sizes in prop::collection::vec(1u64..4, 1..3),
        coeff in 0i64..10,
    ) {
        let k = sizes.iter().sum::<u64>() as usize;
        let spec = CongruenceSpec::new(n, &vec![coeff; k], 0).unwrap();
        for r in [Restriction::Blocks(sizes.clone()), Restriction::StrictOrder] {
            let zero = oracle_distribution(&spec, &r, &mut OracleBudget::default(), Representatives::ZeroBased).unwrap();
            let one = oracle_distribution(&spec, &r, &mut OracleBudget::default(), Representatives::OneBased).unwrap();
            prop_assert_eq!(zero, one);
        }
    }
}
