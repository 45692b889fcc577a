use crate::characters::square_indicator;
use crate::counting::CongruenceSpec;

fn cyclic_convolve(x: &[u64], y: &[u64]) -> Vec<u64> {
    let n = x.len();
    let mut out = vec![0u64; n];
    for (i, &xi) in x.iter().enumerate() {
        if xi == 0 {
            continue;
        }
        for (j, &yj) in y.iter().enumerate() {
            out[(i + j) % n] += xi * yj;
        }
    }
    out
}

/// Square-solution count from cyclic convolutions of the per-variable
/// distributions of `aᵢx mod n` over square `x`.
pub fn oracle_square_convolution(spec: &CongruenceSpec) -> u64 {
    let n = spec.n();
    let indicator: Vec<u64> = (0..n).map(|r| square_indicator(n, r as i64) as u64).collect();
    let mut acc: Option<Vec<u64>> = None;
    for &a in spec.coeffs() {
        let mut v = vec![0u64; n as usize];
        for x in 0..n {
            if indicator[x as usize] == 1 {
                v[((a as u128 * x as u128) % n as u128) as usize] += 1;
            }
        }
        acc = Some(match acc {
            None => v,
            Some(prev) => cyclic_convolve(&prev, &v),
        });
    }
    acc.map_or(0, |hist| hist[spec.b() as usize])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{oracle_count, OracleBudget, Restriction};

    #[test]
    fn examples() {
        let f = |n, a: &[i64], b| oracle_square_convolution(&CongruenceSpec::new(n, a, b).unwrap());
        assert_eq!(f(27, &[1, 1], 1), 4);
        assert_eq!(f(9, &[1, 1], 3), 0);
        assert_eq!(f(9, &[1, 1], 2), 3);
    }

    #[test]
    fn agrees_with_enumeration() {
        for n in 1..=30u64 {
            for a in [vec![1i64, 1], vec![2, 3], vec![1, 4, 6], vec![0, 5]] {
                for b in 0..n as i64 {
                    let spec = CongruenceSpec::new(n, &a, b).unwrap();
                    let direct = oracle_count(&spec, &Restriction::Square, &mut OracleBudget::default()).unwrap();
                    assert_eq!(oracle_square_convolution(&spec), direct, "n={n} a={a:?} b={b}");
                }
            }
        }
    }
}
