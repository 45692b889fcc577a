use lincong::counting::{order_blocks_count, order_blocks_count_general, BlockSpec};
use lincong::oracle::gf_blocks_count;

fn main() -> lincong::Result<()> {
    // 2x₁ + 2x₂ + 3x₃ + 3x₄ ≡ 5 (mod 6), x₁ ≥ x₂, x₃ ≥ x₄
    let spec = BlockSpec::new(6, &[(2, 2), (2, 3)], 5)?;
    println!("{}", order_blocks_count(&spec)?.count);

    let spec = BlockSpec::new(4, &[(2, 1), (2, 3)], 1)?;
    println!("{}", order_blocks_count(&spec)?.count);

    // gcds 1 and 3 differ, so only the divisor-tuple form applies
    let mixed = BlockSpec::new(12, &[(3, 1), (2, 3), (1, 4)], 7)?;
    let r = order_blocks_count_general(&mixed)?;
    println!(
        "mixed gcds: {} (residual {:.1e}), generating function {}",
        r.count,
        r.residual,
        gf_blocks_count(&mixed)
    );
    Ok(())
}
