//! The `verify` sweep driven from code instead of the command line.

use lincong::cli::{run_sweep, sweep_queries, VerifyMode};

fn main() -> lincong::Result<()> {
    let queries = sweep_queries(VerifyMode::Square, &[15, 21, 27], 2);
    let (rows, summary) = run_sweep(&queries, 1_000_000, 4)?;
    for row in rows.iter().filter(|r| r.b == 6).take(5) {
        println!("{}", serde_json::to_string(row).unwrap());
    }
    println!("{summary:?}");
    Ok(())
}
