//! Starting matters: refining from {0, 2/5, 1} by halving never becomes
//! uniformly distributed. The two sides take turns being subdivided, so
//! the empirical measure nu_n([0, 2/5)) oscillates between 1/2 (even n)
//! and 1/3 (odd n) instead of converging to lambda([0, 2/5)) = 2/5.
//!
//! Run with: cargo run --release --example counterexample

use kakutani::prelude::*;
use kakutani::ratio::to_f64;

fn main() -> Result<()> {
    let rows = counterexample_series(60)?;
    println!("{:>4} {:>14} {:>10}", "n", "nu_n([0,2/5))", "decimal");
    for row in rows.iter().take(8).chain(rows.iter().skip(54)) {
        println!(
            "{:>4} {:>14} {:>10.6}",
            row.n,
            row.nu_left.to_string(),
            to_f64(&row.nu_left)
        );
    }

    let last = &rows[rows.len() - 1];
    let prev = &rows[rows.len() - 2];
    println!(
        "\ntail gap |nu_{} - nu_{}| = {:.4} — no limit, never 2/5",
        prev.n,
        last.n,
        (to_f64(&last.nu_left) - to_f64(&prev.nu_left)).abs()
    );
    Ok(())
}
