//! Discrepancy convergence: the extreme discrepancy of the successive
//! partitions' endpoint sets goes to zero, which is what "uniformly
//! distributed sequence of partitions" means.
//!
//! Run with: cargo run --release --example convergence

use kakutani::analysis::{convergence_csv, convergence_report};
use kakutani::prelude::*;

fn main() -> Result<()> {
    for literal in ["1/2,1/2", "1/3,2/3", "2/5,3/5", "1/2,1/4,1/4"] {
        let rule = SplitRule::parse(literal)?;
        let rows = convergence_report(&rule, &[1, 2, 4, 8, 16])?;
        println!("rule {literal}:");
        print!("{}", convergence_csv(&rows));
        println!();
    }

    // Halving is the textbook case: D at step n is exactly 2^-n.
    let rule = SplitRule::parse("1/2,1/2")?;
    for row in convergence_report(&rule, &[1, 2, 3, 4, 5])? {
        assert_eq!(row.report.extreme, ratio(1, 1 << row.n));
    }
    println!("halving: D = 2^-n exactly");
    Ok(())
}
