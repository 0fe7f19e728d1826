//! Per-step statistics of a long refinement run, checked against the
//! shortest/longest-length bounds a_1 A_n <= a_n <= 1/n and
//! A_n <= 1/(n a_1), which hold exactly at every step.
//!
//! Run with: cargo run --release --example engine_stats

use kakutani::engine::CountRefiner;
use kakutani::prelude::*;

fn main() -> Result<()> {
    let rule = SplitRule::parse("1/2,1/3,1/6")?;
    let a1 = rule.min_ratio().clone();
    println!("rule: {rule}   a_1 = {a1}");
    println!("{:>5} {:>24} {:>14} {:>14}", "n", "k(n)", "a_n", "A_n");

    // The interval count grows exponentially, so track per-length counts
    // only (big integers) instead of interval positions.
    let mut refiner = CountRefiner::new(rule);
    for n in 1..=500usize {
        let s = refiner.step();
        assert!(&a1 * &s.big_a_n <= s.a_n);
        assert!(s.a_n <= ratio(1, n as i64));
        assert!(&s.big_a_n * ratio(n as i64, 1) * &a1 <= ratio(1, 1));
        if n % 100 == 0 || n <= 3 {
            println!(
                "{:>5} {:>24} {:>14} {:>14}",
                s.n,
                s.k_n.to_string(),
                s.a_n.to_string(),
                s.big_a_n.to_string(),
            );
        }
    }
    println!("all length bounds hold exactly for n <= 500");
    Ok(())
}
