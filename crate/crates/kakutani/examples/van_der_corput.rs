//! The van der Corput sequence: the classical low-discrepancy sequence,
//! obtained by reordering the binary-refinement blocks so that every
//! prefix of length 2^m - 1 is the uniform grid {i/2^m}.
//!
//! Run with: cargo run --example van_der_corput

use kakutani::prelude::*;
use kakutani::ratio::to_f64;

fn main() -> Result<()> {
    let seq = van_der_corput(15);
    println!("first 15 points:");
    for x in &seq.points {
        println!("  {x}");
    }

    // Star discrepancy of the prefixes: N D*_N stays below log2(N+1).
    println!("\n{:>6} {:>12} {:>10}", "N", "D*_N", "N D*_N");
    for m in 1..=12u32 {
        let n = (1u64 << m) - 1;
        let prefix = &van_der_corput(n).points;
        let report = kakutani::discrepancy::report_of(prefix)?;
        let scaled = ratio(n as i64, 1) * &report.star;
        println!("{:>6} {:>12} {:>10.4}", n, report.star.to_string(), to_f64(&scaled));
        assert_eq!(report.star, ratio(1, 1 << m));
    }
    println!("\ngrid prefixes: D* = 2^-m exactly at N = 2^m - 1");
    Ok(())
}
