//! From partitions to point sequences: reorder the endpoint blocks of
//! the successive partitions. A seeded uniform shuffle of each block
//! gives a sequence whose prefix discrepancy keeps shrinking; the
//! deterministic lexicographic (sorted) order does not, because its
//! mid-block prefixes pile all points into an initial segment.
//!
//! Run with: cargo run --release --example reordering

use kakutani::prelude::*;
use kakutani::ratio::to_f64;

fn main() -> Result<()> {
    let rule = SplitRule::parse("1/3,2/3")?;
    let blocks = 12;

    let random = sequential_random_reordering(&rule, blocks, Seed(42))?;
    println!(
        "{} blocks of rule {rule}: {} points per sequence",
        blocks,
        random.len()
    );
    println!("first 8 random points (seed 42):");
    for x in &random.points[..8] {
        println!("  {x}");
    }

    // Compare prefix discrepancies mid-block, where the sorted order is
    // at its worst: halfway through a block the lexicographic sequence
    // has emitted only the left half of [0,1], so its discrepancy stays
    // above 1/6 forever while the random reordering keeps decaying.
    let rule = SplitRule::parse("1/2,1/2")?;
    let blocks = 10;
    let random = sequential_random_reordering(&rule, blocks, Seed(42))?;
    let lex = lexicographic_reordering(&rule, blocks, BlockEndpoints::Left)?;
    // block m holds 2^m points, so block m starts at offset 2^m - 2
    let checkpoints: Vec<usize> = (4..=blocks).map(|m| (1 << m) - 2 + (1 << (m - 1))).collect();
    let rand_series = prefix_discrepancy_series(&random, &checkpoints)?;
    let lex_series = prefix_discrepancy_series(&lex, &checkpoints)?;
    println!("\nhalving rule, prefixes cut mid-block:");
    println!("{:>8} {:>12} {:>12}", "N", "D (random)", "D (lex)");
    for ((n, dr), (_, dl)) in rand_series.iter().zip(&lex_series) {
        println!("{:>8} {:>12.6} {:>12.6}", n, to_f64(dr), to_f64(dl));
        assert!(to_f64(dl) > 1.0 / 6.0);
    }

    // Same seed, same sequence — all randomness enters through the seed.
    let again = sequential_random_reordering(&rule, blocks, Seed(42))?;
    assert_eq!(random.points, again.points);
    println!("\nreordering with the same seed is reproducible");
    Ok(())
}
