//! Point-sequence constructions: sequential random reorderings of the
//! partition points, the lexicographic negative control, and the van der
//! Corput sequence, plus prefix-discrepancy tracking.
//!
//! # Randomness
//!
//! All randomness enters through a 64-bit [`Seed`]. Block `n` draws its
//! permutation from ChaCha8 keyed by `seed_from_u64(seed)` with the
//! ChaCha stream counter set to `n`, so extending `blocks` never
//! perturbs earlier blocks and the same seed reproduces the sequence on
//! any platform. The shuffle is Fisher-Yates; bounded integers are drawn
//! by the widening-multiply map `(x * bound) >> 64` on a fresh 64-bit
//! word, which is rejection-free (bias below bound/2^64, far beyond
//! statistical visibility for the block sizes involved).

use crate::discrepancy::report_of;
use crate::error::{Error, Result};
use crate::engine::Refiner;
use crate::partition::Convention;
use crate::ratio::{Ratio, decimal_string, fraction_string, DEFAULT_SIG_DIGITS};
use crate::rule::SplitRule;
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};
use serde_json::json;

/// Seed for the sequential random reordering; fully determines the
/// sampled permutations.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Seed(pub u64);

/// An ordered stream of points in [0,1]. When the sequence is built
/// block-by-block from a sequence of partitions, `block_offsets` holds
/// the cumulative counts K(n) = sum of k(i) for i <= n marking block
/// boundaries.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSequence {
    pub points: Vec<Ratio>,
    pub block_offsets: Option<Vec<usize>>,
}

impl PointSequence {
    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// The slice of block `n` (1-based), when block-structured.
    pub fn block(&self, n: usize) -> Option<&[Ratio]> {
        let offsets = self.block_offsets.as_ref()?;
        if n == 0 || n > offsets.len() {
            return None;
        }
        let start = if n == 1 { 0 } else { offsets[n - 2] };
        Some(&self.points[start..offsets[n - 1]])
    }
}

/// Which endpoints of each partition interval form a block.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockEndpoints {
    /// Right endpoints t_1..t_k (the W_n convention).
    Right,
    /// Left endpoints t_0..t_{k-1}, including 0; the convention of the
    /// classical lexicographic counterexample.
    Left,
}

fn bounded(rng: &mut ChaCha8Rng, bound: u64) -> u64 {
    ((rng.next_u64() as u128 * bound as u128) >> 64) as u64
}

fn fisher_yates(points: &mut [Ratio], rng: &mut ChaCha8Rng) {
    for i in (1..points.len()).rev() {
        let j = bounded(rng, (i + 1) as u64) as usize;
        points.swap(i, j);
    }
}

fn blocks_of(rule: &SplitRule, blocks: usize, endpoints: BlockEndpoints) -> Result<Vec<Vec<Ratio>>> {
    if blocks == 0 {
        return Err(Error::InvalidArgument("blocks must be >= 1".into()));
    }
    let mut refiner = Refiner::new(rule.clone());
    let mut out = Vec::with_capacity(blocks);
    for _ in 0..blocks {
        refiner.step()?;
        let block = match endpoints {
            BlockEndpoints::Right => refiner.points(Convention::RightEndpoints).points,
            BlockEndpoints::Left => {
                let mut all = refiner.points(Convention::AllBreakpoints).points;
                all.pop();
                all
            }
        };
        out.push(block);
    }
    Ok(out)
}

fn concat(blocks: Vec<Vec<Ratio>>) -> PointSequence {
    let mut points = Vec::with_capacity(blocks.iter().map(Vec::len).sum());
    let mut offsets = Vec::with_capacity(blocks.len());
    for block in blocks {
        points.extend(block);
        offsets.push(points.len());
    }
    PointSequence {
        points,
        block_offsets: Some(offsets),
    }
}

/// Concatenates, for n = 1..blocks, an independent uniform random
/// permutation of W_n, the right endpoints of rho^n omega. Deterministic
/// given the seed.
pub fn sequential_random_reordering(
    rule: &SplitRule,
    blocks: usize,
    seed: Seed,
) -> Result<PointSequence> {
    let mut parts = blocks_of(rule, blocks, BlockEndpoints::Right)?;
    for (i, block) in parts.iter_mut().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(seed.0);
        rng.set_stream((i + 1) as u64);
        fisher_yates(block, &mut rng);
    }
    Ok(concat(parts))
}

/// Lists each block's points in increasing magnitude: the lexicographic
/// (non-uniformly-distributed) sequential reordering.
pub fn lexicographic_reordering(
    rule: &SplitRule,
    blocks: usize,
    endpoints: BlockEndpoints,
) -> Result<PointSequence> {
    // blocks_of yields each block already sorted ascending
    Ok(concat(blocks_of(rule, blocks, endpoints)?))
}

/// The first `count` points of the van der Corput sequence: x_k is the
/// binary radical inverse of k (bit i of k, counted from 2^0,
/// contributes 2^(-i-1)), an exact rational with power-of-two
/// denominator.
pub fn van_der_corput(count: u64) -> PointSequence {
    let points = (1..=count)
        .map(|k| {
            let bits = 64 - k.leading_zeros();
            let numer = k.reverse_bits() >> (64 - bits);
            Ratio::new(BigInt::from(numer), BigInt::from(1u128 << bits))
        })
        .collect();
    PointSequence {
        points,
        block_offsets: None,
    }
}

/// Extreme discrepancy of each prefix {x_1..x_N} at the given
/// checkpoints.
pub fn prefix_discrepancy_series(
    seq: &PointSequence,
    checkpoints: &[usize],
) -> Result<Vec<(usize, Ratio)>> {
    let mut out = Vec::with_capacity(checkpoints.len());
    for &n in checkpoints {
        if n == 0 || n > seq.len() {
            return Err(Error::CheckpointOutOfRange {
                checkpoint: n,
                len: seq.len(),
            });
        }
        out.push((n, report_of(&seq.points[..n])?.extreme));
    }
    Ok(out)
}

/// One point per line; decimal by default, exact `p/q` when requested.
pub fn sequence_lines(seq: &PointSequence, exact: bool) -> String {
    let mut out = String::new();
    for p in &seq.points {
        if exact {
            out.push_str(&fraction_string(p));
        } else {
            out.push_str(&decimal_string(p, DEFAULT_SIG_DIGITS));
        }
        out.push('\n');
    }
    out
}

/// JSON export: array of decimal points, block offsets when present, and
/// exact fractions under `exact`.
pub fn sequence_json(seq: &PointSequence) -> serde_json::Value {
    let mut obj = json!({
        "points": seq.points.iter().map(crate::ratio::to_f64).collect::<Vec<_>>(),
        "exact": seq.points.iter().map(|p| p.to_string()).collect::<Vec<_>>(),
    });
    if let Some(offsets) = &seq.block_offsets {
        obj["block_offsets"] = json!(offsets);
    }
    obj
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::{ratio, sort_ratios};

    fn rule(parts: &[(i64, i64)]) -> SplitRule {
        SplitRule::new(parts.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    #[test]
    fn block_contents_are_seed_independent() {
        let r = rule(&[(1, 3), (2, 3)]);
        for seed in [0u64, 1, 42, u64::MAX] {
            let seq = sequential_random_reordering(&r, 2, Seed(seed)).unwrap();
            let mut b1 = seq.block(1).unwrap().to_vec();
            sort_ratios(&mut b1);
            assert_eq!(b1, vec![ratio(1, 3), ratio(1, 1)]);
            let mut b2 = seq.block(2).unwrap().to_vec();
            sort_ratios(&mut b2);
            assert_eq!(b2, vec![ratio(1, 3), ratio(5, 9), ratio(1, 1)]);
        }
    }

    #[test]
    fn reordering_is_deterministic() {
        let r = rule(&[(1, 2), (1, 2)]);
        let a = sequential_random_reordering(&r, 6, Seed(7)).unwrap();
        let b = sequential_random_reordering(&r, 6, Seed(7)).unwrap();
        assert_eq!(a, b);
        let c = sequential_random_reordering(&r, 6, Seed(8)).unwrap();
        assert_ne!(a.points, c.points);
    }

    #[test]
    fn extending_blocks_keeps_earlier_blocks() {
        let r = rule(&[(1, 2), (1, 2)]);
        let short = sequential_random_reordering(&r, 4, Seed(3)).unwrap();
        let long = sequential_random_reordering(&r, 7, Seed(3)).unwrap();
        assert_eq!(short.points[..], long.points[..short.len()]);
    }

    #[test]
    fn lexicographic_blocks_are_sorted() {
        let r = rule(&[(1, 2), (1, 2)]);
        let seq = lexicographic_reordering(&r, 3, BlockEndpoints::Left).unwrap();
        assert_eq!(
            seq.block(2).unwrap(),
            &[ratio(0, 1), ratio(1, 4), ratio(1, 2), ratio(3, 4)]
        );
        for n in 1..=3 {
            let block = seq.block(n).unwrap();
            assert!(block.windows(2).all(|w| w[0] < w[1]));
        }
    }

    #[test]
    fn van_der_corput_first_points() {
        let seq = van_der_corput(7);
        let expect: Vec<Ratio> = [(1, 2), (1, 4), (3, 4), (1, 8), (5, 8), (3, 8), (7, 8)]
            .iter()
            .map(|&(n, d)| ratio(n, d))
            .collect();
        assert_eq!(seq.points, expect);
    }

    #[test]
    fn van_der_corput_prefixes_are_grids() {
        for m in 1..=10u32 {
            let n = (1u64 << m) - 1;
            let mut pts = van_der_corput(n).points;
            sort_ratios(&mut pts);
            let grid: Vec<Ratio> = (1..(1i64 << m)).map(|i| ratio(i, 1i64 << m)).collect();
            assert_eq!(pts, grid);
        }
    }

    #[test]
    fn van_der_corput_stays_inside_unit_interval() {
        for p in &van_der_corput(200).points {
            assert!(p > &ratio(0, 1) && p < &ratio(1, 1));
        }
    }

    #[test]
    fn prefix_series_checks_range() {
        let seq = van_der_corput(7);
        assert!(prefix_discrepancy_series(&seq, &[8]).is_err());
        let series = prefix_discrepancy_series(&seq, &[1, 3, 7]).unwrap();
        // the 7-point prefix is the grid {i/8}: extreme discrepancy 2/8
        // (witness [1/8, 7/8+)), star discrepancy 1/8
        assert_eq!(series[2].1, ratio(1, 4));
        assert_eq!(report_of(&seq.points).unwrap().star, ratio(1, 8));
    }

    #[test]
    fn constant_sequence_never_uniform() {
        let seq = PointSequence {
            points: vec![ratio(1, 2); 50],
            block_offsets: None,
        };
        let series = prefix_discrepancy_series(&seq, &[1, 10, 50]).unwrap();
        for (_, d) in series {
            assert!(d >= ratio(1, 2));
        }
    }
}
