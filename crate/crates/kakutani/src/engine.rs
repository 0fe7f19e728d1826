//! Length-class refinement engine.
//!
//! One refinement step splits exactly the intervals of maximal length,
//! so the engine groups intervals into classes keyed by their exact
//! length. A step pops the maximal class and splits its members in one
//! batch, which costs O(split count * log classes) instead of a full
//! scan of the partition. Children are merged back into the class map.
//!
//! [`Refiner`] tracks interval positions and can reconstruct the
//! partition; [`CountRefiner`] tracks only per-class counts (as big
//! integers), which is what makes the shortest/longest-length bounds
//! checkable for thousands of steps where the interval count is
//! astronomically large.

use crate::error::{Error, Result};
use crate::partition::{Convention, Partition, PointSet, DEFAULT_MAX_INTERVALS};
use crate::ratio::{decimal_string, one, sort_ratios, zero, Ratio, DEFAULT_SIG_DIGITS};
use crate::rule::SplitRule;
use num_bigint::BigUint;
use num_traits::Zero;
use std::collections::BTreeMap;

/// Per-step statistics: interval count k(n), shortest length a_n,
/// longest length A_n (which is also the diameter of the partition).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StepStats {
    pub n: usize,
    pub k_n: BigUint,
    pub a_n: Ratio,
    pub big_a_n: Ratio,
}

impl StepStats {
    /// diam pi_n = A_n.
    pub fn diam(&self) -> &Ratio {
        &self.big_a_n
    }

    pub fn k_usize(&self) -> usize {
        use num_traits::ToPrimitive;
        self.k_n.to_usize().unwrap_or(usize::MAX)
    }
}

/// Incremental refiner that keeps interval positions (left endpoints)
/// grouped by exact length.
#[derive(Debug, Clone)]
pub struct Refiner {
    rule: SplitRule,
    classes: BTreeMap<Ratio, Vec<Ratio>>,
    count: usize,
    step: usize,
    cap: usize,
}

impl Refiner {
    pub fn new(rule: SplitRule) -> Self {
        let mut classes = BTreeMap::new();
        classes.insert(one(), vec![zero()]);
        Self {
            rule,
            classes,
            count: 1,
            step: 0,
            cap: DEFAULT_MAX_INTERVALS,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn rule(&self) -> &SplitRule {
        &self.rule
    }

    /// Steps taken so far.
    pub fn step_index(&self) -> usize {
        self.step
    }

    /// Current interval count k(n).
    pub fn k(&self) -> usize {
        self.count
    }

    /// Performs one rho-refinement step and returns the statistics of
    /// the resulting partition.
    pub fn step(&mut self) -> Result<StepStats> {
        let (len, members) = self.classes.pop_last().expect("classes never empty");
        let grown = self.count + members.len() * (self.rule.k() - 1);
        if grown > self.cap {
            // put the class back so the refiner stays usable
            self.classes.insert(len, members);
            return Err(Error::ResourceLimit { cap: self.cap });
        }
        let child_lens: Vec<Ratio> = self.rule.ratios().iter().map(|a| &len * a).collect();
        let offsets: Vec<Ratio> = self.rule.breakpoints()[..self.rule.k()]
            .iter()
            .map(|r| &len * r)
            .collect();
        for lo in members {
            for (child_len, offset) in child_lens.iter().zip(&offsets) {
                self.classes
                    .entry(child_len.clone())
                    .or_default()
                    .push(&lo + offset);
            }
        }
        self.count = grown;
        self.step += 1;
        Ok(self.stats())
    }

    /// Statistics of the current partition.
    pub fn stats(&self) -> StepStats {
        StepStats {
            n: self.step,
            k_n: BigUint::from(self.count),
            a_n: self.classes.first_key_value().expect("non-empty").0.clone(),
            big_a_n: self.classes.last_key_value().expect("non-empty").0.clone(),
        }
    }

    /// Reconstructs the current partition (sorted breakpoints).
    pub fn partition(&self) -> Partition {
        let mut bps: Vec<Ratio> = Vec::with_capacity(self.count + 1);
        for members in self.classes.values() {
            bps.extend(members.iter().cloned());
        }
        bps.push(one());
        sort_ratios(&mut bps);
        Partition::new(bps).expect("refiner state is a valid partition")
    }

    /// Current point set under the given convention, sorted.
    pub fn points(&self, convention: Convention) -> PointSet {
        let mut points: Vec<Ratio> = Vec::with_capacity(self.count + 1);
        match convention {
            Convention::RightEndpoints => {
                for (len, members) in &self.classes {
                    points.extend(members.iter().map(|lo| lo + len));
                }
            }
            Convention::AllBreakpoints => {
                for members in self.classes.values() {
                    points.extend(members.iter().cloned());
                }
                points.push(one());
            }
        }
        sort_ratios(&mut points);
        PointSet { points, convention }
    }
}

/// Runs `steps` refinement steps from the trivial partition, recording
/// statistics at every step.
pub fn run(rule: &SplitRule, steps: usize) -> Result<(Partition, Vec<StepStats>)> {
    run_capped(rule, steps, DEFAULT_MAX_INTERVALS)
}

pub fn run_capped(rule: &SplitRule, steps: usize, cap: usize) -> Result<(Partition, Vec<StepStats>)> {
    if steps == 0 {
        return Err(Error::InvalidArgument("steps must be >= 1".into()));
    }
    let mut refiner = Refiner::new(rule.clone()).with_cap(cap);
    let mut stats = Vec::with_capacity(steps);
    for _ in 0..steps {
        stats.push(refiner.step()?);
    }
    Ok((refiner.partition(), stats))
}

/// Advances until k(n) >= min_points and returns that partition with
/// the statistics of the final step.
pub fn advance_to_count(rule: &SplitRule, min_points: usize) -> Result<(Partition, StepStats)> {
    if min_points < 2 {
        return Err(Error::InvalidArgument("min_points must be >= 2".into()));
    }
    let mut refiner = Refiner::new(rule.clone());
    let mut stats = refiner.stats();
    while refiner.k() < min_points {
        stats = refiner.step()?;
    }
    Ok((refiner.partition(), stats))
}

/// Kakutani's alpha-splitting: run with the two-part rule (alpha, 1-alpha).
pub fn kakutani(alpha: Ratio, steps: usize) -> Result<(Partition, Vec<StepStats>)> {
    let rule = SplitRule::kakutani(alpha)?;
    run(&rule, steps)
}

/// CSV export of step statistics: `n,k_n,a_n,A_n,a_n_dec,A_n_dec` with
/// exact fractions and 12-significant-digit decimals.
pub fn stats_csv(stats: &[StepStats]) -> String {
    let mut out = String::from("n,k_n,a_n,A_n,a_n_dec,A_n_dec\n");
    for s in stats {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            s.n,
            s.k_n,
            s.a_n,
            s.big_a_n,
            decimal_string(&s.a_n, DEFAULT_SIG_DIGITS),
            decimal_string(&s.big_a_n, DEFAULT_SIG_DIGITS),
        ));
    }
    out
}

/// Count-only refiner. Intervals carry an opaque tag (index into a small
/// tag set) that children inherit; per-(length, tag) counts are big
/// integers so the interval count may grow exponentially.
#[derive(Debug, Clone)]
pub struct CountRefiner {
    rule: SplitRule,
    classes: BTreeMap<Ratio, Vec<BigUint>>,
    tags: usize,
    k: BigUint,
    step: usize,
}

impl CountRefiner {
    /// Starts from the trivial partition with a single tag.
    pub fn new(rule: SplitRule) -> Self {
        Self::from_tagged(rule, vec![(one(), 0)], 1)
    }

    /// Starts from explicit (interval length, tag) atoms. Tags must be
    /// `< tags`. Useful for tracking how much of the mass stays inside a
    /// fixed union of starting intervals.
    pub fn from_tagged(rule: SplitRule, lengths: Vec<(Ratio, usize)>, tags: usize) -> Self {
        let mut classes: BTreeMap<Ratio, Vec<BigUint>> = BTreeMap::new();
        let mut k = BigUint::zero();
        for (len, tag) in lengths {
            assert!(tag < tags);
            let counts = classes.entry(len).or_insert_with(|| vec![BigUint::zero(); tags]);
            counts[tag] += 1u32;
            k += 1u32;
        }
        Self {
            rule,
            classes,
            tags,
            k,
            step: 0,
        }
    }

    pub fn step_index(&self) -> usize {
        self.step
    }

    pub fn k(&self) -> &BigUint {
        &self.k
    }

    /// Number of intervals carrying `tag`.
    pub fn tag_count(&self, tag: usize) -> BigUint {
        self.classes
            .values()
            .fold(BigUint::zero(), |acc, counts| acc + &counts[tag])
    }

    /// Total length carried by all intervals; stays exactly 1.
    pub fn total_length(&self) -> Ratio {
        let mut total = zero();
        for (len, counts) in &self.classes {
            let n: BigUint = counts.iter().sum();
            total += len * Ratio::from_integer(n.into());
        }
        total
    }

    /// One refinement step on counts.
    pub fn step(&mut self) -> StepStats {
        let (len, counts) = self.classes.pop_last().expect("classes never empty");
        let split: BigUint = counts.iter().sum();
        self.k += &split * BigUint::from(self.rule.k() - 1);
        for a in self.rule.ratios() {
            let child = &len * a;
            let entry = self
                .classes
                .entry(child)
                .or_insert_with(|| vec![BigUint::zero(); self.tags]);
            for (e, c) in entry.iter_mut().zip(&counts) {
                *e += c;
            }
        }
        self.step += 1;
        self.stats()
    }

    pub fn stats(&self) -> StepStats {
        StepStats {
            n: self.step,
            k_n: self.k.clone(),
            a_n: self.classes.first_key_value().expect("non-empty").0.clone(),
            big_a_n: self.classes.last_key_value().expect("non-empty").0.clone(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::iterate;
    use crate::ratio::ratio;

    fn rule(parts: &[(i64, i64)]) -> SplitRule {
        SplitRule::new(parts.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
    }

    #[test]
    fn dyadic_ten_steps() {
        let (p, stats) = run(&rule(&[(1, 2), (1, 2)]), 10).unwrap();
        assert_eq!(p.k(), 1024);
        let last = stats.last().unwrap();
        assert_eq!(last.a_n, ratio(1, 1024));
        assert_eq!(last.big_a_n, ratio(1, 1024));
    }

    #[test]
    fn engine_matches_naive_iterate() {
        for r in [
            rule(&[(1, 2), (1, 2)]),
            rule(&[(1, 3), (2, 3)]),
            rule(&[(1, 2), (1, 4), (1, 4)]),
            rule(&[(1, 6), (1, 3), (1, 2)]),
        ] {
            for n in 1..=12 {
                let (p, _) = run(&r, n).unwrap();
                assert_eq!(p, iterate(&r, n).unwrap(), "rule {r} step {n}");
            }
        }
    }

    #[test]
    fn three_part_rule_stats() {
        let (p, stats) = run(&rule(&[(1, 2), (1, 4), (1, 4)]), 2).unwrap();
        assert_eq!(p.k(), 5);
        let s = &stats[1];
        assert_eq!(s.big_a_n, ratio(1, 4));
        assert_eq!(s.a_n, ratio(1, 8));
    }

    #[test]
    fn kakutani_wrapper() {
        let (p, _) = kakutani(ratio(1, 3), 2).unwrap();
        assert_eq!(
            p.breakpoints(),
            &[ratio(0, 1), ratio(1, 3), ratio(5, 9), ratio(1, 1)]
        );
        let (direct, _) = run(&rule(&[(2, 5), (3, 5)]), 4).unwrap();
        let (wrapped, _) = kakutani(ratio(2, 5), 4).unwrap();
        assert_eq!(direct, wrapped);
    }

    #[test]
    fn advance_to_count_thresholds() {
        let (p, s) = advance_to_count(&rule(&[(1, 2), (1, 2)]), 1000).unwrap();
        assert_eq!(s.n, 10);
        assert_eq!(p.k(), 1024);

        let r = rule(&[(1, 3), (2, 3)]);
        let (_, s) = advance_to_count(&r, 100).unwrap();
        let (_, series) = run(&r, s.n).unwrap();
        assert!(series[s.n - 2].k_usize() < 100);
        assert!(series[s.n - 1].k_usize() >= 100);

        for r in [rule(&[(1, 2), (1, 2)]), rule(&[(1, 3), (2, 3)])] {
            let (_, s) = advance_to_count(&r, 2).unwrap();
            assert_eq!(s.n, 1);
        }
    }

    #[test]
    fn count_refiner_agrees_with_positions() {
        let r = rule(&[(1, 3), (2, 3)]);
        let mut counting = CountRefiner::new(r.clone());
        let mut full = Refiner::new(r);
        for _ in 0..20 {
            let a = counting.step();
            let b = full.step().unwrap();
            assert_eq!(a, b);
            assert_eq!(counting.total_length(), ratio(1, 1));
        }
    }

    #[test]
    fn resource_limit_is_recoverable() {
        let mut refiner = Refiner::new(rule(&[(1, 2), (1, 2)])).with_cap(16);
        for _ in 0..4 {
            refiner.step().unwrap();
        }
        assert!(matches!(refiner.step(), Err(Error::ResourceLimit { .. })));
        assert_eq!(refiner.k(), 16);
    }

    #[test]
    fn stats_csv_format() {
        let (_, stats) = run(&rule(&[(1, 2), (1, 2)]), 2).unwrap();
        let csv = stats_csv(&stats);
        let mut lines = csv.lines();
        assert_eq!(lines.next(), Some("n,k_n,a_n,A_n,a_n_dec,A_n_dec"));
        assert_eq!(lines.next(), Some("1,2,1/2,1/2,0.5,0.5"));
        assert_eq!(lines.next(), Some("2,4,1/4,1/4,0.25,0.25"));
    }
}
