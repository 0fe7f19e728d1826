//! Built-in verification suites behind `kakutani verify`.
//!
//! Each suite checks one of the headline mathematical claims at desk
//! scale: exact identities where the mathematics is exact, and fixed
//! empirical thresholds for the asymptotic/almost-sure statements. The
//! integration test suite runs exactly these.

use crate::analysis::{density_bounds_check, counterexample_series, DensityStatus};
use crate::discrepancy::report_of;
use crate::engine::{kakutani, CountRefiner, Refiner};
use crate::error::Error;
use crate::partition::Convention;
use crate::ratio::{ratio, sort_ratios, to_f64, Ratio};
use crate::rule::SplitRule;
use crate::sequences::{
    lexicographic_reordering, sequential_random_reordering, van_der_corput, BlockEndpoints, Seed,
};
use num_bigint::BigInt;
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

/// Outcome of one suite.
#[derive(Debug, Clone)]
pub struct SuiteResult {
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

impl SuiteResult {
    fn pass(name: &'static str, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed: true,
            detail: detail.into(),
        }
    }

    fn fail(name: &'static str, detail: impl Into<String>) -> Self {
        Self {
            name,
            passed: false,
            detail: detail.into(),
        }
    }

    fn check(name: &'static str, ok: bool, detail: impl Into<String>) -> Self {
        if ok {
            Self::pass(name, detail)
        } else {
            Self::fail(name, detail)
        }
    }
}

pub const SUITE_NAMES: [&str; 11] = [
    "dyadic",
    "kakutani-prefix",
    "length-bounds",
    "convergence",
    "density-bounds",
    "counterexample",
    "discrepancy-oracle",
    "reordering",
    "lexicographic",
    "van-der-corput",
    "permutation-uniformity",
];

/// Runs one suite by name.
pub fn run_suite(name: &str) -> Option<SuiteResult> {
    Some(match name {
        "dyadic" => dyadic_identity(),
        "kakutani-prefix" => kakutani_prefix(),
        "length-bounds" => length_bounds(),
        "convergence" => convergence(),
        "density-bounds" => density_bounds(),
        "counterexample" => counterexample_suite(),
        "discrepancy-oracle" => discrepancy_oracle(),
        "reordering" => reordering(),
        "lexicographic" => lexicographic(),
        "van-der-corput" => vdc_suite(),
        "permutation-uniformity" => permutation_uniformity(),
        _ => return None,
    })
}

/// Runs every suite in order.
pub fn run_all() -> Vec<SuiteResult> {
    SUITE_NAMES
        .iter()
        .map(|name| run_suite(name).expect("known name"))
        .collect()
}

fn rule_of(parts: &[(i64, i64)]) -> SplitRule {
    SplitRule::new(parts.iter().map(|&(n, d)| ratio(n, d)).collect()).unwrap()
}

/// The fixed rule matrix the empirical suites run over.
pub fn rule_matrix() -> Vec<SplitRule> {
    vec![
        rule_of(&[(1, 2), (1, 2)]),
        rule_of(&[(1, 3), (2, 3)]),
        rule_of(&[(2, 5), (3, 5)]),
        rule_of(&[(1, 2), (1, 4), (1, 4)]),
        rule_of(&[(1, 6), (1, 3), (1, 2)]),
    ]
}

/// Deterministic random rules with k <= 4 parts and small denominators.
fn random_rules(count: usize, seed: u64) -> Vec<SplitRule> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bounded = |n: u64| ((rng.next_u64() as u128 * n as u128) >> 64) as u64;
    let mut rules = Vec::with_capacity(count);
    while rules.len() < count {
        let k = 2 + bounded(3) as usize; // 2..=4
        let q = 5 + bounded(20) as i64; // 5..=24
        let mut cuts: Vec<i64> = Vec::new();
        while cuts.len() < k - 1 {
            let c = 1 + bounded((q - 1) as u64) as i64;
            if !cuts.contains(&c) {
                cuts.push(c);
            }
        }
        cuts.sort_unstable();
        let mut parts = Vec::with_capacity(k);
        let mut prev = 0i64;
        for c in &cuts {
            parts.push(ratio(c - prev, q));
            prev = *c;
        }
        parts.push(ratio(q - prev, q));
        rules.push(SplitRule::new(parts).expect("cuts are valid"));
    }
    rules
}

// ---------------------------------------------------------------------
// suites

/// Dyadic identity: halving yields the uniform 2^n grid with
/// D_{W_n} = 2^-n exactly, n <= 12.
fn dyadic_identity() -> SuiteResult {
    const NAME: &str = "dyadic";
    let rule = rule_of(&[(1, 2), (1, 2)]);
    let mut refiner = Refiner::new(rule);
    for n in 1..=12usize {
        refiner.step().unwrap();
        let p = refiner.partition();
        let denom = 1i64 << n;
        let grid: Vec<Ratio> = (0..=denom).map(|i| ratio(i, denom)).collect();
        if p.breakpoints() != grid {
            return SuiteResult::fail(NAME, format!("level {n} is not the uniform grid"));
        }
        let d = report_of(&refiner.points(Convention::RightEndpoints).points)
            .unwrap()
            .extreme;
        if d != ratio(1, denom) {
            return SuiteResult::fail(NAME, format!("level {n}: D = {d}, expected 1/{denom}"));
        }
    }
    SuiteResult::pass(NAME, "grid and D = 2^-n exact for n <= 12")
}

/// kappa_1 and kappa_2 for alpha = 1/3 match the known prefixes.
fn kakutani_prefix() -> SuiteResult {
    const NAME: &str = "kakutani-prefix";
    let (k1, _) = kakutani(ratio(1, 3), 1).unwrap();
    let (k2, _) = kakutani(ratio(1, 3), 2).unwrap();
    let ok1 = k1.breakpoints() == [ratio(0, 1), ratio(1, 3), ratio(1, 1)];
    let ok2 = k2.breakpoints() == [ratio(0, 1), ratio(1, 3), ratio(5, 9), ratio(1, 1)];
    SuiteResult::check(
        NAME,
        ok1 && ok2,
        "kappa_1 = {0,1/3,1}, kappa_2 = {0,1/3,5/9,1}",
    )
}

/// Shortest/longest length bounds: a_1 A_n <= a_n, a_n <= 1/n and
/// A_n <= 1/(n a_1) exactly for n <= 2000 over the matrix plus 20
/// random rules.
fn length_bounds() -> SuiteResult {
    const NAME: &str = "length-bounds";
    const STEPS: usize = 2000;
    let mut rules = rule_matrix();
    rules.extend(random_rules(20, 0x4b414b55));
    for rule in &rules {
        let a1 = rule.min_ratio().clone();
        let mut refiner = CountRefiner::new(rule.clone());
        let mut prev_max = ratio(2, 1);
        let mut prev_k = num_bigint::BigUint::from(0u32);
        for n in 1..=STEPS {
            let s = refiner.step();
            let n_ratio = ratio(n as i64, 1);
            if &a1 * &s.big_a_n > s.a_n {
                return SuiteResult::fail(NAME, format!("{rule}: a_1 A_n > a_n at n={n}"));
            }
            if s.a_n > ratio(1, n as i64) {
                return SuiteResult::fail(NAME, format!("{rule}: a_n > 1/n at n={n}"));
            }
            if &s.big_a_n * &n_ratio * &a1 > ratio(1, 1) {
                return SuiteResult::fail(NAME, format!("{rule}: A_n > 1/(n a_1) at n={n}"));
            }
            if s.big_a_n >= prev_max {
                return SuiteResult::fail(NAME, format!("{rule}: A_n not decreasing at n={n}"));
            }
            if s.k_n <= prev_k {
                return SuiteResult::fail(NAME, format!("{rule}: k(n) not increasing at n={n}"));
            }
            prev_max = s.big_a_n.clone();
            prev_k = s.k_n.clone();
            if n % 200 == 0 && refiner.total_length() != ratio(1, 1) {
                return SuiteResult::fail(NAME, format!("{rule}: lengths do not sum to 1 at n={n}"));
            }
        }
    }
    SuiteResult::pass(
        NAME,
        format!("exact for n <= {STEPS} across {} rules", rules.len()),
    )
}

/// Empirical uniform distribution: D_{W_n} dips below 0.05 within
/// k(n) <= 1e5 and the final checkpoint is at most 1/5 of the first.
fn convergence() -> SuiteResult {
    const NAME: &str = "convergence";
    const K_CAP: usize = 100_000;
    let targets = [10usize, 100, 1_000, 10_000];
    for rule in rule_matrix() {
        let mut refiner = Refiner::new(rule.clone()).with_cap(K_CAP);
        let mut series: Vec<(usize, Ratio)> = Vec::new();
        for &target in &targets {
            while refiner.k() < target {
                refiner.step().unwrap();
            }
            let d = report_of(&refiner.points(Convention::RightEndpoints).points)
                .unwrap()
                .extreme;
            series.push((refiner.k(), d));
        }
        // as far as the cap allows
        loop {
            match refiner.step() {
                Ok(_) => {}
                Err(Error::ResourceLimit { .. }) => break,
                Err(e) => return SuiteResult::fail(NAME, format!("{rule}: {e}")),
            }
        }
        let d = report_of(&refiner.points(Convention::RightEndpoints).points)
            .unwrap()
            .extreme;
        series.push((refiner.k(), d));
        let min = series.iter().map(|(_, d)| d).min().unwrap();
        if min >= &ratio(1, 20) {
            return SuiteResult::fail(NAME, format!("{rule}: min D = {} >= 0.05", to_f64(min)));
        }
        let first = &series.first().unwrap().1;
        let last = &series.last().unwrap().1;
        if last * ratio(5, 1) > *first {
            return SuiteResult::fail(
                NAME,
                format!(
                    "{rule}: final D {} not <= first/5 ({})",
                    to_f64(last),
                    to_f64(first)
                ),
            );
        }
    }
    SuiteResult::pass(NAME, "D < 0.05 within k <= 1e5 and final <= first/5 on the matrix")
}

/// Exact density bounds a_1 lambda(J) <= nu_n(J) <= lambda(J)/a_1 on 50
/// sampled rho-adic intervals per rule, once subdivided.
fn density_bounds() -> SuiteResult {
    const NAME: &str = "density-bounds";
    let mut rng = ChaCha8Rng::seed_from_u64(0x44454e53);
    let mut bounded = |n: u64| ((rng.next_u64() as u128 * n as u128) >> 64) as u64;
    for rule in rule_matrix() {
        let addresses: Vec<Vec<usize>> = (0..50)
            .map(|_| {
                let len = 1 + bounded(3) as usize;
                (0..len).map(|_| 1 + bounded(rule.k() as u64) as usize).collect()
            })
            .collect();
        // grow n until every sampled interval is subdivided
        let mut n = 16;
        loop {
            let checks = density_bounds_check(&rule, n, &addresses).unwrap();
            if checks.iter().any(|c| c.status == DensityStatus::NotYetSubdivided) {
                n *= 2;
                if n > 4096 {
                    return SuiteResult::fail(NAME, format!("{rule}: intervals never subdivided"));
                }
                continue;
            }
            if let Some(bad) = checks.iter().find(|c| c.status != DensityStatus::Passed) {
                return SuiteResult::fail(
                    NAME,
                    format!("{rule}: bound failed on {} (nu = {})", bad.interval, bad.nu),
                );
            }
            break;
        }
    }
    SuiteResult::pass(NAME, "exact bounds on 50 sampled intervals per matrix rule")
}

/// The alternating starting-partition experiment: even/odd tails of
/// nu_n([0,2/5)) settle within 0.02 of {1/2, 1/3} and the sequence
/// oscillates with gap > 0.1.
fn counterexample_suite() -> SuiteResult {
    const NAME: &str = "counterexample";
    const STEPS: usize = 400;
    let rows = counterexample_series(STEPS).unwrap();
    let tail = &rows[STEPS * 3 / 4..];
    let evens: Vec<f64> = tail
        .iter()
        .filter(|r| r.n % 2 == 0)
        .map(|r| to_f64(&r.nu_left))
        .collect();
    let odds: Vec<f64> = tail
        .iter()
        .filter(|r| r.n % 2 == 1)
        .map(|r| to_f64(&r.nu_left))
        .collect();
    let near = |v: &[f64], target: f64| v.iter().all(|x| (x - target).abs() <= 0.02);
    let pair_ok = (near(&evens, 0.5) && near(&odds, 1.0 / 3.0))
        || (near(&evens, 1.0 / 3.0) && near(&odds, 0.5));
    let mean = |v: &[f64]| v.iter().sum::<f64>() / v.len() as f64;
    let gap = (mean(&evens) - mean(&odds)).abs();
    SuiteResult::check(
        NAME,
        pair_ok && gap > 0.1,
        format!(
            "tail means {:.4}/{:.4}, oscillation gap {:.4}",
            mean(&evens),
            mean(&odds),
            gap
        ),
    )
}

/// Brute-force oracle over all one-sided-limit endpoint pairs. Counts
/// via binary search on the sorted points; enumeration is exhaustive and
/// independent of the sup-inf scan used by the fast path.
fn brute_force_discrepancies(points: &[Ratio]) -> (Ratio, Ratio) {
    let mut sorted = points.to_vec();
    sort_ratios(&mut sorted);
    let n = Ratio::from_integer(BigInt::from(points.len()));
    // endpoint = (x, just_above)
    let mut endpoints: Vec<(Ratio, bool)> = vec![(ratio(0, 1), false), (ratio(1, 1), false)];
    for (i, p) in sorted.iter().enumerate() {
        if i > 0 && &sorted[i - 1] == p {
            continue;
        }
        if p > &ratio(0, 1) && p < &ratio(1, 1) {
            endpoints.push((p.clone(), false));
        }
        if p < &ratio(1, 1) {
            endpoints.push((p.clone(), true));
        }
    }
    // count of points in [a, b) honouring one-sided limits
    let index = |(x, above): &(Ratio, bool)| -> usize {
        if *above {
            sorted.partition_point(|p| p <= x)
        } else {
            sorted.partition_point(|p| p < x)
        }
    };
    let mut extreme = ratio(0, 1);
    let mut star = ratio(0, 1);
    let zero_at = (ratio(0, 1), false);
    for a in &endpoints {
        for b in &endpoints {
            if a >= b {
                continue;
            }
            let count = index(b) - index(a);
            let mut d = Ratio::from_integer(BigInt::from(count)) / &n - (&b.0 - &a.0);
            if d < ratio(0, 1) {
                d = -d;
            }
            if a == &zero_at && d > star {
                star = d.clone();
            }
            if d > extreme {
                extreme = d;
            }
        }
    }
    (extreme, star)
}

fn random_point_sets(count: usize, max_n: usize, seed: u64) -> Vec<Vec<Ratio>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bounded = |n: u64| ((rng.next_u64() as u128 * n as u128) >> 64) as u64;
    (0..count)
        .map(|_| {
            let n = 1 + bounded(max_n as u64) as usize;
            let denom = 2 + bounded(1_000_000) as i64;
            (0..n)
                .map(|_| ratio(bounded(denom as u64 + 1) as i64, denom))
                .collect()
        })
        .collect()
}

/// Fast discrepancy equals the brute-force supremum exactly on 500
/// random rational point sets with n <= 200.
fn discrepancy_oracle() -> SuiteResult {
    const NAME: &str = "discrepancy-oracle";
    for points in random_point_sets(500, 200, 0x4f52434c) {
        let fast = report_of(&points).unwrap();
        let (extreme, star) = brute_force_discrepancies(&points);
        if fast.extreme != extreme || fast.star != star {
            return SuiteResult::fail(
                NAME,
                format!(
                    "mismatch on a {}-point set: fast ({}, {}), brute ({}, {})",
                    points.len(),
                    fast.extreme,
                    fast.star,
                    extreme,
                    star
                ),
            );
        }
        // classical lower bound: D >= 1/(2 n)
        if fast.extreme < ratio(1, 2 * points.len() as i64) {
            return SuiteResult::fail(NAME, "extreme discrepancy below 1/(2n)".to_string());
        }
        if fast.star > fast.extreme || fast.extreme > &fast.star * ratio(2, 1) {
            return SuiteResult::fail(NAME, "star/extreme sandwich violated".to_string());
        }
    }
    SuiteResult::pass(NAME, "exact match with brute force on 500 random sets")
}

/// Almost-sure uniform distribution of sequential random reorderings:
/// at the first block boundary K(n) >= 1e5, at least 19 of 20 seeds give
/// prefix discrepancy < 0.02, and every block is a permutation of W_n.
fn reordering() -> SuiteResult {
    const NAME: &str = "reordering";
    const TARGET: usize = 100_000;
    for rule in rule_matrix() {
        // how many blocks until K(n) >= TARGET
        let mut refiner = Refiner::new(rule.clone());
        let mut blocks = 0usize;
        let mut total = 0usize;
        let mut expected: Vec<Vec<Ratio>> = Vec::new();
        while total < TARGET {
            refiner.step().unwrap();
            blocks += 1;
            let w = refiner.points(Convention::RightEndpoints).points;
            total += w.len();
            expected.push(w);
        }
        let mut good = 0usize;
        for seed in 0..20u64 {
            let seq = sequential_random_reordering(&rule, blocks, Seed(seed)).unwrap();
            for (i, w) in expected.iter().enumerate() {
                let mut block = seq.block(i + 1).unwrap().to_vec();
                sort_ratios(&mut block);
                if &block != w {
                    return SuiteResult::fail(
                        NAME,
                        format!("{rule}: block {} is not a permutation of W_n", i + 1),
                    );
                }
            }
            let d = report_of(&seq.points).unwrap().extreme;
            if d < ratio(1, 50) {
                good += 1;
            }
        }
        if good < 19 {
            return SuiteResult::fail(
                NAME,
                format!("{rule}: only {good}/20 seeds reach D < 0.02 at K >= 1e5"),
            );
        }
    }
    SuiteResult::pass(NAME, "19+/20 seeds below 0.02 at K >= 1e5 on the matrix")
}

/// Negative control: the lexicographic dyadic sequence keeps prefix
/// discrepancy >= 0.14 at every mid-block checkpoint up to 2^15 points.
fn lexicographic() -> SuiteResult {
    const NAME: &str = "lexicographic";
    let rule = rule_of(&[(1, 2), (1, 2)]);
    let seq = lexicographic_reordering(&rule, 15, BlockEndpoints::Left).unwrap();
    let offsets = seq.block_offsets.as_ref().unwrap();
    let mut worst = ratio(1, 1);
    for j in 1..=offsets.len() {
        let block_start = if j == 1 { 0 } else { offsets[j - 2] };
        let block_len = offsets[j - 1] - block_start;
        let mid = block_start + block_len / 2;
        if mid == 0 || mid > (1usize << 15) {
            continue;
        }
        let d = report_of(&seq.points[..mid]).unwrap().extreme;
        if d < worst {
            worst = d.clone();
        }
        if d < ratio(14, 100) {
            return SuiteResult::fail(
                NAME,
                format!("prefix D = {} < 0.14 at mid-block N = {mid}", to_f64(&d)),
            );
        }
    }
    SuiteResult::pass(
        NAME,
        format!("all mid-block prefixes >= 0.14 (worst {:.4})", to_f64(&worst)),
    )
}

/// van der Corput: the first 2^m - 1 points form the exact shifted grid
/// (m <= 10) and N D*_N / log2(N+1) <= 1 up to N = 2^16 - 1.
fn vdc_suite() -> SuiteResult {
    const NAME: &str = "van-der-corput";
    let seq = van_der_corput((1 << 16) - 1);
    for m in 1..=16u32 {
        let n = (1usize << m) - 1;
        if m <= 10 {
            let mut pts = seq.points[..n].to_vec();
            sort_ratios(&mut pts);
            let grid: Vec<Ratio> = (1..(1i64 << m)).map(|i| ratio(i, 1i64 << m)).collect();
            if pts != grid {
                return SuiteResult::fail(NAME, format!("prefix 2^{m}-1 is not the grid"));
            }
        }
        let star = report_of(&seq.points[..n]).unwrap().star;
        // N * D* <= log2(N+1) = m
        if star * ratio(n as i64, 1) > ratio(m as i64, 1) {
            return SuiteResult::fail(NAME, format!("N D*_N > log2(N+1) at m = {m}"));
        }
    }
    SuiteResult::pass(NAME, "grid prefixes exact, N D*_N <= log2(N+1) up to 2^16-1")
}

/// Uniformity of the sampled block permutation: over 6000 seeds, each of
/// the 6 orderings of a 3-point block appears with frequency 1/6 +- 0.02
/// and the chi-squared statistic stays below the 99% critical value.
fn permutation_uniformity() -> SuiteResult {
    const NAME: &str = "permutation-uniformity";
    const SEEDS: u64 = 6000;
    let rule = rule_of(&[(1, 3), (2, 3)]);
    // block 2 is a permutation of {1/3, 5/9, 1}
    let sorted = [ratio(1, 3), ratio(5, 9), ratio(1, 1)];
    let mut counts = [0usize; 6];
    for seed in 0..SEEDS {
        let seq = sequential_random_reordering(&rule, 2, Seed(seed)).unwrap();
        let block = seq.block(2).unwrap();
        let perm: Vec<usize> = block
            .iter()
            .map(|p| sorted.iter().position(|s| s == p).unwrap())
            .collect();
        let rank = match perm.as_slice() {
            [0, 1, 2] => 0,
            [0, 2, 1] => 1,
            [1, 0, 2] => 2,
            [1, 2, 0] => 3,
            [2, 0, 1] => 4,
            [2, 1, 0] => 5,
            _ => return SuiteResult::fail(NAME, "block is not a permutation".to_string()),
        };
        counts[rank] += 1;
    }
    let expected = SEEDS as f64 / 6.0;
    let mut chi2 = 0.0;
    for &c in &counts {
        let freq = c as f64 / SEEDS as f64;
        if (freq - 1.0 / 6.0).abs() > 0.02 {
            return SuiteResult::fail(NAME, format!("ordering frequency {freq:.4} off by > 0.02"));
        }
        chi2 += (c as f64 - expected).powi(2) / expected;
    }
    // chi-squared 99th percentile, 5 degrees of freedom
    SuiteResult::check(
        NAME,
        chi2 < 15.086,
        format!("counts {counts:?}, chi2 = {chi2:.3}"),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unknown_suite_is_rejected() {
        assert!(run_suite("nope").is_none());
    }

    #[test]
    fn random_rules_are_valid() {
        let rules = random_rules(20, 7);
        assert_eq!(rules.len(), 20);
        for r in rules {
            assert!(r.k() >= 2 && r.k() <= 4);
        }
    }

    #[test]
    fn brute_force_known_values() {
        let (e, s) = brute_force_discrepancies(&[ratio(1, 2)]);
        assert_eq!(e, ratio(1, 1));
        assert_eq!(s, ratio(1, 2));
        let grid: Vec<Ratio> = (1..=4).map(|i| ratio(i, 4)).collect();
        let (e, s) = brute_force_discrepancies(&grid);
        assert_eq!(e, ratio(1, 4));
        assert_eq!(s, ratio(1, 4));
    }
}
