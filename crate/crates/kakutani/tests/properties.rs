//! Randomized invariants. The discrepancy checks use the classical
//! order-statistic formulas for sorted points x_1 <= ... <= x_N,
//!
//!   D_N  = 1/N + max_i (i/N - x_i) - min_i (i/N - x_i)
//!   D*_N = 1/(2N) + max_i |x_i - (2i-1)/(2N)|
//!
//! as an independent oracle for the interval-sweep implementation.

use kakutani::discrepancy::report_of;
use kakutani::engine::Refiner;
use kakutani::partition::{full_subdivide, interval_address, iterate, rho_refine};
use kakutani::ratio::{ratio, sort_ratios, Ratio};
use kakutani::rule::SplitRule;
use kakutani::sequences::{sequential_random_reordering, Seed};
use num_traits::One;
use proptest::prelude::*;

fn arb_rule() -> impl Strategy<Value = SplitRule> {
    prop::collection::vec(1u32..=9, 2..=4).prop_map(|weights| {
        let q: i64 = weights.iter().map(|&w| i64::from(w)).sum();
        let parts = weights.iter().map(|&w| ratio(i64::from(w), q)).collect();
        SplitRule::new(parts).expect("positive weights over their sum")
    })
}

fn arb_points() -> impl Strategy<Value = Vec<Ratio>> {
    prop::collection::vec((0u32..=60, 1u32..=60), 1..40).prop_map(|pairs| {
        pairs
            .into_iter()
            .map(|(a, b)| ratio(i64::from(a.min(b)), i64::from(b)))
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// One refinement step keeps every old breakpoint and adds exactly
    /// k-1 new points per maximal interval; the new maximal length is
    /// the largest of the untouched lengths and the largest child.
    #[test]
    fn refinement_grows_predictably(rule in arb_rule(), n in 0usize..6) {
        let p = iterate(&rule, n).unwrap();
        let q = rho_refine(&rule, &p);

        for b in p.breakpoints() {
            prop_assert!(q.has_breakpoint(b));
        }

        let max = p.max_length();
        let tied = p.intervals().filter(|iv| iv.length() == max).count();
        prop_assert_eq!(q.k(), p.k() + tied * (rule.k() - 1));

        let max_part = rule.ratios().iter().max().unwrap();
        let largest_child = &max * max_part;
        let untouched = p
            .intervals()
            .map(|iv| iv.length())
            .filter(|l| *l != max)
            .max();
        let expected = match untouched {
            Some(u) if u > largest_child => u,
            _ => largest_child,
        };
        prop_assert_eq!(q.max_length(), expected);
    }

    /// Interval lengths of every iterate sum to 1 exactly.
    #[test]
    fn lengths_sum_to_one(rule in arb_rule(), n in 0usize..8) {
        let p = iterate(&rule, n).unwrap();
        let total: Ratio = p.intervals().map(|iv| iv.length()).sum();
        prop_assert!(total.is_one());
    }

    /// The incremental engine reproduces the direct iteration.
    #[test]
    fn engine_matches_iterate(rule in arb_rule(), n in 1usize..8) {
        let mut refiner = Refiner::new(rule.clone());
        for _ in 0..n {
            refiner.step().unwrap();
        }
        prop_assert_eq!(refiner.partition(), iterate(&rule, n).unwrap());
    }

    /// Every address of length n names an interval of the full rank-n
    /// subdivision, with length equal to the product of its letters.
    #[test]
    fn addresses_name_full_subdivision_cells(
        rule in arb_rule(),
        raw in prop::collection::vec(0usize..4, 1..4),
    ) {
        let digits: Vec<usize> = raw.iter().map(|r| 1 + r % rule.k()).collect();
        let n = digits.len();
        let p = full_subdivide(&rule, n).unwrap();
        prop_assert_eq!(p.k(), rule.k().pow(n as u32));

        let cell = interval_address(&rule, &digits).unwrap();
        let pos = p
            .breakpoints()
            .binary_search(&cell.lo)
            .expect("lo is a breakpoint of the full subdivision");
        prop_assert_eq!(&p.breakpoints()[pos + 1], &cell.hi);

        let expected: Ratio = digits.iter().map(|&d| &rule.ratios()[d - 1]).product();
        prop_assert_eq!(cell.length(), expected);
    }

    /// The sweep implementation matches the order-statistic formulas and
    /// the general bounds D* <= D <= 2 D*, D >= 1/(2N).
    #[test]
    fn discrepancy_matches_order_statistic_formulas(points in arb_points()) {
        let report = report_of(&points).unwrap();

        let mut sorted = points.clone();
        sort_ratios(&mut sorted);
        let n = sorted.len() as i64;
        let diffs: Vec<Ratio> = sorted
            .iter()
            .enumerate()
            .map(|(i, x)| ratio(i as i64 + 1, n) - x)
            .collect();
        let extreme = ratio(1, n) + diffs.iter().max().unwrap() - diffs.iter().min().unwrap();
        let star = ratio(1, 2 * n)
            + sorted
                .iter()
                .enumerate()
                .map(|(i, x)| {
                    let mid = ratio(2 * i as i64 + 1, 2 * n);
                    if *x > mid { x - mid } else { mid - x }
                })
                .max()
                .unwrap();

        prop_assert_eq!(&report.extreme, &extreme);
        prop_assert_eq!(&report.star, &star);
        prop_assert!(report.star <= report.extreme);
        prop_assert!(report.extreme <= ratio(2, 1) * &report.star);
        prop_assert!(report.extreme >= ratio(1, 2 * n));
    }

    /// A random reordering permutes each block: block i is exactly the
    /// set of right endpoints of the i-th refinement, in some order.
    #[test]
    fn reordering_permutes_blocks(rule in arb_rule(), blocks in 1usize..6, seed in any::<u64>()) {
        let seq = sequential_random_reordering(&rule, blocks, Seed(seed)).unwrap();
        let mut refiner = Refiner::new(rule.clone());
        let mut total = 0;
        for i in 1..=blocks {
            refiner.step().unwrap();
            let mut got = seq.block(i).unwrap().to_vec();
            sort_ratios(&mut got);
            let expected = refiner
                .points(kakutani::partition::Convention::RightEndpoints)
                .points;
            prop_assert_eq!(got, expected);
            total += refiner.k();
        }
        prop_assert_eq!(seq.len(), total);
    }
}
