//! Empirical measures, convergence diagnostics and the non-convergent
//! starting-partition experiment.
//!
//! The counting convention is half-open [a,b) throughout, matching the
//! indicator in the discrepancy definition. The one exception is the
//! density-bound check on rho-adic intervals, which counts the intervals
//! subdividing J, i.e. right endpoints in (lo, hi]; that is the count
//! the inequality `a_1 lambda(J) <= nu_n(J) <= lambda(J)/a_1` bounds,
//! and with it the bound holds exactly (zero tolerance) as soon as J is
//! subdivided.

use crate::discrepancy::{extreme_discrepancy, DiscrepancyReport};
use crate::engine::{CountRefiner, Refiner};
use crate::error::{Error, Result};
use crate::partition::{interval_address, Convention, Interval, PointSet};
use crate::ratio::{decimal_string, one, ratio, Ratio, DEFAULT_SIG_DIGITS};
use crate::rule::SplitRule;
use num_bigint::BigInt;
use serde_json::json;

/// nu_n(J) together with lambda(J) for one interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MeasureValue {
    pub interval: Interval,
    pub nu: Ratio,
    pub lambda: Ratio,
}

fn count_below(points: &[Ratio], x: &Ratio) -> usize {
    points.partition_point(|p| p < x)
}

fn count_at_most(points: &[Ratio], x: &Ratio) -> usize {
    points.partition_point(|p| p <= x)
}

/// Empirical measure of the half-open interval [lo, hi): the fraction of
/// points falling in it.
pub fn empirical_measure(points: &PointSet, j: &Interval) -> MeasureValue {
    let n = points.points.len();
    let count = count_below(&points.points, &j.hi) - count_below(&points.points, &j.lo);
    MeasureValue {
        interval: j.clone(),
        nu: ratio(count as i64, n as i64),
        lambda: j.length(),
    }
}

/// One row of a convergence report.
#[derive(Debug, Clone)]
pub struct ConvergenceRow {
    pub n: usize,
    pub k_n: usize,
    pub report: DiscrepancyReport,
}

/// Runs the refinement engine and reports the extreme and star
/// discrepancy of W_n at each checkpoint (strictly increasing step
/// indices, right-endpoint convention).
pub fn convergence_report(rule: &SplitRule, checkpoints: &[usize]) -> Result<Vec<ConvergenceRow>> {
    if checkpoints.is_empty() {
        return Err(Error::InvalidArgument("no checkpoints".into()));
    }
    for w in checkpoints.windows(2) {
        if w[0] >= w[1] {
            return Err(Error::InvalidArgument(
                "checkpoints must be strictly increasing".into(),
            ));
        }
    }
    if checkpoints[0] == 0 {
        return Err(Error::InvalidArgument("checkpoints start at 1".into()));
    }
    let mut refiner = Refiner::new(rule.clone());
    let mut rows = Vec::with_capacity(checkpoints.len());
    for &n in checkpoints {
        while refiner.step_index() < n {
            refiner.step()?;
        }
        let points = refiner.points(Convention::RightEndpoints);
        rows.push(ConvergenceRow {
            n,
            k_n: refiner.k(),
            report: extreme_discrepancy(&points)?,
        });
    }
    Ok(rows)
}

/// Outcome of the density-bound check on one addressed rho-adic interval.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DensityStatus {
    Passed,
    Failed,
    /// rho^n omega does not yet subdivide the interval, so the bound's
    /// precondition does not hold.
    NotYetSubdivided,
}

#[derive(Debug, Clone)]
pub struct DensityCheck {
    pub interval: Interval,
    pub nu: Ratio,
    pub status: DensityStatus,
}

/// Verifies `a_1 lambda(J) <= nu_n(J) <= lambda(J) / a_1` for each
/// addressed rho-adic interval J against the partition rho^n omega.
/// nu_n(J) counts the right endpoints in (lo, hi], i.e. the intervals of
/// rho^n omega contained in J.
pub fn density_bounds_check(
    rule: &SplitRule,
    n: usize,
    addresses: &[Vec<usize>],
) -> Result<Vec<DensityCheck>> {
    let mut refiner = Refiner::new(rule.clone());
    for _ in 0..n {
        refiner.step()?;
    }
    let partition = refiner.partition();
    let points = refiner.points(Convention::RightEndpoints);
    let a1 = rule.min_ratio();
    let k = ratio(partition.k() as i64, 1);
    let mut out = Vec::with_capacity(addresses.len());
    for address in addresses {
        let j = interval_address(rule, address)?;
        if !partition.has_breakpoint(&j.lo) || !partition.has_breakpoint(&j.hi) {
            out.push(DensityCheck {
                interval: j,
                nu: ratio(0, 1),
                status: DensityStatus::NotYetSubdivided,
            });
            continue;
        }
        let count =
            count_at_most(&points.points, &j.hi) - count_at_most(&points.points, &j.lo);
        let nu = ratio(count as i64, 1) / &k;
        let lambda = j.length();
        let ok = a1 * &lambda <= nu && nu <= &lambda / a1;
        out.push(DensityCheck {
            interval: j,
            nu,
            status: if ok {
                DensityStatus::Passed
            } else {
                DensityStatus::Failed
            },
        });
    }
    Ok(out)
}

/// One row of the alternating-measure experiment.
#[derive(Debug, Clone)]
pub struct CounterexampleRow {
    pub n: usize,
    /// nu_n([0, 2/5)) under the right-endpoint convention.
    pub nu_left: Ratio,
}

/// Refines the starting partition {0, 2/5, 1} by repeated halving and
/// records nu_n([0, 2/5)). The refinement alternates between the two
/// sides, so the even- and odd-indexed subsequences converge to the two
/// distinct limits 1/2 and 1/3 and the full sequence does not converge.
/// Interval counts grow exponentially, so this runs on class counts.
pub fn counterexample_series(n_max: usize) -> Result<Vec<CounterexampleRow>> {
    if n_max < 2 {
        return Err(Error::InvalidArgument("n_max must be >= 2".into()));
    }
    let rule = SplitRule::new(vec![ratio(1, 2), ratio(1, 2)])?;
    // tag 0: intervals inside [0, 2/5]; tag 1: the rest
    let mut refiner = CountRefiner::from_tagged(
        rule,
        vec![(ratio(2, 5), 0), (ratio(3, 5), 1)],
        2,
    );
    let mut rows = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        refiner.step();
        // right endpoints strictly below 2/5: every interval inside
        // [0, 2/5] contributes its right endpoint, except the last one
        // which ends exactly at 2/5
        let left = refiner.tag_count(0) - 1u32;
        let nu_left = Ratio::new(BigInt::from(left), BigInt::from(refiner.k().clone()));
        rows.push(CounterexampleRow { n, nu_left });
    }
    Ok(rows)
}

/// CSV export of a convergence report: `n,k_n,D_extreme,D_star`.
pub fn convergence_csv(rows: &[ConvergenceRow]) -> String {
    let mut out = String::from("n,k_n,D_extreme,D_star\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{}\n",
            r.n,
            r.k_n,
            decimal_string(&r.report.extreme, DEFAULT_SIG_DIGITS),
            decimal_string(&r.report.star, DEFAULT_SIG_DIGITS),
        ));
    }
    out
}

/// JSON mirror of the convergence CSV, with exact fractions under
/// `exact` keys.
pub fn convergence_json(rows: &[ConvergenceRow]) -> serde_json::Value {
    json!(rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "k_n": r.k_n,
                "D_extreme": crate::ratio::to_f64(&r.report.extreme),
                "D_star": crate::ratio::to_f64(&r.report.star),
                "exact": {
                    "D_extreme": r.report.extreme.to_string(),
                    "D_star": r.report.star.to_string(),
                }
            })
        })
        .collect::<Vec<_>>())
}

/// CSV export of the alternating-measure experiment: `n,nu_left`.
pub fn counterexample_csv(rows: &[CounterexampleRow]) -> String {
    let mut out = String::from("n,nu_left\n");
    for r in rows {
        out.push_str(&format!(
            "{},{}\n",
            r.n,
            decimal_string(&r.nu_left, DEFAULT_SIG_DIGITS)
        ));
    }
    out
}

/// JSON mirror of the experiment with exact fractions.
pub fn counterexample_json(rows: &[CounterexampleRow]) -> serde_json::Value {
    json!(rows
        .iter()
        .map(|r| {
            json!({
                "n": r.n,
                "nu_left": crate::ratio::to_f64(&r.nu_left),
                "exact": { "nu_left": r.nu_left.to_string() }
            })
        })
        .collect::<Vec<_>>())
}

/// nu_n([0,1)) plus the mass at 1 is exactly 1 for any point set.
pub fn mass_identity(points: &PointSet) -> Ratio {
    let n = points.points.len();
    let below_one = count_below(&points.points, &one());
    let at_one = n - below_one;
    ratio(below_one as i64, n as i64) + ratio(at_one as i64, n as i64)
}
