//! Partitions of [0,1], single-step refinement, rho-adic subdivision and
//! interval addressing.
//!
//! A partition is stored as its strictly increasing breakpoint list
//! `t_0 = 0 < t_1 < ... < t_k = 1`; interval views are derived. Storing
//! breakpoints makes the refinement-is-superset invariant cheap to check.

use crate::error::{Error, Result};
use crate::ratio::{one, zero, Ratio};
use crate::rule::SplitRule;

/// Default cap on the interval count of any produced partition.
pub const DEFAULT_MAX_INTERVALS: usize = 10_000_000;

/// A closed subinterval [lo, hi] of [0,1] with lo < hi.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Interval {
    pub lo: Ratio,
    pub hi: Ratio,
}

impl Interval {
    pub fn new(lo: Ratio, hi: Ratio) -> Result<Self> {
        if lo >= hi {
            return Err(Error::InvalidPartition(format!(
                "interval [{lo}, {hi}] is empty"
            )));
        }
        Ok(Self { lo, hi })
    }

    pub fn length(&self) -> Ratio {
        &self.hi - &self.lo
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{}, {}]", self.lo, self.hi)
    }
}

/// A partition pi of [0,1] given by its breakpoints.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition {
    breakpoints: Vec<Ratio>,
}

/// Which breakpoints of a partition feed the point set W_n.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Convention {
    /// The right endpoints t_1..t_k: excludes 0, includes 1. This is the
    /// convention of the defining sum (1/k) * sum f(t_i).
    RightEndpoints,
    /// All k+1 breakpoints including 0.
    AllBreakpoints,
}

/// The multiset of partition points feeding the empirical measure nu_n
/// and the discrepancy D_W. Points are kept sorted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PointSet {
    pub points: Vec<Ratio>,
    pub convention: Convention,
}

impl Partition {
    /// Validates breakpoints: first 0, last 1, strictly increasing.
    pub fn new(breakpoints: Vec<Ratio>) -> Result<Self> {
        if breakpoints.len() < 2 {
            return Err(Error::InvalidPartition(
                "need at least the two endpoints 0 and 1".into(),
            ));
        }
        if breakpoints[0] != zero() {
            return Err(Error::InvalidPartition("first breakpoint must be 0".into()));
        }
        if *breakpoints.last().unwrap() != one() {
            return Err(Error::InvalidPartition("last breakpoint must be 1".into()));
        }
        for w in breakpoints.windows(2) {
            if w[0] >= w[1] {
                return Err(Error::InvalidPartition(format!(
                    "breakpoints not strictly increasing at {}",
                    w[1]
                )));
            }
        }
        Ok(Self { breakpoints })
    }

    /// The trivial partition omega = {[0,1]}.
    pub fn trivial() -> Self {
        Self {
            breakpoints: vec![zero(), one()],
        }
    }

    pub fn breakpoints(&self) -> &[Ratio] {
        &self.breakpoints
    }

    /// Interval count k.
    pub fn k(&self) -> usize {
        self.breakpoints.len() - 1
    }

    pub fn intervals(&self) -> impl Iterator<Item = Interval> + '_ {
        self.breakpoints.windows(2).map(|w| Interval {
            lo: w[0].clone(),
            hi: w[1].clone(),
        })
    }

    /// Length of the longest interval (A_n).
    pub fn max_length(&self) -> Ratio {
        self.breakpoints
            .windows(2)
            .map(|w| &w[1] - &w[0])
            .max()
            .expect("non-empty partition")
    }

    /// Length of the shortest interval (a_n).
    pub fn min_length(&self) -> Ratio {
        self.breakpoints
            .windows(2)
            .map(|w| &w[1] - &w[0])
            .min()
            .expect("non-empty partition")
    }

    /// True when `x` is a breakpoint.
    pub fn has_breakpoint(&self, x: &Ratio) -> bool {
        self.breakpoints.binary_search(x).is_ok()
    }
}

/// One rho-refinement step: every interval whose length equals the
/// maximal length (exact equality) is replaced by k subintervals
/// positively homothetic to the rule; all other intervals are unchanged.
pub fn rho_refine(rule: &SplitRule, p: &Partition) -> Partition {
    refine_tied(rule, p, None)
}

/// Like [`rho_refine`], but splits every interval whose length is within
/// `tolerance` of the maximal length. This is the approximation mode for
/// rules whose true ratios are irrational and are supplied as fixed
/// precision decimal approximations: exact tie detection is meaningless
/// for such inputs, so ties are declared at distance <= tolerance.
/// A common choice of tolerance is 1/10^30. Exact mode ([`rho_refine`])
/// is the default and is the only mode used by the verification suites.
pub fn rho_refine_approx(rule: &SplitRule, p: &Partition, tolerance: &Ratio) -> Partition {
    refine_tied(rule, p, Some(tolerance))
}

fn refine_tied(rule: &SplitRule, p: &Partition, tolerance: Option<&Ratio>) -> Partition {
    let max = p.max_length();
    let threshold = match tolerance {
        Some(t) => &max - t,
        None => max.clone(),
    };
    let mut out = Vec::with_capacity(p.breakpoints.len());
    out.push(zero());
    for w in p.breakpoints().windows(2) {
        let len = &w[1] - &w[0];
        if len >= threshold {
            // split homothetically: new points at lo + len * r_i
            for r in &rule.breakpoints()[1..rule.k()] {
                out.push(&w[0] + &len * r);
            }
        }
        out.push(w[1].clone());
    }
    Partition { breakpoints: out }
}

/// Applies `n` successive rho-refinements to `start`.
pub fn refine_from(rule: &SplitRule, start: &Partition, n: usize) -> Result<Partition> {
    refine_from_capped(rule, start, n, DEFAULT_MAX_INTERVALS)
}

/// As [`refine_from`] with an explicit interval cap.
pub fn refine_from_capped(
    rule: &SplitRule,
    start: &Partition,
    n: usize,
    cap: usize,
) -> Result<Partition> {
    let mut p = start.clone();
    for _ in 0..n {
        p = rho_refine(rule, &p);
        if p.k() > cap {
            return Err(Error::ResourceLimit { cap });
        }
    }
    Ok(p)
}

/// The n-th iterate rho^n omega starting from the trivial partition.
pub fn iterate(rule: &SplitRule, n: usize) -> Result<Partition> {
    refine_from(rule, &Partition::trivial(), n)
}

/// The n-th rho-adic partition [rho]^n, obtained by subdividing *all*
/// intervals at every step; it has exactly k^n intervals.
pub fn full_subdivide(rule: &SplitRule, n: usize) -> Result<Partition> {
    full_subdivide_capped(rule, n, DEFAULT_MAX_INTERVALS)
}

pub fn full_subdivide_capped(rule: &SplitRule, n: usize, cap: usize) -> Result<Partition> {
    if n == 0 {
        return Err(Error::InvalidArgument("rho-adic rank must be >= 1".into()));
    }
    let mut p = Partition::trivial();
    for _ in 0..n {
        if p.k().saturating_mul(rule.k()) > cap {
            return Err(Error::ResourceLimit { cap });
        }
        let mut out = Vec::with_capacity(p.k() * rule.k() + 1);
        out.push(zero());
        for w in p.breakpoints().windows(2) {
            let len = &w[1] - &w[0];
            for r in &rule.breakpoints()[1..rule.k()] {
                out.push(&w[0] + &len * r);
            }
            out.push(w[1].clone());
        }
        p = Partition { breakpoints: out };
    }
    Ok(p)
}

/// The rank-n rho-adic interval I(alpha_{i_1} ... alpha_{i_n}) addressed
/// by 1-based indices, computed by recursive application of the endpoint
/// formula: descending into [y0, y1] with index i gives
/// [y0 + (y1-y0) r_{i-1}, y0 + (y1-y0) r_i].
pub fn interval_address(rule: &SplitRule, indices: &[usize]) -> Result<Interval> {
    if indices.is_empty() {
        return Err(Error::InvalidArgument("empty address".into()));
    }
    let mut lo = zero();
    let mut hi = one();
    for &i in indices {
        if i < 1 || i > rule.k() {
            return Err(Error::IndexOutOfRange {
                index: i,
                k: rule.k(),
            });
        }
        let len = &hi - &lo;
        let new_lo = &lo + &len * &rule.breakpoints()[i - 1];
        let new_hi = &lo + &len * &rule.breakpoints()[i];
        lo = new_lo;
        hi = new_hi;
    }
    Ok(Interval { lo, hi })
}

/// Extracts the point set W of a partition under the given convention.
pub fn points_of(p: &Partition, convention: Convention) -> PointSet {
    let points = match convention {
        Convention::RightEndpoints => p.breakpoints()[1..].to_vec(),
        Convention::AllBreakpoints => p.breakpoints().to_vec(),
    };
    PointSet { points, convention }
}
