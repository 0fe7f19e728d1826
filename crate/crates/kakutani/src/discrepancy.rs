//! Exact discrepancy of finite point multisets.
//!
//! The extreme discrepancy is
//! `D_W = sup over 0 <= a < b <= 1 of |#{t_i in [a,b)} / k - (b - a)|`
//! with half-open intervals, and the star discrepancy restricts the
//! supremum to anchored intervals [0,b). Writing
//! `g(x) = #{t_i < x} / k - x`, the count excess of [a,b) is
//! `g(b) - g(a)`, so `D_W = sup g - inf g`. `g` is piecewise linear and
//! decreasing between jumps, so both extrema live on a finite candidate
//! set: the attained value and the right-sided limit of `g` at each
//! distinct point, plus the endpoints 0 and 1. The supremum may be
//! attained only in the limit (b -> t+); such witnesses are flagged
//! degenerate.

use crate::error::{Error, Result};
use crate::partition::PointSet;
use crate::ratio::{one, sort_ratios, zero, Ratio};

/// Witness interval [lo, hi) approaching or achieving the supremum.
/// When `degenerate` is true one endpoint is a one-sided limit
/// (e.g. b -> lo+), and the reported interval is the closed-form limit.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub lo: Ratio,
    pub hi: Ratio,
    pub degenerate: bool,
}

/// Extreme and star discrepancy of a point multiset, both exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiscrepancyReport {
    pub n_points: usize,
    pub extreme: Ratio,
    pub star: Ratio,
    pub witness: Witness,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Side {
    /// g evaluated at x: counts points < x.
    Attained,
    /// right-sided limit of g at x: counts points <= x.
    Limit,
}

struct Candidate {
    x: Ratio,
    g: Ratio,
    side: Side,
}

/// Candidate values of g at all distinct points and at 0 and 1.
/// `points` must be sorted. The right-sided limit at 1 is excluded since
/// interval endpoints cannot exceed 1.
fn candidates(points: &[Ratio]) -> Vec<Candidate> {
    let n = points.len();
    let n_ratio = Ratio::from_integer(n.into());
    let mut out = Vec::with_capacity(2 * n + 4);
    let mut push = |x: &Ratio, count: usize, side: Side| {
        let g = Ratio::from_integer(count.into()) / &n_ratio - x;
        out.push(Candidate {
            x: x.clone(),
            g,
            side,
        });
    };
    let mut i = 0;
    let mut saw_zero = false;
    let mut saw_one = false;
    while i < n {
        let x = &points[i];
        let lt = i;
        let mut j = i;
        while j < n && &points[j] == x {
            j += 1;
        }
        let le = j;
        saw_zero |= num_traits::Zero::is_zero(x);
        saw_one |= x == &one();
        push(x, lt, Side::Attained);
        if x < &one() {
            push(x, le, Side::Limit);
        }
        i = j;
    }
    if !saw_zero {
        push(&zero(), 0, Side::Attained);
    }
    if !saw_one {
        push(&one(), n, Side::Attained);
    }
    out
}

/// Core computation on a sorted slice.
fn report_sorted(points: &[Ratio]) -> Result<DiscrepancyReport> {
    if points.is_empty() {
        return Err(Error::EmptySet);
    }
    let cands = candidates(points);
    let mut hi = 0usize;
    let mut lo = 0usize;
    for (idx, c) in cands.iter().enumerate() {
        if c.g > cands[hi].g {
            hi = idx;
        }
        if c.g < cands[lo].g {
            lo = idx;
        }
    }
    let extreme = &cands[hi].g - &cands[lo].g;
    let star = if cands[hi].g >= -&cands[lo].g {
        cands[hi].g.clone()
    } else {
        -cands[lo].g.clone()
    };
    // the excess g(b) - g(a) is maximal with a at the minimum, b at the
    // maximum of g; order them to form [a,b) (the absolute value makes
    // the reversed pair equivalent)
    let (a, b) = if cands[lo].x <= cands[hi].x {
        (&cands[lo], &cands[hi])
    } else {
        (&cands[hi], &cands[lo])
    };
    let witness = Witness {
        lo: a.x.clone(),
        hi: b.x.clone(),
        degenerate: a.side == Side::Limit || b.side == Side::Limit || a.x == b.x,
    };
    Ok(DiscrepancyReport {
        n_points: points.len(),
        extreme,
        star,
        witness,
    })
}

/// Discrepancy report for an arbitrary (unsorted) multiset of points.
pub fn report_of(points: &[Ratio]) -> Result<DiscrepancyReport> {
    let mut sorted = points.to_vec();
    sort_ratios(&mut sorted);
    report_sorted(&sorted)
}

/// Extreme discrepancy D_W of a point set.
pub fn extreme_discrepancy(points: &PointSet) -> Result<DiscrepancyReport> {
    // PointSet keeps its points sorted
    report_sorted(&points.points)
}

/// Star discrepancy D*_W (supremum over anchored intervals [0,b)).
pub fn star_discrepancy(points: &PointSet) -> Result<Ratio> {
    Ok(extreme_discrepancy(points)?.star)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::Convention;
    use crate::ratio::ratio;

    fn set(points: Vec<Ratio>) -> PointSet {
        let mut points = points;
        sort_ratios(&mut points);
        PointSet {
            points,
            convention: Convention::RightEndpoints,
        }
    }

    /// Brute force: enumerate all half-open intervals with endpoints at
    /// the points (attained or one-sided limit) plus 0 and 1, counting
    /// membership by scanning. Independent of the sup-inf scan above.
    fn brute_extreme(points: &[Ratio]) -> Ratio {
        let n = Ratio::from_integer(points.len().into());
        let mut endpoints: Vec<(Ratio, bool)> = vec![(ratio(0, 1), false), (ratio(1, 1), false)];
        for p in points {
            endpoints.push((p.clone(), false)); // endpoint exactly at p
            if p < &ratio(1, 1) {
                endpoints.push((p.clone(), true)); // endpoint just above p
            }
        }
        let mut best = ratio(0, 1);
        for (a, a_open) in &endpoints {
            for (b, b_open) in &endpoints {
                if (a, a_open) >= (b, b_open) {
                    continue;
                }
                // interval [a,b) with possible one-sided limits
                let count = points
                    .iter()
                    .filter(|x| if *a_open { *x > a } else { *x >= a })
                    .filter(|x| if *b_open { *x <= b } else { *x < b })
                    .count();
                let d = Ratio::from_integer(count.into()) / &n - (b - a);
                let d = if d < ratio(0, 1) { -d } else { d };
                if d > best {
                    best = d;
                }
            }
        }
        best
    }

    #[test]
    fn grid_with_zero() {
        let s = set(vec![ratio(0, 1), ratio(1, 4), ratio(1, 2), ratio(3, 4)]);
        let r = extreme_discrepancy(&s).unwrap();
        assert_eq!(r.extreme, ratio(1, 4));
    }

    #[test]
    fn single_point() {
        let s = set(vec![ratio(1, 2)]);
        let r = extreme_discrepancy(&s).unwrap();
        assert_eq!(r.extreme, ratio(1, 1));
        assert_eq!(r.star, ratio(1, 2));
        assert!(r.witness.degenerate);
    }

    #[test]
    fn grid_with_one() {
        let s = set(vec![ratio(1, 4), ratio(1, 2), ratio(3, 4), ratio(1, 1)]);
        let r = extreme_discrepancy(&s).unwrap();
        assert_eq!(r.extreme, ratio(1, 4));
    }

    #[test]
    fn star_of_uniform_grids() {
        for n in 1..=50i64 {
            let s = set((1..=n).map(|i| ratio(i, n)).collect());
            assert_eq!(star_discrepancy(&s).unwrap(), ratio(1, n));
        }
    }

    #[test]
    fn matches_brute_force_on_small_sets() {
        let sets = vec![
            vec![ratio(1, 2)],
            vec![ratio(0, 1)],
            vec![ratio(1, 1)],
            vec![ratio(1, 3), ratio(1, 3), ratio(2, 3)],
            vec![ratio(1, 7), ratio(2, 5), ratio(2, 5), ratio(9, 10), ratio(1, 1)],
            (1..=9).map(|i| ratio(i, 10)).collect(),
        ];
        for pts in sets {
            let s = set(pts.clone());
            let r = extreme_discrepancy(&s).unwrap();
            assert_eq!(r.extreme, brute_extreme(&s.points), "set {pts:?}");
            assert!(r.star <= r.extreme);
            assert!(r.extreme <= &r.star * ratio(2, 1));
            // classical lower bound 1/(2k)
            assert!(r.extreme >= ratio(1, 2 * pts.len() as i64));
        }
    }
}
