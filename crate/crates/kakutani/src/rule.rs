//! Splitting rules: the fixed partition the refinement is homothetic to.

use crate::error::{Error, Result};
use crate::ratio::{one, parse_ratio_list, zero, Ratio};
use num_traits::One;

/// A fixed partition of [0,1] into k >= 2 parts with lengths
/// `ratios = (alpha_1, ..., alpha_k)`, each in (0,1) and summing to 1
/// exactly. Refinement splits maximal intervals proportionally to these
/// lengths.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitRule {
    ratios: Vec<Ratio>,
    /// Prefix sums r_0 = 0 < r_1 < ... < r_k = 1.
    breakpoints: Vec<Ratio>,
}

impl SplitRule {
    /// Validates and builds a rule. Rejects the trivial partition (k < 2),
    /// parts outside (0,1), and lists that do not sum to 1 exactly.
    pub fn new(ratios: Vec<Ratio>) -> Result<Self> {
        if ratios.len() < 2 {
            return Err(Error::TrivialRule);
        }
        let unit = one();
        for a in &ratios {
            if a <= &zero() || a >= &unit {
                return Err(Error::NonPositivePart { value: a.clone() });
            }
        }
        let sum: Ratio = ratios.iter().sum();
        if !sum.is_one() {
            return Err(Error::SumNotOne { sum });
        }
        let mut breakpoints = Vec::with_capacity(ratios.len() + 1);
        let mut acc = zero();
        breakpoints.push(acc.clone());
        for a in &ratios {
            acc += a;
            breakpoints.push(acc.clone());
        }
        Ok(Self { ratios, breakpoints })
    }

    /// The two-part rule (alpha, 1 - alpha) of Kakutani's original
    /// splitting procedure.
    pub fn kakutani(alpha: Ratio) -> Result<Self> {
        let beta = one() - &alpha;
        Self::new(vec![alpha, beta])
    }

    /// Parses a rule literal such as `1/3,2/3` or `0.5,0.25,0.25`.
    pub fn parse(literal: &str) -> Result<Self> {
        Self::new(parse_ratio_list(literal)?)
    }

    /// Number of parts k.
    pub fn k(&self) -> usize {
        self.ratios.len()
    }

    /// The part lengths alpha_1..alpha_k.
    pub fn ratios(&self) -> &[Ratio] {
        &self.ratios
    }

    /// Prefix sums r_0..r_k (r_0 = 0, r_k = 1), the breakpoints of the
    /// rule seen as a partition.
    pub fn breakpoints(&self) -> &[Ratio] {
        &self.breakpoints
    }

    /// The smallest part a_1 = min alpha_i; it controls the density
    /// bounds a_1 A_n <= a_n and a_1 lambda(J) <= nu_n(J) <= lambda(J)/a_1.
    pub fn min_ratio(&self) -> &Ratio {
        self.ratios.iter().min().expect("k >= 2")
    }
}

impl std::fmt::Display for SplitRule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let parts: Vec<String> = self.ratios.iter().map(|r| r.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ratio::ratio;

    #[test]
    fn dyadic_rule() {
        let rule = SplitRule::new(vec![ratio(1, 2), ratio(1, 2)]).unwrap();
        assert_eq!(rule.k(), 2);
        assert_eq!(rule.breakpoints(), &[ratio(0, 1), ratio(1, 2), ratio(1, 1)]);
    }

    #[test]
    fn kakutani_one_third() {
        let rule = SplitRule::kakutani(ratio(1, 3)).unwrap();
        assert_eq!(rule.ratios(), &[ratio(1, 3), ratio(2, 3)]);
        assert_eq!(rule.min_ratio(), &ratio(1, 3));
    }

    #[test]
    fn rejects_bad_rules() {
        assert!(matches!(
            SplitRule::new(vec![ratio(1, 2), ratio(1, 3)]),
            Err(Error::SumNotOne { .. })
        ));
        assert!(matches!(
            SplitRule::new(vec![ratio(1, 1)]),
            Err(Error::TrivialRule)
        ));
        assert!(matches!(
            SplitRule::new(vec![ratio(0, 1), ratio(1, 1)]),
            Err(Error::NonPositivePart { .. })
        ));
        assert!(matches!(
            SplitRule::new(vec![ratio(3, 2), ratio(-1, 2)]),
            Err(Error::NonPositivePart { .. })
        ));
    }

    #[test]
    fn parses_literals() {
        let rule = SplitRule::parse("0.5,0.25,0.25").unwrap();
        assert_eq!(rule.ratios(), &[ratio(1, 2), ratio(1, 4), ratio(1, 4)]);
        assert!(SplitRule::parse("1/2,1/3").is_err());
    }
}
