//! Exact rational coordinates and their textual forms.
//!
//! All geometry in this crate is carried out on arbitrary-precision
//! rationals ([`Ratio`]); comparisons are exact, which is what makes
//! "interval(s) of maximal length" well defined across thousands of
//! refinement steps.

use crate::error::{Error, Result};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::str::FromStr;

/// Exact rational number; always stored in lowest terms with a positive
/// denominator.
pub type Ratio = num_rational::BigRational;

/// Shorthand for building a ratio from machine integers.
pub fn ratio(numer: i64, denom: i64) -> Ratio {
    Ratio::new(BigInt::from(numer), BigInt::from(denom))
}

/// Number of significant decimal digits used by default when rendering
/// exact values for CSV or line output.
pub const DEFAULT_SIG_DIGITS: u32 = 12;

/// Parses a single rational literal: `p/q`, a plain integer, or a decimal
/// such as `0.25` (read as an exact base-10 rational). `offset` is added
/// to reported error positions.
pub fn parse_ratio_at(text: &str, offset: usize) -> Result<Ratio> {
    let s = text.trim();
    let pos = offset + (text.len() - text.trim_start().len());
    if s.is_empty() {
        return Err(Error::Parse {
            pos,
            msg: "empty number".into(),
        });
    }
    if let Some((num, den)) = s.split_once('/') {
        let n = BigInt::from_str(num.trim()).map_err(|_| Error::Parse {
            pos,
            msg: format!("bad numerator {num:?}"),
        })?;
        let d = BigInt::from_str(den.trim()).map_err(|_| Error::Parse {
            pos: pos + num.len() + 1,
            msg: format!("bad denominator {den:?}"),
        })?;
        if d.is_zero() {
            return Err(Error::Parse {
                pos: pos + num.len() + 1,
                msg: "zero denominator".into(),
            });
        }
        return Ok(Ratio::new(n, d));
    }
    if let Some((int, frac)) = s.split_once('.') {
        let int = if int.is_empty() { "0" } else { int };
        if frac.is_empty() || !frac.bytes().all(|b| b.is_ascii_digit()) {
            return Err(Error::Parse {
                pos,
                msg: format!("bad decimal {s:?}"),
            });
        }
        let whole = BigInt::from_str(int).map_err(|_| Error::Parse {
            pos,
            msg: format!("bad decimal {s:?}"),
        })?;
        let frac_digits = BigInt::from_str(frac).expect("digits checked");
        let scale = BigInt::from(10u32).pow(frac.len() as u32);
        let numer = if whole.is_negative() {
            &whole * &scale - frac_digits
        } else {
            &whole * &scale + frac_digits
        };
        return Ok(Ratio::new(numer, scale));
    }
    let n = BigInt::from_str(s).map_err(|_| Error::Parse {
        pos,
        msg: format!("bad number {s:?}"),
    })?;
    Ok(Ratio::from_integer(n))
}

/// Parses a single rational literal (see [`parse_ratio_at`]).
pub fn parse_ratio(text: &str) -> Result<Ratio> {
    parse_ratio_at(text, 0)
}

/// Parses a comma-separated list of rational literals, e.g. the rule
/// literal `1/3,2/3` or `0.5,0.25,0.25`.
pub fn parse_ratio_list(text: &str) -> Result<Vec<Ratio>> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in text.split(',') {
        out.push(parse_ratio_at(part, offset)?);
        offset += part.len() + 1;
    }
    Ok(out)
}

/// Renders a non-negative rational in decimal with `sig` significant
/// digits, rounding half to even. Trailing zeros are trimmed, so
/// `1/2` renders as `0.5` and `1/3` as `0.333333333333`.
pub fn decimal_string(x: &Ratio, sig: u32) -> String {
    assert!(!x.is_negative(), "decimal_string expects x >= 0");
    if x.is_zero() {
        return "0".into();
    }
    let p = x.numer().magnitude().clone();
    let q = x.denom().magnitude().clone();
    // integer part
    let whole = &p / &q;
    if !whole.is_zero() {
        let whole_str = whole.to_string();
        let int_digits = whole_str.len() as u32;
        let frac_digits = sig.saturating_sub(int_digits);
        let scale = BigUint::from(10u32).pow(frac_digits);
        let scaled = round_half_even(&(&p * &scale), &q);
        return place_decimal(&scaled, frac_digits);
    }
    // leading zeros after the point
    let mut z = 0u32;
    let ten = BigUint::from(10u32);
    let mut probe = &p * &ten;
    while probe < q {
        z += 1;
        probe *= &ten;
    }
    let scale = BigUint::from(10u32).pow(z + sig);
    let scaled = round_half_even(&(&p * &scale), &q);
    place_decimal(&scaled, z + sig)
}

fn place_decimal(scaled: &BigUint, frac_digits: u32) -> String {
    let mut digits = scaled.to_string();
    while digits.len() < frac_digits as usize + 1 {
        digits.insert(0, '0');
    }
    if frac_digits > 0 {
        digits.insert(digits.len() - frac_digits as usize, '.');
        while digits.ends_with('0') {
            digits.pop();
        }
        if digits.ends_with('.') {
            digits.pop();
        }
    }
    digits
}

/// `round(p / q)` with ties to even.
fn round_half_even(p: &BigUint, q: &BigUint) -> BigUint {
    let (quot, rem) = p.div_rem(q);
    let twice = &rem * 2u32;
    match twice.cmp(q) {
        Ordering::Less => quot,
        Ordering::Greater => quot + 1u32,
        Ordering::Equal => {
            if (&quot % 2u32).is_zero() {
                quot
            } else {
                quot + 1u32
            }
        }
    }
}

/// Renders a rational as `p/q` (or a bare integer when q = 1).
pub fn fraction_string(x: &Ratio) -> String {
    x.to_string()
}

/// Nearest f64, for plotting and reports where exactness is not needed.
pub fn to_f64(x: &Ratio) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Sorts a slice of rationals, using cached f64 keys to keep exact
/// comparisons off the hot path. Ties in the approximate keys fall back
/// to exact comparison, so the order is exact.
pub fn sort_ratios(values: &mut Vec<Ratio>) {
    let mut keyed: Vec<(f64, Ratio)> = std::mem::take(values)
        .into_iter()
        .map(|r| (to_f64(&r), r))
        .collect();
    keyed.sort_unstable_by(|a, b| match a.0.partial_cmp(&b.0) {
        Some(Ordering::Equal) | None => a.1.cmp(&b.1),
        Some(ord) => ord,
    });
    *values = keyed.into_iter().map(|(_, r)| r).collect();
}

pub(crate) fn one() -> Ratio {
    Ratio::one()
}

pub(crate) fn zero() -> Ratio {
    Ratio::zero()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_fractions_decimals_integers() {
        assert_eq!(parse_ratio("1/3").unwrap(), ratio(1, 3));
        assert_eq!(parse_ratio(" 2/6 ").unwrap(), ratio(1, 3));
        assert_eq!(parse_ratio("0.25").unwrap(), ratio(1, 4));
        assert_eq!(parse_ratio("1").unwrap(), ratio(1, 1));
        assert_eq!(parse_ratio(".5").unwrap(), ratio(1, 2));
        assert!(parse_ratio("1/0").is_err());
        assert!(parse_ratio("x").is_err());
    }

    #[test]
    fn parse_list_reports_position() {
        let err = parse_ratio_list("1/2,oops").unwrap_err();
        match err {
            Error::Parse { pos, .. } => assert_eq!(pos, 4),
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn decimal_rendering() {
        assert_eq!(decimal_string(&ratio(1, 2), 12), "0.5");
        assert_eq!(decimal_string(&ratio(1, 3), 12), "0.333333333333");
        assert_eq!(decimal_string(&ratio(2, 3), 12), "0.666666666667");
        assert_eq!(decimal_string(&ratio(1, 1024), 12), "0.0009765625");
        assert_eq!(decimal_string(&ratio(0, 1), 12), "0");
        assert_eq!(decimal_string(&ratio(1, 1), 12), "1");
        // half-to-even at the last kept digit
        assert_eq!(decimal_string(&ratio(25, 1000), 1), "0.02");
        assert_eq!(decimal_string(&ratio(35, 1000), 1), "0.04");
    }

    #[test]
    fn sort_is_exact() {
        let mut v = vec![ratio(2, 3), ratio(1, 3), ratio(1, 2), ratio(1, 3)];
        sort_ratios(&mut v);
        assert_eq!(v, vec![ratio(1, 3), ratio(1, 3), ratio(1, 2), ratio(2, 3)]);
    }
}
