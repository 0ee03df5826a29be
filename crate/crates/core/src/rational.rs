//! Exact coordinates.
//!
//! Every coordinate in the crate is a normalized `i64` fraction. Values are
//! only ever compared, except for affine functionals (semilinear instances),
//! which are evaluated with overflow-checked `i128` fractions.

use num_rational::Ratio;
use num_traits::{CheckedAdd, CheckedMul, Zero};

use crate::error::{Error, Result};

pub type Rational = Ratio<i64>;

/// Wide fraction used when evaluating affine functionals.
pub type Wide = Ratio<i128>;

pub fn int(v: i64) -> Rational {
    Rational::from_integer(v)
}

/// Parses `int` or `num/den`. Anything else, including decimal points and
/// exponents, is rejected.
pub fn parse_rational(tok: &str) -> std::result::Result<Rational, String> {
    let parse_int = |s: &str| -> std::result::Result<i64, String> {
        let digits = s.strip_prefix('-').or_else(|| s.strip_prefix('+')).unwrap_or(s);
        if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
            return Err(format!("`{tok}` is not an integer or fraction (floating point is rejected)"));
        }
        s.parse::<i64>().map_err(|e| format!("`{tok}`: {e}"))
    };
    match tok.split_once('/') {
        None => Ok(Rational::from_integer(parse_int(tok)?)),
        Some((n, d)) => {
            let num = parse_int(n)?;
            let den = parse_int(d)?;
            if den == 0 {
                return Err(format!("`{tok}` has a zero denominator"));
            }
            if num == i64::MIN || den == i64::MIN {
                return Err(format!("`{tok}` does not fit a normalized i64 fraction"));
            }
            Ok(Rational::new(num, den))
        }
    }
}

pub fn widen(r: &Rational) -> Wide {
    Wide::new_raw(i128::from(*r.numer()), i128::from(*r.denom()))
}

/// Evaluates `coeffs[0] + sum_k coeffs[k+1] * x[k]` exactly.
pub fn eval_affine(coeffs: &[Rational], x: &[Rational]) -> Result<Wide> {
    debug_assert_eq!(coeffs.len(), x.len() + 1);
    let overflow = || Error::Overflow("affine functional evaluation".into());
    let mut acc = widen(&coeffs[0]);
    for (c, v) in coeffs[1..].iter().zip(x) {
        if c.is_zero() {
            continue;
        }
        let term = widen(c).checked_mul(&widen(v)).ok_or_else(overflow)?;
        acc = acc.checked_add(&term).ok_or_else(overflow)?;
    }
    Ok(acc)
}

/// Replaces each value by its rank among the distinct values of `values`.
/// Equal values receive equal ranks, so strict and non-strict comparisons
/// between ranks agree with those between the original values.
pub fn dense_ranks<T: Ord>(values: &[T]) -> Vec<u32> {
    let mut order: Vec<usize> = (0..values.len()).collect();
    order.sort_by(|&a, &b| values[a].cmp(&values[b]));
    let mut ranks = vec![0u32; values.len()];
    let mut rank = 0u32;
    for w in 0..order.len() {
        if w > 0 && values[order[w]] != values[order[w - 1]] {
            rank += 1;
        }
        ranks[order[w]] = rank;
    }
    ranks
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_integers_and_fractions() {
        assert_eq!(parse_rational("7").unwrap(), int(7));
        assert_eq!(parse_rational("-3").unwrap(), int(-3));
        assert_eq!(parse_rational("6/-4").unwrap(), Rational::new(-3, 2));
        let r = parse_rational("10/4").unwrap();
        assert_eq!((*r.numer(), *r.denom()), (5, 2));
    }

    #[test]
    fn rejects_floats_and_zero_denominators() {
        assert!(parse_rational("1.5").is_err());
        assert!(parse_rational("1e3").is_err());
        assert!(parse_rational("3/0").is_err());
        assert!(parse_rational("").is_err());
        assert!(parse_rational("/2").is_err());
    }

    #[test]
    fn affine_evaluation() {
        let c = [int(1), Rational::new(1, 2), int(-2)];
        let x = [int(4), int(3)];
        assert_eq!(eval_affine(&c, &x).unwrap(), Wide::from_integer(-3));
    }

    #[test]
    fn ranks_keep_ties() {
        assert_eq!(dense_ranks(&[5, 1, 5, 3]), vec![2, 0, 2, 1]);
        assert!(dense_ranks::<i32>(&[]).is_empty());
    }
}
