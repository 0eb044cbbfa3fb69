//! Arbitrary-precision rationals, backed by `num-rational`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::QError;

/// Exact rational number in lowest terms with positive denominator.
pub type Rational = BigRational;

/// Builds `num/den` from machine integers. Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

pub fn int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses `p`, `-p` or `p/r` (surrounding whitespace allowed).
pub fn parse_rational(text: &str) -> Result<Rational, QError> {
    let t = text.trim();
    let bad = || QError::Parse(format!("not a rational: {text:?}"));
    let (n, d) = match t.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (t, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(QError::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(Rational::new(n, d))
}

/// Canonical text form: `p` for integers, `p/r` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// `base^exp` for any integer exponent; `base` must be nonzero when `exp < 0`.
pub fn pow(base: &Rational, exp: i64) -> Rational {
    let mut acc = Rational::one();
    let b = if exp < 0 { base.recip() } else { base.clone() };
    for _ in 0..exp.unsigned_abs() {
        acc *= &b;
    }
    acc
}

/// Exact `k`-th root of a rational, if one exists.
pub fn exact_root(r: &Rational, k: u32) -> Option<Rational> {
    if k == 0 {
        return None;
    }
    if r.is_negative() {
        if k % 2 == 0 {
            return None;
        }
        return exact_root(&-r, k).map(|x| -x);
    }
    let n = int_root(r.numer(), k)?;
    let d = int_root(r.denom(), k)?;
    Some(Rational::new(n, d))
}

fn int_root(n: &BigInt, k: u32) -> Option<BigInt> {
    let root = n.nth_root(k);
    (num_traits::pow(root.clone(), k as usize) == *n).then_some(root)
}

/// True for values that are admissible specializations of `q`:
/// nonzero and not `±1`. Every other rational has absolute value different
/// from 1 and therefore is not a root of unity.
pub fn is_admissible_q(q0: &Rational) -> bool {
    !q0.is_zero() && q0.abs() != Rational::one()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rational("3/6").unwrap(), rat(1, 2));
        assert_eq!(parse_rational(" -7 ").unwrap(), int(-7));
        assert_eq!(format_rational(&rat(-4, 2)), "-2");
        assert_eq!(format_rational(&rat(21, 4)), "21/4");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn roots() {
        assert_eq!(exact_root(&rat(8, 27), 3), Some(rat(2, 3)));
        assert_eq!(exact_root(&rat(-1, 8), 3), Some(rat(-1, 2)));
        assert_eq!(exact_root(&rat(2, 1), 2), None);
        assert_eq!(exact_root(&rat(-4, 1), 2), None);
    }

    #[test]
    fn pow_negative() {
        assert_eq!(pow(&rat(2, 1), -3), rat(1, 8));
        assert_eq!(pow(&rat(3, 2), 0), int(1));
    }
}
