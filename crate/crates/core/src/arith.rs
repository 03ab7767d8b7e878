//! Small helpers over arbitrary-precision integers and rationals.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub type Int = BigInt;
pub type Rat = BigRational;

#[inline]
pub fn int(v: i64) -> Int {
    BigInt::from(v)
}

#[inline]
pub fn rat(n: i64, d: i64) -> Rat {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[inline]
pub fn rat_int(v: &Int) -> Rat {
    BigRational::from_integer(v.clone())
}

/// gcd of a slice, always non-negative; 0 for an all-zero slice.
pub fn gcd_all<'a, I: IntoIterator<Item = &'a Int>>(vals: I) -> Int {
    vals.into_iter().fold(Int::zero(), |acc, v| acc.gcd(v))
}

/// lcm of the denominators of a rational slice.
pub fn denom_lcm<'a, I: IntoIterator<Item = &'a Rat>>(vals: I) -> Int {
    vals.into_iter().fold(Int::one(), |acc, v| acc.lcm(v.denom()))
}

/// Reduce `x` into the half-open interval `[0, m)`.
pub fn rat_mod(x: &Rat, m: &Rat) -> Rat {
    let q = (x / m).floor();
    let r = x - q * m;
    debug_assert!(!r.is_negative() && &r < m);
    r
}

/// Try to narrow a big integer to i64.
pub fn to_i64(v: &Int) -> Option<i64> {
    i64::try_from(v).ok()
}

/// Render a rational as `n` or `n/d`.
pub fn fmt_rat(r: &Rat) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Parse `n` or `n/d` (optionally signed) into a rational.
pub fn parse_rat(s: &str) -> Option<Rat> {
    let s = s.trim();
    if let Some((n, d)) = s.split_once('/') {
        let n: Int = n.trim().parse().ok()?;
        let d: Int = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(BigRational::new(n, d))
    } else {
        let n: Int = s.parse().ok()?;
        Some(BigRational::from_integer(n))
    }
}

pub fn sign(v: &Int) -> i32 {
    if v.is_positive() {
        1
    } else if v.is_negative() {
        -1
    } else {
        0
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn mod_reduction_lands_in_range() {
        let two = rat(2, 1);
        assert_eq!(rat_mod(&rat(-1, 2), &two), rat(3, 2));
        assert_eq!(rat_mod(&rat(5, 2), &two), rat(1, 2));
        assert_eq!(rat_mod(&rat(4, 1), &two), rat(0, 1));
    }

    #[test]
    fn parse_and_format() {
        assert_eq!(parse_rat("-23/27"), Some(rat(-23, 27)));
        assert_eq!(parse_rat(" 4 "), Some(rat(4, 1)));
        assert_eq!(parse_rat("1/0"), None);
        assert_eq!(fmt_rat(&rat(6, 4)), "3/2");
        assert_eq!(gcd_all(&[int(6), int(-4), int(0)]), int(2));
    }
}
