//! Exact rational helpers.

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{Signed, Zero};

pub type Rational = Ratio<i128>;

pub fn int(v: i128) -> Rational {
    Rational::from_integer(v)
}

pub fn ratio(p: i128, q: i128) -> Rational {
    Rational::new(p, q)
}

/// Smallest integer `>= r`.
pub fn ceil(r: Rational) -> i128 {
    r.ceil().to_integer()
}

/// Least common multiple of the denominators.
pub fn common_denominator(values: &[Rational]) -> i128 {
    values.iter().fold(1i128, |acc, v| acc.lcm(v.denom()))
}

/// `v * d` as an integer. Panics if `d` is not a multiple of the denominator.
pub fn scale(v: Rational, d: i128) -> i128 {
    let s = v * int(d);
    assert!(s.is_integer(), "scale {d} does not clear the denominator of {v}");
    s.to_integer()
}

pub fn abs(r: Rational) -> Rational {
    r.abs()
}

pub fn is_zero(r: Rational) -> bool {
    r.is_zero()
}
