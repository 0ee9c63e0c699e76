//! Exact rational arithmetic. All weights, costs and quotients in this
//! library are rationals; no floating point is used anywhere.

use crate::error::{Error, Result};

/// Exact rational number, always kept in lowest terms with a positive
/// denominator.
pub type Rational = num_rational::Ratio<i64>;

/// Quotient of two integers with the convention that equal arguments give 1.
///
/// This absorbs the 0/0 case that arises when taking the quotient of lower
/// and upper ranks of a set with empty rank (both are 0), and coincides with
/// the ordinary quotient whenever `a = b != 0`.
pub fn frac(a: i64, b: i64) -> Result<Rational> {
    if a == b {
        Ok(Rational::from_integer(1))
    } else if b == 0 {
        Err(Error::arithmetic(format!("undefined quotient {a}/0")))
    } else {
        Ok(Rational::new(a, b))
    }
}

/// Canonical textual form: `p` for integers, `p/q` otherwise.
pub fn format_rational(r: &Rational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
