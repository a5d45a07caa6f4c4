//! Exact arithmetic foundation: arbitrary-precision rationals and
//! cyclotomic field elements.
//!
//! Rationals are `num::BigRational` (always in lowest terms, positive
//! denominator). Cyclotomic numbers carry every character value in the
//! crate; see [`cyclotomic::CycNumber`].

pub mod arith;
pub mod cyclotomic;

pub use cyclotomic::{CycNumber, ExactError};

/// Arbitrary-precision rational; stored in lowest terms with positive denominator.
pub type Rational = num::BigRational;

use num::{BigInt, One, Signed, Zero};

/// `n` as a rational.
pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// `n/d` as a rational (`d != 0`).
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Exact conversion to `u64`, if the rational is a non-negative integer in range.
pub fn rat_to_u64(r: &Rational) -> Option<u64> {
    if !r.is_integer() || r.is_negative() {
        return None;
    }
    let n = r.numer();
    let (_, digits) = n.to_u64_digits();
    match digits.len() {
        0 => Some(0),
        1 => Some(digits[0]),
        _ => None,
    }
}

/// Exact conversion to `i64`, if the rational is an integer in range.
pub fn rat_to_i64(r: &Rational) -> Option<i64> {
    use num::ToPrimitive;
    if !r.is_integer() {
        return None;
    }
    r.numer().to_i64()
}

/// True iff `r` is an integer.
pub fn is_integer(r: &Rational) -> bool {
    r.denom().is_one() || r.numer().is_zero()
}
