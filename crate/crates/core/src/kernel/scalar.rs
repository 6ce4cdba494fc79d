//! Exact rational scalars.
//!
//! Every coordinate in this crate is an arbitrary-precision rational.
//! `BigRational` keeps values in canonical reduced form (gcd of numerator
//! and denominator is 1, denominator positive) after every `+ - * /`, so
//! equality and hashing are structural and the geometric predicates never
//! need an epsilon.

use num_bigint::BigInt;
use num_rational::BigRational;

pub type Scalar = BigRational;

/// Integer-valued scalar.
pub fn integer(n: i64) -> Scalar {
    BigRational::from_integer(BigInt::from(n))
}

/// `n / d` as an exact scalar.
///
/// Panics if `d == 0`.
pub fn ratio(n: i64, d: i64) -> Scalar {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}
