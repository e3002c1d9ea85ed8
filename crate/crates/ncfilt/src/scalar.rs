//! Exact rational scalars.
//!
//! All coefficient arithmetic in the crate is exact.  `Scalar` is a
//! big-integer rational; the backing type keeps fractions in lowest terms
//! with a positive denominator, so equality is structural.

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};

pub type Scalar = BigRational;

pub fn zero() -> Scalar {
    Scalar::zero()
}

pub fn one() -> Scalar {
    Scalar::one()
}

pub fn int(n: i64) -> Scalar {
    Scalar::from_integer(BigInt::from(n))
}

pub fn ratio(num: i64, den: i64) -> Scalar {
    Scalar::new(BigInt::from(num), BigInt::from(den))
}

/// Renders a scalar the way the surface syntax expects: `3`, `-3`, `1/2`.
pub fn display(s: &Scalar) -> String {
    s.to_string()
}

/// Parses `3`, `-3`, or `1/2`.  Used by the CLI grammar and by tests.
pub fn parse(text: &str) -> Option<Scalar> {
    let text = text.trim();
    if let Some((n, d)) = text.split_once('/') {
        let n: BigInt = n.trim().parse().ok()?;
        let d: BigInt = d.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        Some(Scalar::new(n, d))
    } else {
        let n: BigInt = text.parse().ok()?;
        Some(Scalar::from_integer(n))
    }
}

pub fn is_negative(s: &Scalar) -> bool {
    s.is_negative()
}
