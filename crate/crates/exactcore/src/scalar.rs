//! Scalar traits and rational parsing.
//!
//! `Ring` and `Field` are thin bounds over the `num-traits` vocabulary so the
//! polynomial and linear algebra code can be written once and instantiated
//! with `BigRational`, with sparse multivariate polynomials as coefficients
//! (for symbolic identity tests), or with anything else that satisfies the
//! bounds. `OrderedField` gates the algorithms whose correctness depends on
//! exact sign decisions; `f64` fails the `Ord` bound on purpose.

use num_traits::{One, Zero};
use std::fmt::Debug;
use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::Rat;

/// Commutative ring with exact equality. All arithmetic is by value; types
/// are expected to be cheaply clonable or heap backed (BigRational, MPoly).
pub trait Ring:
    Clone
    + Debug
    + PartialEq
    + Zero
    + One
    + Neg<Output = Self>
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
{
    /// Embeds a small integer; the only scalar constructor the generic code
    /// needs.
    fn from_i64(n: i64) -> Self;
}

impl<T> Ring for T
where
    T: Clone
        + Debug
        + PartialEq
        + Zero
        + One
        + Neg<Output = T>
        + Add<Output = T>
        + Sub<Output = T>
        + Mul<Output = T>
        + num_traits::FromPrimitive,
{
    fn from_i64(n: i64) -> Self {
        num_traits::FromPrimitive::from_i64(n).expect("integer embeds into scalar")
    }
}

/// Ring with exact division by nonzero elements.
pub trait Field: Ring + Div<Output = Self> {}

impl<T> Field for T where T: Ring + Div<Output = T> {}

/// Field with a total order compatible with the arithmetic. Required by the
/// sign-deciding algorithms (Sturm, bisection, pivoting with size heuristics).
pub trait OrderedField: Field + Ord {}

impl<T> OrderedField for T where T: Field + Ord {}

// ---- Rational parsing and formatting ----

/// Parses `"p/q"`, `"p"`, or a decimal like `"-0.25"` into an exact rational.
///
/// Decimal forms are exact (the denominator is the power of ten); arbitrary
/// precision is accepted. Returns `None` on malformed input or zero
/// denominator.
pub fn parse_rat(s: &str) -> Option<Rat> {
    use num_bigint::BigInt;
    let s = s.trim();
    if s.is_empty() {
        return None;
    }
    if let Some((num, den)) = s.split_once('/') {
        let n: BigInt = num.trim().parse().ok()?;
        let d: BigInt = den.trim().parse().ok()?;
        if d.is_zero() {
            return None;
        }
        return Some(Rat::new(n, d));
    }
    if let Some((int_part, frac_part)) = s.split_once('.') {
        if frac_part.is_empty() || !frac_part.bytes().all(|b| b.is_ascii_digit()) {
            return None;
        }
        let negative = int_part.trim_start().starts_with('-');
        let i: BigInt = if int_part == "-" || int_part.is_empty() {
            BigInt::zero()
        } else {
            int_part.parse().ok()?
        };
        let f: BigInt = frac_part.parse().ok()?;
        let scale = BigInt::from(10u32).pow(frac_part.len() as u32);
        let frac = Rat::new(f, scale);
        let int = Rat::from_integer(i);
        return Some(if negative { int - frac } else { int + frac });
    }
    let n: BigInt = s.parse().ok()?;
    Some(Rat::from_integer(n))
}

/// Formats a rational as `"p/q"` in lowest terms, or `"p"` when integral.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}
