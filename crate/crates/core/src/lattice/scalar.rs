use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_rational::Ratio;
use num_traits::{FromPrimitive, Signed, ToPrimitive};

/// Exact integer scalar accepted by the lattice routines.
///
/// Implemented for every signed integer type that `num` knows about:
/// `i64`, `i128` and `BigInt` in practice. Fixed-width types panic on
/// overflow in debug builds, so anything that can grow (HNF of non-trivial
/// input, Fourier–Motzkin) should run on `BigInt`.
pub trait ExactInt:
    Integer
    + Signed
    + Clone
    + Debug
    + Display
    + Hash
    + FromPrimitive
    + ToPrimitive
    + Send
    + Sync
    + 'static
{
}

impl<T> ExactInt for T where
    T: Integer
        + Signed
        + Clone
        + Debug
        + Display
        + Hash
        + FromPrimitive
        + ToPrimitive
        + Send
        + Sync
        + 'static
{
}

pub(crate) fn from_i64<T: ExactInt>(v: i64) -> T {
    T::from_i64(v).expect("every exact integer type holds an i64")
}

/// Least common multiple of the denominators of `values` (1 for an empty slice).
pub fn common_denominator<T: ExactInt>(values: &[Ratio<T>]) -> T {
    values.iter().fold(T::one(), |acc, v| acc.lcm(v.denom()))
}

/// Scales a rational vector by the lcm of its denominators.
pub fn clear_denominators<T: ExactInt>(values: &[Ratio<T>]) -> Vec<T> {
    let l = common_denominator(values);
    values
        .iter()
        .map(|v| (v * Ratio::from_integer(l.clone())).to_integer())
        .collect()
}

/// Gcd of a slice, always nonnegative; 0 for the zero vector.
pub fn gcd_all<T: ExactInt>(values: &[T]) -> T {
    values.iter().fold(T::zero(), |acc, v| acc.gcd(v))
}

pub fn dot<T: ExactInt>(a: &[T], b: &[T]) -> T {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(T::zero(), |acc, (x, y)| acc + x.clone() * y.clone())
}

pub fn dot_ratio<T: ExactInt>(a: &[T], b: &[Ratio<T>]) -> Ratio<T> {
    debug_assert_eq!(a.len(), b.len());
    a.iter()
        .zip(b)
        .fold(Ratio::from_integer(T::zero()), |acc, (x, y)| {
            acc + y * Ratio::from_integer(x.clone())
        })
}
