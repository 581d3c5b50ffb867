//! Exact integer scalars.
//!
//! Every linear-algebra routine in this crate is generic over [`ExactInt`].
//! Machine integers report overflow instead of wrapping; callers retry the
//! same computation over [`BigInt`] when that happens, so results are always
//! exact.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Raised by machine-integer arithmetic when a result does not fit.
#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
#[error("integer overflow")]
pub struct Overflow;

pub type Exact<T> = Result<T, Overflow>;

pub trait ExactInt:
    Clone + Debug + Display + Eq + Ord + Hash + Send + Sync + Zero + One + Signed + Integer + 'static
{
    fn add_exact(&self, other: &Self) -> Exact<Self>;
    fn sub_exact(&self, other: &Self) -> Exact<Self>;
    fn mul_exact(&self, other: &Self) -> Exact<Self>;

    fn to_bigint(&self) -> BigInt;
    fn from_bigint(value: &BigInt) -> Option<Self>;

    fn from_i64(value: i64) -> Self;

    fn neg_exact(&self) -> Exact<Self> {
        Self::zero().sub_exact(self)
    }

    /// `self - q * other`, the row-operation primitive.
    fn sub_mul_exact(&self, q: &Self, other: &Self) -> Exact<Self> {
        self.sub_exact(&q.mul_exact(other)?)
    }

    fn is_unit(&self) -> bool {
        self.is_one() || (-self.clone()).is_one()
    }
}

macro_rules! machine_int {
    ($t:ty) => {
        impl ExactInt for $t {
            #[inline]
            fn add_exact(&self, other: &Self) -> Exact<Self> {
                self.checked_add(*other).filter(|v| *v != <$t>::MIN).ok_or(Overflow)
            }
            #[inline]
            fn sub_exact(&self, other: &Self) -> Exact<Self> {
                self.checked_sub(*other).filter(|v| *v != <$t>::MIN).ok_or(Overflow)
            }
            #[inline]
            fn mul_exact(&self, other: &Self) -> Exact<Self> {
                self.checked_mul(*other).filter(|v| *v != <$t>::MIN).ok_or(Overflow)
            }
            fn to_bigint(&self) -> BigInt {
                BigInt::from(*self)
            }
            fn from_bigint(value: &BigInt) -> Option<Self> {
                <$t>::try_from(value).ok().filter(|v| *v != <$t>::MIN)
            }
            fn from_i64(value: i64) -> Self {
                value as $t
            }
        }
    };
}

machine_int!(i64);
machine_int!(i128);

impl ExactInt for BigInt {
    fn add_exact(&self, other: &Self) -> Exact<Self> {
        Ok(self + other)
    }
    fn sub_exact(&self, other: &Self) -> Exact<Self> {
        Ok(self - other)
    }
    fn mul_exact(&self, other: &Self) -> Exact<Self> {
        Ok(self * other)
    }
    fn to_bigint(&self) -> BigInt {
        self.clone()
    }
    fn from_bigint(value: &BigInt) -> Option<Self> {
        Some(value.clone())
    }
    fn from_i64(value: i64) -> Self {
        BigInt::from(value)
    }
}

/// Tries a machine-integer computation first and falls back to the
/// arbitrary-precision one on overflow.
pub fn exact_or_big<R>(machine: impl FnOnce() -> Exact<R>, big: impl FnOnce() -> R) -> R {
    match machine() {
        Ok(r) => r,
        Err(Overflow) => big(),
    }
}

/// Converts an exact integer to `i64`, if it fits.
pub fn to_i64<T: ExactInt>(value: &T) -> Option<i64> {
    value.to_bigint().to_i64()
}

/// Smallest nonnegative representative of `a` modulo `m > 0`.
pub fn modulo<T: ExactInt>(a: &T, m: &T) -> T {
    a.mod_floor(m)
}
