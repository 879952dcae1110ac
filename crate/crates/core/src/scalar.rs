//! Scalar abstraction for exact integer arithmetic.
//!
//! Every computation in this crate runs over an exact integer ring: no
//! floating point, no rounding, no silent overflow. [`Scalar`] pins down
//! what the matrix and polynomial code needs from a coefficient type.
//! `BigInt` is the default (see the `IntMatrix` / `IntPoly` aliases at the
//! crate root); fixed-width integers such as `i64` work wherever the caller
//! can bound coefficient growth, which is handy in tests.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_integer::Integer;
use num_traits::{FromPrimitive, NumRef, Signed};

/// Exact signed integer scalar.
///
/// `NumRef` gives `T op &T` arithmetic so big integers are not cloned on
/// every multiply inside the inner loops.
pub trait Scalar:
    Integer
    + Signed
    + NumRef
    + FromPrimitive
    + Clone
    + Hash
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// Lift a count (vertex degree, matrix order, ...) into the scalar type.
    fn from_count(value: usize) -> Self {
        Self::from_usize(value).expect("count must be representable in the scalar type")
    }
}

impl<T> Scalar for T where
    T: Integer
        + Signed
        + NumRef
        + FromPrimitive
        + Clone
        + Hash
        + Debug
        + Display
        + Send
        + Sync
        + 'static
{
}
