//! Exact scalar rings for matrix arithmetic.
//!
//! Homology matrices of graph automorphisms have integer entries, so every
//! matrix routine in this crate is written against [`Scalar`], a signed
//! ring with exact (truncating) division. Primitive signed integers satisfy
//! it, as does any arbitrary-precision integer type implementing the
//! `num-traits` interfaces.

use std::fmt::{Debug, Display};
use std::hash::Hash;

use num_traits::Signed;

/// A signed integer-like ring. Division is only ever used where it is
/// exact (fraction-free elimination, unimodular inverses).
pub trait Scalar: Signed + Clone + Ord + Hash + Debug + Display + Send + Sync {
    fn from_i64(v: i64) -> Self;
}

macro_rules! impl_scalar {
    ($($t:ty),*) => {
        $(impl Scalar for $t {
            #[inline]
            fn from_i64(v: i64) -> Self {
                v as $t
            }
        })*
    };
}

impl_scalar!(i32, i64, i128);
