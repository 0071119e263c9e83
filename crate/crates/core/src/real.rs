//! Scalar abstraction for the numeric kernels.
//!
//! Entropy and statistics code is generic over [`Real`] so the same
//! routines run in `f32` or `f64`. The crate-root aliases pin the
//! default precision used by the toolkit.

use std::fmt::{Debug, Display};
use std::iter::Sum;

/// Floating-point scalar: `f32` or `f64`.
pub trait Real:
    num_traits::Float + num_traits::FromPrimitive + Debug + Display + Sum + 'static
{
    /// Lossless-enough conversion from an `f64` literal or constant.
    fn of(x: f64) -> Self {
        Self::from_f64(x).expect("f64 constant not representable")
    }

    /// Conversion from an integer count.
    fn of_usize(n: usize) -> Self {
        Self::from_usize(n).expect("usize not representable")
    }
}

impl Real for f32 {}
impl Real for f64 {}
