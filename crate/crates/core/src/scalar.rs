//! Floating-point scalar abstraction for the dense forest algebra.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, MulAssign, SubAssign};

use num_traits::{Float, FromPrimitive, ToPrimitive};

/// A real scalar the matrix routines can run on: `f32` or `f64`.
///
/// Besides the arithmetic bounds, every scalar carries the two numeric
/// thresholds the extraction loop needs, sized to its precision.
pub trait Scalar:
    Float
    + FromPrimitive
    + ToPrimitive
    + Sum
    + AddAssign
    + SubAssign
    + MulAssign
    + Debug
    + Display
    + Send
    + Sync
    + 'static
{
    /// An edge counts as a bridge once its effective resistance reaches
    /// `1 - bridge_tol()`. Rank-one downdates refuse denominators below it.
    fn bridge_tol() -> Self;

    /// Forest distances closer than this are treated as tied.
    fn tie_tol() -> Self;

    /// Lossless for every integer a graph of practical size produces.
    fn from_count(v: usize) -> Self {
        <Self as FromPrimitive>::from_usize(v).expect("usize is representable as a float")
    }

    fn to_f64_lossy(self) -> f64 {
        self.to_f64().unwrap_or(f64::NAN)
    }
}

impl Scalar for f64 {
    fn bridge_tol() -> Self {
        1e-9
    }

    fn tie_tol() -> Self {
        1e-12
    }
}

impl Scalar for f32 {
    fn bridge_tol() -> Self {
        1e-4
    }

    fn tie_tol() -> Self {
        1e-6
    }
}
