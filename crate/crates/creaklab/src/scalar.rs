//! Scalar abstraction for the numeric kernels.
//!
//! All signal-processing and network math is generic over [`Scalar`] so the
//! same code runs in `f32` (fast training/inference) and `f64` (pitch
//! analysis, finite-difference gradient checks). Checkpoints always store
//! `f32` regardless of the compute type.

use std::fmt::{Debug, Display};
use std::iter::Sum;
use std::ops::{AddAssign, DivAssign, MulAssign, SubAssign};

use num_traits::Float;

/// Floating-point scalar usable by the DSP and network kernels.
pub trait Scalar:
    Float
    + AddAssign
    + SubAssign
    + MulAssign
    + DivAssign
    + Sum<Self>
    + Debug
    + Display
    + Default
    + Send
    + Sync
    + 'static
{
    /// Lossy conversion from `f64`, for constants and file I/O boundaries.
    fn from_f64(x: f64) -> Self;

    /// Lossy conversion to `f64`, for reporting and serialization.
    fn to_f64(self) -> f64;
}

impl Scalar for f32 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x as f32
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }
}

impl Scalar for f64 {
    #[inline]
    fn from_f64(x: f64) -> Self {
        x
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self
    }
}
