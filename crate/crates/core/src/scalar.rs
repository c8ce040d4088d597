//! Floating-point abstraction shared by the numeric modules.

use std::fmt::{Debug, Display};

use num_traits::{Float, FloatConst, FromPrimitive};

/// floating point: f32 or f64
pub trait Scalar:
    Float + FloatConst + FromPrimitive + Debug + Display + Send + Sync + 'static
{
}

impl Scalar for f32 {}
impl Scalar for f64 {}

/// Converts an `f64` literal into the working scalar type.
#[inline]
pub fn lit<T: Scalar>(x: f64) -> T {
    T::from_f64(x).expect("literal representable in scalar type")
}

#[inline]
pub(crate) fn to_f64<T: Scalar>(x: T) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Returns the nearest integer when `x` is within `1e-12` of it.
pub fn as_integer<T: Scalar>(x: T) -> Option<i64> {
    let r = x.round();
    if (x - r).abs() < lit(1e-12) {
        r.to_i64()
    } else {
        None
    }
}

/// `x^m` for a real exponent, taking the integer fast path (which also
/// admits negative bases) whenever `m` is integral.
pub(crate) fn real_pow<T: Scalar>(x: T, m: T) -> T {
    match as_integer(m) {
        Some(k) if k.abs() <= i32::MAX as i64 => x.powi(k as i32),
        _ => x.powf(m),
    }
}
