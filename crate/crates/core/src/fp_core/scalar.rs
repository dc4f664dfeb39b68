use std::fmt::{Debug, Display, LowerExp};

use num_traits::Float;
use thiserror::Error;

/// An IEEE-754 binary floating-point type with round-to-nearest-even basic
/// operations and a single-rounding fused multiply-add (`mul_add`).
///
/// Implemented for `f32` and `f64` only.
pub trait Scalar:
    Float + Debug + Display + LowerExp + Default + Send + Sync + 'static
{
    /// Significand precision in bits, including the implicit bit.
    const PRECISION: u32;
    /// Short format name, `"float"` / `"double"` as printed in reports.
    const TYPE_NAME: &'static str;

    /// Unit in the last place of `self`'s binade.
    ///
    /// Zero and subnormals report the smallest positive subnormal; NaN and
    /// infinities give NaN.
    fn ulp(self) -> Self;

    /// Half the unit roundoff spacing at one, `ulp(1)/2`.
    fn half_epsilon() -> Self;

    /// Nearest value of this format to a binary64 value.
    fn from_f64(x: f64) -> Self;

    /// Exact widening to binary64.
    fn to_f64(self) -> f64;

    /// Raw bits, zero-extended, for bitwise comparisons.
    fn to_bits_u64(self) -> u64;

    /// Bitwise equality, except that any two NaNs compare equal.
    #[inline]
    fn same_as(self, other: Self) -> bool {
        self.to_bits_u64() == other.to_bits_u64() || (self.is_nan() && other.is_nan())
    }
}

impl Scalar for f64 {
    const PRECISION: u32 = f64::MANTISSA_DIGITS;
    const TYPE_NAME: &'static str = "double";

    #[inline]
    fn ulp(self) -> f64 {
        if !self.is_finite() {
            return f64::NAN;
        }
        let biased = (self.to_bits() >> 52) & 0x7ff;
        if biased <= 52 {
            // 2^(biased - 1075) is subnormal (or the smallest subnormal).
            f64::from_bits(1u64 << biased.saturating_sub(1))
        } else {
            f64::from_bits((biased - 52) << 52)
        }
    }

    #[inline]
    fn half_epsilon() -> f64 {
        f64::EPSILON / 2.0
    }

    #[inline]
    fn from_f64(x: f64) -> f64 {
        x
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self
    }

    #[inline]
    fn to_bits_u64(self) -> u64 {
        self.to_bits()
    }
}

impl Scalar for f32 {
    const PRECISION: u32 = f32::MANTISSA_DIGITS;
    const TYPE_NAME: &'static str = "float";

    #[inline]
    fn ulp(self) -> f32 {
        if !self.is_finite() {
            return f32::NAN;
        }
        let biased = (self.to_bits() >> 23) & 0xff;
        if biased <= 23 {
            f32::from_bits(1u32 << biased.saturating_sub(1))
        } else {
            f32::from_bits((biased - 23) << 23)
        }
    }

    #[inline]
    fn half_epsilon() -> f32 {
        f32::EPSILON / 2.0
    }

    #[inline]
    fn from_f64(x: f64) -> f32 {
        x as f32
    }

    #[inline]
    fn to_f64(self) -> f64 {
        self as f64
    }

    #[inline]
    fn to_bits_u64(self) -> u64 {
        self.to_bits() as u64
    }
}

#[derive(Debug, Error, PartialEq)]
#[error("fused multiply-add is not single-rounding for {format}: got {got:e}, expected {expected:e}")]
pub struct FmaError {
    pub format: &'static str,
    pub got: f64,
    pub expected: f64,
}

/// Detects a double-rounding `mul_add` emulation.
///
/// `fma(1+h, 1+h, -(1+2h))` with `h = 2^-(p/2)` is exactly `h^2`, which a
/// separately rounded multiply followed by an add loses entirely.
pub fn check_fma() -> Result<(), FmaError> {
    fn probe<T: Scalar>() -> Result<(), FmaError> {
        let h = T::from_f64(2f64.powi(-((T::PRECISION as i32 - 1) / 2 + 1)));
        let a = T::one() + h;
        let got = a.mul_add(a, -(T::one() + h + h));
        let expected = h * h;
        if got == expected {
            Ok(())
        } else {
            Err(FmaError { format: T::TYPE_NAME, got: got.to_f64(), expected: expected.to_f64() })
        }
    }
    probe::<f64>()?;
    probe::<f32>()
}
