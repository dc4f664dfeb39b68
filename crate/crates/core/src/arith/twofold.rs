use crate::fp_core::{Coupled, Scalar};

/// `value` is the plain rounded result, `error` estimates `exact - value`.
///
/// No relation between the parts is assumed; the error may exceed the value.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Twofold<T> {
    pub value: T,
    pub error: T,
}

impl<T: Scalar> Twofold<T> {
    #[inline]
    pub const fn new(value: T, error: T) -> Self {
        Twofold { value, error }
    }

    #[inline]
    pub fn zero() -> Self {
        Twofold { value: T::zero(), error: T::zero() }
    }

    /// A binary64 constant narrowed to `T`, with the narrowing residual kept
    /// in the error part. For `f64` the error is zero.
    pub fn from_decimal(x: f64) -> Self {
        let value = T::from_f64(x);
        Twofold { value, error: T::from_f64(x - value.to_f64()) }
    }

    #[inline]
    pub fn neg(self) -> Self {
        Twofold { value: -self.value, error: -self.error }
    }

    /// Absolute value, decided by the sign of `value`.
    #[inline]
    pub fn abs(self) -> Self {
        if self.value.is_sign_negative() {
            self.neg()
        } else {
            self
        }
    }

    /// Bitwise equality of both parts, NaNs of any payload equal.
    pub fn same_as(&self, other: &Self) -> bool {
        self.value.same_as(other.value) && self.error.same_as(other.error)
    }
}

impl<T: Scalar> From<T> for Twofold<T> {
    #[inline]
    fn from(value: T) -> Self {
        Twofold { value, error: T::zero() }
    }
}

impl<T: Scalar> From<Coupled<T>> for Twofold<T> {
    #[inline]
    fn from(c: Coupled<T>) -> Self {
        Twofold { value: c.value(), error: c.error() }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn decimal_residual() {
        let t = Twofold::<f32>::from_decimal(0.1);
        assert_eq!(t.value, 0.1f32);
        assert_eq!(t.error, (0.1f64 - 0.1f32 as f64) as f32);
        assert!(t.error < 0.0);
        assert_eq!(Twofold::<f64>::from_decimal(0.1), Twofold::new(0.1, 0.0));
    }

    #[test]
    fn neg_and_abs() {
        let x = Twofold::new(-2.0, 1e-17);
        assert_eq!(x.neg(), Twofold::new(2.0, -1e-17));
        assert_eq!(x.abs(), Twofold::new(2.0, -1e-17));
        assert_eq!(x.neg().abs(), x.neg());
    }
}
