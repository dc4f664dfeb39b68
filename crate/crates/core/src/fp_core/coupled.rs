use super::Scalar;

/// A non-overlapping pair: `|error| <= ulp(value)/2` whenever `value` is
/// finite and nonzero.
///
/// Only the exact transforms and renormalization produce one, so the
/// invariant holds by construction. A `Coupled` converts into a
/// [`Twofold`](crate::Twofold) for free; the reverse goes through
/// [`renormalize`](super::renormalize).
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Coupled<T> {
    value: T,
    error: T,
}

impl<T: Scalar> Coupled<T> {
    #[inline]
    pub(crate) fn from_parts(value: T, error: T) -> Self {
        Coupled { value, error }
    }

    /// A dotted number viewed as a coupled pair with a zero tail.
    #[inline]
    pub fn from_scalar(value: T) -> Self {
        Coupled { value, error: T::zero() }
    }

    /// Accepts the pair only if it already satisfies the non-overlap bound.
    pub fn try_new(value: T, error: T) -> Option<Self> {
        if Self::is_non_overlapping(value, error) {
            Some(Coupled { value, error })
        } else {
            None
        }
    }

    /// The coupling predicate. Vacuous when `value` is zero, subnormal or
    /// non-finite.
    pub fn is_non_overlapping(value: T, error: T) -> bool {
        if !value.is_finite() || value == T::zero() || !value.is_normal() {
            return true;
        }
        let half_ulp = value.ulp() / (T::one() + T::one());
        error.abs() <= half_ulp
    }

    #[inline]
    pub fn value(&self) -> T {
        self.value
    }

    #[inline]
    pub fn error(&self) -> T {
        self.error
    }

    #[inline]
    pub fn neg(self) -> Self {
        Coupled { value: -self.value, error: -self.error }
    }
}

impl<T: Scalar> From<T> for Coupled<T> {
    fn from(value: T) -> Self {
        Coupled::from_scalar(value)
    }
}
