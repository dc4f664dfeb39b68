use crate::fp_core::{two_diff, two_sum, Scalar};

use super::Twofold;

/// `z0 = x0 ⊕ y0`, `z1 = (x1 ⊕ y1) ⊕ err(x0 + y0)`.
#[inline]
pub fn tadd<T: Scalar>(x: Twofold<T>, y: Twofold<T>) -> Twofold<T> {
    let s = two_sum(x.value, y.value);
    Twofold::new(s.value(), x.error + y.error + s.error())
}

/// Adds a dotted number: `z1 = x1 ⊕ err(x0 + y)`.
///
/// The only rounding in `z1` is the final one, so `z1` is the correctly
/// rounded exact deviation of `z0`.
#[inline]
pub fn tadd1<T: Scalar>(x: Twofold<T>, y: T) -> Twofold<T> {
    let s = two_sum(x.value, y);
    Twofold::new(s.value(), x.error + s.error())
}

/// `z0 = x0 ⊖ y0`, `z1 = (x1 ⊖ y1) ⊕ err(x0 - y0)`.
#[inline]
pub fn tsub<T: Scalar>(x: Twofold<T>, y: Twofold<T>) -> Twofold<T> {
    let d = two_diff(x.value, y.value);
    Twofold::new(d.value(), x.error - y.error + d.error())
}

/// Subtracts a dotted number: `z1 = x1 ⊕ err(x0 - y)`, correctly rounded.
#[inline]
pub fn tsub1<T: Scalar>(x: Twofold<T>, y: T) -> Twofold<T> {
    let d = two_diff(x.value, y);
    Twofold::new(d.value(), x.error + d.error())
}
