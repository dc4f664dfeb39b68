use crate::fp_core::{two_prod, Coupled, Scalar};

use super::Twofold;

/// `z0 = x0 ⊗ y0`, `z1 = (e00 ⊕ p11) ⊕ (p01 ⊕ p10)` where `pij ≈ xi*yj` and
/// `e00 = err(x0*y0)`.
///
/// The order sums from small to large terms across the usual range of
/// operand balance: coupled inputs, mildly inaccurate ones, and ones whose
/// tails rival their heads.
#[inline]
pub fn tmul<T: Scalar>(x: Twofold<T>, y: Twofold<T>) -> Twofold<T> {
    let p = two_prod(x.value, y.value);
    let p01 = x.value * y.error;
    let p10 = x.error * y.value;
    let p11 = x.error * y.error;
    Twofold::new(p.value(), p.error() + p11 + (p01 + p10))
}

/// Dotted multiplier: `z1 = e00 ⊕ p10`.
#[inline]
pub fn tmul1<T: Scalar>(x: Twofold<T>, y: T) -> Twofold<T> {
    let p = two_prod(x.value, y);
    Twofold::new(p.value(), p.error() + x.error * y)
}

/// Coupled operands: `z1 = e00 ⊕ (p01 ⊕ p10)`; the tail product is below the
/// rounding of the other terms and is dropped. The result is not
/// renormalized.
#[inline]
pub fn pmul<T: Scalar>(x: Coupled<T>, y: Coupled<T>) -> Twofold<T> {
    let p = two_prod(x.value(), y.value());
    let p01 = x.value() * y.error();
    let p10 = x.error() * y.value();
    Twofold::new(p.value(), p.error() + (p01 + p10))
}
