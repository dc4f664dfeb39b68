use crate::fp_core::{Coupled, Scalar};

use super::Twofold;

/// Dotted by dotted: `z0 = fl(x/y)`, `z1 = fl(r/y)` with the exact remainder
/// `r = x - z0*y`. The result is coupled.
///
/// A zero divisor makes `z0` infinite or NaN and the error NaN.
#[inline]
pub fn tdiv0<T: Scalar>(x: T, y: T) -> Coupled<T> {
    let q = x / y;
    let r = (-q).mul_add(y, x);
    Coupled::from_parts(q, r / y)
}

/// Twofold by dotted: `z1 = fl((r ⊕ x1) / y)`. Same as [`tdiv0`] when the
/// dividend's error is zero.
#[inline]
pub fn tdiv1<T: Scalar>(x: Twofold<T>, y: T) -> Twofold<T> {
    let q = x.value / y;
    let r = (-q).mul_add(y, x.value);
    Twofold::new(q, (r + x.error) / y)
}

/// Twofold by twofold.
///
/// `r0 = fma(x0 - z0*y0)`, `r1 = fma(x1 - z0*y1)`, `z1 = (r0 ⊕ r1) / (y0 ⊕ y1)`.
/// The estimate is within about `3 ε |z1|` of the exact deviation.
#[inline]
pub fn tdiv<T: Scalar>(x: Twofold<T>, y: Twofold<T>) -> Twofold<T> {
    let q = x.value / y.value;
    let r0 = (-q).mul_add(y.value, x.value);
    let r1 = (-q).mul_add(y.error, x.error);
    Twofold::new(q, (r0 + r1) / (y.value + y.error))
}

/// Coupled by coupled: as [`tdiv`] but divides by `y0` alone, the divisor
/// already being normalized. The small error makes the result cheap to
/// renormalize.
#[inline]
pub fn pdiv<T: Scalar>(x: Coupled<T>, y: Coupled<T>) -> Twofold<T> {
    let q = x.value() / y.value();
    let r0 = (-q).mul_add(y.value(), x.value());
    let r1 = (-q).mul_add(y.error(), x.error());
    Twofold::new(q, (r0 + r1) / y.value())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fp_core::renormalize;

    const EPS: f64 = 1.0 / 9007199254740992.0;

    #[test]
    fn dotted_quotients() {
        let z = tdiv0(6.0, 3.0);
        assert_eq!((z.value(), z.error()), (2.0, 0.0));
        let z = tdiv0(1.0, 0.0);
        assert_eq!(z.value(), f64::INFINITY);
        assert!(z.error().is_nan());
        let z = tdiv0(1.0f64, 3.0);
        assert_eq!(z.value(), 1.0 / 3.0);
        assert!(z.error().abs() <= z.value().ulp() / 2.0);
    }

    #[test]
    fn twofold_dividend_keeps_its_tail() {
        assert_eq!(tdiv1(Twofold::new(6.0, 0.0), 3.0), Twofold::new(2.0, 0.0));
        assert_eq!(tdiv1(Twofold::new(1.0, 1.0), 1.0), Twofold::new(1.0, 1.0));
    }

    #[test]
    fn inexact_divisor_example() {
        // 1 / ((1-eps) + eps): z0 = 1+2eps and the estimate is exactly -2eps.
        let z = tdiv(Twofold::new(1.0, 0.0), Twofold::new(1.0 - EPS, EPS));
        assert_eq!(z, Twofold::new(1.0 + 2.0 * EPS, -2.0 * EPS));
        assert_eq!(tdiv(Twofold::new(1.0f64, 0.0), Twofold::new(1.0, 0.0)), Twofold::new(1.0, 0.0));
    }

    #[test]
    fn coupled_division() {
        let one = Coupled::from_scalar(1.0);
        assert_eq!(pdiv(one, one), Twofold::new(1.0, 0.0));
        let y = renormalize(Twofold::new(1.0 - EPS, EPS));
        let a = pdiv(one, y);
        let b = tdiv(one.into(), y.into());
        assert_eq!(a.value, b.value);
        assert!((a.error - b.error).abs() <= b.error.abs() * f64::EPSILON);
    }
}
