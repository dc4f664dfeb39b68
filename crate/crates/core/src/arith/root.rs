use crate::fp_core::{renormalize, Coupled, Scalar};

use super::{tsub1, Twofold};

/// `z0 = sqrt(x)`, `z1 = fma(x - z0²) / 2z0`: one Newton correction from the
/// exact residual. Coupled for positive normal `x`.
///
/// Negative input gives NaN in both parts. Zero gives a NaN error (0/0).
#[inline]
pub fn tsqrt0<T: Scalar>(x: T) -> Coupled<T> {
    let z0 = x.sqrt();
    let resid = (-z0).mul_add(z0, x);
    Coupled::from_parts(z0, resid / (z0 + z0))
}

/// `z1 = (x1 + fma(x0 - z0²)) / 2z0` for a coupled radicand.
#[inline]
pub fn psqrt<T: Scalar>(x: Coupled<T>) -> Twofold<T> {
    let z0 = x.value().sqrt();
    let resid = (-z0).mul_add(z0, x.value());
    Twofold::new(z0, (x.error() + resid) / (z0 + z0))
}

/// General twofold radicand.
///
/// Renormalize the input to `u`, take `v = psqrt(u)`, then measure
/// `v - z0` with the strict dotted subtraction and collapse it:
/// `z1 = w0 ⊕ w1`.
#[inline]
pub fn tsqrt<T: Scalar>(x: Twofold<T>) -> Twofold<T> {
    let z0 = x.value.sqrt();
    let u = renormalize(x);
    let v = psqrt(u);
    let w = tsub1(v, z0);
    Twofold::new(z0, w.value + w.error)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_roots() {
        let z = tsqrt0(4.0);
        assert_eq!((z.value(), z.error()), (2.0, 0.0));
        assert_eq!(psqrt(Coupled::from_scalar(4.0)), Twofold::new(2.0, 0.0));
        assert_eq!(tsqrt(Twofold::new(4.0, 0.0)), Twofold::new(2.0, 0.0));
    }

    #[test]
    fn negative_radicand_is_nan() {
        let z = tsqrt0(-1.0f64);
        assert!(z.value().is_nan() && z.error().is_nan());
        let z = psqrt(Coupled::from_scalar(-1.0f64));
        assert!(z.value.is_nan() && z.error.is_nan());
    }

    #[test]
    fn overlapping_radicand() {
        // sqrt(1 + 1): value stays sqrt(1), the error carries sqrt(2) - 1.
        let z = tsqrt(Twofold::new(1.0f64, 1.0));
        assert_eq!(z.value, 1.0);
        let expect = 0.414_213_562_373_095_048_801_688_724_209_7_f64;
        assert!((z.error - expect).abs() <= expect.ulp(), "{:e} vs {:e}", z.error, expect);
    }

    #[test]
    fn small_tail_halves() {
        let e54 = 2f64.powi(-54);
        let z = psqrt(Coupled::try_new(1.0, e54).unwrap());
        assert_eq!(z, Twofold::new(1.0, 2f64.powi(-55)));
        let t = tsqrt(Twofold::new(1.0, e54));
        assert_eq!(t, z);
    }
}
