//! Coupled-in, coupled-out operations: the fast twofold algorithm followed
//! by immediate renormalization, which recovers Dekker-style double-length
//! arithmetic.
//!
//! Add, subtract and divide use the three-operation renormalization; the
//! product's error term can outgrow half an ulp of the value, so multiply
//! uses the full six-operation form.

use crate::fp_core::{fast_renormalize, renormalize, Coupled, Scalar};

use super::{pdiv, pmul, tadd, tadd1, tdiv1, tmul1, tsub, tsub1};

#[inline]
pub fn padd<T: Scalar>(x: Coupled<T>, y: Coupled<T>) -> Coupled<T> {
    fast_renormalize(tadd(x.into(), y.into()))
}

#[inline]
pub fn padd1<T: Scalar>(x: Coupled<T>, y: T) -> Coupled<T> {
    fast_renormalize(tadd1(x.into(), y))
}

#[inline]
pub fn psub<T: Scalar>(x: Coupled<T>, y: Coupled<T>) -> Coupled<T> {
    fast_renormalize(tsub(x.into(), y.into()))
}

#[inline]
pub fn psub1<T: Scalar>(x: Coupled<T>, y: T) -> Coupled<T> {
    fast_renormalize(tsub1(x.into(), y))
}

#[inline]
pub fn pmul_coupled<T: Scalar>(x: Coupled<T>, y: Coupled<T>) -> Coupled<T> {
    renormalize(pmul(x, y))
}

#[inline]
pub fn pmul_coupled1<T: Scalar>(x: Coupled<T>, y: T) -> Coupled<T> {
    renormalize(tmul1(x.into(), y))
}

#[inline]
pub fn pdiv_coupled<T: Scalar>(x: Coupled<T>, y: Coupled<T>) -> Coupled<T> {
    fast_renormalize(pdiv(x, y))
}

#[inline]
pub fn pdiv_coupled1<T: Scalar>(x: Coupled<T>, y: T) -> Coupled<T> {
    fast_renormalize(tdiv1(x.into(), y))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn renormalized_counter_does_not_saturate() {
        let one = Coupled::from_scalar(1.0f32);
        let mut acc = Coupled::from_scalar(0.0f32);
        for _ in 0..(1u32 << 25) {
            acc = padd(acc, one);
        }
        assert_eq!((acc.value(), acc.error()), (2f32.powi(25), 0.0));
    }

    #[test]
    fn cancellation_to_zero() {
        let z = padd(Coupled::from_scalar(1.0f64), Coupled::from_scalar(-1.0));
        assert_eq!((z.value(), z.error()), (0.0, 0.0));
        let z = psub(Coupled::from_scalar(2.5f64), Coupled::from_scalar(2.5));
        assert_eq!((z.value(), z.error()), (0.0, 0.0));
    }

    #[test]
    fn outputs_are_coupled() {
        let third = crate::arith::tdiv0(1.0f64, 3.0);
        let seventh = crate::arith::tdiv0(-1.0f64, 7.0);
        for z in [
            padd(third, seventh),
            psub(third, seventh),
            pmul_coupled(third, seventh),
            pdiv_coupled(third, seventh),
            padd1(third, 1e-3),
            psub1(third, 0.25),
            pmul_coupled1(third, 3.0),
            pdiv_coupled1(seventh, 1.1),
        ] {
            assert!(Coupled::is_non_overlapping(z.value(), z.error()), "{z:?}");
        }
    }
}
