//! Shape dispatch.
//!
//! [`TwofoldOps`] and [`CoupledOps`] pick the specialised algorithm for every
//! operand shape at compile time:
//!
//! | lhs \ rhs | `Twofold`      | `Coupled`      | dotted `T`       |
//! |-----------|---------------|----------------|------------------|
//! | `Twofold` | general       | general        | `*1` variant     |
//! | `Coupled` | general       | coupled (`p*`) | `*1` variant     |
//! | dotted    | mirrored      | mirrored       | exact transform  |
//!
//! Mirrored add/mul commute onto the `*1` variant. Mirrored sub/div promote
//! the dotted operand to a zero-error pair and use the general algorithm.
//! `T op T` returns [`Coupled`].
//!
//! `std::ops` operators on [`Twofold`] map to the same functions.

use std::ops::{Add, Div, Mul, Neg, Sub};

use crate::fp_core::{two_diff, two_prod, two_sum, Coupled, Scalar};

use super::*;

pub trait TwofoldOps<Rhs = Self> {
    type Output;
    fn tadd(self, rhs: Rhs) -> Self::Output;
    fn tsub(self, rhs: Rhs) -> Self::Output;
    fn tmul(self, rhs: Rhs) -> Self::Output;
    fn tdiv(self, rhs: Rhs) -> Self::Output;
}

/// Coupled-result operations: Dekker arithmetic with immediate
/// renormalization.
pub trait CoupledOps<Rhs = Self> {
    type Output;
    fn padd(self, rhs: Rhs) -> Self::Output;
    fn psub(self, rhs: Rhs) -> Self::Output;
    fn pmul(self, rhs: Rhs) -> Self::Output;
    fn pdiv(self, rhs: Rhs) -> Self::Output;
}

pub trait TSqrt {
    type Output;
    fn tsqrt(self) -> Self::Output;
}

impl<T: Scalar> TwofoldOps for Twofold<T> {
    type Output = Twofold<T>;
    fn tadd(self, y: Self) -> Twofold<T> {
        tadd(self, y)
    }
    fn tsub(self, y: Self) -> Twofold<T> {
        tsub(self, y)
    }
    fn tmul(self, y: Self) -> Twofold<T> {
        tmul(self, y)
    }
    fn tdiv(self, y: Self) -> Twofold<T> {
        tdiv(self, y)
    }
}

impl<T: Scalar> TwofoldOps<Coupled<T>> for Twofold<T> {
    type Output = Twofold<T>;
    fn tadd(self, y: Coupled<T>) -> Twofold<T> {
        tadd(self, y.into())
    }
    fn tsub(self, y: Coupled<T>) -> Twofold<T> {
        tsub(self, y.into())
    }
    fn tmul(self, y: Coupled<T>) -> Twofold<T> {
        tmul(self, y.into())
    }
    fn tdiv(self, y: Coupled<T>) -> Twofold<T> {
        tdiv(self, y.into())
    }
}

impl<T: Scalar> TwofoldOps<Twofold<T>> for Coupled<T> {
    type Output = Twofold<T>;
    fn tadd(self, y: Twofold<T>) -> Twofold<T> {
        tadd(self.into(), y)
    }
    fn tsub(self, y: Twofold<T>) -> Twofold<T> {
        tsub(self.into(), y)
    }
    fn tmul(self, y: Twofold<T>) -> Twofold<T> {
        tmul(self.into(), y)
    }
    fn tdiv(self, y: Twofold<T>) -> Twofold<T> {
        tdiv(self.into(), y)
    }
}

impl<T: Scalar> TwofoldOps for Coupled<T> {
    type Output = Twofold<T>;
    fn tadd(self, y: Self) -> Twofold<T> {
        tadd(self.into(), y.into())
    }
    fn tsub(self, y: Self) -> Twofold<T> {
        tsub(self.into(), y.into())
    }
    fn tmul(self, y: Self) -> Twofold<T> {
        pmul(self, y)
    }
    fn tdiv(self, y: Self) -> Twofold<T> {
        pdiv(self, y)
    }
}

impl<T: Scalar> CoupledOps for Coupled<T> {
    type Output = Coupled<T>;
    fn padd(self, y: Self) -> Coupled<T> {
        padd(self, y)
    }
    fn psub(self, y: Self) -> Coupled<T> {
        psub(self, y)
    }
    fn pmul(self, y: Self) -> Coupled<T> {
        pmul_coupled(self, y)
    }
    fn pdiv(self, y: Self) -> Coupled<T> {
        pdiv_coupled(self, y)
    }
}

impl<T: Scalar> TSqrt for Twofold<T> {
    type Output = Twofold<T>;
    fn tsqrt(self) -> Twofold<T> {
        tsqrt(self)
    }
}

impl<T: Scalar> TSqrt for Coupled<T> {
    type Output = Twofold<T>;
    fn tsqrt(self) -> Twofold<T> {
        psqrt(self)
    }
}

// Shapes with a bare scalar on either side need concrete impls to stay
// coherent with the generic ones above.
macro_rules! scalar_shapes {
    ($($t:ty),*) => {$(
        impl TwofoldOps<$t> for Twofold<$t> {
            type Output = Twofold<$t>;
            fn tadd(self, y: $t) -> Twofold<$t> { tadd1(self, y) }
            fn tsub(self, y: $t) -> Twofold<$t> { tsub1(self, y) }
            fn tmul(self, y: $t) -> Twofold<$t> { tmul1(self, y) }
            fn tdiv(self, y: $t) -> Twofold<$t> { tdiv1(self, y) }
        }

        impl TwofoldOps<$t> for Coupled<$t> {
            type Output = Twofold<$t>;
            fn tadd(self, y: $t) -> Twofold<$t> { tadd1(self.into(), y) }
            fn tsub(self, y: $t) -> Twofold<$t> { tsub1(self.into(), y) }
            fn tmul(self, y: $t) -> Twofold<$t> { tmul1(self.into(), y) }
            fn tdiv(self, y: $t) -> Twofold<$t> { tdiv1(self.into(), y) }
        }

        impl TwofoldOps<Twofold<$t>> for $t {
            type Output = Twofold<$t>;
            fn tadd(self, y: Twofold<$t>) -> Twofold<$t> { tadd1(y, self) }
            fn tsub(self, y: Twofold<$t>) -> Twofold<$t> { tsub(Twofold::from(self), y) }
            fn tmul(self, y: Twofold<$t>) -> Twofold<$t> { tmul1(y, self) }
            fn tdiv(self, y: Twofold<$t>) -> Twofold<$t> { tdiv(Twofold::from(self), y) }
        }

        impl TwofoldOps<Coupled<$t>> for $t {
            type Output = Twofold<$t>;
            fn tadd(self, y: Coupled<$t>) -> Twofold<$t> { tadd1(y.into(), self) }
            fn tsub(self, y: Coupled<$t>) -> Twofold<$t> { tsub(Twofold::from(self), y.into()) }
            fn tmul(self, y: Coupled<$t>) -> Twofold<$t> { tmul1(y.into(), self) }
            fn tdiv(self, y: Coupled<$t>) -> Twofold<$t> { pdiv(Coupled::from_scalar(self), y) }
        }

        impl TwofoldOps for $t {
            type Output = Coupled<$t>;
            fn tadd(self, y: $t) -> Coupled<$t> { two_sum(self, y) }
            fn tsub(self, y: $t) -> Coupled<$t> { two_diff(self, y) }
            fn tmul(self, y: $t) -> Coupled<$t> { two_prod(self, y) }
            fn tdiv(self, y: $t) -> Coupled<$t> { tdiv0(self, y) }
        }

        impl CoupledOps<$t> for Coupled<$t> {
            type Output = Coupled<$t>;
            fn padd(self, y: $t) -> Coupled<$t> { padd1(self, y) }
            fn psub(self, y: $t) -> Coupled<$t> { psub1(self, y) }
            fn pmul(self, y: $t) -> Coupled<$t> { pmul_coupled1(self, y) }
            fn pdiv(self, y: $t) -> Coupled<$t> { pdiv_coupled1(self, y) }
        }

        impl CoupledOps<Coupled<$t>> for $t {
            type Output = Coupled<$t>;
            fn padd(self, y: Coupled<$t>) -> Coupled<$t> { padd1(y, self) }
            fn psub(self, y: Coupled<$t>) -> Coupled<$t> { psub(Coupled::from_scalar(self), y) }
            fn pmul(self, y: Coupled<$t>) -> Coupled<$t> { pmul_coupled1(y, self) }
            fn pdiv(self, y: Coupled<$t>) -> Coupled<$t> { pdiv_coupled(Coupled::from_scalar(self), y) }
        }

        impl CoupledOps for $t {
            type Output = Coupled<$t>;
            fn padd(self, y: $t) -> Coupled<$t> { two_sum(self, y) }
            fn psub(self, y: $t) -> Coupled<$t> { two_diff(self, y) }
            fn pmul(self, y: $t) -> Coupled<$t> { two_prod(self, y) }
            fn pdiv(self, y: $t) -> Coupled<$t> { tdiv0(self, y) }
        }

        impl TSqrt for $t {
            type Output = Coupled<$t>;
            fn tsqrt(self) -> Coupled<$t> { tsqrt0(self) }
        }

        impl Add<$t> for Twofold<$t> {
            type Output = Twofold<$t>;
            fn add(self, y: $t) -> Twofold<$t> { tadd1(self, y) }
        }
        impl Sub<$t> for Twofold<$t> {
            type Output = Twofold<$t>;
            fn sub(self, y: $t) -> Twofold<$t> { tsub1(self, y) }
        }
        impl Mul<$t> for Twofold<$t> {
            type Output = Twofold<$t>;
            fn mul(self, y: $t) -> Twofold<$t> { tmul1(self, y) }
        }
        impl Div<$t> for Twofold<$t> {
            type Output = Twofold<$t>;
            fn div(self, y: $t) -> Twofold<$t> { tdiv1(self, y) }
        }
        impl Add<Twofold<$t>> for $t {
            type Output = Twofold<$t>;
            fn add(self, y: Twofold<$t>) -> Twofold<$t> { tadd1(y, self) }
        }
        impl Sub<Twofold<$t>> for $t {
            type Output = Twofold<$t>;
            fn sub(self, y: Twofold<$t>) -> Twofold<$t> { tsub(Twofold::from(self), y) }
        }
        impl Mul<Twofold<$t>> for $t {
            type Output = Twofold<$t>;
            fn mul(self, y: Twofold<$t>) -> Twofold<$t> { tmul1(y, self) }
        }
        impl Div<Twofold<$t>> for $t {
            type Output = Twofold<$t>;
            fn div(self, y: Twofold<$t>) -> Twofold<$t> { tdiv(Twofold::from(self), y) }
        }
    )*};
}

scalar_shapes!(f32, f64);

impl<T: Scalar> Add for Twofold<T> {
    type Output = Twofold<T>;
    fn add(self, y: Self) -> Self {
        tadd(self, y)
    }
}

impl<T: Scalar> Sub for Twofold<T> {
    type Output = Twofold<T>;
    fn sub(self, y: Self) -> Self {
        tsub(self, y)
    }
}

impl<T: Scalar> Mul for Twofold<T> {
    type Output = Twofold<T>;
    fn mul(self, y: Self) -> Self {
        tmul(self, y)
    }
}

impl<T: Scalar> Div for Twofold<T> {
    type Output = Twofold<T>;
    fn div(self, y: Self) -> Self {
        tdiv(self, y)
    }
}

impl<T: Scalar> Neg for Twofold<T> {
    type Output = Twofold<T>;
    fn neg(self) -> Self {
        Twofold::neg(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dotted_pairs_return_coupled() {
        let z: Coupled<f64> = 1.0f64.tdiv(3.0);
        assert_eq!(z, tdiv0(1.0, 3.0));
        let z: Coupled<f64> = 1.0f64.tadd(2f64.powi(-60));
        assert_eq!((z.value(), z.error()), (1.0, 2f64.powi(-60)));
    }

    #[test]
    fn mirrored_shapes() {
        let x = Twofold::new(3.0, 1e-16);
        assert_eq!(2.0.tadd(x), x.tadd(2.0));
        assert_eq!(2.0.tmul(x), x.tmul(2.0));
        assert_eq!(2.0.tsub(x), tsub(Twofold::new(2.0, 0.0), x));
        assert_eq!(2.0.tdiv(x), tdiv(Twofold::new(2.0, 0.0), x));
        assert_eq!(2.0 - x, 2.0.tsub(x));
        assert_eq!(x / 2.0, tdiv1(x, 2.0));
    }

    #[test]
    fn coupled_feeds_twofold_ops() {
        let c = tdiv0(1.0f64, 3.0);
        let t: Twofold<f64> = c.into();
        assert_eq!(c.tadd(t), tadd(t, t));
        assert_eq!(c.tmul(c), pmul(c, c));
        assert_eq!(c.tsqrt(), psqrt(c));
        assert_eq!(c.padd(c), padd(c, c));
    }

    #[test]
    fn operators_match_named_functions() {
        let x = Twofold::new(1.5f32, 1e-9);
        let y = Twofold::new(-0.7f32, 2e-9);
        assert_eq!(x + y, tadd(x, y));
        assert_eq!(x - y, tsub(x, y));
        assert_eq!(x * y, tmul(x, y));
        assert_eq!(x / y, tdiv(x, y));
        assert_eq!(-x, Twofold::new(-1.5, -1e-9));
    }
}
