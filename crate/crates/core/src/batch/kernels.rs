use crate::arith::{
    padd, padd1, pdiv_coupled, pdiv_coupled1, pmul_coupled, pmul_coupled1, psub, psub1, tadd, tadd1,
    tdiv, tdiv0, tdiv1, tmul, tmul1, tsqrt, tsqrt0, tsub, tsub1,
};
use crate::fp_core::{two_diff, two_prod, two_sum, Coupled, Scalar};
use crate::Twofold;

use super::arrays::{CoupledSlice, CoupledSliceMut, TwofoldSlice, TwofoldSliceMut};
use super::{check_len, BatchError};

// The drivers re-slice every plane to the output length `n` so the loop
// body indexes without bounds checks. All lengths are validated before the
// first store.

#[inline(always)]
#[allow(clippy::too_many_arguments)]
fn drive4<T: Scalar>(
    xv: &[T],
    xe: &[T],
    yv: &[T],
    ye: &[T],
    rv: &mut [T],
    re: &mut [T],
    f: impl Fn(T, T, T, T) -> Twofold<T>,
) -> Result<(), BatchError> {
    let n = rv.len();
    check_len("x values", n, xv.len())?;
    check_len("x errors", n, xe.len())?;
    check_len("y values", n, yv.len())?;
    check_len("y errors", n, ye.len())?;
    check_len("output errors", n, re.len())?;
    let (xv, xe, yv, ye, re) = (&xv[..n], &xe[..n], &yv[..n], &ye[..n], &mut re[..n]);
    for i in 0..n {
        let z = f(xv[i], xe[i], yv[i], ye[i]);
        rv[i] = z.value;
        re[i] = z.error;
    }
    Ok(())
}

#[inline(always)]
fn drive3<T: Scalar>(
    xv: &[T],
    xe: &[T],
    yv: &[T],
    rv: &mut [T],
    re: &mut [T],
    f: impl Fn(T, T, T) -> Twofold<T>,
) -> Result<(), BatchError> {
    let n = rv.len();
    check_len("x values", n, xv.len())?;
    check_len("x errors", n, xe.len())?;
    check_len("y values", n, yv.len())?;
    check_len("output errors", n, re.len())?;
    let (xv, xe, yv, re) = (&xv[..n], &xe[..n], &yv[..n], &mut re[..n]);
    for i in 0..n {
        let z = f(xv[i], xe[i], yv[i]);
        rv[i] = z.value;
        re[i] = z.error;
    }
    Ok(())
}

/// Two input planes: a dotted pair, or the two planes of one twofold.
#[inline(always)]
fn drive2<T: Scalar>(
    names: [&'static str; 2],
    a: &[T],
    b: &[T],
    rv: &mut [T],
    re: &mut [T],
    f: impl Fn(T, T) -> Twofold<T>,
) -> Result<(), BatchError> {
    let n = rv.len();
    check_len(names[0], n, a.len())?;
    check_len(names[1], n, b.len())?;
    check_len("output errors", n, re.len())?;
    let (a, b, re) = (&a[..n], &b[..n], &mut re[..n]);
    for i in 0..n {
        let z = f(a[i], b[i]);
        rv[i] = z.value;
        re[i] = z.error;
    }
    Ok(())
}

#[inline(always)]
fn drive1<T: Scalar>(
    xv: &[T],
    rv: &mut [T],
    re: &mut [T],
    f: impl Fn(T) -> Twofold<T>,
) -> Result<(), BatchError> {
    let n = rv.len();
    check_len("x values", n, xv.len())?;
    check_len("output errors", n, re.len())?;
    let (xv, re) = (&xv[..n], &mut re[..n]);
    for i in 0..n {
        let z = f(xv[i]);
        rv[i] = z.value;
        re[i] = z.error;
    }
    Ok(())
}

#[inline(always)]
fn dotted2<T: Scalar>(x: &[T], y: &[T], r: &mut [T], f: impl Fn(T, T) -> T) -> Result<(), BatchError> {
    let n = r.len();
    check_len("x values", n, x.len())?;
    check_len("y values", n, y.len())?;
    let (x, y) = (&x[..n], &y[..n]);
    for i in 0..n {
        r[i] = f(x[i], y[i]);
    }
    Ok(())
}

#[inline(always)]
fn dotted1<T: Scalar>(x: &[T], r: &mut [T], f: impl Fn(T) -> T) -> Result<(), BatchError> {
    let n = r.len();
    check_len("x values", n, x.len())?;
    let x = &x[..n];
    for i in 0..n {
        r[i] = f(x[i]);
    }
    Ok(())
}

#[inline(always)]
fn coupled<T: Scalar>(v: T, e: T) -> Coupled<T> {
    Coupled::from_parts(v, e)
}

macro_rules! twofold_kernels {
    ($($name2:ident, $name1:ident, $name0:ident => $op2:ident, $op1:ident, $op0:ident;)*) => {$(
        #[doc = concat!("`r[i] = ", stringify!($op2), "(x[i], y[i])` for twofold arrays.")]
        pub fn $name2<T: Scalar>(
            x: TwofoldSlice<'_, T>,
            y: TwofoldSlice<'_, T>,
            r: TwofoldSliceMut<'_, T>,
        ) -> Result<(), BatchError> {
            drive4(x.value, x.error, y.value, y.error, r.value, r.error, |a, b, c, d| {
                $op2(Twofold::new(a, b), Twofold::new(c, d))
            })
        }

        #[doc = concat!("`r[i] = ", stringify!($op1), "(x[i], y[i])` with a dotted `y`.")]
        pub fn $name1<T: Scalar>(
            x: TwofoldSlice<'_, T>,
            y: &[T],
            r: TwofoldSliceMut<'_, T>,
        ) -> Result<(), BatchError> {
            drive3(x.value, x.error, y, r.value, r.error, |a, b, c| $op1(Twofold::new(a, b), c))
        }

        #[doc = concat!("`r[i] = ", stringify!($op0), "(x[i], y[i])` for dotted arrays.")]
        pub fn $name0<T: Scalar>(x: &[T], y: &[T], r: TwofoldSliceMut<'_, T>) -> Result<(), BatchError> {
            drive2(["x values", "y values"], x, y, r.value, r.error, |a, b| $op0(a, b).into())
        }
    )*};
}

twofold_kernels! {
    vtadd2, vtadd1, vtadd => tadd, tadd1, two_sum;
    vtsub2, vtsub1, vtsub => tsub, tsub1, two_diff;
    vtmul2, vtmul1, vtmul => tmul, tmul1, two_prod;
    vtdiv2, vtdiv1, vtdiv => tdiv, tdiv1, tdiv0;
}

/// `r[i] = tsqrt(x[i])` for a twofold array.
pub fn vtsqrt1<T: Scalar>(x: TwofoldSlice<'_, T>, r: TwofoldSliceMut<'_, T>) -> Result<(), BatchError> {
    drive2(["x values", "x errors"], x.value, x.error, r.value, r.error, |a, b| {
        tsqrt(Twofold::new(a, b))
    })
}

/// `r[i] = tsqrt0(x[i])` for a dotted array.
pub fn vtsqrt<T: Scalar>(x: &[T], r: TwofoldSliceMut<'_, T>) -> Result<(), BatchError> {
    drive1(x, r.value, r.error, |a| tsqrt0(a).into())
}

macro_rules! coupled_kernels {
    ($($name2:ident, $name1:ident, $name0:ident => $op2:ident, $op1:ident, $op0:ident;)*) => {$(
        #[doc = concat!("`r[i] = ", stringify!($op2), "(x[i], y[i])` for coupled arrays.")]
        pub fn $name2<T: Scalar>(
            x: CoupledSlice<'_, T>,
            y: CoupledSlice<'_, T>,
            r: CoupledSliceMut<'_, T>,
        ) -> Result<(), BatchError> {
            let (x, y, r) = (x.0, y.0, r.0);
            drive4(x.value, x.error, y.value, y.error, r.value, r.error, |a, b, c, d| {
                $op2(coupled(a, b), coupled(c, d)).into()
            })
        }

        #[doc = concat!("`r[i] = ", stringify!($op1), "(x[i], y[i])` with a dotted `y`.")]
        pub fn $name1<T: Scalar>(
            x: CoupledSlice<'_, T>,
            y: &[T],
            r: CoupledSliceMut<'_, T>,
        ) -> Result<(), BatchError> {
            let (x, r) = (x.0, r.0);
            drive3(x.value, x.error, y, r.value, r.error, |a, b, c| $op1(coupled(a, b), c).into())
        }

        #[doc = concat!("`r[i] = ", stringify!($op0), "(x[i], y[i])` for dotted arrays.")]
        pub fn $name0<T: Scalar>(x: &[T], y: &[T], r: CoupledSliceMut<'_, T>) -> Result<(), BatchError> {
            let r = r.0;
            drive2(["x values", "y values"], x, y, r.value, r.error, |a, b| $op0(a, b).into())
        }
    )*};
}

coupled_kernels! {
    vpadd2, vpadd1, vpadd => padd, padd1, two_sum;
    vpsub2, vpsub1, vpsub => psub, psub1, two_diff;
    vpmul2, vpmul1, vpmul => pmul_coupled, pmul_coupled1, two_prod;
    vpdiv2, vpdiv1, vpdiv => pdiv_coupled, pdiv_coupled1, tdiv0;
}

/// Copy baseline: `r[i] = x[i]`, pure memory traffic.
pub fn vmem<T: Scalar>(x: &[T], r: &mut [T]) -> Result<(), BatchError> {
    dotted1(x, r, |a| a)
}

pub fn vadd<T: Scalar>(x: &[T], y: &[T], r: &mut [T]) -> Result<(), BatchError> {
    dotted2(x, y, r, |a, b| a + b)
}

pub fn vsub<T: Scalar>(x: &[T], y: &[T], r: &mut [T]) -> Result<(), BatchError> {
    dotted2(x, y, r, |a, b| a - b)
}

pub fn vmul<T: Scalar>(x: &[T], y: &[T], r: &mut [T]) -> Result<(), BatchError> {
    dotted2(x, y, r, |a, b| a * b)
}

pub fn vdiv<T: Scalar>(x: &[T], y: &[T], r: &mut [T]) -> Result<(), BatchError> {
    dotted2(x, y, r, |a, b| a / b)
}

pub fn vsqrt<T: Scalar>(x: &[T], r: &mut [T]) -> Result<(), BatchError> {
    dotted1(x, r, |a| a.sqrt())
}
