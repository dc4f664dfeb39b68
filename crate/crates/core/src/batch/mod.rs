//! Elementwise array kernels.
//!
//! Arrays are stored as structure-of-arrays: a [`TwofoldArray`] keeps its
//! values and its errors in two separate contiguous planes, so each kernel is
//! a tight loop over plain `T` slices that the compiler can vectorize.
//!
//! Kernel names follow the scalar operations with a `v` prefix and a shape
//! suffix: `2` for two shaped operands, `1` for a shaped and a dotted operand,
//! none for two dotted operands. `vt*` kernels produce twofolds, `vp*`
//! kernels coupled pairs. The dotted baselines `vmem`, `vadd`, `vsub`,
//! `vmul`, `vdiv` and `vsqrt` do the same memory traffic with plain
//! arithmetic.
//!
//! Every kernel is generated from its scalar operation by one generic
//! elementwise driver, so `out[i]` is bitwise the scalar result on
//! `(x[i], y[i])` by construction. Lengths are checked before anything is
//! written; Rust's borrow rules already rule out an output aliasing an input.

mod arrays;
mod dispatch;
mod kernels;

pub use arrays::{
    CoupledArray, CoupledSlice, CoupledSliceMut, TwofoldArray, TwofoldSlice, TwofoldSliceMut,
};
pub use dispatch::{
    apply, par_apply, BatchInputs, BatchOutput, Kernel, KernelFn, OpFamily, OutputKind, Shape,
    UnknownKernel,
};
pub use kernels::*;

use thiserror::Error;

#[derive(Clone, Debug, Error, PartialEq, Eq)]
pub enum BatchError {
    #[error("length mismatch: {operand} has {found} elements, expected {expected}")]
    LengthMismatch { operand: &'static str, expected: usize, found: usize },
    #[error("element {index} is not coupled: |error| exceeds ulp(value)/2")]
    NotCoupled { index: usize },
}

#[inline]
pub(crate) fn check_len(operand: &'static str, expected: usize, found: usize) -> Result<(), BatchError> {
    if expected == found {
        Ok(())
    } else {
        Err(BatchError::LengthMismatch { operand, expected, found })
    }
}
