use crate::fp_core::{Coupled, Scalar};
use crate::Twofold;

use super::{check_len, BatchError};

/// Owned twofold array: a value plane and an error plane of equal length.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct TwofoldArray<T> {
    value: Vec<T>,
    error: Vec<T>,
}

impl<T: Scalar> TwofoldArray<T> {
    pub fn zeros(len: usize) -> Self {
        TwofoldArray { value: vec![T::zero(); len], error: vec![T::zero(); len] }
    }

    pub fn from_planes(value: Vec<T>, error: Vec<T>) -> Result<Self, BatchError> {
        check_len("error plane", value.len(), error.len())?;
        Ok(TwofoldArray { value, error })
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> Twofold<T>) -> Self {
        let mut out = Self::zeros(len);
        for i in 0..len {
            out.set(i, f(i));
        }
        out
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }

    pub fn get(&self, i: usize) -> Twofold<T> {
        Twofold::new(self.value[i], self.error[i])
    }

    pub fn set(&mut self, i: usize, z: Twofold<T>) {
        self.value[i] = z.value;
        self.error[i] = z.error;
    }

    pub fn values(&self) -> &[T] {
        &self.value
    }

    pub fn errors(&self) -> &[T] {
        &self.error
    }

    pub fn iter(&self) -> impl ExactSizeIterator<Item = Twofold<T>> + '_ {
        self.value.iter().zip(&self.error).map(|(&v, &e)| Twofold::new(v, e))
    }

    pub fn into_planes(self) -> (Vec<T>, Vec<T>) {
        (self.value, self.error)
    }

    pub fn as_slice(&self) -> TwofoldSlice<'_, T> {
        TwofoldSlice { value: &self.value, error: &self.error }
    }

    pub fn as_mut_slice(&mut self) -> TwofoldSliceMut<'_, T> {
        TwofoldSliceMut { value: &mut self.value, error: &mut self.error }
    }
}

impl<T: Scalar> FromIterator<Twofold<T>> for TwofoldArray<T> {
    fn from_iter<I: IntoIterator<Item = Twofold<T>>>(iter: I) -> Self {
        let (value, error) = iter.into_iter().map(|z| (z.value, z.error)).unzip();
        TwofoldArray { value, error }
    }
}

/// Owned array of coupled pairs. Every element satisfies the non-overlap
/// bound; the only ways in are checked constructors and `vp*` kernels.
#[derive(Clone, Debug, Default, PartialEq)]
pub struct CoupledArray<T>(TwofoldArray<T>);

impl<T: Scalar> CoupledArray<T> {
    pub fn zeros(len: usize) -> Self {
        CoupledArray(TwofoldArray::zeros(len))
    }

    /// Checks lengths and the coupling bound of every element.
    pub fn from_planes(value: Vec<T>, error: Vec<T>) -> Result<Self, BatchError> {
        let planes = TwofoldArray::from_planes(value, error)?;
        check_coupled(&planes.value, &planes.error)?;
        Ok(CoupledArray(planes))
    }

    pub fn from_fn(len: usize, mut f: impl FnMut(usize) -> Coupled<T>) -> Self {
        CoupledArray(TwofoldArray::from_fn(len, |i| f(i).into()))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Coupled<T> {
        Coupled::from_parts(self.0.value[i], self.0.error[i])
    }

    pub fn values(&self) -> &[T] {
        self.0.values()
    }

    pub fn errors(&self) -> &[T] {
        self.0.errors()
    }

    /// Read-only twofold view; a coupled array is a valid twofold array.
    pub fn as_twofold(&self) -> &TwofoldArray<T> {
        &self.0
    }

    pub fn into_twofold(self) -> TwofoldArray<T> {
        self.0
    }

    pub fn as_slice(&self) -> CoupledSlice<'_, T> {
        CoupledSlice(self.0.as_slice())
    }

    pub fn as_mut_slice(&mut self) -> CoupledSliceMut<'_, T> {
        CoupledSliceMut(self.0.as_mut_slice())
    }
}

impl<T: Scalar> FromIterator<Coupled<T>> for CoupledArray<T> {
    fn from_iter<I: IntoIterator<Item = Coupled<T>>>(iter: I) -> Self {
        CoupledArray(iter.into_iter().map(Twofold::from).collect())
    }
}

fn check_coupled<T: Scalar>(value: &[T], error: &[T]) -> Result<(), BatchError> {
    match value.iter().zip(error).position(|(&v, &e)| !Coupled::is_non_overlapping(v, e)) {
        Some(index) => Err(BatchError::NotCoupled { index }),
        None => Ok(()),
    }
}

/// Borrowed twofold planes.
#[derive(Clone, Copy, Debug)]
pub struct TwofoldSlice<'a, T> {
    pub(crate) value: &'a [T],
    pub(crate) error: &'a [T],
}

impl<'a, T: Scalar> TwofoldSlice<'a, T> {
    pub fn new(value: &'a [T], error: &'a [T]) -> Result<Self, BatchError> {
        check_len("error plane", value.len(), error.len())?;
        Ok(TwofoldSlice { value, error })
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }

    pub fn get(&self, i: usize) -> Twofold<T> {
        Twofold::new(self.value[i], self.error[i])
    }

    pub fn values(&self) -> &'a [T] {
        self.value
    }

    pub fn errors(&self) -> &'a [T] {
        self.error
    }
}

/// Borrowed coupled planes.
#[derive(Clone, Copy, Debug)]
pub struct CoupledSlice<'a, T>(pub(crate) TwofoldSlice<'a, T>);

impl<'a, T: Scalar> CoupledSlice<'a, T> {
    /// Checks lengths and the coupling bound of every element.
    pub fn new(value: &'a [T], error: &'a [T]) -> Result<Self, BatchError> {
        let planes = TwofoldSlice::new(value, error)?;
        check_coupled(value, error)?;
        Ok(CoupledSlice(planes))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn get(&self, i: usize) -> Coupled<T> {
        Coupled::from_parts(self.0.value[i], self.0.error[i])
    }

    pub fn as_twofold(&self) -> TwofoldSlice<'a, T> {
        self.0
    }
}

/// Mutable twofold planes, the output of `vt*` kernels.
#[derive(Debug)]
pub struct TwofoldSliceMut<'a, T> {
    pub(crate) value: &'a mut [T],
    pub(crate) error: &'a mut [T],
}

impl<'a, T: Scalar> TwofoldSliceMut<'a, T> {
    pub fn new(value: &'a mut [T], error: &'a mut [T]) -> Result<Self, BatchError> {
        check_len("error plane", value.len(), error.len())?;
        Ok(TwofoldSliceMut { value, error })
    }

    pub fn len(&self) -> usize {
        self.value.len()
    }

    pub fn is_empty(&self) -> bool {
        self.value.is_empty()
    }
}

/// Mutable coupled planes, the output of `vp*` kernels. Obtained only from
/// a [`CoupledArray`], and written only by kernels, so the coupling bound
/// is preserved.
#[derive(Debug)]
pub struct CoupledSliceMut<'a, T>(pub(crate) TwofoldSliceMut<'a, T>);

impl<T: Scalar> CoupledSliceMut<'_, T> {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}
