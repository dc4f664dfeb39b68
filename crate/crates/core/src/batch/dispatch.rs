//! Run-time kernel selection over raw planes, used by the benchmark harness
//! and the command line.

use std::fmt;
use std::ops::Range;
use std::str::FromStr;

use crate::fp_core::Scalar;

use super::arrays::{CoupledSlice, CoupledSliceMut, TwofoldSlice, TwofoldSliceMut};
use super::kernels::*;
use super::{check_len, BatchError};

/// Operation family of a kernel.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OpFamily {
    Copy,
    Add,
    Sub,
    Mul,
    Div,
    Sqrt,
}

/// Operand shapes: `t` is a twofold (or coupled) array, `d` a dotted one.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Shape {
    /// Two shaped operands (`…2` kernels).
    TT,
    /// Shaped and dotted (`…1` kernels).
    TD,
    /// Two dotted operands.
    DD,
    /// One shaped operand.
    T,
    /// One dotted operand.
    D,
}

impl Shape {
    pub fn name(self) -> &'static str {
        match self {
            Shape::TT => "tt",
            Shape::TD => "td",
            Shape::DD => "dd",
            Shape::T => "t",
            Shape::D => "d",
        }
    }

    fn uses_x_error(self) -> bool {
        matches!(self, Shape::TT | Shape::TD | Shape::T)
    }

    fn uses_y(self) -> bool {
        matches!(self, Shape::TT | Shape::TD | Shape::DD)
    }

    fn uses_y_error(self) -> bool {
        self == Shape::TT
    }
}

impl fmt::Display for Shape {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// What a kernel writes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum OutputKind {
    Dotted,
    Twofold,
    Coupled,
}

macro_rules! kernel_table {
    ($($variant:ident $name:literal $family:ident $shape:ident $out:ident;)*) => {
        /// Every array kernel, including the dotted baselines.
        #[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
        pub enum Kernel {
            $($variant,)*
        }

        impl Kernel {
            pub const ALL: &'static [Kernel] = &[$(Kernel::$variant,)*];

            pub fn name(self) -> &'static str {
                match self {
                    $(Kernel::$variant => $name,)*
                }
            }

            pub fn family(self) -> OpFamily {
                match self {
                    $(Kernel::$variant => OpFamily::$family,)*
                }
            }

            pub fn shape(self) -> Shape {
                match self {
                    $(Kernel::$variant => Shape::$shape,)*
                }
            }

            pub fn output(self) -> OutputKind {
                match self {
                    $(Kernel::$variant => OutputKind::$out,)*
                }
            }
        }
    };
}

kernel_table! {
    VtAdd2 "vtadd2" Add TT Twofold;
    VtAdd1 "vtadd1" Add TD Twofold;
    VtAdd "vtadd" Add DD Twofold;
    VtSub2 "vtsub2" Sub TT Twofold;
    VtSub1 "vtsub1" Sub TD Twofold;
    VtSub "vtsub" Sub DD Twofold;
    VtMul2 "vtmul2" Mul TT Twofold;
    VtMul1 "vtmul1" Mul TD Twofold;
    VtMul "vtmul" Mul DD Twofold;
    VtDiv2 "vtdiv2" Div TT Twofold;
    VtDiv1 "vtdiv1" Div TD Twofold;
    VtDiv "vtdiv" Div DD Twofold;
    VtSqrt1 "vtsqrt1" Sqrt T Twofold;
    VtSqrt "vtsqrt" Sqrt D Twofold;
    VpAdd2 "vpadd2" Add TT Coupled;
    VpAdd1 "vpadd1" Add TD Coupled;
    VpAdd "vpadd" Add DD Coupled;
    VpSub2 "vpsub2" Sub TT Coupled;
    VpSub1 "vpsub1" Sub TD Coupled;
    VpSub "vpsub" Sub DD Coupled;
    VpMul2 "vpmul2" Mul TT Coupled;
    VpMul1 "vpmul1" Mul TD Coupled;
    VpMul "vpmul" Mul DD Coupled;
    VpDiv2 "vpdiv2" Div TT Coupled;
    VpDiv1 "vpdiv1" Div TD Coupled;
    VpDiv "vpdiv" Div DD Coupled;
    VMem "vmem" Copy D Dotted;
    VAdd "vadd" Add DD Dotted;
    VSub "vsub" Sub DD Dotted;
    VMul "vmul" Mul DD Dotted;
    VDiv "vdiv" Div DD Dotted;
    VSqrt "vsqrt" Sqrt D Dotted;
}

impl Kernel {
    /// The twofold and coupled kernels, without the dotted baselines.
    pub fn shaped() -> impl Iterator<Item = Kernel> {
        Kernel::ALL.iter().copied().filter(|k| !k.is_baseline())
    }

    pub fn is_baseline(self) -> bool {
        self.output() == OutputKind::Dotted
    }

    /// The dotted kernel of the same family that throughput ratios are
    /// measured against.
    pub fn baseline(self) -> Kernel {
        match self.family() {
            OpFamily::Copy => Kernel::VMem,
            OpFamily::Add => Kernel::VAdd,
            OpFamily::Sub => Kernel::VSub,
            OpFamily::Mul => Kernel::VMul,
            OpFamily::Div => Kernel::VDiv,
            OpFamily::Sqrt => Kernel::VSqrt,
        }
    }

    /// Checks every plane the kernel reads or writes against the output
    /// length. Planes the shape does not use are ignored.
    pub fn validate<T>(self, inputs: &BatchInputs<'_, T>, out: &BatchOutput<'_, T>) -> Result<(), BatchError> {
        let n = out.value.len();
        let shape = self.shape();
        check_len("x values", n, inputs.x_value.len())?;
        if shape.uses_x_error() {
            check_len("x errors", n, inputs.x_error.len())?;
        }
        if shape.uses_y() {
            check_len("y values", n, inputs.y_value.len())?;
        }
        if shape.uses_y_error() {
            check_len("y errors", n, inputs.y_error.len())?;
        }
        if self.output() != OutputKind::Dotted {
            check_len("output errors", n, out.error.len())?;
        }
        Ok(())
    }
}

impl fmt::Display for Kernel {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unknown kernel `{0}`")]
pub struct UnknownKernel(String);

impl FromStr for Kernel {
    type Err = UnknownKernel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Kernel::ALL
            .iter()
            .copied()
            .find(|k| k.name() == s)
            .ok_or_else(|| UnknownKernel(s.to_string()))
    }
}

/// Input planes for [`apply`]. Planes a kernel's shape does not read may be
/// left empty. For `vp*` kernels the shaped inputs must hold coupled pairs,
/// as produced by a coupled kernel or [`CoupledArray`](super::CoupledArray).
#[derive(Clone, Copy, Debug)]
pub struct BatchInputs<'a, T> {
    pub x_value: &'a [T],
    pub x_error: &'a [T],
    pub y_value: &'a [T],
    pub y_error: &'a [T],
}

impl<T> Default for BatchInputs<'_, T> {
    fn default() -> Self {
        BatchInputs { x_value: &[], x_error: &[], y_value: &[], y_error: &[] }
    }
}

impl<'a, T> BatchInputs<'a, T> {
    #[cfg_attr(not(feature = "parallel"), allow(dead_code))]
    fn range(&self, r: Range<usize>) -> Self {
        let cut = |p: &'a [T]| p.get(r.clone()).unwrap_or(&[]);
        BatchInputs {
            x_value: cut(self.x_value),
            x_error: cut(self.x_error),
            y_value: cut(self.y_value),
            y_error: cut(self.y_error),
        }
    }
}

/// Output planes for [`apply`]. Dotted baselines leave `error` untouched
/// and accept it empty.
#[derive(Debug)]
pub struct BatchOutput<'a, T> {
    pub value: &'a mut [T],
    pub error: &'a mut [T],
}

impl<'a, T> BatchInputs<'a, T> {
    fn x(&self) -> TwofoldSlice<'a, T> {
        TwofoldSlice { value: self.x_value, error: self.x_error }
    }

    fn y(&self) -> TwofoldSlice<'a, T> {
        TwofoldSlice { value: self.y_value, error: self.y_error }
    }

    fn px(&self) -> CoupledSlice<'a, T> {
        CoupledSlice(self.x())
    }

    fn py(&self) -> CoupledSlice<'a, T> {
        CoupledSlice(self.y())
    }
}

impl<'a, T> BatchOutput<'a, T> {
    fn twofold(self) -> TwofoldSliceMut<'a, T> {
        TwofoldSliceMut { value: self.value, error: self.error }
    }

    fn coupled(self) -> CoupledSliceMut<'a, T> {
        CoupledSliceMut(self.twofold())
    }
}

/// A kernel resolved to its monomorphic entry point. Each entry checks the
/// lengths of the planes it uses.
pub type KernelFn<T> = for<'a> fn(BatchInputs<'a, T>, BatchOutput<'a, T>) -> Result<(), BatchError>;

impl Kernel {
    /// Resolves the kernel once, so hot loops pay a single indirect call
    /// instead of a dispatch per invocation.
    pub fn entry<T: Scalar>(self) -> KernelFn<T> {
        use Kernel::*;
        macro_rules! entry {
            (|$i:ident, $o:ident| $body:expr) => {
                |$i: BatchInputs<'_, T>, $o: BatchOutput<'_, T>| $body
            };
        }
        match self {
            VtAdd2 => entry!(|i, o| vtadd2(i.x(), i.y(), o.twofold())),
            VtAdd1 => entry!(|i, o| vtadd1(i.x(), i.y_value, o.twofold())),
            VtAdd => entry!(|i, o| vtadd(i.x_value, i.y_value, o.twofold())),
            VtSub2 => entry!(|i, o| vtsub2(i.x(), i.y(), o.twofold())),
            VtSub1 => entry!(|i, o| vtsub1(i.x(), i.y_value, o.twofold())),
            VtSub => entry!(|i, o| vtsub(i.x_value, i.y_value, o.twofold())),
            VtMul2 => entry!(|i, o| vtmul2(i.x(), i.y(), o.twofold())),
            VtMul1 => entry!(|i, o| vtmul1(i.x(), i.y_value, o.twofold())),
            VtMul => entry!(|i, o| vtmul(i.x_value, i.y_value, o.twofold())),
            VtDiv2 => entry!(|i, o| vtdiv2(i.x(), i.y(), o.twofold())),
            VtDiv1 => entry!(|i, o| vtdiv1(i.x(), i.y_value, o.twofold())),
            VtDiv => entry!(|i, o| vtdiv(i.x_value, i.y_value, o.twofold())),
            VtSqrt1 => entry!(|i, o| vtsqrt1(i.x(), o.twofold())),
            VtSqrt => entry!(|i, o| vtsqrt(i.x_value, o.twofold())),
            VpAdd2 => entry!(|i, o| vpadd2(i.px(), i.py(), o.coupled())),
            VpAdd1 => entry!(|i, o| vpadd1(i.px(), i.y_value, o.coupled())),
            VpAdd => entry!(|i, o| vpadd(i.x_value, i.y_value, o.coupled())),
            VpSub2 => entry!(|i, o| vpsub2(i.px(), i.py(), o.coupled())),
            VpSub1 => entry!(|i, o| vpsub1(i.px(), i.y_value, o.coupled())),
            VpSub => entry!(|i, o| vpsub(i.x_value, i.y_value, o.coupled())),
            VpMul2 => entry!(|i, o| vpmul2(i.px(), i.py(), o.coupled())),
            VpMul1 => entry!(|i, o| vpmul1(i.px(), i.y_value, o.coupled())),
            VpMul => entry!(|i, o| vpmul(i.x_value, i.y_value, o.coupled())),
            VpDiv2 => entry!(|i, o| vpdiv2(i.px(), i.py(), o.coupled())),
            VpDiv1 => entry!(|i, o| vpdiv1(i.px(), i.y_value, o.coupled())),
            VpDiv => entry!(|i, o| vpdiv(i.x_value, i.y_value, o.coupled())),
            VMem => entry!(|i, o| vmem(i.x_value, o.value)),
            VAdd => entry!(|i, o| vadd(i.x_value, i.y_value, o.value)),
            VSub => entry!(|i, o| vsub(i.x_value, i.y_value, o.value)),
            VMul => entry!(|i, o| vmul(i.x_value, i.y_value, o.value)),
            VDiv => entry!(|i, o| vdiv(i.x_value, i.y_value, o.value)),
            VSqrt => entry!(|i, o| vsqrt(i.x_value, o.value)),
        }
    }
}

/// Runs `kernel` over the whole arrays on the calling thread.
pub fn apply<T: Scalar>(kernel: Kernel, inputs: BatchInputs<'_, T>, out: BatchOutput<'_, T>) -> Result<(), BatchError> {
    kernel.validate(&inputs, &out)?;
    kernel.entry()(inputs, out)
}

/// Elements per parallel task: large enough to amortize scheduling, small
/// enough to stay in a core's L2.
#[cfg(feature = "parallel")]
const PAR_CHUNK: usize = 1 << 14;

/// Runs `kernel` over disjoint chunks on the rayon pool. The kernels are
/// elementwise, so the result is bitwise identical to [`apply`]. Without the
/// `parallel` feature this is [`apply`].
pub fn par_apply<T: Scalar>(kernel: Kernel, inputs: BatchInputs<'_, T>, out: BatchOutput<'_, T>) -> Result<(), BatchError> {
    #[cfg(feature = "parallel")]
    {
        use rayon::prelude::*;

        kernel.validate(&inputs, &out)?;
        let n = out.value.len();
        if n <= PAR_CHUNK {
            return apply(kernel, inputs, out);
        }
        let run = |k: usize, value: &mut [T], error: &mut [T]| {
            let lo = k * PAR_CHUNK;
            let part = inputs.range(lo..lo + value.len());
            apply(kernel, part, BatchOutput { value, error })
        };
        if kernel.output() == OutputKind::Dotted {
            out.value
                .par_chunks_mut(PAR_CHUNK)
                .enumerate()
                .try_for_each(|(k, value)| run(k, value, &mut []))
        } else {
            out.value
                .par_chunks_mut(PAR_CHUNK)
                .zip(out.error.par_chunks_mut(PAR_CHUNK))
                .enumerate()
                .try_for_each(|(k, (value, error))| run(k, value, error))
        }
    }
    #[cfg(not(feature = "parallel"))]
    {
        apply(kernel, inputs, out)
    }
}
