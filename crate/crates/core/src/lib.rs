//! Twofold floating-point arithmetic.
//!
//! A [`Twofold`] carries the ordinary rounded result of a computation in its
//! `value` and a running estimate of that result's accumulated rounding error
//! in its `error`. The `value` plane is bitwise identical to what plain
//! `f32`/`f64` arithmetic would produce, so instrumenting a computation with
//! twofolds never changes its answer; it only adds an accuracy report.
//!
//! A [`Coupled`] number is a renormalized twofold whose parts do not overlap
//! (`|error| <= ulp(value)/2`), i.e. a double-double style value.
//!
//! ```
//! use twofold::{Twofold, TwofoldOps};
//!
//! let mut clock = Twofold::<f32>::zero();
//! for _ in 0..100 {
//!     clock = clock.tadd(Twofold::from(0.1f32));
//! }
//! let plain: f32 = (0..100).fold(0.0, |s, _| s + 0.1f32);
//! assert_eq!(clock.value, plain);
//! // The estimate recovers most of the drift from the exact sum of the steps.
//! let exact = 100.0 * f64::from(0.1f32);
//! let drift = (f64::from(clock.value) - exact).abs();
//! assert!((f64::from(clock.value) + f64::from(clock.error) - exact).abs() < drift / 100.0);
//! ```

pub mod arith;
pub mod batch;
pub mod bench;
pub mod demos;
pub mod format;
pub mod fp_core;

pub use arith::ops::{CoupledOps, TSqrt, TwofoldOps};
pub use arith::Twofold;
pub use fp_core::{Coupled, FloatFormat, Scalar};
