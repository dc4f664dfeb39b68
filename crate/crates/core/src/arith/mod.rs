//! Twofold and coupled arithmetic.
//!
//! Naming follows the shape of the result: `t*` operations return a
//! [`Twofold`], `p*` operations return a renormalized [`Coupled`]. Operand
//! shapes are encoded in the name (`tadd` twofold+twofold, `tadd1`
//! twofold+dotted, `tdiv0` dotted/dotted) and, for generic code, in the
//! [`ops::TwofoldOps`] / [`ops::CoupledOps`] traits.
//!
//! Every `⊕`-chain in an error formula is evaluated left to right with the
//! grouping written in the doc comment; tests pin the resulting bits.

mod add;
mod dekker;
mod div;
mod mul;
pub mod ops;
mod root;
mod twofold;

pub use add::{tadd, tadd1, tsub, tsub1};
pub use dekker::{padd, padd1, pdiv_coupled, pdiv_coupled1, pmul_coupled, pmul_coupled1, psub, psub1};
pub use div::{pdiv, tdiv, tdiv0, tdiv1};
pub use mul::{pmul, tmul, tmul1};
pub use root::{psqrt, tsqrt, tsqrt0};
pub use twofold::Twofold;

pub use crate::fp_core::Coupled;
