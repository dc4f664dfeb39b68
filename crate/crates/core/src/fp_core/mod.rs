//! Floating-point foundation: the [`Scalar`] abstraction, the [`Coupled`]
//! pair and the error-free transforms everything else is built from.
//!
//! All transforms are branch-free straight-line sequences of IEEE operations
//! under round-to-nearest-even. Their exactness claims hold for finite inputs
//! whose results neither overflow nor push the residual into the subnormal
//! range; outside that domain they return whatever the basic operations give.

mod coupled;
mod eft;
mod scalar;

pub use coupled::Coupled;
pub use eft::{
    div_rem, fast_renormalize, fast_two_diff, fast_two_sum, renormalize, sqrt_resid, two_diff,
    two_prod, two_sum,
};
pub use scalar::{check_fma, FmaError, Scalar};

/// The two supported binary formats, for run-time selection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum FloatFormat {
    Binary32,
    Binary64,
}

impl FloatFormat {
    pub const ALL: [FloatFormat; 2] = [FloatFormat::Binary32, FloatFormat::Binary64];

    /// `"f32"` / `"f64"`.
    pub fn short_name(self) -> &'static str {
        match self {
            FloatFormat::Binary32 => "f32",
            FloatFormat::Binary64 => "f64",
        }
    }

    /// C type name as printed in reports.
    pub fn type_name(self) -> &'static str {
        match self {
            FloatFormat::Binary32 => <f32 as Scalar>::TYPE_NAME,
            FloatFormat::Binary64 => <f64 as Scalar>::TYPE_NAME,
        }
    }
}

impl std::fmt::Display for FloatFormat {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.short_name())
    }
}

impl std::str::FromStr for FloatFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "f32" | "float" | "binary32" => Ok(FloatFormat::Binary32),
            "f64" | "double" | "binary64" => Ok(FloatFormat::Binary64),
            _ => Err(format!("unknown float format `{s}` (expected f32 or f64)")),
        }
    }
}
