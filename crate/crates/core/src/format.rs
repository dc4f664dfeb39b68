//! `value[error]` rendering in the style of C's `%g`.

use crate::fp_core::Scalar;
use crate::Twofold;

/// Significant digits used by reports unless overridden.
pub const DEFAULT_DIGITS: usize = 6;

/// Formats `x` like `printf("%.{digits}g", x)`: shortest of fixed or
/// scientific notation, trailing zeros trimmed, `nan`/`inf` for specials.
pub fn format_g(x: f64, digits: usize) -> String {
    let p = digits.max(1);
    if x.is_nan() {
        return "nan".to_string();
    }
    if x.is_infinite() {
        return if x < 0.0 { "-inf" } else { "inf" }.to_string();
    }
    if x == 0.0 {
        return if x.is_sign_negative() { "-0" } else { "0" }.to_string();
    }
    // Decimal exponent after rounding to p significant digits.
    let sci = format!("{:.*e}", p - 1, x);
    let (mantissa, exp) = sci.split_once('e').expect("exponent marker");
    let exp: i32 = exp.parse().expect("integer exponent");
    if exp < -4 || exp >= p as i32 {
        let mantissa = trim_zeros(mantissa);
        let sign = if exp < 0 { '-' } else { '+' };
        format!("{mantissa}e{sign}{:02}", exp.abs())
    } else {
        let decimals = (p as i32 - 1 - exp).max(0) as usize;
        trim_zeros(&format!("{:.*}", decimals, x)).to_string()
    }
}

fn trim_zeros(s: &str) -> &str {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.')
    } else {
        s
    }
}

/// `"V[E]"` with the default six significant digits.
pub fn format_twofold<T: Scalar>(value: T, error: T) -> String {
    format_twofold_digits(value, error, DEFAULT_DIGITS)
}

pub fn format_twofold_digits<T: Scalar>(value: T, error: T, digits: usize) -> String {
    format!("{}[{}]", format_g(value.to_f64(), digits), format_g(error.to_f64(), digits))
}

impl<T: Scalar> std::fmt::Display for Twofold<T> {
    /// `value[error]`; the formatter's precision, if any, sets the number of
    /// significant digits.
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let digits = f.precision().unwrap_or(DEFAULT_DIGITS);
        f.write_str(&format_twofold_digits(self.value, self.error, digits))
    }
}
