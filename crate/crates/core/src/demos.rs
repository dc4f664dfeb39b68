//! Three small application studies whose reports show the error estimate
//! tracking a real accuracy problem: a drifting float clock, a Gauss solve of
//! a Jordan block, and the school formula for quadratic roots.
//!
//! Every quantity in a report is printed as `value[error]`.

use std::fmt::Write as _;

use crate::format::{format_g, format_twofold_digits, DEFAULT_DIGITS};
use crate::fp_core::{FloatFormat, Scalar};
use crate::arith::tmul1;
use crate::{TSqrt, Twofold};

/// One twofold quantity, widened to binary64 for printing (exact).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub error: f64,
}

impl<T: Scalar> From<Twofold<T>> for Quantity {
    fn from(z: Twofold<T>) -> Self {
        Quantity { value: z.value.to_f64(), error: z.error.to_f64() }
    }
}

#[derive(Clone, Debug, PartialEq)]
pub enum Line {
    /// `label: q1  q2 ... suffix`
    Values { label: String, items: Vec<Quantity>, suffix: Option<String> },
    /// `label: text`
    Text { label: String, text: String },
    /// Label on its own line followed by indented rows.
    Block { label: String, rows: Vec<Vec<Quantity>> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct DemoReport {
    pub format: FloatFormat,
    pub header: String,
    pub indent: usize,
    pub lines: Vec<Line>,
}

impl DemoReport {
    fn new(format: FloatFormat, header: String, indent: usize) -> Self {
        DemoReport { format, header, indent, lines: Vec::new() }
    }

    fn values(&mut self, label: &str, items: Vec<Quantity>, suffix: Option<&str>) {
        self.lines.push(Line::Values {
            label: label.to_string(),
            items,
            suffix: suffix.map(str::to_string),
        });
    }

    /// Quantities printed under `label`, flattened row by row.
    pub fn quantities(&self, label: &str) -> Option<Vec<Quantity>> {
        self.lines.iter().find_map(|line| match line {
            Line::Values { label: l, items, .. } if l == label => Some(items.clone()),
            Line::Block { label: l, rows } if l == label => Some(rows.concat()),
            _ => None,
        })
    }

    pub fn render(&self) -> String {
        self.render_digits(DEFAULT_DIGITS)
    }

    pub fn render_digits(&self, digits: usize) -> String {
        let pad = " ".repeat(self.indent);
        let fmt_row = |items: &[Quantity]| {
            items
                .iter()
                .map(|q| format_twofold_digits(q.value, q.error, digits))
                .collect::<Vec<_>>()
                .join("  ")
        };
        let mut out = String::new();
        writeln!(out, "{}", self.header).unwrap();
        for line in &self.lines {
            match line {
                Line::Values { label, items, suffix } => {
                    write!(out, "{pad}{label}: {}", fmt_row(items)).unwrap();
                    if let Some(s) = suffix {
                        write!(out, " {s}").unwrap();
                    }
                    out.push('\n');
                }
                Line::Text { label, text } => writeln!(out, "{pad}{label}: {text}").unwrap(),
                Line::Block { label, rows } => {
                    writeln!(out, "{label}").unwrap();
                    for row in rows {
                        writeln!(out, "{pad}{}", fmt_row(row)).unwrap();
                    }
                }
            }
        }
        out
    }
}

impl std::fmt::Display for DemoReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.render())
    }
}

/// Steps of a tenth of a second in `hours` hours.
pub fn sum100h_steps(hours: u32) -> u64 {
    hours as u64 * 36_000
}

/// A clock counting seconds in steps of 1/10 s for `hours` hours, kept as a
/// twofold. The step carries its own decimal representation error.
pub fn sum100h(format: FloatFormat, hours: u32) -> DemoReport {
    match format {
        FloatFormat::Binary32 => sum100h_in::<f32>(format, hours),
        FloatFormat::Binary64 => sum100h_in::<f64>(format, hours),
    }
}

/// The accumulated clock in seconds, before conversion for display.
pub fn sum100h_seconds<T: Scalar>(hours: u32) -> (Twofold<T>, Twofold<T>) {
    let step = Twofold::<T>::from_decimal(0.1);
    let mut clock = Twofold::<T>::zero();
    for _ in 0..sum100h_steps(hours) {
        clock = crate::arith::tadd(clock, step);
    }
    (step, clock)
}

fn sum100h_in<T: Scalar>(format: FloatFormat, hours: u32) -> DemoReport {
    let (step, clock) = sum100h_seconds::<T>(hours);
    let per_hour = T::from_f64(3600.0);
    let in_hours = Twofold::new(clock.value / per_hour, clock.error / per_hour);

    let header = format!("test: type={}, hours={hours}", format.type_name());
    let mut report = DemoReport::new(format, header, 4);
    report.values("1/10 s", vec![step.into()], None);
    report.values("result", vec![in_hours.into()], Some("hours"));
    report.lines.push(Line::Text {
        label: "expect".into(),
        text: format!("{} hours", format_g(hours as f64, DEFAULT_DIGITS)),
    });
    report
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GaussCase {
    /// λ = 1/10
    Well3,
    /// λ = 1/1000
    Ill3,
}

impl GaussCase {
    pub fn lambda(self) -> f64 {
        match self {
            GaussCase::Well3 => 0.1,
            GaussCase::Ill3 => 0.001,
        }
    }

    /// Every component of the exact solution.
    pub fn solution(self) -> f64 {
        match self {
            GaussCase::Well3 => 10.0,
            GaussCase::Ill3 => 1000.0,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            GaussCase::Well3 => "well3",
            GaussCase::Ill3 => "ill3",
        }
    }
}

impl std::str::FromStr for GaussCase {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "well3" => Ok(GaussCase::Well3),
            "ill3" => Ok(GaussCase::Ill3),
            _ => Err(format!("unknown gauss case `{s}` (expected well3 or ill3)")),
        }
    }
}

/// The 3x3 Jordan block with `λ` on the diagonal and ones above it, and the
/// right-hand side `(1 + 1/λ, 1 + 1/λ, 1)` that makes every solution
/// component `1/λ`.
pub fn gauss_system<T: Scalar>(case: GaussCase) -> (Vec<Vec<Twofold<T>>>, Vec<Twofold<T>>) {
    const N: usize = 3;
    let diag = Twofold::<T>::from_decimal(case.lambda());
    let mut a = vec![vec![Twofold::<T>::zero(); N]; N];
    for i in 0..N {
        a[i][i] = diag;
        if i + 1 < N {
            a[i][i + 1] = Twofold::from(T::one());
        }
    }
    let x = T::from_f64(case.solution());
    let f = (0..N)
        .map(|i| {
            let tail = if i + 1 < N { x } else { T::zero() };
            Twofold::from(T::one() + tail)
        })
        .collect();
    (a, f)
}

/// Gaussian elimination without pivoting, then back substitution, all in
/// twofold arithmetic.
pub fn gauss_eliminate<T: Scalar>(
    mut a: Vec<Vec<Twofold<T>>>,
    mut f: Vec<Twofold<T>>,
) -> Vec<Twofold<T>> {
    let n = f.len();
    for k in 0..n {
        for i in k + 1..n {
            let factor = a[i][k] / a[k][k];
            for j in k..n {
                a[i][j] = a[i][j] - factor * a[k][j];
            }
            f[i] = f[i] - factor * f[k];
        }
    }
    let mut x = vec![Twofold::<T>::zero(); n];
    for i in (0..n).rev() {
        let mut acc = f[i];
        for j in i + 1..n {
            acc = acc - a[i][j] * x[j];
        }
        x[i] = acc / a[i][i];
    }
    x
}

pub fn gauss_solve(format: FloatFormat, case: GaussCase) -> DemoReport {
    match format {
        FloatFormat::Binary32 => gauss_in::<f32>(format, case),
        FloatFormat::Binary64 => gauss_in::<f64>(format, case),
    }
}

fn gauss_in<T: Scalar>(format: FloatFormat, case: GaussCase) -> DemoReport {
    let (a, f) = gauss_system::<T>(case);
    let x = gauss_eliminate(a.clone(), f.clone());
    let expected = vec![Twofold::from(T::from_f64(case.solution())); f.len()];

    let row = |v: &[Twofold<T>]| v.iter().map(|&z| Quantity::from(z)).collect::<Vec<_>>();
    let header = format!("test, {}, {}", format.type_name(), case.name());
    let mut report = DemoReport::new(format, header, 2);
    report.lines.push(Line::Block { label: "A".into(), rows: a.iter().map(|r| row(r)).collect() });
    report.lines.push(Line::Block { label: "f".into(), rows: vec![row(&f)] });
    report.lines.push(Line::Block { label: "x (expected)".into(), rows: vec![row(&expected)] });
    report.lines.push(Line::Block { label: "x (solution)".into(), rows: vec![row(&x)] });
    report
}

/// The constant term of `x² + 2x + c = 0`: a decimal literal, or a sum or
/// difference of two literals evaluated in binary64 (`"1+1e-8"`).
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct QuadraticC(pub f64);

impl std::str::FromStr for QuadraticC {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        let bad = || format!("cannot parse `{s}` as a number or a sum of two numbers");
        let s = s.trim();
        if let Ok(v) = s.parse::<f64>() {
            return Ok(QuadraticC(v));
        }
        // Split at a +/- that is neither leading nor part of an exponent.
        let bytes = s.as_bytes();
        for i in 1..bytes.len() {
            let c = bytes[i];
            if (c == b'+' || c == b'-') && !matches!(bytes[i - 1], b'e' | b'E') {
                let lhs: f64 = s[..i].trim().parse().map_err(|_| bad())?;
                let rhs: f64 = s[i + 1..].trim().parse().map_err(|_| bad())?;
                return Ok(QuadraticC(if c == b'+' { lhs + rhs } else { lhs - rhs }));
            }
        }
        Err(bad())
    }
}

/// Roots of `x² + 2x + c` by the school formula with a twofold square root
/// of the discriminant.
pub fn quadratic_roots(format: FloatFormat, c: QuadraticC) -> DemoReport {
    match format {
        FloatFormat::Binary32 => quadratic_in::<f32>(format, c.0),
        FloatFormat::Binary64 => quadratic_in::<f64>(format, c.0),
    }
}

/// `(d, x0, x1)` for `a x² + b x + c`.
pub fn quadratic_solve<T: Scalar>(
    a: Twofold<T>,
    b: Twofold<T>,
    c: Twofold<T>,
) -> (Twofold<T>, Twofold<T>, Twofold<T>) {
    let two = T::one() + T::one();
    let four = two + two;
    let disc = b * b - tmul1(a, four) * c;
    let d = disc.tsqrt();
    let two_a = tmul1(a, two);
    let x0 = (-b - d) / two_a;
    let x1 = (-b + d) / two_a;
    (d, x0, x1)
}

fn quadratic_in<T: Scalar>(format: FloatFormat, c: f64) -> DemoReport {
    let a = Twofold::<T>::from(T::one());
    let b = Twofold::<T>::from(T::one() + T::one());
    let c = Twofold::<T>::from_decimal(c);
    let (d, x0, x1) = quadratic_solve(a, b, c);

    let header = format!("test: type={}", format.type_name());
    let mut report = DemoReport::new(format, header, 2);
    for (label, q) in [("a", a), ("b", b), ("c", c), ("d", d), ("x0", x0), ("x1", x1)] {
        report.values(label, vec![q.into()], None);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn c_spec_parsing() {
        assert_eq!("1e-8".parse::<QuadraticC>().unwrap(), QuadraticC(1e-8));
        assert_eq!("1+1e-8".parse::<QuadraticC>().unwrap(), QuadraticC(1.0 + 1e-8));
        assert_eq!("1 - 1e-8".parse::<QuadraticC>().unwrap(), QuadraticC(1.0 - 1e-8));
        assert_eq!("-2.5e+3".parse::<QuadraticC>().unwrap(), QuadraticC(-2500.0));
        assert!("abc".parse::<QuadraticC>().is_err());
    }

    #[test]
    fn gauss_system_shape() {
        let (a, f) = gauss_system::<f64>(GaussCase::Well3);
        assert_eq!(a[0][1], Twofold::new(1.0, 0.0));
        assert_eq!(a[1][0], Twofold::new(0.0, 0.0));
        assert_eq!(a[2][2], Twofold::new(0.1, 0.0));
        let f: Vec<f64> = f.iter().map(|z| z.value).collect();
        assert_eq!(f, vec![11.0, 11.0, 1.0]);
        let (_, f) = gauss_system::<f32>(GaussCase::Ill3);
        let f: Vec<f32> = f.iter().map(|z| z.value).collect();
        assert_eq!(f, vec![1001.0, 1001.0, 1.0]);
    }

    #[test]
    fn report_layout() {
        let r = sum100h(FloatFormat::Binary64, 1);
        let text = r.render();
        assert!(text.starts_with("test: type=double, hours=1\n    1/10 s: 0.1[0]\n"));
        assert!(text.ends_with("    expect: 1 hours\n"));
        assert_eq!(r.quantities("1/10 s").unwrap()[0].value, 0.1);
    }
}
