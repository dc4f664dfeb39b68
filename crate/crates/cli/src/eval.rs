//! `twofold eval OP OPERANDS...`
//!
//! Operands are plain numbers or `V[E]` tokens. Without brackets the count
//! decides the shapes: for a binary operation four numbers are two twofolds,
//! three are a twofold and a dotted number, two are two dotted numbers; for
//! a square root two numbers are one twofold and one is dotted. With any
//! bracket token present, every token is one operand.

use std::fmt;
use std::str::FromStr;

use anyhow::{bail, Context, Result};
use clap::builder::TypedValueParser;
use clap::Args;
use twofold::arith::{psqrt, tsqrt0};
use twofold::format::format_twofold_digits;
use twofold::{Coupled, CoupledOps, FloatFormat, TSqrt, Twofold, TwofoldOps};

#[derive(Args, Debug)]
pub struct EvalArgs {
    /// Floating-point format of the operands and the result.
    #[arg(long, default_value = "f64")]
    format: FloatFormat,
    /// Significant digits in the result.
    #[arg(long, default_value_t = twofold::format::DEFAULT_DIGITS, value_parser = clap::value_parser!(u8).range(1..=17).map(usize::from))]
    digits: usize,
    /// tadd, tsub, tmul, tdiv, tsqrt, padd, psub, pmul, pdiv or psqrt.
    op: Op,
    /// Operand numbers or `V[E]` tokens.
    #[arg(required = true, num_args = 1.., allow_negative_numbers = true)]
    operands: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Op {
    TAdd,
    TSub,
    TMul,
    TDiv,
    TSqrt,
    PAdd,
    PSub,
    PMul,
    PDiv,
    PSqrt,
}

const OPS: [(&str, Op); 10] = [
    ("tadd", Op::TAdd),
    ("tsub", Op::TSub),
    ("tmul", Op::TMul),
    ("tdiv", Op::TDiv),
    ("tsqrt", Op::TSqrt),
    ("padd", Op::PAdd),
    ("psub", Op::PSub),
    ("pmul", Op::PMul),
    ("pdiv", Op::PDiv),
    ("psqrt", Op::PSqrt),
];

impl FromStr for Op {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        OPS.iter().find(|(name, _)| *name == s).map(|&(_, op)| op).ok_or_else(|| {
            let names: Vec<_> = OPS.iter().map(|(n, _)| *n).collect();
            format!("unknown operation `{s}` (expected one of {})", names.join(", "))
        })
    }
}

impl Op {
    fn arity(self) -> usize {
        match self {
            Op::TSqrt | Op::PSqrt => 1,
            _ => 2,
        }
    }

    fn coupled(self) -> bool {
        matches!(self, Op::PAdd | Op::PSub | Op::PMul | Op::PDiv | Op::PSqrt)
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
enum Operand<T> {
    Dotted(T),
    Shaped(T, T),
}

impl<T: fmt::Display> fmt::Display for Operand<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Operand::Dotted(v) => write!(f, "{v}"),
            Operand::Shaped(v, e) => write!(f, "{v}[{e}]"),
        }
    }
}

enum Token<'a> {
    Number(&'a str),
    Pair(&'a str, &'a str),
}

fn tokenize(raw: &str) -> Result<Token<'_>> {
    match raw.strip_suffix(']').and_then(|s| s.split_once('[')) {
        Some((v, e)) => Ok(Token::Pair(v, e)),
        None if raw.contains(['[', ']']) => bail!("malformed operand `{raw}` (expected V or V[E])"),
        None => Ok(Token::Number(raw)),
    }
}

fn number<T: FromStr>(s: &str) -> Result<T> {
    s.trim().parse().ok().with_context(|| format!("`{s}` is not a number"))
}

fn operands<T: FromStr>(op: Op, raw: &[String]) -> Result<Vec<Operand<T>>> {
    let tokens = raw.iter().map(|s| tokenize(s)).collect::<Result<Vec<_>>>()?;
    let arity = op.arity();
    if tokens.iter().any(|t| matches!(t, Token::Pair(..))) {
        if tokens.len() != arity {
            bail!("expected {arity} operand(s), got {}", tokens.len());
        }
        return tokens
            .into_iter()
            .map(|t| match t {
                Token::Number(v) => Ok(Operand::Dotted(number(v)?)),
                Token::Pair(v, e) => Ok(Operand::Shaped(number(v)?, number(e)?)),
            })
            .collect();
    }
    let nums = raw.iter().map(|s| number::<T>(s)).collect::<Result<Vec<_>>>()?;
    let mut it = nums.into_iter();
    let mut next = || it.next().expect("count checked");
    let shapes: &[bool] = match (arity, raw.len()) {
        (2, 4) => &[true, true],
        (2, 3) => &[true, false],
        (2, 2) => &[false, false],
        (1, 2) => &[true],
        (1, 1) => &[false],
        (2, n) => bail!("binary operations take 2, 3 or 4 numbers, got {n}"),
        (_, n) => bail!("square root takes 1 or 2 numbers, got {n}"),
    };
    Ok(shapes
        .iter()
        .map(|&shaped| if shaped { Operand::Shaped(next(), next()) } else { Operand::Dotted(next()) })
        .collect())
}

pub fn run(args: EvalArgs) -> Result<()> {
    let (value, error) = match args.format {
        FloatFormat::Binary32 => {
            let z = eval_f32(args.op, &operands(args.op, &args.operands)?)?;
            (z.value as f64, z.error as f64)
        }
        FloatFormat::Binary64 => {
            let z = eval_f64(args.op, &operands(args.op, &args.operands)?)?;
            (z.value, z.error)
        }
    };
    println!("{}", format_twofold_digits(value, error, args.digits));
    Ok(())
}

// The scalar-shape operations are implemented per concrete format, so the
// dispatch is stamped out once for each.
macro_rules! evaluator {
    ($name:ident, $t:ty) => {
        fn $name(op: Op, xs: &[Operand<$t>]) -> Result<Twofold<$t>> {
            use Operand::{Dotted, Shaped};

            let coupled = |x: Operand<$t>| -> Result<Coupled<$t>> {
                match x {
                    Dotted(v) => Ok(Coupled::from_scalar(v)),
                    Shaped(v, e) => Coupled::try_new(v, e).with_context(|| {
                        format!("{} needs coupled operands, but {x} overlaps (|error| > ulp(value)/2)", op_name(op))
                    }),
                }
            };

            if op.arity() == 1 {
                return Ok(match (op, xs[0]) {
                    (Op::TSqrt, Dotted(v)) | (Op::PSqrt, Dotted(v)) => tsqrt0(v).into(),
                    (Op::TSqrt, Shaped(v, e)) => Twofold::new(v, e).tsqrt(),
                    (_, x) => psqrt(coupled(x)?),
                });
            }

            let (x, y) = (xs[0], xs[1]);
            if op.coupled() {
                let z: Coupled<$t> = match (x, y) {
                    (Dotted(a), Dotted(b)) => pop(op, a, b),
                    (Shaped(..), Dotted(b)) => pop(op, coupled(x)?, b),
                    (Dotted(a), Shaped(..)) => pop(op, a, coupled(y)?),
                    (Shaped(..), Shaped(..)) => pop(op, coupled(x)?, coupled(y)?),
                };
                return Ok(z.into());
            }
            Ok(match (x, y) {
                (Dotted(a), Dotted(b)) => top::<$t, $t, Coupled<$t>>(op, a, b).into(),
                (Shaped(a0, a1), Dotted(b)) => top(op, Twofold::new(a0, a1), b),
                (Dotted(a), Shaped(b0, b1)) => top(op, a, Twofold::new(b0, b1)),
                (Shaped(a0, a1), Shaped(b0, b1)) => top(op, Twofold::new(a0, a1), Twofold::new(b0, b1)),
            })
        }
    };
}

evaluator!(eval_f32, f32);
evaluator!(eval_f64, f64);

fn op_name(op: Op) -> &'static str {
    OPS.iter().find(|(_, o)| *o == op).map(|(n, _)| *n).expect("every op is named")
}

fn top<X: TwofoldOps<Y, Output = Z>, Y, Z>(op: Op, x: X, y: Y) -> Z {
    match op {
        Op::TAdd => x.tadd(y),
        Op::TSub => x.tsub(y),
        Op::TMul => x.tmul(y),
        _ => x.tdiv(y),
    }
}

fn pop<X: CoupledOps<Y, Output = Z>, Y, Z>(op: Op, x: X, y: Y) -> Z {
    match op {
        Op::PAdd => x.padd(y),
        Op::PSub => x.psub(y),
        Op::PMul => x.pmul(y),
        _ => x.pdiv(y),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strs(xs: &[&str]) -> Vec<String> {
        xs.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn shapes_from_counts() {
        let ops = operands::<f64>(Op::TAdd, &strs(&["1", "0", "2"])).unwrap();
        assert_eq!(ops, [Operand::Shaped(1.0, 0.0), Operand::Dotted(2.0)]);
        let ops = operands::<f64>(Op::TSqrt, &strs(&["2"])).unwrap();
        assert_eq!(ops, [Operand::Dotted(2.0)]);
        assert!(operands::<f64>(Op::TAdd, &strs(&["1"])).is_err());
        assert!(operands::<f64>(Op::TSqrt, &strs(&["1", "2", "3"])).is_err());
    }

    #[test]
    fn bracket_tokens() {
        let ops = operands::<f32>(Op::TMul, &strs(&["3", "0.1[-1.49012e-09]"])).unwrap();
        assert_eq!(ops, [Operand::Dotted(3.0), Operand::Shaped(0.1, -1.49012e-09)]);
        assert!(operands::<f32>(Op::TMul, &strs(&["1[0]"])).is_err());
        assert!(operands::<f32>(Op::TMul, &strs(&["1[0", "2"])).is_err());
    }

    #[test]
    fn evaluates_each_shape() {
        let z = eval_f64(Op::TAdd, &[Operand::Shaped(1.0, 0.0), Operand::Shaped(1.0, 0.0)]).unwrap();
        assert_eq!(z, Twofold::new(2.0, 0.0));
        let z = eval_f64(Op::TDiv, &[Operand::Dotted(1.0), Operand::Dotted(3.0)]).unwrap();
        assert_eq!(z.value, 1.0 / 3.0);
        assert!(z.error != 0.0);
        let z = eval_f64(Op::TSub, &[Operand::Dotted(1.0), Operand::Shaped(1.0, 1e-20)]).unwrap();
        assert_eq!(z, Twofold::new(0.0, -1e-20));
    }

    #[test]
    fn coupled_ops_reject_overlap() {
        let err = eval_f64(Op::PAdd, &[Operand::Shaped(1.0, 1.0), Operand::Dotted(1.0)]).unwrap_err();
        assert!(err.to_string().contains("needs coupled operands"), "{err}");
        assert!(eval_f64(Op::PAdd, &[Operand::Shaped(1.0, 1e-17), Operand::Dotted(1.0)]).is_ok());
    }
}
