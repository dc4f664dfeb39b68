//! Exact reference arithmetic for checking floating-point transforms.
//!
//! Every finite binary32/binary64 value is a dyadic rational `m * 2^e`, and
//! sums, differences and products of dyadics stay dyadic. [`Dyadic`] keeps
//! them exactly with a big-integer mantissa, which is far cheaper than a
//! general rational (no gcd reduction). Quotients and square roots leave the
//! dyadics; [`Dyadic::to_rational`] and [`sqrt_rational`] cover those.
//!
//! Nothing in the production library depends on this crate.

use std::cmp::Ordering;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::{BigInt, BigUint, Sign};
pub use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Exact value `mant * 2^exp`.
#[derive(Clone, Debug)]
pub struct Dyadic {
    mant: BigInt,
    exp: i64,
}

impl Dyadic {
    pub fn zero() -> Self {
        Dyadic { mant: BigInt::zero(), exp: 0 }
    }

    pub fn from_int(v: i64) -> Self {
        Dyadic { mant: BigInt::from(v), exp: 0 }
    }

    /// Exact conversion; `None` for NaN and infinities.
    pub fn from_f64(x: f64) -> Option<Self> {
        if !x.is_finite() {
            return None;
        }
        if x == 0.0 {
            return Some(Self::zero());
        }
        let bits = x.to_bits();
        let neg = bits >> 63 != 0;
        let biased = ((bits >> 52) & 0x7ff) as i64;
        let frac = bits & ((1u64 << 52) - 1);
        let (m, e) = if biased == 0 {
            (frac, -1074)
        } else {
            (frac | (1u64 << 52), biased - 1075)
        };
        let mant = BigInt::from(m);
        Some(Dyadic { mant: if neg { -mant } else { mant }, exp: e })
    }

    pub fn from_f32(x: f32) -> Option<Self> {
        Self::from_f64(x as f64)
    }

    pub fn is_zero(&self) -> bool {
        self.mant.is_zero()
    }

    pub fn signum(&self) -> i32 {
        match self.mant.sign() {
            Sign::Minus => -1,
            Sign::NoSign => 0,
            Sign::Plus => 1,
        }
    }

    pub fn abs(&self) -> Self {
        Dyadic { mant: self.mant.abs(), exp: self.exp }
    }

    /// Multiply by `2^k` exactly.
    pub fn scale2(&self, k: i64) -> Self {
        Dyadic { mant: self.mant.clone(), exp: self.exp + k }
    }

    fn aligned(a: &Dyadic, b: &Dyadic) -> (BigInt, BigInt, i64) {
        let e = a.exp.min(b.exp);
        let am = &a.mant << ((a.exp - e) as usize);
        let bm = &b.mant << ((b.exp - e) as usize);
        (am, bm, e)
    }

    pub fn to_rational(&self) -> BigRational {
        if self.exp >= 0 {
            BigRational::from_integer(&self.mant << (self.exp as usize))
        } else {
            BigRational::new(self.mant.clone(), BigInt::one() << ((-self.exp) as usize))
        }
    }

    /// Round to the nearest binary64 (ties to even), with gradual underflow
    /// and overflow to infinity.
    pub fn to_f64(&self) -> f64 {
        round_dyadic(self, 53, -1074, 1024)
    }

    /// Round to the nearest binary32 (ties to even) in a single rounding.
    pub fn to_f32(&self) -> f32 {
        round_dyadic(self, 24, -149, 128) as f32
    }
}

/// `p`: significand bits; `min_exp`: exponent of the smallest subnormal;
/// `max_e`: values `>= 2^max_e` after rounding overflow.
fn round_dyadic(x: &Dyadic, p: u64, min_exp: i64, max_e: i64) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    let neg = x.mant.sign() == Sign::Minus;
    let mag = x.mant.magnitude();
    let bits = mag.bits() as i64;
    // Value lies in [2^(top), 2^(top+1)).
    let top = x.exp + bits - 1;
    // Exponent of the last kept bit.
    let lsb = (top - (p as i64 - 1)).max(min_exp);
    let shift = lsb - x.exp;
    let kept: BigUint = if shift <= 0 {
        mag << ((-shift) as usize)
    } else {
        let s = shift as usize;
        let q: BigUint = mag >> s;
        let rem: BigUint = mag - (&q << s);
        let half: BigUint = BigUint::one() << (s - 1);
        match rem.cmp(&half) {
            Ordering::Less => q,
            Ordering::Greater => q + 1u32,
            Ordering::Equal => {
                if q.bit(0) {
                    q + 1u32
                } else {
                    q
                }
            }
        }
    };
    // kept has at most p+1 bits; the conversion below is exact for p <= 53.
    let k = kept.to_u64().expect("rounded significand fits in u64");
    let mag = if lsb + (64 - k.leading_zeros() as i64) > max_e {
        f64::INFINITY
    } else {
        (k as f64) * pow2(lsb)
    };
    if neg {
        -mag
    } else {
        mag
    }
}

fn pow2(e: i64) -> f64 {
    // Split to stay inside the normal range at each step.
    let mut r = 1.0f64;
    let mut e = e;
    while e > 1000 {
        r *= f64::from_bits(((1000 + 1023) as u64) << 52);
        e -= 1000;
    }
    while e < -1000 {
        r *= f64::from_bits(((-1000 + 1023) as u64) << 52);
        e += 1000;
    }
    if e >= -1022 {
        r * f64::from_bits(((e + 1023) as u64) << 52)
    } else {
        r * f64::from_bits(1u64 << (e + 1074))
    }
}

impl PartialEq for Dyadic {
    fn eq(&self, other: &Self) -> bool {
        self.cmp(other) == Ordering::Equal
    }
}

impl Eq for Dyadic {}

impl PartialOrd for Dyadic {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Dyadic {
    fn cmp(&self, other: &Self) -> Ordering {
        let (a, b, _) = Dyadic::aligned(self, other);
        a.cmp(&b)
    }
}

impl Add for &Dyadic {
    type Output = Dyadic;
    fn add(self, rhs: &Dyadic) -> Dyadic {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let (a, b, e) = Dyadic::aligned(self, rhs);
        Dyadic { mant: a + b, exp: e }
    }
}

impl Sub for &Dyadic {
    type Output = Dyadic;
    fn sub(self, rhs: &Dyadic) -> Dyadic {
        self + &(-rhs)
    }
}

impl Mul for &Dyadic {
    type Output = Dyadic;
    fn mul(self, rhs: &Dyadic) -> Dyadic {
        Dyadic { mant: &self.mant * &rhs.mant, exp: self.exp + rhs.exp }
    }
}

impl Neg for &Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        Dyadic { mant: -&self.mant, exp: self.exp }
    }
}

macro_rules! forward_owned {
    ($($tr:ident $m:ident),*) => {$(
        impl $tr for Dyadic {
            type Output = Dyadic;
            fn $m(self, rhs: Dyadic) -> Dyadic { (&self).$m(&rhs) }
        }
    )*};
}
forward_owned!(Add add, Sub sub, Mul mul);

impl Neg for Dyadic {
    type Output = Dyadic;
    fn neg(self) -> Dyadic {
        -&self
    }
}

/// Exact rational from a binary64 value. Panics on NaN/infinity.
pub fn rational_f64(x: f64) -> BigRational {
    Dyadic::from_f64(x).expect("finite input").to_rational()
}

/// Square root of a non-negative rational, accurate to within `2^-bits`
/// relative (truncated toward zero).
pub fn sqrt_rational(x: &BigRational, bits: u32) -> BigRational {
    assert!(!x.is_negative(), "sqrt of negative rational");
    if x.is_zero() {
        return BigRational::zero();
    }
    // sqrt(n/d) = sqrt(n*d*4^k) / (d*2^k)
    let n = x.numer().to_biguint().expect("non-negative");
    let d = x.denom().to_biguint().expect("positive");
    let k = bits as usize + 64;
    let scaled: BigUint = (&n * &d) << (2 * k);
    let root = scaled.sqrt();
    BigRational::new(BigInt::from(root), BigInt::from(d) << k)
}

/// Nearest binary64 to a rational (ties to even).
pub fn rational_to_f64(x: &BigRational) -> f64 {
    if x.is_zero() {
        return 0.0;
    }
    // Scale into a dyadic with enough guard bits, then round once. The sticky
    // bit records any inexact remainder so ties are not misjudged.
    let n = x.numer();
    let d = x.denom();
    let guard = 64usize + 1200;
    let scaled = (n << guard) / d;
    let exact = &scaled * d == (n << guard);
    let mut mant = scaled;
    if !exact {
        mant = (mant << 1usize) + if n.is_negative() { -1 } else { 1 };
        return round_dyadic(&Dyadic { mant, exp: -(guard as i64) - 1 }, 53, -1074, 1024);
    }
    round_dyadic(&Dyadic { mant, exp: -(guard as i64) }, 53, -1074, 1024)
}
