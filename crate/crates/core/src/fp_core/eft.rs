//! Error-free transforms.

use super::{Coupled, Scalar};
use crate::arith::Twofold;

#[inline]
fn ordered<T: Scalar>(a: T, b: T) -> bool {
    // Exactness of the three-operation forms needs exponent(a) >= exponent(b);
    // |a| >= |b| implies it.
    !(a.is_finite() && b.is_finite())
        || a == T::zero()
        || b == T::zero()
        || a.abs() >= b.abs()
        || (a.abs().is_normal() && a.abs().ulp() >= b.abs().ulp())
}

/// `a + b -> s + t` in three operations. Caller guarantees `|a| >= |b|`;
/// only debug builds check it.
#[inline]
pub fn fast_two_sum<T: Scalar>(a: T, b: T) -> Coupled<T> {
    debug_assert!(ordered(a, b), "fast_two_sum needs |a| >= |b|: a={a:e}, b={b:e}");
    let s = a + b;
    let b_virtual = s - a;
    let t = b - b_virtual;
    Coupled::from_parts(s, t)
}

/// `a + b -> s + t` for arbitrary operands, six operations, no branches.
#[inline]
pub fn two_sum<T: Scalar>(a: T, b: T) -> Coupled<T> {
    let s = a + b;
    let b_virtual = s - a;
    let a_virtual = s - b_virtual;
    let b_round = b - b_virtual;
    let a_round = a - a_virtual;
    Coupled::from_parts(s, a_round + b_round)
}

/// `a - b -> d + t` in three operations, given `|a| >= |b|`.
#[inline]
pub fn fast_two_diff<T: Scalar>(a: T, b: T) -> Coupled<T> {
    debug_assert!(ordered(a, b), "fast_two_diff needs |a| >= |b|: a={a:e}, b={b:e}");
    let d = a - b;
    let b_virtual = a - d;
    let t = b_virtual - b;
    Coupled::from_parts(d, t)
}

/// `a - b -> d + t` for arbitrary operands, six operations.
#[inline]
pub fn two_diff<T: Scalar>(a: T, b: T) -> Coupled<T> {
    let d = a - b;
    let b_virtual = a - d;
    let a_virtual = b_virtual + d;
    let b_round = b_virtual - b;
    let a_round = a - a_virtual;
    Coupled::from_parts(d, a_round + b_round)
}

/// `a * b -> p + e` with `e = fma(a, b, -p)`. Exact unless `e` underflows.
#[inline]
pub fn two_prod<T: Scalar>(a: T, b: T) -> Coupled<T> {
    let p = a * b;
    let e = a.mul_add(b, -p);
    Coupled::from_parts(p, e)
}

/// Quotient with exact remainder: `q = fl(a/b)`, `r = a - q*b`.
#[inline]
pub fn div_rem<T: Scalar>(a: T, b: T) -> (T, T) {
    let q = a / b;
    let r = (-q).mul_add(b, a);
    (q, r)
}

/// Square root with exact residual: `c = sqrt(a)`, `d = a - c*c`.
#[inline]
pub fn sqrt_resid<T: Scalar>(a: T) -> (T, T) {
    let c = a.sqrt();
    let d = (-c).mul_add(c, a);
    (c, d)
}

/// Exact redistribution of `value + error` into a coupled pair, valid for
/// any input.
#[inline]
pub fn renormalize<T: Scalar>(z: Twofold<T>) -> Coupled<T> {
    two_sum(z.value, z.error)
}

/// Three-operation renormalization for inputs whose value dominates the
/// error.
#[inline]
pub fn fast_renormalize<T: Scalar>(z: Twofold<T>) -> Coupled<T> {
    fast_two_sum(z.value, z.error)
}

#[cfg(test)]
mod tests {
    use super::*;

    const E53: f64 = 1.0 / 9007199254740992.0; // 2^-53

    fn pair<T: Scalar>(c: Coupled<T>) -> (T, T) {
        (c.value(), c.error())
    }

    #[test]
    fn fast_two_sum_examples() {
        assert_eq!(pair(fast_two_sum(1.0, 0.0)), (1.0, 0.0));
        assert_eq!(pair(fast_two_sum(1.0, E53)), (1.0, E53));
    }

    #[test]
    fn two_sum_examples() {
        assert_eq!(pair(two_sum(E53, 1.0)), (1.0, E53));
        assert_eq!(pair(two_sum(0.0f64, 0.0)), (0.0, 0.0));
        assert_eq!(pair(two_sum(1e300, -1e300)), (0.0, 0.0));
    }

    #[test]
    fn two_diff_examples() {
        let e54 = E53 / 2.0;
        assert_eq!(pair(fast_two_diff(1.0, 1.0)), (0.0, 0.0));
        assert_eq!(pair(fast_two_diff(1.0, e54)), (1.0, -e54));
        assert_eq!(pair(two_diff(e54, 1.0)), (-1.0, e54));
        for &x in &[3.25, -1e-200, 7e300] {
            assert_eq!(pair(two_diff(x, x)), (0.0, 0.0));
        }
    }

    #[test]
    fn two_prod_examples() {
        assert_eq!(pair(two_prod(1.5, 2.0)), (3.0, 0.0));
        let a = 1.0 + 2f64.powi(-27);
        assert_eq!(pair(two_prod(a, a)), (1.0 + 2f64.powi(-26), 2f64.powi(-54)));
    }

    #[test]
    fn div_rem_examples() {
        assert_eq!(div_rem(6.0, 3.0), (2.0, 0.0));
        let (q, r) = div_rem(1.0, 3.0);
        assert_eq!(q, 1.0 / 3.0);
        // 3q = 1 - 2^-54 exactly
        assert_eq!(r, 2f64.powi(-54));
        let (q, r) = div_rem(1.0, 0.0);
        assert_eq!(q, f64::INFINITY);
        assert!(r.is_nan());
    }

    #[test]
    fn sqrt_resid_examples() {
        assert_eq!(sqrt_resid(4.0), (2.0, 0.0));
        let (c, d) = sqrt_resid(2.0f64);
        assert_eq!(c, std::f64::consts::SQRT_2);
        assert!(d != 0.0 && d.abs() < 1e-15);
        let (c, d) = sqrt_resid(-1.0f64);
        assert!(c.is_nan() && d.is_nan());
    }

    #[test]
    fn renormalize_examples() {
        assert_eq!(pair(renormalize(Twofold::new(1.0, 0.0))), (1.0, 0.0));
        let s = 2f32.powi(24);
        assert_eq!(pair(renormalize(Twofold::new(s, s))), (2f32.powi(25), 0.0));
        assert_eq!(pair(fast_renormalize(Twofold::new(1.0, E53))), (1.0, E53));
        assert_eq!(pair(fast_renormalize(Twofold::new(0.0f64, 0.0))), (0.0, 0.0));
        // Tail larger than the head is fine for the six-operation form.
        assert_eq!(pair(renormalize(Twofold::new(E53, 1.0))), (1.0, E53));
    }

    #[test]
    fn sterbenz_difference_is_exact() {
        for &(a, b) in &[(1.0, 0.75), (3.0, 1.5), (1e-300, 1.9e-300), (-5.0, -9.5)] {
            assert_eq!(two_diff(a, b).error(), 0.0);
        }
    }

    #[test]
    #[cfg(debug_assertions)]
    #[should_panic(expected = "fast_two_sum needs")]
    fn fast_two_sum_checks_order_in_debug() {
        fast_two_sum(1.0, 1e10);
    }

    #[test]
    fn specials_propagate() {
        assert!(two_sum(f64::INFINITY, 1.0).error().is_nan());
        assert!(two_prod(f64::NAN, 1.0).value().is_nan());
        assert!(two_sum(f64::MAX, f64::MAX).value().is_infinite());
    }
}
