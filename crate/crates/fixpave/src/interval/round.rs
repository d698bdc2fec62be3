//! Directed-rounding scalar kernels.
//!
//! Hardware `f64` arithmetic rounds to nearest. Each kernel here returns a
//! value on the requested side of the exact real result, stepping to the
//! neighbouring representable only when the rounded result landed on the
//! wrong side, so exact operations stay exact.

/// Magnitudes below this are handled with an unconditional step: the
/// error-term identities used to detect inexactness are only guaranteed
/// away from the subnormal range.
const TINY: f64 = 1e-290;

/// Exact rounding error of `s = a + b` (Knuth two-sum). `a + b == s + err`
/// holds exactly for all finite doubles.
#[inline]
fn two_sum_err(a: f64, b: f64, s: f64) -> f64 {
    let bv = s - a;
    let av = s - bv;
    (a - av) + (b - bv)
}

#[inline]
pub fn add_down(a: f64, b: f64) -> f64 {
    let s = a + b;
    if s == f64::INFINITY {
        return f64::MAX;
    }
    if !s.is_finite() {
        return s;
    }
    if two_sum_err(a, b, s) < 0.0 {
        s.next_down()
    } else {
        s
    }
}

#[inline]
pub fn add_up(a: f64, b: f64) -> f64 {
    let s = a + b;
    if s == f64::NEG_INFINITY {
        return f64::MIN;
    }
    if !s.is_finite() {
        return s;
    }
    if two_sum_err(a, b, s) > 0.0 {
        s.next_up()
    } else {
        s
    }
}

#[inline]
pub fn sub_down(a: f64, b: f64) -> f64 {
    add_down(a, -b)
}

#[inline]
pub fn sub_up(a: f64, b: f64) -> f64 {
    add_up(a, -b)
}

#[inline]
pub fn mul_down(a: f64, b: f64) -> f64 {
    let p = a * b;
    if p == f64::INFINITY {
        return f64::MAX;
    }
    if !p.is_finite() {
        return p;
    }
    if p == 0.0 {
        // Exact zero only when one factor is zero; otherwise the product
        // underflowed and the true value sits just off zero.
        return if a == 0.0 || b == 0.0 {
            0.0
        } else if (a > 0.0) == (b > 0.0) {
            0.0
        } else {
            0.0f64.next_down()
        };
    }
    if p.abs() < TINY {
        return p.next_down();
    }
    // fma recovers the rounding error of the product exactly.
    if a.mul_add(b, -p) < 0.0 {
        p.next_down()
    } else {
        p
    }
}

#[inline]
pub fn mul_up(a: f64, b: f64) -> f64 {
    let p = a * b;
    if p == f64::NEG_INFINITY {
        return f64::MIN;
    }
    if !p.is_finite() {
        return p;
    }
    if p == 0.0 {
        return if a == 0.0 || b == 0.0 {
            0.0
        } else if (a > 0.0) == (b > 0.0) {
            0.0f64.next_up()
        } else {
            0.0
        };
    }
    if p.abs() < TINY {
        return p.next_up();
    }
    if a.mul_add(b, -p) > 0.0 {
        p.next_up()
    } else {
        p
    }
}

#[inline]
pub fn div_down(a: f64, b: f64) -> f64 {
    debug_assert!(b != 0.0);
    let q = a / b;
    if q == f64::INFINITY {
        return f64::MAX;
    }
    if !q.is_finite() {
        return q;
    }
    if a == 0.0 {
        return 0.0;
    }
    if q.abs() < TINY || a.abs() < TINY {
        return q.next_down();
    }
    // r = q*b - a is exact here; q overshoots a/b exactly when r and b agree
    // in sign.
    let r = q.mul_add(b, -a);
    if r == 0.0 {
        q
    } else if (r > 0.0) == (b > 0.0) {
        q.next_down()
    } else {
        q
    }
}

#[inline]
pub fn div_up(a: f64, b: f64) -> f64 {
    debug_assert!(b != 0.0);
    let q = a / b;
    if q == f64::NEG_INFINITY {
        return f64::MIN;
    }
    if !q.is_finite() {
        return q;
    }
    if a == 0.0 {
        return 0.0;
    }
    if q.abs() < TINY || a.abs() < TINY {
        return q.next_up();
    }
    let r = q.mul_add(b, -a);
    if r == 0.0 {
        q
    } else if (r > 0.0) == (b > 0.0) {
        q
    } else {
        q.next_up()
    }
}

/// `x` stepped down `n` representables; cushion for library functions that
/// are faithful but not correctly rounded.
#[inline]
pub fn step_down(x: f64, n: u32) -> f64 {
    let mut y = x;
    for _ in 0..n {
        y = y.next_down();
    }
    y
}

/// `x` stepped up `n` representables.
#[inline]
pub fn step_up(x: f64, n: u32) -> f64 {
    let mut y = x;
    for _ in 0..n {
        y = y.next_up();
    }
    y
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_ops_stay_exact() {
        assert_eq!(add_down(1.0, 3.0), 4.0);
        assert_eq!(add_up(2.0, 4.0), 6.0);
        assert_eq!(mul_down(-1.0, 4.0), -4.0);
        assert_eq!(mul_up(2.0, 4.0), 8.0);
        assert_eq!(div_down(1.0, 2.0), 0.5);
        assert_eq!(div_up(1.0, 2.0), 0.5);
        assert_eq!(sub_down(0.3, 0.3), 0.0);
        assert_eq!(sub_up(0.3, 0.3), 0.0);
    }

    #[test]
    fn inexact_ops_bracket_the_true_value() {
        // 0.1 + 0.2 rounds up in f64, so the down-rounded sum must drop one.
        let s: f64 = 0.1 + 0.2;
        assert_eq!(add_down(0.1, 0.2), s.next_down());
        assert_eq!(add_up(0.1, 0.2), s);

        // 1/3 rounds to nearest; the two directions must straddle it.
        let q = 1.0 / 3.0;
        assert!(div_down(1.0, 3.0) <= q && q <= div_up(1.0, 3.0));
        assert!(div_up(1.0, 3.0) - div_down(1.0, 3.0) <= f64::EPSILON);
    }

    #[test]
    fn overflow_saturates_toward_the_safe_side() {
        assert_eq!(add_down(f64::MAX, f64::MAX), f64::MAX);
        assert_eq!(add_up(f64::MIN, f64::MIN), f64::MIN);
        assert_eq!(add_up(f64::MAX, f64::MAX), f64::INFINITY);
    }

    #[test]
    fn underflowed_products_step_off_zero() {
        let t = 1e-200;
        assert!(mul_down(t, -t) < 0.0);
        assert_eq!(mul_up(t, -t), 0.0);
        assert_eq!(mul_down(t, t), 0.0);
        assert!(mul_up(t, t) > 0.0);
        assert_eq!(mul_down(0.0, -5.0), 0.0);
        assert_eq!(mul_up(0.0, -5.0), 0.0);
    }
}
