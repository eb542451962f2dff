//! Scalar bracketing.

use crate::error::{Error, Result};

/// Bisection on `[lo, hi]` for a sign change of `f`.
///
/// Stops when the bracket is narrower than `rel_width * max(|lo|, |hi|)` or
/// after `max_iter` halvings, returning the midpoint.
pub fn bisect<F>(f: F, mut lo: f64, mut hi: f64, rel_width: f64, max_iter: usize) -> Result<f64>
where
    F: Fn(f64) -> f64,
{
    let mut f_lo = f(lo);
    let f_hi = f(hi);
    if f_lo == 0.0 {
        return Ok(lo);
    }
    if f_hi == 0.0 {
        return Ok(hi);
    }
    if f_lo.signum() == f_hi.signum() || f_lo.is_nan() || f_hi.is_nan() {
        return Err(Error::NotBracketed { lo, hi });
    }
    for _ in 0..max_iter {
        let mid = 0.5 * (lo + hi);
        if hi - lo <= rel_width * lo.abs().max(hi.abs()) || mid == lo || mid == hi {
            break;
        }
        let f_mid = f(mid);
        if f_mid == 0.0 {
            return Ok(mid);
        }
        if f_mid.signum() == f_lo.signum() {
            lo = mid;
            f_lo = f_mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

/// Bisection on a monotone predicate: `holds(lo)` is assumed true and
/// `holds(hi)` false. Returns the final `(lo, hi)` after `iterations` halvings.
pub fn bisect_predicate<P>(holds: P, mut lo: f64, mut hi: f64, iterations: usize) -> (f64, f64)
where
    P: Fn(f64) -> bool,
{
    for _ in 0..iterations {
        let mid = 0.5 * (lo + hi);
        if mid == lo || mid == hi {
            break;
        }
        if holds(mid) {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    (lo, hi)
}
