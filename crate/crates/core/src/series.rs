//! Power series with one sign change in their coefficients.
//!
//! A series `P(x) = sum_{k<=m} a_k x^k - sum_{k>m} |a_k| x^k` with nonnegative
//! head, `a_m > 0` and a nonzero nonpositive tail is positive near zero,
//! negative for large `x`, and crosses zero exactly once on `(0, inf)`.

use crate::error::{Error, Result};
use crate::kernels::u_n;
use crate::roots::bisect;

/// Finite prefix `a_0..a_N` of a coefficient sequence.
#[derive(Debug, Clone, PartialEq)]
pub struct CoefficientSeq {
    coeffs: Vec<f64>,
    sign_change_index: Option<usize>,
}

impl CoefficientSeq {
    /// Wraps `coeffs`, recording the sign change index when the pattern holds.
    pub fn new(coeffs: Vec<f64>) -> Self {
        let sign_change_index = detect_sign_change(&coeffs).ok();
        Self {
            coeffs,
            sign_change_index,
        }
    }

    /// Like [`CoefficientSeq::new`] but fails when the pattern does not hold.
    pub fn with_sign_change(coeffs: Vec<f64>) -> Result<Self> {
        let m = detect_sign_change(&coeffs)?;
        Ok(Self {
            coeffs,
            sign_change_index: Some(m),
        })
    }

    /// Coefficients `u_n(p)/(2n)!`, `n = 1..=terms`, of `f2(t, p)/t^2` as a
    /// series in `s = t^2`.
    pub fn f2_weights(p: f64, terms: u32) -> Self {
        let mut fact = 1.0;
        let coeffs = (1..=terms)
            .map(|n| {
                let k = 2.0 * n as f64;
                fact *= (k - 1.0) * k;
                u_n(n, p) / fact
            })
            .collect();
        Self::new(coeffs)
    }

    pub fn coeffs(&self) -> &[f64] {
        &self.coeffs
    }

    pub fn sign_change_index(&self) -> Option<usize> {
        self.sign_change_index
    }

    /// Horner evaluation of the stored prefix.
    pub fn evaluate(&self, x: f64) -> f64 {
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * x + c)
    }

    /// `sum |a_k| x^k`.
    pub fn magnitude(&self, x: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * x + c.abs())
    }
}

/// Index `m` of the last positive coefficient, provided everything before it
/// is nonnegative and at least one later coefficient is strictly negative.
pub fn detect_sign_change(coeffs: &[f64]) -> Result<usize> {
    if coeffs.is_empty() {
        return Err(Error::NotApplicable("empty coefficient list"));
    }
    if coeffs.iter().any(|c| c.is_nan()) {
        return Err(Error::NotApplicable("NaN coefficient"));
    }
    let m = coeffs
        .iter()
        .rposition(|&c| c > 0.0)
        .ok_or(Error::NotApplicable("no positive head coefficient"))?;
    if coeffs[..m].iter().any(|&c| c < 0.0) {
        return Err(Error::NotApplicable("negative coefficient inside the head"));
    }
    if !coeffs[m + 1..].iter().any(|&c| c < 0.0) {
        return Err(Error::NotApplicable("tail has no negative coefficient"));
    }
    Ok(m)
}

/// The unique positive zero of the stored prefix inside `(0, radius]`.
///
/// Brackets by doubling from `radius * 1e-6`, then bisects to a relative width
/// of `1e-14`.
pub fn series_positive_root(seq: &CoefficientSeq, radius: f64) -> Result<f64> {
    if seq.sign_change_index.is_none() {
        return Err(Error::NotApplicable("no sign change index"));
    }
    if !(radius > 0.0 && radius.is_finite()) {
        return Err(Error::InvalidParameter {
            what: "series radius",
            value: radius,
        });
    }
    let p = |x: f64| seq.evaluate(x);
    let mut lo = radius * 1e-6;
    while p(lo) <= 0.0 {
        lo *= 1e-3;
        if lo < f64::MIN_POSITIVE {
            return Err(Error::NotApplicable("series not positive near zero"));
        }
    }
    let mut hi = lo;
    loop {
        let next = (2.0 * hi).min(radius);
        if p(next) < 0.0 {
            hi = next;
            break;
        }
        if next >= radius {
            return Err(Error::NoSignChange { radius });
        }
        lo = next;
        hi = next;
    }
    bisect(p, lo, hi, 1e-14, 200)
}
