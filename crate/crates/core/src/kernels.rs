//! Auxiliary functions of the half-log-ratio analysis.
//!
//! With `t = ln sqrt(b/a)` and a power-mean order `p`:
//!
//! * `F(t, p) = ln B(a, b) - ln M_p(a, b)` (see [`big_f`]),
//! * `dF/dt = f1(t, p) / sinh^2 t` (see [`f1`], [`df_dt`]),
//! * `d f1/dt = f2(2t, p) / (4 cosh 2t cosh^2 pt)` (see [`f2`]),
//! * `f2(t, p) = sum_{n >= 1} u_n(p) t^(2n) / (2n)!` (see [`u_n`]).

use std::f64::consts::{FRAC_PI_4, LN_2};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Pow};

use crate::error::{Error, Result};
use crate::means::{eval_mean, half_log_ratio, MeanKind, PositivePair, SMALL_POWER};
use crate::special::{atan_ratio_m1, ln_cosh};

/// Above this `t`, [`big_f`] switches to the form with the linear growth
/// of both logarithms cancelled symbolically.
pub const LARGE_T: f64 = 20.0;

/// Below this `t`, [`f2`] is always summed from its power series.
pub const F2_SERIES_T: f64 = 1e-3;

/// An evaluation point `(t, p)` of the kernels.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KernelPoint {
    pub t: f64,
    pub p: f64,
}

impl KernelPoint {
    pub fn new(t: f64, p: f64) -> Result<Self> {
        if !(t >= 0.0 && t.is_finite()) {
            return Err(Error::InvalidParameter {
                what: "kernel t",
                value: t,
            });
        }
        if !p.is_finite() {
            return Err(Error::InvalidParameter {
                what: "kernel p",
                value: p,
            });
        }
        Ok(Self { t, p })
    }

    pub fn f1(self) -> f64 {
        f1(self.t, self.p)
    }

    pub fn f2(self) -> f64 {
        f2(self.t, self.p)
    }

    pub fn big_f(self) -> f64 {
        big_f(self.t, self.p)
    }

    pub fn df_dt(self) -> f64 {
        df_dt(self.t, self.p)
    }
}

/// The sharp constants of the Sandor-Yang versus power mean comparison.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SharpConstants {
    /// Largest power-mean order bounding the Sandor-Yang mean from below.
    pub p0: f64,
    /// Smallest power-mean order bounding it from above.
    pub q_upper: f64,
}

impl SharpConstants {
    pub fn new() -> Self {
        Self {
            p0: 4.0 * LN_2 / (4.0 + 2.0 * LN_2 - std::f64::consts::PI),
            q_upper: 4.0 / 3.0,
        }
    }

    /// `lambda_p = e^(pi/4 - 1) 2^(1/p - 1/2)`.
    pub fn lambda(&self, p: f64) -> f64 {
        limit_at_infinity(p).exp()
    }
}

impl Default for SharpConstants {
    fn default() -> Self {
        Self::new()
    }
}

/// `f1(t,p) = -atan(tanh t) + sinh t cosh t - tanh(pt) sinh^2 t`, extended by
/// `f1(0, p) = 0`.
///
/// Evaluated as `sinh t cosh((p-1)t)/cosh(pt) - atan(tanh t)`; near zero, where
/// both terms are `t + O(t^3)`, it is summed from its Taylor series.
pub fn f1(t: f64, p: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    if t < f1_series_limit(p) {
        return f1_series(t, p);
    }
    let ratio = if t < LARGE_T && (p * t).abs() < 300.0 {
        t.sinh() * ((p - 1.0) * t).cosh() / (p * t).cosh()
    } else {
        // exponential growth rates cancelled before exponentiating
        let (q, r) = ((p - 1.0).abs(), p.abs());
        let rate = t * ((1.0 + q) - r);
        let e = |x: f64| (-2.0 * x).exp();
        0.5 * rate.exp() * (1.0 - e(t)) * (1.0 + e(q * t)) / (1.0 + e(r * t))
    };
    ratio - t.tanh().atan()
}

fn f1_series_limit(p: f64) -> f64 {
    0.25 / p.abs().max(1.0)
}

const F1_SERIES_LEN: usize = 84;

/// Taylor coefficients of `f1(., p)` up to degree `F1_SERIES_LEN - 1`.
fn f1_coefficients(p: f64) -> Vec<f64> {
    let n = F1_SERIES_LEN;
    let mut sinh = vec![0.0; n];
    let mut cosh_shift = vec![0.0; n];
    let mut cosh_p = vec![0.0; n];
    let mut cosh_2 = vec![0.0; n];
    let mut fact = 1.0;
    for k in 0..n {
        if k > 0 {
            fact *= k as f64;
        }
        let kk = k as i32;
        if k % 2 == 1 {
            sinh[k] = 1.0 / fact;
        } else {
            cosh_shift[k] = (p - 1.0).powi(kk) / fact;
            cosh_p[k] = p.powi(kk) / fact;
            cosh_2[k] = 2f64.powi(kk) / fact;
        }
    }
    let numer = series_mul(&sinh, &cosh_shift);
    let quotient = series_div(&numer, &cosh_p);
    let sech_2 = series_div(&unit(n), &cosh_2);
    // atan(tanh t) = integral of sech(2s) ds
    let mut coeffs = quotient;
    for k in 1..n {
        coeffs[k] -= sech_2[k - 1] / k as f64;
    }
    coeffs
}

fn unit(n: usize) -> Vec<f64> {
    let mut u = vec![0.0; n];
    u[0] = 1.0;
    u
}

fn series_mul(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    (0..n)
        .map(|k| (0..=k).map(|i| a[i] * b[k - i]).sum())
        .collect()
}

fn series_div(a: &[f64], b: &[f64]) -> Vec<f64> {
    let n = a.len();
    let mut q = vec![0.0; n];
    for k in 0..n {
        let s: f64 = (1..=k).map(|i| b[i] * q[k - i]).sum();
        q[k] = (a[k] - s) / b[0];
    }
    q
}

fn f1_series(t: f64, p: f64) -> f64 {
    let c = f1_coefficients(p);
    c.iter().rev().fold(0.0, |acc, ck| acc * t + ck)
}

/// `f2(t,p) = cosh((p-2)t) - cosh(pt) + (1-p)cosh(2t) + 2p cosh(t) - p - 1`.
///
/// Evaluated as a combination of `cosh(x) - 1 = 2 sinh^2(x/2)` terms, and from
/// the `u_n` series for `t` below [`F2_SERIES_T`] or below `1/R` with
/// `R = max(|2-p|, |p|, 2)`. Near `p = 4/3` the `t^2` coefficient vanishes and
/// only the series keeps relative accuracy at small `t`.
pub fn f2(t: f64, p: f64) -> f64 {
    if t < F2_SERIES_T || t * series_rate(p) < 1.0 {
        return f2_series(t, p, 1e-17).value;
    }
    let s2 = |x: f64| (0.5 * x).sinh().powi(2);
    2.0 * (s2((p - 2.0) * t) - s2(p * t) + (1.0 - p) * s2(2.0 * t) + 2.0 * p * s2(t))
}

/// Partial sum of the `u_n` series for [`f2`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SeriesSum {
    pub value: f64,
    /// Number of terms `n = 1..=terms` that were summed.
    pub terms: usize,
    /// `sum |u_n| t^(2n) / (2n)!`, the conditioning scale of the sum.
    pub magnitude: f64,
}

/// Sums `u_n(p) t^(2n)/(2n)!` until the analytic tail bound drops below
/// `rel_tol` times the magnitude of the terms summed so far.
pub fn f2_series(t: f64, p: f64, rel_tol: f64) -> SeriesSum {
    let mut value = 0.0;
    let mut magnitude = 0.0;
    let mut weight = 1.0; // t^(2n)/(2n)!
    let t2 = t * t;
    let mut n = 0;
    loop {
        n += 1;
        let nf = n as f64;
        weight *= t2 / ((2.0 * nf - 1.0) * (2.0 * nf));
        let term = u_n(n, p) * weight;
        value += term;
        magnitude += term.abs();
        if n >= 2 && f2_tail_bound(n, t, p) <= rel_tol * magnitude.max(f64::MIN_POSITIVE) {
            break;
        }
        if n >= 500 || weight == 0.0 {
            break;
        }
    }
    SeriesSum {
        value,
        terms: n as usize,
        magnitude,
    }
}

fn series_rate(p: f64) -> f64 {
    (2.0 - p).abs().max(p.abs()).max(2.0)
}

/// Upper bound on `sum_{k > n} |u_k(p)| t^(2k)/(2k)!`.
///
/// Uses `|u_k| <= C R^(2k)` with `R = max(|2-p|, |p|, 2)`, `C = 3 + |1-p| + 2|p|`
/// and a geometric majorant of the factorial tail.
pub fn f2_tail_bound(n: u32, t: f64, p: f64) -> f64 {
    let r = series_rate(p);
    let c = 3.0 + (1.0 - p).abs() + 2.0 * p.abs();
    let x = r * t;
    let k = 2.0 * (n as f64 + 1.0);
    // first omitted term x^k / k!
    let ln_first = k * x.ln() - ln_factorial(k);
    let ratio = x * x / ((k + 1.0) * (k + 2.0));
    if ratio >= 1.0 {
        return f64::INFINITY;
    }
    c * ln_first.exp() / (1.0 - ratio)
}

fn ln_factorial(k: f64) -> f64 {
    (2..=k as u64).map(|i| (i as f64).ln()).sum()
}

/// `u_n(p) = (2-p)^(2n) - p^(2n) + (1-p) 2^(2n) + 2p`.
pub fn u_n(n: u32, p: f64) -> f64 {
    if n == 1 {
        return 2.0 * (-3.0f64).mul_add(p, 4.0);
    }
    let e = 2 * n as i32;
    (2.0 - p).powi(e) - p.powi(e) + (1.0 - p) * 2f64.powi(e) + 2.0 * p
}

/// [`u_n`] in exact rational arithmetic.
pub fn u_n_exact(n: u32, p: &BigRational) -> BigRational {
    let two = BigRational::from_integer(BigInt::from(2));
    let one = BigRational::one();
    let e = 2 * n;
    Pow::pow(&two - p, e) - Pow::pow(p.clone(), e)
        + (&one - p) * Pow::pow(two.clone(), e)
        + &two * p
}

/// `(1/p) ln cosh(pt)`, continuous through `p = 0`.
fn ln_power_normalized(t: f64, p: f64) -> f64 {
    if p.abs() < SMALL_POWER {
        0.5 * p * t * t
    } else {
        ln_cosh(p * t) / p
    }
}

/// `F(t,p) = ln cosh(2t)/2 + atan(tanh t)/tanh t - ln cosh(pt)/p - 1`,
/// extended by `F(0, p) = 0` and at `p = 0` by its limit.
pub fn big_f(t: f64, p: f64) -> f64 {
    if t == 0.0 {
        return 0.0;
    }
    let arctan_term = atan_ratio_m1(t.tanh());
    if t < LARGE_T || p.abs() < SMALL_POWER {
        return 0.5 * ln_cosh(2.0 * t) + arctan_term - ln_power_normalized(t, p);
    }
    // (1 - |p|/p) t + ln((1 + e^-4t)/2)/2 - ln((1 + e^-2|p|t)/2)/p + ...
    let linear = if p > 0.0 { 0.0 } else { 2.0 * t };
    let half_log = |x: f64| (-x).exp().ln_1p() - LN_2;
    linear + 0.5 * half_log(4.0 * t) - half_log(2.0 * p.abs() * t) / p + arctan_term
}

/// `dF/dt = f1(t,p) / sinh^2 t`.
pub fn df_dt(t: f64, p: f64) -> f64 {
    let f = f1(t, p);
    if t == 0.0 {
        return 0.0;
    }
    if t < 300.0 {
        f / t.sinh().powi(2)
    } else {
        let q = (-2.0 * t).exp();
        4.0 * q * f / (1.0 - q).powi(2)
    }
}

/// `lim_{t -> inf} F(t, p) = pi/4 - ln2/2 + ln2/p - 1 = ln lambda_p` for `p > 0`.
pub fn limit_at_infinity(p: f64) -> f64 {
    FRAC_PI_4 - 0.5 * LN_2 + LN_2 / p - 1.0
}

/// `lim_{t -> 0+} F(t, p)/t^2 = -(p - 4/3)/2`.
pub fn small_t_coefficient(p: f64) -> f64 {
    -0.5 * (p - 4.0 / 3.0)
}

/// `lim_{t -> 0+} f1(t, p)/t^3 = -(p - 4/3)`.
pub fn f1_cubic_coefficient(p: f64) -> f64 {
    -(p - 4.0 / 3.0)
}

/// `|ln B(a,b) - ln M_p(a,b) - F(t,p)|` with `t` the half-log-ratio of the pair.
pub fn log_identity_check(pair: PositivePair, p: f64) -> Result<f64> {
    if pair.is_equal() {
        return Err(Error::EqualArguments);
    }
    if !p.is_finite() {
        return Err(Error::InvalidParameter {
            what: "power order",
            value: p,
        });
    }
    let b = eval_mean(MeanKind::SandorYang, pair)?;
    let m = eval_mean(MeanKind::Power(p), pair)?;
    let t = half_log_ratio(pair).value();
    Ok((b.ln() - m.ln() - big_f(t, p)).abs())
}
