//! Overflow- and cancellation-safe elementary helpers shared by the mean and
//! kernel evaluators.

use std::f64::consts::LN_2;

/// `ln(cosh(x))` without overflow for large `|x|` and with full relative
/// accuracy near zero.
pub fn ln_cosh(x: f64) -> f64 {
    let x = x.abs();
    if x < 1.0 {
        // cosh(x) - 1 = 2 sinh^2(x/2)
        let s = (0.5 * x).sinh();
        (2.0 * s * s).ln_1p()
    } else {
        x + (-2.0 * x).exp().ln_1p() - LN_2
    }
}

/// `ln(sinh(x))` for `x > 0`.
pub fn ln_sinh(x: f64) -> f64 {
    debug_assert!(x > 0.0);
    if x < 1.0 {
        x.sinh().ln()
    } else {
        x + (-(-2.0 * x).exp()).ln_1p() - LN_2
    }
}

/// `ln(1 + e^y)`.
pub fn softplus(y: f64) -> f64 {
    y.max(0.0) + (-y.abs()).exp().ln_1p()
}

/// `atan(x)/x - 1`, with the removable singularity at zero filled in.
pub fn atan_ratio_m1(x: f64) -> f64 {
    let x2 = x * x;
    if x2 < 0.01 {
        // -x^2/3 + x^4/5 - x^6/7 + ...
        let mut sum = 0.0;
        let mut pow = 1.0;
        for k in 1..=10 {
            pow *= -x2;
            sum += pow / (2 * k + 1) as f64;
        }
        sum
    } else if x.is_infinite() {
        -1.0
    } else {
        x.atan() / x - 1.0
    }
}

/// `sinh(x)/x - 1`.
pub fn sinhc_m1(x: f64) -> f64 {
    let x2 = x * x;
    if x2 < 0.01 {
        // x^2/3! + x^4/5! + ...
        let mut sum = 0.0;
        let mut term = 1.0;
        for k in 1..=10 {
            term *= x2 / ((2 * k) * (2 * k + 1)) as f64;
            sum += term;
        }
        sum
    } else {
        x.sinh() / x - 1.0
    }
}

/// `x coth(x) - 1`.
pub fn xcoth_m1(x: f64) -> f64 {
    let x2 = x * x;
    if x2 < 0.01 {
        // Bernoulli series: x^2/3 - x^4/45 + 2x^6/945 - x^8/4725 + 2x^10/93555
        const C: [f64; 6] = [
            1.0 / 3.0,
            -1.0 / 45.0,
            2.0 / 945.0,
            -1.0 / 4725.0,
            2.0 / 93555.0,
            -1382.0 / 638512875.0,
        ];
        C.iter().rev().fold(0.0, |acc, c| (acc + c) * x2)
    } else {
        x / x.tanh() - 1.0
    }
}
