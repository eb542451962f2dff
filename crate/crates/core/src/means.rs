//! Bivariate means of two positive reals.
//!
//! Every mean is available through two independent routes:
//!
//! * [`eval_mean`] works on the pair directly, scaling by the larger or
//!   smaller argument.
//! * [`eval_mean_normalized`] works in the half-log-ratio coordinate
//!   `t = ln sqrt(max/min)` on the pair `(e^-t, e^t)`, where each mean becomes
//!   a hyperbolic expression. [`ln_mean_normalized`] is the logarithm of the
//!   same quantity and never overflows.

use std::f64::consts::{LN_2, PI, SQRT_2};
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quadrature::elliptic_mean_unit;
use crate::special::{atan_ratio_m1, ln_cosh, ln_sinh, sinhc_m1, softplus, xcoth_m1};

/// Below this `|p|` the power mean uses `exp(p t^2 / 2)` in normalized form.
pub const SMALL_POWER: f64 = 1e-8;

/// An unordered pair of positive finite reals.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PositivePair {
    a: f64,
    b: f64,
}

impl PositivePair {
    pub fn new(a: f64, b: f64) -> Result<Self> {
        if a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite() {
            Ok(Self { a, b })
        } else {
            Err(Error::NonPositiveArgument { a, b })
        }
    }

    /// The pair `(e^-t, e^t)`.
    pub fn from_half_log_ratio(t: f64) -> Result<Self> {
        Self::new((-t).exp(), t.exp())
    }

    pub fn a(&self) -> f64 {
        self.a
    }

    pub fn b(&self) -> f64 {
        self.b
    }

    pub fn min(&self) -> f64 {
        self.a.min(self.b)
    }

    pub fn max(&self) -> f64 {
        self.a.max(self.b)
    }

    pub fn is_equal(&self) -> bool {
        self.a == self.b
    }

    /// `sqrt(ab)`, computed without overflow.
    pub fn geometric(&self) -> f64 {
        self.a.sqrt() * self.b.sqrt()
    }
}

/// `t = ln sqrt(max/min) >= 0`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd)]
pub struct HalfLogRatio(f64);

impl HalfLogRatio {
    pub fn new(t: f64) -> Result<Self> {
        if t >= 0.0 && !t.is_nan() {
            Ok(Self(t))
        } else {
            Err(Error::InvalidParameter {
                what: "half-log-ratio",
                value: t,
            })
        }
    }

    pub fn value(self) -> f64 {
        self.0
    }
}

pub fn half_log_ratio(pair: PositivePair) -> HalfLogRatio {
    let (lo, hi) = (pair.min(), pair.max());
    let ratio = hi / lo;
    let t = if ratio < 2.0 {
        0.5 * ((hi - lo) / lo).ln_1p()
    } else if ratio.is_finite() {
        0.5 * ratio.ln()
    } else {
        0.5 * (hi.ln() - lo.ln())
    };
    HalfLogRatio(t)
}

/// The fifteen means. Parametric kinds carry their real parameter.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum MeanKind {
    /// `((a^p + b^p)/2)^(1/p)`, geometric at `p = 0`, max/min at `p = +/-inf`.
    Power(f64),
    /// `(a^(p+1) + b^(p+1)) / (a^p + b^p)`.
    Lehmer(f64),
    Harmonic,
    Geometric,
    Arithmetic,
    Quadratic,
    Logarithmic,
    Identric,
    FirstSeiffert,
    Yang,
    Toader,
    NeumanSandor,
    Sandor,
    SecondSeiffert,
    SandorYang,
}

/// Large-`t` behaviour `ln M(e^-t, e^t) = slope*t + log_t*ln(t) + constant + o(1)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Asymptote {
    pub slope: f64,
    pub log_t: f64,
    pub constant: f64,
}

impl Asymptote {
    const fn new(slope: f64, log_t: f64, constant: f64) -> Self {
        Self {
            slope,
            log_t,
            constant,
        }
    }
}

impl MeanKind {
    /// All non-parametric kinds in catalog order.
    pub const NAMED: [MeanKind; 13] = [
        MeanKind::Harmonic,
        MeanKind::Geometric,
        MeanKind::Arithmetic,
        MeanKind::Quadratic,
        MeanKind::Logarithmic,
        MeanKind::Identric,
        MeanKind::FirstSeiffert,
        MeanKind::Yang,
        MeanKind::Toader,
        MeanKind::NeumanSandor,
        MeanKind::Sandor,
        MeanKind::SecondSeiffert,
        MeanKind::SandorYang,
    ];

    pub fn validate(self) -> Result<Self> {
        match self {
            MeanKind::Power(p) if p.is_nan() => Err(Error::InvalidParameter {
                what: "power mean",
                value: p,
            }),
            MeanKind::Lehmer(p) if !p.is_finite() => Err(Error::InvalidParameter {
                what: "Lehmer mean",
                value: p,
            }),
            _ => Ok(self),
        }
    }

    /// Coefficient `c` in `ln M(e^-t, e^t) = c t^2 + O(t^4)`; `None` for the
    /// power mean at infinite order, whose logarithm is linear in `t`.
    pub fn quadratic_coefficient(self) -> Option<f64> {
        use MeanKind::*;
        Some(match self {
            Power(p) if p.is_infinite() => return None,
            Power(p) => 0.5 * p,
            Lehmer(p) => p + 0.5,
            Harmonic => -0.5,
            Geometric => 0.0,
            Arithmetic => 0.5,
            Quadratic => 1.0,
            Logarithmic => 1.0 / 6.0,
            Identric => 1.0 / 3.0,
            FirstSeiffert => 1.0 / 3.0,
            Yang => 2.0 / 3.0,
            Toader => 0.75,
            NeumanSandor => 2.0 / 3.0,
            Sandor => 1.0 / 6.0,
            SecondSeiffert => 5.0 / 6.0,
            SandorYang => 2.0 / 3.0,
        })
    }

    pub fn asymptote(self) -> Asymptote {
        use MeanKind::*;
        let ln_pi = PI.ln();
        match self {
            Power(p) if p == f64::INFINITY => Asymptote::new(1.0, 0.0, 0.0),
            Power(p) if p == f64::NEG_INFINITY => Asymptote::new(-1.0, 0.0, 0.0),
            Power(0.0) => Asymptote::new(0.0, 0.0, 0.0),
            Power(p) => Asymptote::new(p.signum(), 0.0, -LN_2 / p),
            Lehmer(p) => {
                let half = |x: f64| if x != 0.0 { -LN_2 } else { 0.0 };
                Asymptote::new((p + 1.0).abs() - p.abs(), 0.0, half(p + 1.0) - half(p))
            }
            Harmonic => Asymptote::new(-1.0, 0.0, LN_2),
            Geometric => Asymptote::new(0.0, 0.0, 0.0),
            Arithmetic => Asymptote::new(1.0, 0.0, -LN_2),
            Quadratic => Asymptote::new(1.0, 0.0, -0.5 * LN_2),
            Logarithmic => Asymptote::new(1.0, -1.0, -LN_2),
            Identric => Asymptote::new(1.0, 0.0, -1.0),
            FirstSeiffert => Asymptote::new(1.0, 0.0, -ln_pi),
            Yang => Asymptote::new(1.0, 0.0, 0.5 * LN_2 - ln_pi),
            Toader => Asymptote::new(1.0, 0.0, LN_2 - ln_pi),
            NeumanSandor => Asymptote::new(1.0, 0.0, -(2.0 * SQRT_2.ln_1p()).ln()),
            Sandor => Asymptote::new(1.0, 0.0, -LN_2 - 1.0),
            SecondSeiffert => Asymptote::new(1.0, 0.0, LN_2 - ln_pi),
            SandorYang => Asymptote::new(1.0, 0.0, -0.5 * LN_2 + 0.25 * PI - 1.0),
        }
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use MeanKind::*;
        match self {
            Power(p) => write!(f, "power:{p}"),
            Lehmer(p) => write!(f, "lehmer:{p}"),
            Harmonic => f.write_str("harmonic"),
            Geometric => f.write_str("geometric"),
            Arithmetic => f.write_str("arithmetic"),
            Quadratic => f.write_str("quadratic"),
            Logarithmic => f.write_str("log"),
            Identric => f.write_str("identric"),
            FirstSeiffert => f.write_str("first-seiffert"),
            Yang => f.write_str("yang"),
            Toader => f.write_str("toader"),
            NeumanSandor => f.write_str("neuman-sandor"),
            Sandor => f.write_str("sandor"),
            SecondSeiffert => f.write_str("second-seiffert"),
            SandorYang => f.write_str("sandor-yang"),
        }
    }
}

impl FromStr for MeanKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        use MeanKind::*;
        let unknown = || Error::UnknownMean(s.to_string());
        if let Some((name, param)) = s.split_once(':') {
            let p: f64 = param.trim().parse().map_err(|_| unknown())?;
            let kind = match name {
                "power" => Power(p),
                "lehmer" => Lehmer(p),
                _ => return Err(unknown()),
            };
            return kind.validate();
        }
        Ok(match s {
            "harmonic" => Harmonic,
            "geometric" => Geometric,
            "arithmetic" => Arithmetic,
            "quadratic" => Quadratic,
            "log" | "logarithmic" => Logarithmic,
            "identric" => Identric,
            "first-seiffert" => FirstSeiffert,
            "yang" => Yang,
            "toader" => Toader,
            "neuman-sandor" => NeumanSandor,
            "sandor" => Sandor,
            "second-seiffert" => SecondSeiffert,
            "sandor-yang" => SandorYang,
            _ => return Err(unknown()),
        })
    }
}

/// Evaluates `kind` on `pair` directly from the two arguments.
pub fn eval_mean(kind: MeanKind, pair: PositivePair) -> Result<f64> {
    use MeanKind::*;
    let kind = kind.validate()?;
    if pair.is_equal() {
        return Ok(pair.a());
    }
    let (lo, hi) = (pair.min(), pair.max());
    let t = half_log_ratio(pair).value();
    let gap = hi - lo;
    let sum = lo + hi;
    let g = pair.geometric();
    let second_seiffert = || gap / (2.0 * (gap / sum).atan());
    let value = match kind {
        Power(p) if p == f64::INFINITY => hi,
        Power(p) if p == f64::NEG_INFINITY => lo,
        Power(p) if p.abs() < SMALL_POWER => g * (0.5 * p * t * t).exp(),
        Power(p) if p > 0.0 => hi * (((-2.0 * p * t).exp_m1() * 0.5).ln_1p() / p).exp(),
        Power(p) => lo * (((2.0 * p * t).exp_m1() * 0.5).ln_1p() / p).exp(),
        Lehmer(p) => {
            let ln_rho = -2.0 * t;
            hi * (softplus((p + 1.0) * ln_rho) - softplus(p * ln_rho)).exp()
        }
        Harmonic => 2.0 * lo * (hi / sum),
        Geometric => g,
        Arithmetic => lo + 0.5 * gap,
        Quadratic => hi * (0.5 * (1.0 + (lo / hi).powi(2))).sqrt(),
        Logarithmic => gap / (2.0 * t),
        Identric => lo * (2.0 * t * (hi / gap) - 1.0).exp(),
        // asin(gap/sum) = atan(gap/(2g)), without the loss near gap/sum = 1
        FirstSeiffert => gap / (2.0 * (gap / (2.0 * g)).atan()),
        Yang => gap / (SQRT_2 * (gap / (SQRT_2 * g)).atan()),
        Toader => hi * elliptic_mean_unit(lo / hi),
        NeumanSandor => gap / (2.0 * (gap / sum).asinh()),
        Sandor => {
            let p = gap / (2.0 * (gap / (2.0 * g)).atan());
            (lo + 0.5 * gap) * (g / p - 1.0).exp()
        }
        SecondSeiffert => second_seiffert(),
        SandorYang => {
            let q = hi * (0.5 * (1.0 + (lo / hi).powi(2))).sqrt();
            q * ((lo + 0.5 * gap) / second_seiffert() - 1.0).exp()
        }
    };
    Ok(value.clamp(lo, hi))
}

/// `ln M(e^-t, e^t)`.
pub fn ln_mean_normalized(kind: MeanKind, t: HalfLogRatio) -> Result<f64> {
    use MeanKind::*;
    let kind = kind.validate()?;
    let t = t.value();
    if t == 0.0 {
        return Ok(0.0);
    }
    Ok(match kind {
        Power(p) if p == f64::INFINITY => t,
        Power(p) if p == f64::NEG_INFINITY => -t,
        Power(p) if p.abs() < SMALL_POWER => 0.5 * p * t * t,
        Power(p) => ln_cosh(p * t) / p,
        Lehmer(p) => ln_cosh((p + 1.0) * t) - ln_cosh(p * t),
        Harmonic => -ln_cosh(t),
        Geometric => 0.0,
        Arithmetic => ln_cosh(t),
        Quadratic => 0.5 * ln_cosh(2.0 * t),
        Logarithmic => {
            if t < 1.0 {
                sinhc_m1(t).ln_1p()
            } else {
                ln_sinh(t) - t.ln()
            }
        }
        Identric => xcoth_m1(t),
        FirstSeiffert => {
            if t < 1.0 {
                -atan_ratio_m1(t.sinh()).ln_1p()
            } else {
                ln_sinh(t) - t.sinh().atan().ln()
            }
        }
        Yang => {
            if t < 1.0 {
                -atan_ratio_m1(SQRT_2 * t.sinh()).ln_1p()
            } else {
                0.5 * LN_2 + ln_sinh(t) - (SQRT_2 * t.sinh()).atan().ln()
            }
        }
        Toader => t + elliptic_mean_unit((-2.0 * t).exp()).ln(),
        NeumanSandor => {
            if t < 1.0 {
                (t.sinh() / t.tanh().asinh()).ln()
            } else {
                ln_sinh(t) - t.tanh().asinh().ln()
            }
        }
        Sandor => ln_cosh(t) + atan_ratio_m1(t.sinh()),
        SecondSeiffert => {
            if t < 1.0 {
                (t.sinh() / t.tanh().atan()).ln()
            } else {
                ln_sinh(t) - t.tanh().atan().ln()
            }
        }
        SandorYang => 0.5 * ln_cosh(2.0 * t) + atan_ratio_m1(t.tanh()),
    })
}

/// Evaluates `kind` on `(e^-t, e^t)`, i.e. the mean divided by `sqrt(ab)`.
pub fn eval_mean_normalized(kind: MeanKind, t: HalfLogRatio) -> Result<f64> {
    ln_mean_normalized(kind, t).map(f64::exp)
}

/// `(2/pi) * integral_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2)`.
pub fn toader_mean(pair: PositivePair) -> f64 {
    if pair.is_equal() {
        return pair.a();
    }
    pair.max() * elliptic_mean_unit(pair.min() / pair.max())
}
