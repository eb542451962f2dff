//! Gauss-Legendre rules and the complete elliptic mean integral built on them.

use std::f64::consts::{FRAC_PI_2, FRAC_PI_4, PI};
use std::sync::OnceLock;

/// Number of nodes of the production rule.
pub const TOADER_NODES: usize = 64;

/// Nodes and weights of an `n`-point Gauss-Legendre rule on `[-1, 1]`.
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Builds the rule by Newton iteration on `P_n` from Chebyshev-like guesses.
    pub fn new(n: usize) -> Self {
        assert!(n >= 1, "a quadrature rule needs at least one node");
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let nf = n as f64;
        for i in 0..n.div_ceil(2) {
            let mut x = (PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_derivative(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let (_, d) = legendre_with_derivative(n, x);
            dp = if d != 0.0 { d } else { dp };
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        Self { nodes, weights }
    }

    /// Integrates `f` over `[lo, hi]`.
    pub fn integrate<F: Fn(f64) -> f64>(&self, lo: f64, hi: f64, f: F) -> f64 {
        let half = 0.5 * (hi - lo);
        let mid = 0.5 * (hi + lo);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(|(x, w)| w * f(mid + half * x))
            .sum::<f64>()
            * half
    }
}

fn legendre_with_derivative(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// cos^2 and sin^2 at the nodes of the production rule mapped to `[0, pi/2]`,
/// with the weights already scaled to that interval.
struct AngularRule {
    cos2: Vec<f64>,
    sin2: Vec<f64>,
    weights: Vec<f64>,
}

fn angular_rule() -> &'static AngularRule {
    static RULE: OnceLock<AngularRule> = OnceLock::new();
    RULE.get_or_init(|| {
        let gl = GaussLegendre::new(TOADER_NODES);
        let theta: Vec<f64> = gl.nodes.iter().map(|x| FRAC_PI_4 * (x + 1.0)).collect();
        AngularRule {
            cos2: theta.iter().map(|t| t.cos().powi(2)).collect(),
            sin2: theta.iter().map(|t| t.sin().powi(2)).collect(),
            weights: gl.weights.iter().map(|w| w * FRAC_PI_4).collect(),
        }
    })
}

fn quad_sqrt(rule: &AngularRule, a: f64, b: f64) -> f64 {
    let (a2, b2) = (a * a, b * b);
    rule.cos2
        .iter()
        .zip(&rule.sin2)
        .zip(&rule.weights)
        .map(|((c, s), w)| w * (a2 * c + b2 * s).sqrt())
        .sum()
}

fn quad_inv_sqrt(rule: &AngularRule, a: f64, b: f64) -> f64 {
    let (a2, b2) = (a * a, b * b);
    rule.cos2
        .iter()
        .zip(&rule.sin2)
        .zip(&rule.weights)
        .map(|((c, s), w)| w / (a2 * c + b2 * s).sqrt())
        .sum()
}

/// `(2/pi) * integral_0^{pi/2} sqrt(r^2 cos^2 + sin^2)` for `r` in `[0, 1]`.
///
/// For moderately small `r` the integrand has a boundary layer of width `r`
/// near zero that a fixed rule cannot resolve. In that range a few Gauss
/// (arithmetic-geometric mean) steps
/// `J(a, b) = 2 J(a1, b1) - a b I(a1, b1)`, `I(a, b) = I(a1, b1)`
/// are taken first until `b/a >= 1/2`, after which both integrals are smooth.
pub fn elliptic_mean_unit(r: f64) -> f64 {
    debug_assert!((0.0..=1.0).contains(&r));
    let rule = angular_rule();
    let (mut a, mut b) = (1.0_f64, r);
    let integral = if !(1e-9..0.5).contains(&r) {
        // below 1e-9 the boundary layer contributes O(r^2 ln r), under one ulp
        quad_sqrt(rule, a, b)
    } else {
        let mut weight = 1.0;
        let mut correction = 0.0;
        while b < 0.5 * a {
            correction += weight * a * b;
            let a1 = 0.5 * (a + b);
            b = (a * b).sqrt();
            a = a1;
            weight *= 2.0;
        }
        weight * quad_sqrt(rule, a, b) - correction * quad_inv_sqrt(rule, a, b)
    };
    integral / FRAC_PI_2
}
