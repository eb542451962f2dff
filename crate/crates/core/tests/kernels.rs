mod common;

use bimean_core::kernels::{f2_tail_bound, limit_at_infinity, small_t_coefficient};
use bimean_core::{
    big_f, df_dt, eval_mean_normalized, f1, f2, f2_series, log_identity_check, u_n, u_n_exact,
    HalfLogRatio, LogGrid, MeanKind, PositivePair,
};
use common::{to_f64, Oracle};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;
use proptest::prelude::*;
use std::f64::consts::FRAC_PI_4;

fn log_points(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    LogGrid::new(lo, hi, n).unwrap().points().to_vec()
}

fn orders() -> Vec<f64> {
    vec![
        -2.0,
        -0.5,
        0.5,
        1.0,
        1.1,
        1.2,
        1.25,
        4.0 / 3.0,
        1.5,
        2.0,
        3.0,
        5.0,
    ]
}

#[test]
fn f1_matches_oracle() {
    let mut o = Oracle::new();
    for p in orders().into_iter().chain([0.0]) {
        for t in log_points(1e-6, 40.0, 60) {
            let reference = to_f64(&o.f1(t, p));
            let value = f1(t, p);
            // the two terms of f1 are each of size about min(t, 1)
            let tol = 1e-13 * reference.abs() + 4e-16 * t.min(1.0);
            assert!(
                (value - reference).abs() <= tol,
                "p={p} t={t}: {value} vs {reference}"
            );
        }
    }
}

#[test]
fn f1_limits() {
    for p in [1.1, 1.5, 2.0, 5.0] {
        assert!((f1(400.0, p) - (0.5 - FRAC_PI_4)).abs() < 1e-14);
    }
    for p in orders() {
        assert_eq!(f1(0.0, p), 0.0);
        let t = 1e-4;
        let r = f1(t, p) / t.powi(3);
        assert!((r + (p - 4.0 / 3.0)).abs() < 1e-6, "p={p}: {r}");
    }
}

#[test]
fn f2_matches_oracle() {
    let mut o = Oracle::new();
    for p in orders().into_iter().chain([0.0]) {
        for t in log_points(1e-6, 5.0, 60) {
            let reference = to_f64(&o.f2(t, p));
            let value = f2(t, p);
            let scale = f2_series(t, p, 1e-17).magnitude;
            assert!(
                (value - reference).abs() <= 1e-13 * reference.abs() + 1e-15 * scale,
                "p={p} t={t}: {value} vs {reference}"
            );
        }
    }
}

#[test]
fn f2_special_values() {
    for p in orders() {
        assert_eq!(f2(0.0, p), 0.0);
    }
    for t in log_points(1e-6, 10.0, 50) {
        let expected = 4.0 * (0.5 * t).sinh().powi(2);
        assert!((f2(t, 1.0) - expected).abs() <= 1e-13 * expected);
    }
}

#[test]
fn f2_product_form() {
    for p in orders() {
        for t in log_points(1e-2, 4.0, 40) {
            let terms = [
                4.0 * t.sinh().powi(2) * (0.5 * p * t).cosh().powi(2),
                -4.0 * p * t.cosh() * (0.5 * t).sinh().powi(2),
                -(2.0 * t).sinh() * (p * t).sinh(),
            ];
            let product: f64 = terms.iter().sum();
            let scale: f64 = terms.iter().map(|x| x.abs()).sum();
            assert!((f2(t, p) - product).abs() <= 1e-11 * scale, "p={p} t={t}");
        }
    }
}

#[test]
fn f2_order_derivative_matches_finite_difference() {
    for p in orders() {
        for t in log_points(1e-2, 5.0, 30) {
            let h = 1e-5 * p.abs().max(1.0);
            let fd = (f2(t, p + h) - f2(t, p - h)) / (2.0 * h);
            let exact =
                -2.0 * (t.cosh() - 1.0) * t.cosh() - 2.0 * t * t.sinh() * ((p - 1.0) * t).cosh();
            assert!(
                (fd - exact).abs() <= 1e-6 * exact.abs() + 1e-9,
                "p={p} t={t}"
            );
            assert!(exact < 0.0);
        }
    }
}

#[test]
fn series_reproduces_closed_form() {
    let mut o = Oracle::new();
    for p in orders() {
        for t in log_points(1e-4, 5.0, 80) {
            let s = f2_series(t, p, 1e-16);
            let closed = to_f64(&o.f2(t, p));
            assert!(
                (s.value - closed).abs() <= 1e-10 * s.magnitude,
                "p={p} t={t}"
            );
            // without a root the comparison is relative to the value itself
            if p <= 1.0 || p >= 4.0 / 3.0 {
                assert!(
                    (s.value - closed).abs() <= 1e-10 * closed.abs(),
                    "p={p} t={t}"
                );
            }
        }
    }
}

#[test]
fn tail_bound_dominates_the_omitted_terms() {
    for p in [0.5, 1.2, 3.0] {
        for t in [0.1, 1.0, 3.0] {
            for n in [3u32, 8, 15] {
                let mut tail = 0.0;
                let mut w: f64 = (1..=2 * n).map(|k| t / k as f64).product();
                for k in n + 1..n + 60 {
                    let kf = k as f64;
                    w *= t * t / ((2.0 * kf - 1.0) * (2.0 * kf));
                    tail += u_n(k, p).abs() * w;
                }
                assert!(tail <= f2_tail_bound(n, t, p), "p={p} t={t} n={n}");
            }
        }
    }
}

#[test]
fn u_n_closed_forms() {
    for p in [-3.0, -0.5, 0.0, 0.7, 1.2, 2.5] {
        assert!((u_n(1, p) - 2.0 * (4.0 - 3.0 * p)).abs() <= 1e-12);
    }
    let four_thirds = BigRational::new(BigInt::from(4), BigInt::from(3));
    assert!(u_n_exact(1, &four_thirds).is_zero());
    for n in 2..=30u32 {
        let e = 2 * n;
        let closed = -(BigRational::from_integer(BigInt::from(4).pow(e) - BigInt::from(2).pow(e))
            / BigRational::from_integer(BigInt::from(3).pow(e)))
            - BigRational::new(BigInt::from(2).pow(e) - BigInt::from(8), BigInt::from(3));
        let exact = u_n_exact(n, &four_thirds);
        assert_eq!(exact, closed, "n={n}");
        assert!(exact < BigRational::zero());
        assert!(u_n(n, 4.0 / 3.0) < 0.0);
    }
}

#[test]
fn u_n_decreases_inside_the_critical_interval() {
    for p in [1.01, 1.1, 1.2, 1.3, 1.33] {
        for n in 1..=30u32 {
            let diff = u_n(n + 1, p) - u_n(n, p);
            let nf = 2 * n as i32;
            let closed = -(p - 1.0)
                * ((3.0 - p) * (2.0 - p).powi(nf) + 3.0 * 2f64.powi(nf) + (p + 1.0) * p.powi(nf));
            assert!(diff < 0.0, "p={p} n={n}");
            assert!((diff - closed).abs() <= 1e-12 * closed.abs(), "p={p} n={n}");
        }
    }
}

#[test]
fn u_n_normalized_limit() {
    for p in [1.1, 1.2, 1.3] {
        let r = u_n(60, p) / 2f64.powi(120);
        assert!((r - (1.0 - p)).abs() <= 1e-6);
    }
}

#[test]
fn f1_sign_structure() {
    let grid = LogGrid::standard().points();
    assert!(grid.iter().all(|&t| f1(t, 1.0) > 0.0));
    assert!(grid.iter().all(|&t| f1(t, 4.0 / 3.0) < 0.0));
    for p in [1.1, 1.2, 1.3] {
        let signs: Vec<bool> = grid.iter().map(|&t| f1(t, p) > 0.0).collect();
        assert!(signs[0] && !signs[signs.len() - 1], "p={p}");
        let changes = signs.windows(2).filter(|w| w[0] != w[1]).count();
        assert_eq!(changes, 1, "p={p}");
    }
}

#[test]
fn big_f_monotone_at_the_critical_orders() {
    let grid = LogGrid::standard().points();
    assert!(grid
        .iter()
        .filter(|&&t| t < 300.0)
        .all(|&t| df_dt(t, 1.0) > 0.0));
    assert!(grid.iter().all(|&t| df_dt(t, 4.0 / 3.0) < 0.0));
    for t in log_points(1e-6, 50.0, 200) {
        assert_eq!(df_dt(t, 1.2).signum(), f1(t, 1.2).signum());
    }
}

#[test]
fn big_f_matches_oracle() {
    let mut o = Oracle::new();
    for p in orders() {
        for t in log_points(1e-6, 40.0, 60) {
            let reference = to_f64(&o.big_f(t, p));
            let value = big_f(t, p);
            // the terms of F grow like t
            let tol = 1e-13 * reference.abs() + 1e-15 * t;
            assert!(
                (value - reference).abs() <= tol,
                "p={p} t={t}: {value} vs {reference}"
            );
        }
    }
}

#[test]
fn big_f_limits() {
    for p in orders() {
        assert_eq!(big_f(0.0, p), 0.0);
        let t = 1e-5;
        assert!((big_f(t, p) / (t * t) - small_t_coefficient(p)).abs() <= 1e-6);
        assert!((small_t_coefficient(p) + 0.5 * (p - 4.0 / 3.0)).abs() <= 1e-15);
        if p > 0.0 {
            assert!((big_f(200.0, p) - limit_at_infinity(p)).abs() <= 1e-14);
        }
    }
}

#[test]
fn big_f_at_zero_order_is_its_limit() {
    for t in [0.01, 0.5, 3.0, 25.0] {
        let at_zero = big_f(t, 0.0);
        let near = 0.5 * (big_f(t, 1e-6) + big_f(t, -1e-6));
        assert!((at_zero - near).abs() <= 1e-9 * t.max(1.0), "t={t}");
    }
}

#[test]
fn derivative_identity_on_grid() {
    let ts = log_points(1e-3, 30.0, 100);
    let ps: Vec<f64> = (0..20).map(|k| -1.9 + 0.35 * k as f64).collect();
    for &p in &ps {
        for &t in &ts {
            let h = 1e-5 * t.max(1.0);
            let h = h.min(0.5 * t);
            let fd = (big_f(t + h, p) - big_f(t - h, p)) / (2.0 * h);
            let exact = df_dt(t, p);
            assert!(
                (fd - exact).abs() <= 1e-6 * exact.abs() + 1e-9,
                "p={p} t={t}: {fd} vs {exact}"
            );
            assert!((exact - f1(t, p) / t.sinh().powi(2)).abs() <= 1e-14 * exact.abs() + 1e-300);
        }
    }
}

#[test]
fn log_identity_examples() {
    let p13 = PositivePair::new(1.0, 3.0).unwrap();
    assert!(log_identity_check(p13, 1.0).unwrap() <= 1e-11);
    let p4 = PositivePair::new(1.0, 4f64.exp()).unwrap();
    assert!(log_identity_check(p4, 4.0 / 3.0).unwrap() <= 1e-11);
    assert!(log_identity_check(PositivePair::new(2.0, 2.0).unwrap(), 1.0).is_err());
}

#[test]
fn f1_lehmer_identity() {
    for p in [0.5, 1.1, 1.2, 4.0 / 3.0, 2.0] {
        for t in log_points(1e-3, 10.0, 50) {
            let ht = HalfLogRatio::new(t).unwrap();
            let tm = eval_mean_normalized(MeanKind::SecondSeiffert, ht).unwrap();
            let l = eval_mean_normalized(MeanKind::Lehmer(p - 1.0), ht).unwrap();
            let at = t.tanh().atan();
            let rhs = at / l * (tm - l);
            assert!((f1(t, p) - rhs).abs() <= 1e-11 * tm.max(1.0), "p={p} t={t}");
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 1000, ..ProptestConfig::default() })]

    #[test]
    fn log_identity_on_random_pairs(a in -6.0f64..6.0, e in -8.0f64..8.0, p in -4.0f64..6.0) {
        prop_assume!(e.abs() > 1e-12 && p.abs() > 1e-3);
        let a = 10f64.powf(a);
        let pair = PositivePair::new(a, a * 10f64.powf(e)).unwrap();
        prop_assert!(log_identity_check(pair, p).unwrap() <= 1e-11);
    }

    #[test]
    fn f2_is_decreasing_in_order(t in 0.01f64..5.0, p in -3.0f64..4.0, dp in 1e-3f64..1.0) {
        prop_assert!(f2(t, p + dp) < f2(t, p));
    }
}
