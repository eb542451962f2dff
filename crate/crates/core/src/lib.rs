//! Bivariate means and sharp power-mean bounds for the Sandor-Yang mean
//! `B(a,b) = Q(a,b) exp(A(a,b)/T(a,b) - 1)`.
//!
//! The crate evaluates fifteen classical means ([`means`]), the hyperbolic
//! kernels that govern `ln B - ln M_p` ([`kernels`]), single-sign-change power
//! series ([`series`]), and recovers sharp inequality endpoints and constants
//! by independent numerical search ([`bounds`]).
//!
//! All evaluation is in binary64 and every function is pure.

pub mod bounds;
pub mod error;
pub mod kernels;
pub mod means;
pub mod quadrature;
pub mod roots;
pub mod series;
mod special;

pub use bounds::{
    best_exponent, claim_holds, closed_form_p0, constant_table, corollary31_table, find_t0,
    find_witness, known_endpoint, literature_endpoints, p0_from_limit, sharp_lambda, upper_factor,
    verify_chain_corollary31, verify_corollary34, ClosedForm, ConstantEntry, Corollary34Check,
    EndpointReport, Family, LogGrid, Side,
};
pub use error::{Error, Result};
pub use kernels::{
    big_f, df_dt, f1, f2, f2_series, log_identity_check, u_n, u_n_exact, KernelPoint,
    SharpConstants,
};
pub use means::{
    eval_mean, eval_mean_normalized, half_log_ratio, ln_mean_normalized, toader_mean, HalfLogRatio,
    MeanKind, PositivePair,
};
pub use series::{detect_sign_change, series_positive_root, CoefficientSeq};
