use std::fmt::Write as _;
use std::process::ExitCode;

use bimean_core::{
    best_exponent, big_f, constant_table, corollary31_table, eval_mean, f1, f2, find_witness,
    log_identity_check, verify_chain_corollary31, verify_corollary34, ConstantEntry,
    EndpointReport, Family, LogGrid, MeanKind, PositivePair, Side,
};
use clap::error::ErrorKind;
use clap::{CommandFactory, Parser, Subcommand, ValueEnum};

/// Evaluate bivariate means and verify sharp power-mean and Lehmer-mean bounds.
#[derive(Debug, Parser)]
#[command(name = "bimean", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print a mean of two positive numbers to 15 significant digits.
    Eval {
        /// Mean name, e.g. `sandor-yang`, `power:2`, `lehmer:0.5`.
        #[arg(long)]
        mean: MeanKind,
        #[arg(long, allow_negative_numbers = true)]
        a: f64,
        #[arg(long, allow_negative_numbers = true)]
        b: f64,
    },
    /// Recover the sharp order of a family bounding a mean and compare it with
    /// the known closed form.
    Endpoint {
        #[arg(long)]
        mean: MeanKind,
        /// `power` or `lehmer`.
        #[arg(long)]
        family: Family,
        /// `lower` or `upper`.
        #[arg(long)]
        side: Side,
    },
    /// Search the standard grid for a `t` where a claimed bound fails.
    Witness {
        #[arg(long)]
        mean: MeanKind,
        #[arg(long)]
        family: Family,
        #[arg(long, allow_negative_numbers = true)]
        param: f64,
        #[arg(long)]
        side: Side,
    },
    /// Emit a table of constants as CSV.
    Table {
        #[arg(long, value_enum)]
        which: TableKind,
    },
    /// Sample a kernel function on a log-spaced grid of `t` as CSV.
    Trace {
        #[arg(long, value_enum)]
        function: TraceFunction,
        #[arg(long, allow_negative_numbers = true)]
        p: f64,
        #[arg(long)]
        t_min: f64,
        #[arg(long)]
        t_max: f64,
        #[arg(long)]
        n: usize,
    },
    /// Run a verification and exit with 1 when it fails.
    Verify {
        #[arg(long, value_enum)]
        check: CheckKind,
        #[arg(long, allow_negative_numbers = true)]
        a: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        b: Option<f64>,
        #[arg(long, allow_negative_numbers = true)]
        p: Option<f64>,
    },
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TableKind {
    Constants,
    Corollary31,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum TraceFunction {
    #[value(name = "F")]
    BigF,
    F1,
    F2,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum CheckKind {
    Identity,
    Chain,
    Corollary34,
}

const IDENTITY_TOLERANCE: f64 = 1e-11;

fn usage_error(message: impl std::fmt::Display) -> ! {
    Cli::command()
        .error(ErrorKind::ValueValidation, message)
        .exit()
}

fn pair_or_exit(a: f64, b: f64) -> PositivePair {
    PositivePair::new(a, b).unwrap_or_else(|e| usage_error(e))
}

/// Decimal rendering with at most 15 significant digits and no trailing zeros.
fn format_value(v: f64) -> String {
    if !v.is_finite() {
        return v.to_string();
    }
    if v == 0.0 {
        return "0".to_string();
    }
    let sci = format!("{v:.14e}");
    let (mantissa, exponent) = sci.split_once('e').expect("exponent marker");
    let exponent: i32 = exponent.parse().expect("integer exponent");
    if (-5..15).contains(&exponent) {
        let decimals = (14 - exponent).max(0) as usize;
        trim_zeros(format!("{v:.decimals$}"))
    } else {
        format!("{}e{exponent}", trim_zeros(mantissa.to_string()))
    }
}

fn trim_zeros(s: String) -> String {
    if s.contains('.') {
        s.trim_end_matches('0').trim_end_matches('.').to_string()
    } else {
        s
    }
}

fn optional(v: Option<f64>) -> String {
    v.map(format_value).unwrap_or_else(|| "none".to_string())
}

fn constants_csv(entries: &[ConstantEntry]) -> String {
    let mut out = String::from("label,expression,value\n");
    for e in entries {
        let _ = writeln!(
            out,
            "{},{},{}",
            e.label,
            e.expression,
            format_value(e.value)
        );
    }
    out
}

fn endpoint_csv(r: &EndpointReport) -> String {
    let mut out = String::from(
        "mean,family,side,expression,closed_form,numeric,difference,witness_param,witness_t\n",
    );
    let _ = writeln!(
        out,
        "{},{},{},{},{},{},{},{},{}",
        r.mean,
        r.family,
        r.side,
        r.closed_form.map_or("none", |c| c.expression),
        optional(r.closed_form.map(|c| c.value)),
        format_value(r.numeric),
        optional(r.difference()),
        format_value(r.witness_param),
        optional(r.witness_t),
    );
    out
}

fn run(command: Command) -> ExitCode {
    match command {
        Command::Eval { mean, a, b } => {
            let pair = pair_or_exit(a, b);
            match eval_mean(mean, pair) {
                Ok(v) => {
                    println!("{}", format_value(v));
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Endpoint { mean, family, side } => match best_exponent(mean, family, side) {
            Ok(report) => {
                print!("{}", endpoint_csv(&report));
                match report.within_tolerance() {
                    Some(false) => {
                        eprintln!(
                            "numeric endpoint differs from the closed form by more than {}",
                            report.tolerance_used
                        );
                        ExitCode::from(1)
                    }
                    _ => ExitCode::SUCCESS,
                }
            }
            Err(e) => {
                eprintln!("error: {e}");
                ExitCode::from(1)
            }
        },
        Command::Witness {
            mean,
            family,
            param,
            side,
        } => {
            if let Err(e) = family.kind(param).validate() {
                usage_error(e);
            }
            match find_witness(mean, family, param, side) {
                Ok(w) => {
                    println!("mean,family,side,param,witness_t");
                    println!(
                        "{mean},{family},{side},{},{}",
                        format_value(param),
                        optional(w)
                    );
                    ExitCode::SUCCESS
                }
                Err(e) => usage_error(e),
            }
        }
        Command::Table { which } => {
            let entries = match which {
                TableKind::Constants => constant_table(),
                TableKind::Corollary31 => corollary31_table(),
            };
            match entries {
                Ok(entries) => {
                    print!("{}", constants_csv(&entries));
                    ExitCode::SUCCESS
                }
                Err(e) => {
                    eprintln!("error: {e}");
                    ExitCode::from(1)
                }
            }
        }
        Command::Trace {
            function,
            p,
            t_min,
            t_max,
            n,
        } => {
            if !p.is_finite() {
                usage_error(format!("order p must be finite, got {p}"));
            }
            let grid = LogGrid::new(t_min, t_max, n).unwrap_or_else(|_| {
                usage_error(format!(
                    "need 0 < t-min < t-max finite and n >= 2, got t-min {t_min} t-max {t_max} n {n}"
                ))
            });
            let eval: fn(f64, f64) -> f64 = match function {
                TraceFunction::BigF => big_f,
                TraceFunction::F1 => f1,
                TraceFunction::F2 => f2,
            };
            let mut out = String::from("t,value\n");
            for &t in grid.points() {
                let _ = writeln!(out, "{},{}", format_value(t), format_value(eval(t, p)));
            }
            print!("{out}");
            ExitCode::SUCCESS
        }
        Command::Verify { check, a, b, p } => verify(check, a, b, p),
    }
}

fn verify(check: CheckKind, a: Option<f64>, b: Option<f64>, p: Option<f64>) -> ExitCode {
    let passed = match check {
        CheckKind::Identity => {
            let (Some(a), Some(b), Some(p)) = (a, b, p) else {
                usage_error("identity needs --a, --b and --p");
            };
            let pair = pair_or_exit(a, b);
            let residual = log_identity_check(pair, p).unwrap_or_else(|e| usage_error(e));
            let passed = residual <= IDENTITY_TOLERANCE;
            println!("check,residual,tolerance,passed");
            println!(
                "identity,{},{},{passed}",
                format_value(residual),
                format_value(IDENTITY_TOLERANCE)
            );
            passed
        }
        CheckKind::Chain => {
            let (Some(a), Some(b), None) = (a, b, p) else {
                usage_error("chain needs --a and --b and takes no --p");
            };
            let passed =
                verify_chain_corollary31(pair_or_exit(a, b)).unwrap_or_else(|e| usage_error(e));
            println!("check,passed");
            println!("chain,{passed}");
            passed
        }
        CheckKind::Corollary34 => {
            if a.is_some() || b.is_some() || p.is_some() {
                usage_error("corollary34 takes no --a, --b or --p");
            }
            let c = verify_corollary34();
            println!("label,value");
            for (label, value) in [
                ("ratio_lehmer_third_at_40", c.ratio_lehmer_third_at_40),
                ("ratio_lehmer_zero_at_40", c.ratio_lehmer_zero_at_40),
                ("min_ratio_lehmer_third", c.min_ratio_lehmer_third),
                ("max_ratio_lehmer_zero", c.max_ratio_lehmer_zero),
            ] {
                println!("{label},{}", format_value(value));
            }
            println!("lehmer_bounds_hold,{}", c.lehmer_bounds_hold);
            println!("power_bounds_hold,{}", c.power_bounds_hold);
            println!("log_convexity_bound_holds,{}", c.log_convexity_bound_holds);
            c.passed()
        }
    };
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn main() -> ExitCode {
    run(Cli::parse().command)
}
