//! High-precision reference values built from the defining formulas of each
//! mean with 320-bit arithmetic.

#![allow(dead_code)]

use astro_float::{BigFloat, Consts, RoundingMode};
use bimean_core::MeanKind;

const PREC: usize = 320;
const RM: RoundingMode = RoundingMode::ToEven;

pub struct Oracle {
    cc: Consts,
}

impl Default for Oracle {
    fn default() -> Self {
        Self::new()
    }
}

impl Oracle {
    pub fn new() -> Self {
        Self {
            cc: Consts::new().expect("constants cache"),
        }
    }

    pub fn num(&self, x: f64) -> BigFloat {
        BigFloat::from_f64(x, PREC)
    }

    pub fn int(&self, n: i64) -> BigFloat {
        BigFloat::from_i64(n, PREC)
    }

    pub fn ratio(&self, n: i64, d: i64) -> BigFloat {
        self.int(n).div(&self.int(d), PREC, RM)
    }

    pub fn pi(&mut self) -> BigFloat {
        self.cc.pi(PREC, RM)
    }

    pub fn ln2(&mut self) -> BigFloat {
        self.cc.ln_2(PREC, RM)
    }

    pub fn add(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.add(y, PREC, RM)
    }

    pub fn sub(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.sub(y, PREC, RM)
    }

    pub fn mul(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.mul(y, PREC, RM)
    }

    pub fn div(&self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        x.div(y, PREC, RM)
    }

    pub fn sqrt(&self, x: &BigFloat) -> BigFloat {
        x.sqrt(PREC, RM)
    }

    pub fn ln(&mut self, x: &BigFloat) -> BigFloat {
        x.ln(PREC, RM, &mut self.cc)
    }

    pub fn exp(&mut self, x: &BigFloat) -> BigFloat {
        x.exp(PREC, RM, &mut self.cc)
    }

    pub fn sinh(&mut self, x: &BigFloat) -> BigFloat {
        x.sinh(PREC, RM, &mut self.cc)
    }

    pub fn cosh(&mut self, x: &BigFloat) -> BigFloat {
        x.cosh(PREC, RM, &mut self.cc)
    }

    pub fn tanh(&mut self, x: &BigFloat) -> BigFloat {
        x.tanh(PREC, RM, &mut self.cc)
    }

    pub fn atan(&mut self, x: &BigFloat) -> BigFloat {
        x.atan(PREC, RM, &mut self.cc)
    }

    pub fn asin(&mut self, x: &BigFloat) -> BigFloat {
        x.asin(PREC, RM, &mut self.cc)
    }

    pub fn asinh(&mut self, x: &BigFloat) -> BigFloat {
        x.asinh(PREC, RM, &mut self.cc)
    }

    /// `x^y = exp(y ln x)` for `x > 0`.
    pub fn pow(&mut self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        let l = self.ln(x);
        let e = self.mul(y, &l);
        self.exp(&e)
    }

    /// Mean of `(a, b)` from its textbook definition.
    pub fn mean(&mut self, kind: MeanKind, a: f64, b: f64) -> BigFloat {
        use MeanKind::*;
        let (x, y) = (self.num(a), self.num(b));
        let two = self.int(2);
        let sum = self.add(&x, &y);
        let diff = self.sub(&x, &y);
        let prod = self.mul(&x, &y);
        let arith = self.div(&sum, &two);
        let geo = self.sqrt(&prod);
        if a == b {
            return x;
        }
        match kind {
            Power(p) if p == f64::INFINITY => self.num(a.max(b)),
            Power(p) if p == f64::NEG_INFINITY => self.num(a.min(b)),
            Power(0.0) => geo,
            Power(p) => {
                let pp = self.num(p);
                let xp = self.pow(&x, &pp);
                let yp = self.pow(&y, &pp);
                let s = self.add(&xp, &yp);
                let m = self.div(&s, &two);
                let inv = self.div(&self.int(1), &pp);
                self.pow(&m, &inv)
            }
            Lehmer(p) => {
                let pp = self.num(p);
                let p1 = self.add(&pp, &self.int(1));
                let n1 = self.pow(&x, &p1);
                let n2 = self.pow(&y, &p1);
                let d1 = self.pow(&x, &pp);
                let d2 = self.pow(&y, &pp);
                self.div(&self.add(&n1, &n2), &self.add(&d1, &d2))
            }
            Harmonic => self.div(&self.mul(&two, &prod), &sum),
            Geometric => geo,
            Arithmetic => arith,
            Quadratic => {
                let sq = self.add(&self.mul(&x, &x), &self.mul(&y, &y));
                self.sqrt(&self.div(&sq, &two))
            }
            Logarithmic => {
                let lx = self.ln(&x);
                let ly = self.ln(&y);
                self.div(&diff, &self.sub(&lx, &ly))
            }
            Identric => {
                let lx = self.ln(&x);
                let ly = self.ln(&y);
                let num = self.sub(&self.mul(&x, &lx), &self.mul(&y, &ly));
                let e = self.sub(&self.div(&num, &diff), &self.int(1));
                self.exp(&e)
            }
            FirstSeiffert => {
                let s = self.asin(&self.div(&diff, &sum));
                self.div(&diff, &self.mul(&two, &s))
            }
            SecondSeiffert => self.seiffert_t(&x, &y),
            Yang => {
                let root2 = self.sqrt(&two);
                let den = self.sqrt(&self.mul(&two, &prod));
                let s = self.atan(&self.div(&diff, &den));
                self.div(&diff, &self.mul(&root2, &s))
            }
            NeumanSandor => {
                let s = self.asinh(&self.div(&diff, &sum));
                self.div(&diff, &self.mul(&two, &s))
            }
            Sandor => {
                let p = self.mean(FirstSeiffert, a, b);
                let e = self.sub(&self.div(&geo, &p), &self.int(1));
                let f = self.exp(&e);
                self.mul(&arith, &f)
            }
            SandorYang => {
                let q = self.mean(Quadratic, a, b);
                let t = self.seiffert_t(&x, &y);
                let e = self.sub(&self.div(&arith, &t), &self.int(1));
                let f = self.exp(&e);
                self.mul(&q, &f)
            }
            Toader => self.toader(&x, &y),
        }
    }

    fn seiffert_t(&mut self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        let diff = self.sub(x, y);
        let sum = self.add(x, y);
        let s = self.atan(&self.div(&diff, &sum));
        self.div(&diff, &self.mul(&self.int(2), &s))
    }

    /// `(2/pi) int_0^{pi/2} sqrt(a^2 cos^2 + b^2 sin^2)` through the AGM:
    /// `(a^2 - sum_{n>=0} 2^(n-1) c_n^2) / AGM(a, b)`, `c_0^2 = a^2 - b^2`.
    fn toader(&mut self, x: &BigFloat, y: &BigFloat) -> BigFloat {
        let half = self.ratio(1, 2);
        let mut a = x.clone();
        let mut b = y.clone();
        let mut c2 = self.sub(&self.mul(&a, &a), &self.mul(&b, &b));
        let mut weight = half.clone();
        let mut acc = self.mul(&weight, &c2);
        let tiny = self.num(1e-90);
        for _ in 0..60 {
            let an = self.mul(&self.add(&a, &b), &half);
            let bn = self.sqrt(&self.mul(&a, &b));
            let c = self.mul(&self.sub(&a, &b), &half);
            c2 = self.mul(&c, &c);
            weight = self.add(&weight, &weight);
            acc = self.add(&acc, &self.mul(&weight, &c2));
            a = an;
            b = bn;
            let gap = self.sub(&a, &b).abs();
            if gap.cmp(&self.mul(&tiny, &a)).is_some_and(|o| o < 0) {
                break;
            }
        }
        self.div(&self.sub(&self.mul(x, x), &acc), &a)
    }

    /// `F(t, p)` from its defining expression.
    pub fn big_f(&mut self, t: f64, p: f64) -> BigFloat {
        let tt = self.num(t);
        let pp = self.num(p);
        let c2 = self.cosh(&self.mul(&self.int(2), &tt));
        let lc2 = self.ln(&c2);
        let th = self.tanh(&tt);
        let at = self.atan(&th);
        let cp = self.cosh(&self.mul(&pp, &tt));
        let lcp = self.ln(&cp);
        let mut v = self.mul(&self.ratio(1, 2), &lc2);
        v = self.add(&v, &self.div(&at, &th));
        v = self.sub(&v, &self.div(&lcp, &pp));
        self.sub(&v, &self.int(1))
    }

    /// `f1(t, p) = -atan(tanh t) + sinh t cosh t - tanh(pt) sinh^2 t`.
    pub fn f1(&mut self, t: f64, p: f64) -> BigFloat {
        let tt = self.num(t);
        let pp = self.num(p);
        let s = self.sinh(&tt);
        let c = self.cosh(&tt);
        let th = self.tanh(&tt);
        let at = self.atan(&th);
        let tp = self.tanh(&self.mul(&pp, &tt));
        let v = self.sub(&self.mul(&s, &c), &self.mul(&tp, &self.mul(&s, &s)));
        self.sub(&v, &at)
    }

    /// `f2(t, p)` from its defining combination of hyperbolic cosines.
    pub fn f2(&mut self, t: f64, p: f64) -> BigFloat {
        let tt = self.num(t);
        let pp = self.num(p);
        let one = self.int(1);
        let two = self.int(2);
        let a = self.cosh(&self.mul(&self.sub(&pp, &two), &tt));
        let b = self.cosh(&self.mul(&pp, &tt));
        let c = self.cosh(&self.mul(&two, &tt));
        let d = self.cosh(&tt);
        let mut v = self.sub(&a, &b);
        v = self.add(&v, &self.mul(&self.sub(&one, &pp), &c));
        v = self.add(&v, &self.mul(&self.mul(&two, &pp), &d));
        v = self.sub(&v, &pp);
        self.sub(&v, &one)
    }
}

pub fn to_f64(x: &BigFloat) -> f64 {
    format!("{x}").parse().expect("decimal rendering")
}

pub fn rel_err(value: f64, reference: f64) -> f64 {
    if reference == 0.0 {
        value.abs()
    } else {
        ((value - reference) / reference).abs()
    }
}
