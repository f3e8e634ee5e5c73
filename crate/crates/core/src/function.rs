//! Real functions `f` on an interval, and the builtin example functions.

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::weights::ScalarFn;

#[derive(Clone)]
pub struct PointFunction {
    name: String,
    eval: ScalarFn,
    /// Exact `ln f(x)` where a closed form avoids overflow.
    ln_eval: Option<ScalarFn>,
    domain: Interval,
    positive_on_domain: bool,
    note: Option<String>,
}

impl fmt::Debug for PointFunction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PointFunction")
            .field("name", &self.name)
            .field("domain", &self.domain)
            .field("positive_on_domain", &self.positive_on_domain)
            .field("note", &self.note)
            .finish()
    }
}

impl PointFunction {
    pub fn new(
        name: impl Into<String>,
        domain: Interval,
        positive_on_domain: bool,
        eval: impl Fn(f64) -> f64 + Send + Sync + 'static,
    ) -> Self {
        PointFunction {
            name: name.into(),
            eval: Arc::new(eval),
            ln_eval: None,
            domain,
            positive_on_domain,
            note: None,
        }
    }

    pub fn with_ln(mut self, ln_eval: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        self.ln_eval = Some(Arc::new(ln_eval));
        self
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    /// Same evaluator on a different interval; the positivity claim is kept.
    pub fn with_domain(mut self, domain: Interval) -> Self {
        self.domain = domain;
        self
    }

    pub fn with_positivity(mut self, positive: bool) -> Self {
        self.positive_on_domain = positive;
        self
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn positive_on_domain(&self) -> bool {
        self.positive_on_domain
    }

    pub fn note(&self) -> Option<&str> {
        self.note.as_deref()
    }

    /// `f(x)`, with a domain check on `x` and a finiteness check on the value.
    pub fn value(&self, x: f64) -> Result<f64> {
        if !self.domain.contains(x) {
            return Err(Error::domain(
                format!("{} argument outside {}", self.name, self.domain),
                x,
            ));
        }
        let v = (self.eval)(x);
        if !v.is_finite() {
            return Err(Error::Evaluation(format!("{}({x}) = {v}", self.name)));
        }
        Ok(v)
    }

    /// `ln f(x)`; errors when `f(x) <= 0`.
    pub fn log_value(&self, x: f64) -> Result<f64> {
        if let Some(ln) = &self.ln_eval {
            if !self.domain.contains(x) {
                return Err(Error::domain(
                    format!("{} argument outside {}", self.name, self.domain),
                    x,
                ));
            }
            let v = ln(x);
            if !v.is_finite() {
                return Err(Error::Evaluation(format!("ln {}({x}) = {v}", self.name)));
            }
            return Ok(v);
        }
        let v = self.value(x)?;
        if v <= 0.0 {
            return Err(Error::Evaluation(format!(
                "{}({x}) = {v} is not positive and cannot be raised to a real power",
                self.name
            )));
        }
        Ok(v.ln())
    }

    /// `1 / f(x)`; errors when `f(x) = 0`.
    pub fn reciprocal_value(&self, x: f64) -> Result<f64> {
        let v = self.value(x)?;
        if v == 0.0 {
            return Err(Error::Evaluation(format!(
                "{}({x}) = 0 under a reciprocal",
                self.name
            )));
        }
        Ok(1.0 / v)
    }

    /// Raw evaluator, without domain checks.
    pub fn raw(&self) -> &ScalarFn {
        &self.eval
    }
}

/// `ln cosh x` without overflow for large `|x|`.
pub fn ln_cosh(x: f64) -> f64 {
    let a = x.abs();
    a + (-2.0 * a).exp().ln_1p() - std::f64::consts::LN_2
}

pub fn power(p: f64) -> PointFunction {
    PointFunction::new(format!("power:{p}"), Interval::positive(), true, move |x| {
        x.powf(p)
    })
    .with_ln(move |x| p * x.ln())
}

pub fn square() -> PointFunction {
    PointFunction::new("square", Interval::positive(), true, |x| x * x)
}

pub fn neg_square() -> PointFunction {
    PointFunction::new("neg_square", Interval::real_line(), false, |x| -x * x)
}

pub fn log() -> PointFunction {
    PointFunction::new("log", Interval::open(1.0, f64::INFINITY), true, f64::ln)
        .with_note("log vanishes at 1; domain opened there")
}

pub fn neg_log() -> PointFunction {
    PointFunction::new("neg_log", Interval::open(0.0, 1.0), true, |x: f64| -x.ln())
}

pub fn cosh() -> PointFunction {
    PointFunction::new("cosh", Interval::real_line(), true, f64::cosh).with_ln(ln_cosh)
}

pub fn arcsin() -> PointFunction {
    PointFunction::new("arcsin", Interval::closed(0.0, 1.0), false, f64::asin)
        .with_note("positivity fails at 0")
}

pub fn arctan() -> PointFunction {
    PointFunction::new("arctan", Interval::positive(), true, f64::atan)
}

pub fn exp() -> PointFunction {
    PointFunction::new("exp", Interval::real_line(), true, f64::exp).with_ln(|x| x)
}

pub fn exp_neg() -> PointFunction {
    PointFunction::new("exp_neg", Interval::real_line(), true, |x: f64| (-x).exp()).with_ln(|x| -x)
}

pub fn reciprocal() -> PointFunction {
    PointFunction::new("reciprocal", Interval::positive(), true, |x| 1.0 / x)
        .with_ln(|x: f64| -x.ln())
}

pub fn reciprocal_log() -> PointFunction {
    PointFunction::new(
        "reciprocal_log",
        Interval::open(1.0, f64::INFINITY),
        true,
        |x: f64| 1.0 / x.ln(),
    )
}

pub fn exp_reciprocal() -> PointFunction {
    PointFunction::new("exp_reciprocal", Interval::positive(), true, |x: f64| {
        (1.0 / x).exp()
    })
    .with_ln(|x| 1.0 / x)
}

pub fn identity() -> PointFunction {
    PointFunction::new("identity", Interval::positive(), true, |x| x).with_ln(f64::ln)
}

pub fn affine(a: f64, b: f64) -> PointFunction {
    PointFunction::new(
        format!("affine:{a},{b}"),
        Interval::real_line(),
        false,
        move |x| a * x + b,
    )
}

pub fn constant(c: f64) -> PointFunction {
    PointFunction::new(
        format!("constant:{c}"),
        Interval::real_line(),
        c > 0.0,
        move |_| c,
    )
}

/// The example functions with their default domains; parametric families
/// appear with `p = 2`, `a = 2, b = 3` and `c = 1`.
pub fn builtin_functions() -> Vec<PointFunction> {
    vec![
        power(2.0),
        square(),
        neg_square(),
        log(),
        neg_log(),
        cosh(),
        arcsin(),
        arctan(),
        exp(),
        exp_neg(),
        reciprocal(),
        reciprocal_log(),
        exp_reciprocal(),
        identity(),
        affine(2.0, 3.0),
        constant(1.0),
    ]
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lookup_examples() {
        let c = cosh();
        assert_eq!(*c.domain(), Interval::real_line());
        assert!(c.positive_on_domain());
        let s = arcsin();
        assert_eq!(*s.domain(), Interval::closed(0.0, 1.0));
        assert!(s.note().unwrap().contains("positivity fails at 0"));
        assert_eq!(reciprocal().value(4.0).unwrap(), 0.25);
    }

    #[test]
    fn domain_and_value_checks() {
        assert!(matches!(log().value(1.0), Err(Error::Domain { .. })));
        assert!(reciprocal().value(0.0).is_err());
        assert!(matches!(
            neg_square().log_value(2.0),
            Err(Error::Evaluation(_))
        ));
        assert!(arcsin().reciprocal_value(0.0).is_err());
        assert!(cosh().value(1000.0).is_err());
    }

    #[test]
    fn closed_form_logs_match_direct_logs() {
        for f in builtin_functions() {
            let (lo, hi) = f
                .domain()
                .intersect_box(-5.0, 5.0)
                .sampling_range()
                .unwrap();
            for i in 0..=20 {
                let x = lo + (hi - lo) * i as f64 / 20.0;
                if let Ok(v) = f.value(x) {
                    if v > 0.0 {
                        let l = f.log_value(x).unwrap();
                        assert!(
                            (l - v.ln()).abs() <= 1e-13 * v.ln().abs().max(1.0),
                            "{} at {x}",
                            f.name()
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn ln_cosh_is_stable() {
        assert!((ln_cosh(1000.0) - (1000.0 - std::f64::consts::LN_2)).abs() < 1e-12);
        assert_eq!(ln_cosh(0.0), 0.0);
        assert!((ln_cosh(-2.0) - 2f64.cosh().ln()).abs() < 1e-15);
    }

    #[test]
    fn names_are_unique() {
        let mut names: Vec<_> = builtin_functions()
            .iter()
            .map(|f| f.name().to_string())
            .collect();
        names.sort();
        let n = names.len();
        names.dedup();
        assert_eq!(n, names.len());
    }
}
