//! The defining inequality `f(M(t; x, y)) <= N(h(t); f(x), f(y))` for every
//! pair of means, sampled verification, and the diagonal refutations.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compare::{scale, Relation};
use crate::error::{Error, Result};
use crate::function::PointFunction;
use crate::means::MeanKind;
use crate::sampling::SamplePlan;
use crate::weights::{WeightFamily, WeightFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Sense {
    Convex,
    Concave,
}

impl Sense {
    pub fn flip(self) -> Sense {
        match self {
            Sense::Convex => Sense::Concave,
            Sense::Concave => Sense::Convex,
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Sense::Convex => "convex",
            Sense::Concave => "concave",
        }
    }
}

impl fmt::Display for Sense {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone)]
pub struct ConvexitySpec {
    pub arg_mean: MeanKind,
    pub val_mean: MeanKind,
    pub h: WeightFunction,
    pub sense: Sense,
}

impl ConvexitySpec {
    pub fn new(arg_mean: MeanKind, val_mean: MeanKind, h: WeightFunction, sense: Sense) -> Self {
        ConvexitySpec {
            arg_mean,
            val_mean,
            h,
            sense,
        }
    }

    /// Convex asks for `lhs <= rhs`, concave for `lhs >= rhs`.
    pub fn relation(&self) -> Relation {
        match self.sense {
            Sense::Convex => Relation::Le,
            Sense::Concave => Relation::Ge,
        }
    }

    pub fn label(&self) -> String {
        format!(
            "{}_t{}_h[{}] {}",
            self.arg_mean,
            self.val_mean,
            self.h.name(),
            self.sense
        )
    }
}

/// `M(t; x, y)`: `tx + (1-t)y`, `x^t y^(1-t)`, or `xy / (tx + (1-t)y)`.
pub fn argument_mean(kind: MeanKind, x: f64, y: f64, t: f64) -> Result<f64> {
    match kind {
        MeanKind::Arithmetic => Ok(t * x + (1.0 - t) * y),
        MeanKind::Geometric => {
            if x <= 0.0 || y <= 0.0 {
                return Err(Error::domain(
                    "geometric argument mean of a nonpositive point",
                    x.min(y),
                ));
            }
            Ok((t * x.ln() + (1.0 - t) * y.ln()).exp())
        }
        MeanKind::Harmonic => {
            if x * y <= 0.0 {
                return Err(Error::domain(
                    "harmonic argument mean of points with mixed sign",
                    x * y,
                ));
            }
            let denom = t * x + (1.0 - t) * y;
            if denom == 0.0 {
                return Err(Error::DivisionByZero("harmonic argument mean"));
            }
            Ok(x * y / denom)
        }
    }
}

/// Returns `(f(M(t; x, y)), N(h(t); f(x), f(y)))`.
///
/// Weight placement on the value side, with `a = f(x)`, `b = f(y)`:
///
/// | case     | combination                                   |
/// |----------|-----------------------------------------------|
/// | AA, GA   | `h(t) a + h(1-t) b`                           |
/// | HA       | `h(1-t) a + h(t) b`                           |
/// | AG, GG   | `a^h(t) b^h(1-t)`                             |
/// | HG       | `a^h(1-t) b^h(t)`                             |
/// | AH, GH   | `ab / (h(1-t) a + h(t) b)`                    |
/// | HH       | `ab / (h(t) a + h(1-t) b)`                    |
pub fn defining_gap(
    spec: &ConvexitySpec,
    f: &PointFunction,
    x: f64,
    y: f64,
    t: f64,
) -> Result<(f64, f64)> {
    if !(0.0..=1.0).contains(&t) {
        return Err(Error::domain("convexity parameter t", t));
    }
    let m = argument_mean(spec.arg_mean, x, y, t)?;
    let lhs = f.value(m)?;
    let wt = spec.h.eval(t)?;
    let ws = spec.h.eval(1.0 - t)?;
    let harmonic_arg = spec.arg_mean == MeanKind::Harmonic;
    let (wa, wb) = if harmonic_arg { (ws, wt) } else { (wt, ws) };
    let rhs = match spec.val_mean {
        MeanKind::Arithmetic => wa * f.value(x)? + wb * f.value(y)?,
        MeanKind::Geometric => (wa * f.log_value(x)? + wb * f.log_value(y)?).exp(),
        MeanKind::Harmonic => {
            let (a, b) = (f.value(x)?, f.value(y)?);
            let denom = wb * a + wa * b;
            if denom == 0.0 {
                return Err(Error::Evaluation(
                    "harmonic value mean has a zero denominator".into(),
                ));
            }
            a * b / denom
        }
    };
    if !rhs.is_finite() {
        return Err(Error::Evaluation(format!("value mean is {rhs}")));
    }
    Ok((lhs, rhs))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Holds,
    Refuted,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GapWitness {
    pub x: f64,
    pub y: f64,
    pub t: f64,
    pub lhs: f64,
    pub rhs: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Verdict {
    pub status: Status,
    pub samples_tested: usize,
    pub skipped: usize,
    /// Smallest oriented margin `rhs - lhs` (convex) or `lhs - rhs` (concave).
    pub min_margin: f64,
    /// Smallest margin divided by `max(1, |lhs|, |rhs|)`.
    pub min_relative_margin: f64,
    pub violations: usize,
    /// Violation with the smallest sample index.
    pub witness: Option<GapWitness>,
}

/// Shared accumulation for sampled inequality checks.
#[derive(Debug, Clone)]
pub(crate) struct Tally<W> {
    pub total: usize,
    pub tested: usize,
    pub skipped: usize,
    pub min_margin: f64,
    pub min_relative: f64,
    pub violations: usize,
    pub witness: Option<W>,
    pub first_error: Option<Error>,
}

impl<W> Tally<W> {
    pub fn new() -> Self {
        Tally {
            total: 0,
            tested: 0,
            skipped: 0,
            min_margin: f64::INFINITY,
            min_relative: f64::INFINITY,
            violations: 0,
            witness: None,
            first_error: None,
        }
    }

    pub fn skip(&mut self, err: Error) {
        self.total += 1;
        self.skipped += 1;
        if self.first_error.is_none() {
            self.first_error = Some(err);
        }
    }

    /// Records a measurement; returns true when it violates `rel`.
    pub fn record(
        &mut self,
        rel: Relation,
        lhs: f64,
        rhs: f64,
        tol: f64,
        witness: impl FnOnce() -> W,
    ) -> bool {
        self.total += 1;
        self.tested += 1;
        let margin = rel.margin(lhs, rhs);
        let relative = margin / scale(lhs, rhs);
        if margin < self.min_margin || margin.is_nan() {
            self.min_margin = margin;
        }
        if relative < self.min_relative || relative.is_nan() {
            self.min_relative = relative;
        }
        let bad = rel.violated(lhs, rhs, tol);
        if bad {
            self.violations += 1;
            if self.witness.is_none() {
                self.witness = Some(witness());
            }
        }
        bad
    }

    /// Errors unless at least half of the samples were usable.
    pub fn check_usable(&self, what: &str) -> Result<()> {
        if self.tested == 0 {
            let reason = self
                .first_error
                .as_ref()
                .map(|e| format!("{what}: {e}"))
                .unwrap_or_else(|| what.to_string());
            return Err(Error::NoUsableSamples(reason));
        }
        if 2 * self.tested < self.total {
            return Err(Error::InsufficientSamples {
                usable: self.tested,
                total: self.total,
            });
        }
        Ok(())
    }
}

pub fn verify_class(
    spec: &ConvexitySpec,
    f: &PointFunction,
    plan: &SamplePlan,
    tol: f64,
) -> Result<Verdict> {
    let (lo, hi) = plan.range(f.domain())?;
    let rel = spec.relation();
    let mut tally = Tally::new();
    for [x, y, t] in plan.xyt(lo, hi) {
        match defining_gap(spec, f, x, y, t) {
            Ok((lhs, rhs)) => {
                tally.record(rel, lhs, rhs, tol, || GapWitness { x, y, t, lhs, rhs });
            }
            Err(e) => tally.skip(e),
        }
    }
    tally.check_usable(&spec.label())?;
    Ok(Verdict {
        status: if tally.witness.is_some() {
            Status::Refuted
        } else {
            Status::Holds
        },
        samples_tested: tally.tested,
        skipped: tally.skipped,
        min_margin: tally.min_margin,
        min_relative_margin: tally.min_relative,
        violations: tally.violations,
        witness: tally.witness,
    })
}

/// Weight-defined function classes: `t^s` (s-convex), `1/t`
/// (Godunova-Levin) and `1` (P-functions).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum ExtendedClass {
    SConvex(f64),
    GodunovaLevin,
    PFunction,
}

impl ExtendedClass {
    pub fn weight(self) -> Result<WeightFunction> {
        match self {
            ExtendedClass::SConvex(s) if s > 0.0 && s <= 1.0 => Ok(WeightFunction::power(s)),
            ExtendedClass::SConvex(s) => {
                Err(Error::Precondition(format!("s = {s} must lie in (0, 1]")))
            }
            ExtendedClass::GodunovaLevin => Ok(WeightFunction::reciprocal()),
            ExtendedClass::PFunction => Ok(WeightFunction::one()),
        }
    }
}

/// Convex-sense membership test for an extended class.
pub fn verify_extended_class(
    class: ExtendedClass,
    arg_mean: MeanKind,
    val_mean: MeanKind,
    f: &PointFunction,
    plan: &SamplePlan,
    tol: f64,
) -> Result<Verdict> {
    let spec = ConvexitySpec::new(arg_mean, val_mean, class.weight()?, Sense::Convex);
    verify_class(&spec, f, plan, tol)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct OrderingReport {
    pub samples: usize,
    /// Samples where the `h(t) = t` inequality held.
    pub premise_held: usize,
    /// Of those, samples where the `h_above` inequality failed.
    pub failures: usize,
    pub skipped: usize,
    pub first_failure: Option<GapWitness>,
}

impl OrderingReport {
    pub fn implication_holds(&self) -> bool {
        self.failures == 0
    }
}

/// Tests whether convexity with weight `t` carries over to a weight
/// `h_above >= t`, sample by sample.
pub fn class_ordering_check(
    f: &PointFunction,
    arg_mean: MeanKind,
    val_mean: MeanKind,
    h_above: &WeightFunction,
    plan: &SamplePlan,
    tol: f64,
) -> Result<OrderingReport> {
    let (lo, hi) = plan.range(f.domain())?;
    let samples = plan.xyt(lo, hi);
    for t in plan
        .t_values()
        .into_iter()
        .chain(samples.iter().map(|s| s[2]))
    {
        let v = h_above.eval(t)?;
        if v < t - tol * scale(v, t) {
            return Err(Error::Precondition(format!(
                "{}({t}) = {v} is below t",
                h_above.name()
            )));
        }
    }
    let base = ConvexitySpec::new(
        arg_mean,
        val_mean,
        WeightFunction::identity(),
        Sense::Convex,
    );
    let above = ConvexitySpec::new(arg_mean, val_mean, h_above.clone(), Sense::Convex);
    let mut report = OrderingReport {
        samples: samples.len(),
        premise_held: 0,
        failures: 0,
        skipped: 0,
        first_failure: None,
    };
    for [x, y, t] in samples {
        let (Ok((l0, r0)), Ok((l1, r1))) = (
            defining_gap(&base, f, x, y, t),
            defining_gap(&above, f, x, y, t),
        ) else {
            report.skipped += 1;
            continue;
        };
        if Relation::Le.violated(l0, r0, tol) {
            continue;
        }
        report.premise_held += 1;
        if Relation::Le.violated(l1, r1, tol) {
            report.failures += 1;
            if report.first_failure.is_none() {
                report.first_failure = Some(GapWitness {
                    x,
                    y,
                    t,
                    lhs: l1,
                    rhs: r1,
                });
            }
        }
    }
    Ok(report)
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct DiagonalRefutation {
    pub class: String,
    pub x: f64,
    pub t: f64,
    pub fx: f64,
    /// `f(M(t; x, x))`
    pub lhs: f64,
    /// `N(h(t); f(x), f(x))`
    pub rhs: f64,
    pub relation: Relation,
    pub refuted: bool,
}

/// Instantiates the defining inequality at `y = x` for a class that no
/// positive function can belong to. Accepted classes: `A_{1/t}` and `A_1`
/// concave, `H_{1/t}` and `H_1` convex, and `G_{1/t}` concave when `f(x) > 1`.
pub fn diagonal_refute(
    spec: &ConvexitySpec,
    f: &PointFunction,
    x: f64,
    t: f64,
) -> Result<DiagonalRefutation> {
    let reciprocal = matches!(spec.h.family(), WeightFamily::Reciprocal);
    let one = matches!(spec.h.family(), WeightFamily::Constant);
    let fx = f.value(x)?;
    if fx <= 0.0 {
        return Err(Error::Precondition(format!(
            "f({x}) = {fx} is not positive"
        )));
    }
    let accepted = match (spec.val_mean, spec.sense) {
        (MeanKind::Arithmetic, Sense::Concave) | (MeanKind::Harmonic, Sense::Convex) => {
            reciprocal || one
        }
        (MeanKind::Geometric, Sense::Concave) => reciprocal && fx > 1.0,
        _ => false,
    };
    if !accepted {
        return Err(Error::InapplicableSpec(format!(
            "{} has no diagonal contradiction (f(x) = {fx})",
            spec.label()
        )));
    }
    let (lhs, rhs) = defining_gap(spec, f, x, x, t)?;
    let relation = spec.relation();
    Ok(DiagonalRefutation {
        class: spec.label(),
        x,
        t,
        fx,
        lhs,
        rhs,
        relation,
        refuted: relation.violated(lhs, rhs, crate::compare::DEFAULT_TOL),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function;
    use crate::interval::Interval;
    use proptest::prelude::*;

    use MeanKind::{Arithmetic as A, Geometric as G, Harmonic as H};

    fn spec(m: MeanKind, n: MeanKind, sense: Sense) -> ConvexitySpec {
        ConvexitySpec::new(m, n, WeightFunction::identity(), sense)
    }

    #[test]
    fn gap_examples() {
        let (l, r) =
            defining_gap(&spec(A, G, Sense::Convex), &function::exp(), 0.2, 1.4, 0.3).unwrap();
        assert!((l - r).abs() <= 1e-15 * l);
        let (l, r) = defining_gap(
            &spec(A, A, Sense::Convex),
            &function::square(),
            1e-300,
            2.0,
            0.5,
        )
        .unwrap();
        assert!((l - 1.0).abs() < 1e-15 && (r - 2.0).abs() < 1e-15);
        let (l, r) = defining_gap(
            &spec(H, H, Sense::Convex),
            &function::identity(),
            1.0,
            3.0,
            0.5,
        )
        .unwrap();
        assert!((l - 1.5).abs() < 1e-15 && (r - 1.5).abs() < 1e-15);
    }

    #[test]
    fn square_at_origin_through_real_line_domain() {
        let f = function::square().with_domain(Interval::real_line());
        let (l, r) = defining_gap(&spec(A, A, Sense::Convex), &f, 0.0, 2.0, 0.5).unwrap();
        assert_eq!((l, r), (1.0, 2.0));
    }

    #[test]
    fn argument_mean_domain_errors() {
        assert!(argument_mean(G, -1.0, 2.0, 0.5).is_err());
        assert!(argument_mean(H, -1.0, 2.0, 0.5).is_err());
        assert!((argument_mean(H, -1.0, -3.0, 0.5).unwrap() + 1.5).abs() < 1e-15);
    }

    #[test]
    fn square_is_classically_convex_not_concave() {
        let f = function::square().with_domain(Interval::open(0.0, 10.0));
        let plan = SamplePlan::small();
        let v = verify_class(&spec(A, A, Sense::Convex), &f, &plan, 1e-9).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(v.min_relative_margin >= -1e-12);
        let v = verify_class(&spec(A, A, Sense::Concave), &f, &plan, 1e-9).unwrap();
        assert_eq!(v.status, Status::Refuted);
        let w = v.witness.unwrap();
        assert!(w.lhs < w.rhs);
        assert_eq!(
            defining_gap(&spec(A, A, Sense::Concave), &f, w.x, w.y, w.t).unwrap(),
            (w.lhs, w.rhs)
        );
    }

    #[test]
    fn cosh_is_arithmetic_geometric_convex() {
        let f = function::cosh().with_domain(Interval::open(-3.0, 3.0));
        let v = verify_class(&spec(A, G, Sense::Convex), &f, &SamplePlan::default(), 1e-9).unwrap();
        assert_eq!(v.status, Status::Holds);
    }

    #[test]
    fn verdicts_are_deterministic() {
        let f = function::cosh().with_domain(Interval::open(0.5, 3.0));
        let s = spec(G, H, Sense::Convex);
        let a = verify_class(&s, &f, &SamplePlan::small(), 1e-9).unwrap();
        let b = verify_class(&s, &f, &SamplePlan::small(), 1e-9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn sense_flip_reuses_margins() {
        let f = function::arctan().with_domain(Interval::open(0.1, 5.0));
        let plan = SamplePlan::small();
        for (m, n) in [(A, A), (G, G), (H, A), (A, H)] {
            let c = verify_class(&spec(m, n, Sense::Convex), &f, &plan, 0.0).unwrap();
            let k = verify_class(&spec(m, n, Sense::Concave), &f, &plan, 0.0).unwrap();
            assert_eq!(c.samples_tested, k.samples_tested);
            assert!(c.violations + k.violations <= c.samples_tested);
            assert_eq!(c.status == Status::Refuted, c.min_margin < 0.0);
            assert_eq!(k.status == Status::Refuted, k.min_margin < 0.0);
        }
    }

    #[test]
    fn mostly_skipped_samples_is_an_error() {
        // harmonic argument means of mixed-sign points are rejected
        let f = function::square().with_domain(Interval::open(-1.0, 1.0));
        let err = verify_class(&spec(H, A, Sense::Convex), &f, &SamplePlan::small(), 1e-9);
        assert!(matches!(err, Err(Error::InsufficientSamples { .. })));
    }

    #[test]
    fn extended_examples() {
        let plan = SamplePlan::small();
        let one = function::constant(1.0).with_domain(Interval::open(0.0, 5.0));
        let v = verify_extended_class(ExtendedClass::PFunction, A, A, &one, &plan, 1e-9).unwrap();
        assert_eq!(v.status, Status::Holds);
        let sq = function::square().with_domain(Interval::open(0.0, 1.0));
        let v =
            verify_extended_class(ExtendedClass::GodunovaLevin, A, A, &sq, &plan, 1e-9).unwrap();
        assert_eq!(v.status, Status::Holds);
        let id = function::identity().with_domain(Interval::open(0.0, 5.0));
        let v = verify_extended_class(ExtendedClass::SConvex(1.0), A, A, &id, &plan, 1e-9).unwrap();
        assert_eq!(v.status, Status::Holds);
        assert!(v.min_margin.abs() < 1e-13);
        assert!(
            verify_extended_class(ExtendedClass::SConvex(1.5), A, A, &id, &plan, 1e-9).is_err()
        );
    }

    #[test]
    fn ordering_examples() {
        let plan = SamplePlan::small();
        let root = WeightFunction::power(0.5);
        let sq = function::square().with_domain(Interval::open(0.0, 5.0));
        assert!(class_ordering_check(&sq, A, A, &root, &plan, 1e-9)
            .unwrap()
            .implication_holds());
        let e = function::exp().with_domain(Interval::open(0.1, 5.0));
        let r = class_ordering_check(&e, A, G, &root, &plan, 1e-9).unwrap();
        assert!(r.implication_holds() && r.premise_held > 0);
        let err = class_ordering_check(&sq, A, A, &WeightFunction::power(2.0), &plan, 1e-9);
        assert!(matches!(err, Err(Error::Precondition(_))));
    }

    #[test]
    fn ordering_fails_for_harmonic_values() {
        let r = class_ordering_check(
            &function::identity().with_domain(Interval::open(0.1, 5.0)),
            H,
            H,
            &WeightFunction::power(0.5),
            &SamplePlan::small(),
            1e-9,
        )
        .unwrap();
        assert!(!r.implication_holds());
    }

    #[test]
    fn diagonal_examples() {
        let c1 = function::constant(1.0);
        let c2 = function::constant(2.0);
        let s = ConvexitySpec::new(A, A, WeightFunction::reciprocal(), Sense::Concave);
        let r = diagonal_refute(&s, &c1, 5.0, 0.5).unwrap();
        assert!(r.refuted && r.lhs == 1.0 && r.rhs == 4.0);
        let s = ConvexitySpec::new(A, H, WeightFunction::reciprocal(), Sense::Convex);
        let r = diagonal_refute(&s, &c1, 5.0, 0.5).unwrap();
        assert!(r.refuted && r.rhs == 0.25);
        let s = ConvexitySpec::new(A, G, WeightFunction::reciprocal(), Sense::Concave);
        let r = diagonal_refute(&s, &c2, 5.0, 0.5).unwrap();
        assert!(r.refuted && (r.rhs - 16.0).abs() < 1e-12);
    }

    #[test]
    fn diagonal_rejects_other_classes() {
        let c1 = function::constant(1.0);
        let s = ConvexitySpec::new(A, A, WeightFunction::reciprocal(), Sense::Convex);
        assert!(matches!(
            diagonal_refute(&s, &c1, 5.0, 0.5),
            Err(Error::InapplicableSpec(_))
        ));
        let s = ConvexitySpec::new(A, G, WeightFunction::reciprocal(), Sense::Concave);
        assert!(matches!(
            diagonal_refute(&s, &c1, 5.0, 0.5),
            Err(Error::InapplicableSpec(_))
        ));
        let s = ConvexitySpec::new(A, A, WeightFunction::identity(), Sense::Concave);
        assert!(matches!(
            diagonal_refute(&s, &c1, 5.0, 0.5),
            Err(Error::InapplicableSpec(_))
        ));
    }

    fn segment_oracle(x: f64, y: f64, t: f64) -> (f64, f64) {
        let m = t * x + (1.0 - t) * y;
        (m * m, t * x * x + (1.0 - t) * y * y)
    }

    proptest! {
        #[test]
        fn arithmetic_identity_weight_matches_segment_check(x in 0.0f64..10.0, y in 0.0f64..10.0, t in 0.0f64..=1.0) {
            let f = function::square().with_domain(Interval::closed(0.0, 10.0));
            let (l, r) = defining_gap(&spec(A, A, Sense::Convex), &f, x, y, t).unwrap();
            let (ol, or) = segment_oracle(x, y, t);
            prop_assert!((l - ol).abs() <= 1e-12 * ol.max(1.0));
            prop_assert!((r - or).abs() <= 1e-12 * or.max(1.0));
        }

        #[test]
        fn exp_is_arithmetic_geometric_equality(x in -20.0f64..20.0, y in -20.0f64..20.0, t in 1e-6f64..1.0) {
            let (l, r) = defining_gap(&spec(A, G, Sense::Convex), &function::exp(), x, y, t).unwrap();
            prop_assert!((l - r).abs() <= 1e-12 * l.abs().max(r.abs()));
        }

        #[test]
        fn identity_is_harmonic_harmonic_equality(x in 1e-3f64..1e3, y in 1e-3f64..1e3, t in 1e-6f64..1.0) {
            let (l, r) = defining_gap(&spec(H, H, Sense::Convex), &function::identity(), x, y, t).unwrap();
            prop_assert!((l - r).abs() <= 1e-12 * l.abs().max(r.abs()));
        }

        #[test]
        fn diagonal_refutes_every_positive_constant(c in 1e-3f64..1e3, x in 0.1f64..10.0, t in 1e-3f64..0.999) {
            let f = function::constant(c);
            for m in MeanKind::ALL {
                for (n, h, sense) in [
                    (A, WeightFunction::reciprocal(), Sense::Concave),
                    (H, WeightFunction::reciprocal(), Sense::Convex),
                    (A, WeightFunction::one(), Sense::Concave),
                    (H, WeightFunction::one(), Sense::Convex),
                ] {
                    let r = diagonal_refute(&ConvexitySpec::new(m, n, h, sense), &f, x, t).unwrap();
                    prop_assert!(r.refuted);
                }
            }
        }
    }
}
