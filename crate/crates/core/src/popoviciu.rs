//! Three-point Popoviciu-type inequalities for the nine mean pairs, the
//! equality families, and Hlawka's inequality.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compare::Relation;
use crate::convexity::{Sense, Status, Tally};
use crate::error::{Error, Result};
use crate::function::{self, PointFunction};
use crate::interval::Interval;
use crate::means::MeanKind;
use crate::sampling::SamplePlan;
use crate::weights::{AdditivityTag, Requirement, WeightFunction};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TheoremId {
    AA,
    AG,
    AH,
    GA,
    GG,
    GH,
    HA,
    HG,
    HH,
}

/// How the value side combines `f` at the points.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ValueForm {
    /// `Σ f`
    Sum,
    /// `Π f`, evaluated as `Σ ln f`
    Product,
    /// `Σ 1/f`
    Reciprocal,
}

impl TheoremId {
    pub const ALL: [TheoremId; 9] = [
        TheoremId::AA,
        TheoremId::AG,
        TheoremId::AH,
        TheoremId::GA,
        TheoremId::GG,
        TheoremId::GH,
        TheoremId::HA,
        TheoremId::HG,
        TheoremId::HH,
    ];

    pub fn new(arg_mean: MeanKind, val_mean: MeanKind) -> TheoremId {
        use MeanKind::*;
        match (arg_mean, val_mean) {
            (Arithmetic, Arithmetic) => TheoremId::AA,
            (Arithmetic, Geometric) => TheoremId::AG,
            (Arithmetic, Harmonic) => TheoremId::AH,
            (Geometric, Arithmetic) => TheoremId::GA,
            (Geometric, Geometric) => TheoremId::GG,
            (Geometric, Harmonic) => TheoremId::GH,
            (Harmonic, Arithmetic) => TheoremId::HA,
            (Harmonic, Geometric) => TheoremId::HG,
            (Harmonic, Harmonic) => TheoremId::HH,
        }
    }

    pub fn arg_mean(self) -> MeanKind {
        use TheoremId::*;
        match self {
            AA | AG | AH => MeanKind::Arithmetic,
            GA | GG | GH => MeanKind::Geometric,
            HA | HG | HH => MeanKind::Harmonic,
        }
    }

    pub fn val_mean(self) -> MeanKind {
        use TheoremId::*;
        match self {
            AA | GA | HA => MeanKind::Arithmetic,
            AG | GG | HG => MeanKind::Geometric,
            AH | GH | HH => MeanKind::Harmonic,
        }
    }

    pub fn value_form(self) -> ValueForm {
        match self.val_mean() {
            MeanKind::Arithmetic => ValueForm::Sum,
            MeanKind::Geometric => ValueForm::Product,
            MeanKind::Harmonic => ValueForm::Reciprocal,
        }
    }

    /// Direction of the inequality for a function of the given sense.
    ///
    /// | theorems               | convex | concave |
    /// |------------------------|--------|---------|
    /// | AA AG GA GG HA HG      | `<=`   | `>=`    |
    /// | AH GH HH (1/f sums)    | `>=`   | `<=`    |
    pub fn relation(self, sense: Sense) -> Relation {
        let le = match self.value_form() {
            ValueForm::Reciprocal => sense == Sense::Concave,
            _ => sense == Sense::Convex,
        };
        if le {
            Relation::Le
        } else {
            Relation::Ge
        }
    }

    /// The `<=` direction needs a superadditive weight, `>=` a subadditive one.
    pub fn required_weight(self, sense: Sense) -> Requirement {
        match self.relation(sense) {
            Relation::Le => Requirement::Superadditive,
            Relation::Ge => Requirement::Subadditive,
        }
    }

    pub fn as_str(self) -> &'static str {
        use TheoremId::*;
        match self {
            AA => "AA",
            AG => "AG",
            AH => "AH",
            GA => "GA",
            GG => "GG",
            GH => "GH",
            HA => "HA",
            HG => "HG",
            HH => "HH",
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// The three pairwise means `(x,z), (y,z), (x,y)` and the central mean.
pub fn three_point_means(kind: MeanKind, x: f64, y: f64, z: f64) -> Result<([f64; 3], f64)> {
    match kind {
        MeanKind::Arithmetic => Ok((
            [0.5 * (x + z), 0.5 * (y + z), 0.5 * (x + y)],
            (x + y + z) / 3.0,
        )),
        MeanKind::Geometric => {
            for v in [x, y, z] {
                if v <= 0.0 {
                    return Err(Error::domain("geometric mean of a nonpositive point", v));
                }
            }
            Ok((
                [(x * z).sqrt(), (y * z).sqrt(), (x * y).sqrt()],
                ((x.ln() + y.ln() + z.ln()) / 3.0).exp(),
            ))
        }
        MeanKind::Harmonic => {
            let same_sign = (x > 0.0 && y > 0.0 && z > 0.0) || (x < 0.0 && y < 0.0 && z < 0.0);
            if !same_sign {
                return Err(Error::domain(
                    "harmonic mean of points without a common sign",
                    x.min(y).min(z),
                ));
            }
            let q = x * y + y * z + x * z;
            Ok((
                [
                    2.0 * x * z / (x + z),
                    2.0 * y * z / (y + z),
                    2.0 * x * y / (x + y),
                ],
                3.0 * x * y * z / q,
            ))
        }
    }
}

/// Sum of `term` over the three values.
fn sum3(values: [f64; 3], term: impl Fn(f64) -> Result<f64>) -> Result<f64> {
    Ok(term(values[0])? + term(values[1])? + term(values[2])?)
}

/// Both sides of the three-point inequality for `id`.
///
/// With `m1, m2, m3` the pairwise means and `c` the central mean:
/// * sum forms: `Σ f(mi)` vs `h(3/2) f(c) + h(1/2) Σ f(p)`;
/// * product forms, in log domain: `Σ ln f(mi)` vs `h(3/2) ln f(c) + h(1/2) Σ ln f(p)`;
/// * reciprocal forms: `Σ 1/f(mi)` vs `h(1/2) Σ 1/f(p) + h(3/2) / f(c)`.
pub fn popoviciu_sides(
    id: TheoremId,
    h: &WeightFunction,
    f: &PointFunction,
    x: f64,
    y: f64,
    z: f64,
) -> Result<(f64, f64)> {
    let (mids, c) = three_point_means(id.arg_mean(), x, y, z)?;
    let outer = h.eval(1.5)?;
    let inner = h.eval(0.5)?;
    let points = [x, y, z];
    let (lhs, rhs) = match id.value_form() {
        ValueForm::Sum => {
            let v = |p| f.value(p);
            (
                sum3(mids, v)?,
                outer * f.value(c)? + inner * sum3(points, v)?,
            )
        }
        ValueForm::Product => {
            let v = |p| f.log_value(p);
            (
                sum3(mids, v)?,
                outer * f.log_value(c)? + inner * sum3(points, v)?,
            )
        }
        ValueForm::Reciprocal => {
            let v = |p| f.reciprocal_value(p);
            (
                sum3(mids, v)?,
                inner * sum3(points, v)? + outer * f.reciprocal_value(c)?,
            )
        }
    };
    if !lhs.is_finite() || !rhs.is_finite() {
        return Err(Error::Evaluation(format!(
            "{id} sides are not finite: {lhs}, {rhs}"
        )));
    }
    Ok((lhs, rhs))
}

/// `popoviciu_sides` at `z = y`.
pub fn two_point_reduction(
    id: TheoremId,
    h: &WeightFunction,
    f: &PointFunction,
    x: f64,
    y: f64,
) -> Result<(f64, f64)> {
    popoviciu_sides(id, h, f, x, y, y)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TripleWitness {
    pub x: f64,
    pub y: f64,
    pub z: f64,
    pub lhs: f64,
    pub rhs: f64,
}

/// Violations kept per report.
pub const MAX_WITNESSES: usize = 8;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PopoviciuReport {
    pub theorem: TheoremId,
    pub h: String,
    pub f: String,
    pub sense: Sense,
    pub relation: Relation,
    pub status: Status,
    pub triples_tested: usize,
    pub skipped: usize,
    pub min_margin: f64,
    pub min_relative_margin: f64,
    pub max_abs_residual: f64,
    pub violations: usize,
    /// The first violations in sample order.
    pub witnesses: Vec<TripleWitness>,
    pub weight_class: AdditivityTag,
    pub weight_requirement: Requirement,
    pub weight_hypothesis_met: bool,
}

/// Samples triples from `f`'s domain (cut to the plan box) and compares the
/// two sides. The weight hypothesis is reported, not enforced.
pub fn verify_theorem(
    id: TheoremId,
    h: &WeightFunction,
    f: &PointFunction,
    sense: Sense,
    plan: &SamplePlan,
    tol: f64,
) -> Result<PopoviciuReport> {
    let (lo, hi) = plan.range(f.domain())?;
    let relation = id.relation(sense);
    let mut tally: Tally<()> = Tally::new();
    let mut witnesses = Vec::new();
    let mut max_abs_residual: f64 = 0.0;
    for [x, y, z] in plan.triples(lo, hi) {
        match popoviciu_sides(id, h, f, x, y, z) {
            Ok((lhs, rhs)) => {
                max_abs_residual = max_abs_residual.max((lhs - rhs).abs());
                if tally.record(relation, lhs, rhs, tol, || ()) && witnesses.len() < MAX_WITNESSES {
                    witnesses.push(TripleWitness { x, y, z, lhs, rhs });
                }
            }
            Err(e) => tally.skip(e),
        }
    }
    tally.check_usable(&format!("{id} with f = {}", f.name()))?;
    let weight_class = h.additivity().tag;
    let weight_requirement = id.required_weight(sense);
    Ok(PopoviciuReport {
        theorem: id,
        h: h.name().to_string(),
        f: f.name().to_string(),
        sense,
        relation,
        status: if witnesses.is_empty() {
            Status::Holds
        } else {
            Status::Refuted
        },
        triples_tested: tally.tested,
        skipped: tally.skipped,
        min_margin: tally.min_margin,
        min_relative_margin: tally.min_relative,
        max_abs_residual,
        violations: tally.violations,
        witnesses,
        weight_class,
        weight_requirement,
        weight_hypothesis_met: weight_class.satisfies(weight_requirement),
    })
}

/// Functions for which the `h = t` inequality is an identity.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EqualityFamily {
    AffineAA,
    ReciprocalAH,
    LogGA,
    ReciprocalLogGH,
    ReciprocalHA,
    ExpReciprocalHG,
    IdentityHH,
}

impl EqualityFamily {
    pub const ALL: [EqualityFamily; 7] = [
        EqualityFamily::AffineAA,
        EqualityFamily::ReciprocalAH,
        EqualityFamily::LogGA,
        EqualityFamily::ReciprocalLogGH,
        EqualityFamily::ReciprocalHA,
        EqualityFamily::ExpReciprocalHG,
        EqualityFamily::IdentityHH,
    ];

    pub fn theorem(self) -> TheoremId {
        match self {
            EqualityFamily::AffineAA => TheoremId::AA,
            EqualityFamily::ReciprocalAH => TheoremId::AH,
            EqualityFamily::LogGA => TheoremId::GA,
            EqualityFamily::ReciprocalLogGH => TheoremId::GH,
            EqualityFamily::ReciprocalHA => TheoremId::HA,
            EqualityFamily::ExpReciprocalHG => TheoremId::HG,
            EqualityFamily::IdentityHH => TheoremId::HH,
        }
    }

    /// The function on the domain where the identity is stated.
    pub fn function(self) -> PointFunction {
        match self {
            EqualityFamily::AffineAA => function::affine(1.0, 0.0),
            EqualityFamily::ReciprocalAH | EqualityFamily::ReciprocalHA => function::reciprocal(),
            EqualityFamily::LogGA => function::log(),
            EqualityFamily::ReciprocalLogGH => function::reciprocal_log(),
            EqualityFamily::ExpReciprocalHG => function::exp_reciprocal(),
            EqualityFamily::IdentityHH => function::identity(),
        }
    }

    /// A bounded box inside the family domain used for sampling.
    pub fn sampling_box(self) -> (f64, f64) {
        match self {
            EqualityFamily::AffineAA => (-10.0, 10.0),
            EqualityFamily::LogGA | EqualityFamily::ReciprocalLogGH => (1.1, 10.0),
            _ => (0.1, 10.0),
        }
    }

    pub fn domain(self) -> Interval {
        *self.function().domain()
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EqualityFamily::AffineAA => "affine-aa",
            EqualityFamily::ReciprocalAH => "reciprocal-ah",
            EqualityFamily::LogGA => "log-ga",
            EqualityFamily::ReciprocalLogGH => "reciprocal-log-gh",
            EqualityFamily::ReciprocalHA => "reciprocal-ha",
            EqualityFamily::ExpReciprocalHG => "exp-reciprocal-hg",
            EqualityFamily::IdentityHH => "identity-hh",
        }
    }
}

pub fn equality_sides(family: EqualityFamily, x: f64, y: f64, z: f64) -> Result<(f64, f64)> {
    let f = family.function();
    for v in [x, y, z] {
        if !f.domain().contains(v) {
            return Err(Error::domain(
                format!("{} point outside {}", family.as_str(), f.domain()),
                v,
            ));
        }
    }
    popoviciu_sides(family.theorem(), &WeightFunction::identity(), &f, x, y, z)
}

/// `|lhs - rhs|` of the identity-weight inequality for the family.
pub fn equality_residual(family: EqualityFamily, x: f64, y: f64, z: f64) -> Result<f64> {
    let (lhs, rhs) = equality_sides(family, x, y, z)?;
    Ok((lhs - rhs).abs())
}

/// `(|x|+|y|+|z|+|x+y+z|, |x+z|+|z+y|+|x+y|, lhs - rhs)`
pub fn hlawka_check(x: f64, y: f64, z: f64) -> (f64, f64, f64) {
    let lhs = x.abs() + y.abs() + z.abs() + (x + y + z).abs();
    let rhs = (x + z).abs() + (z + y).abs() + (x + y).abs();
    (lhs, rhs, lhs - rhs)
}
