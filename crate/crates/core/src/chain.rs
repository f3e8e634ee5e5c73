//! Chains of inequalities that extend a three-point inequality with an
//! additivity or multiplicativity step on either side.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compare::Relation;
use crate::convexity::{Sense, Status, Tally};
use crate::error::{Error, Result};
use crate::function::PointFunction;
use crate::means::MeanKind;
use crate::popoviciu::{popoviciu_sides, three_point_means, TheoremId, TripleWitness};
use crate::sampling::SamplePlan;
use crate::weights::{
    classify_additivity, classify_multiplicativity, AdditivityClass, Requirement, WeightFunction,
};

/// Chains named by the base inequality and the property of `f` they use
/// in the convex direction.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Corollary {
    AaSubadditive,
    AaSuperadditive,
    AgSubmultiplicative,
    AgSupermultiplicative,
    AgSuperadditive,
    AgSubadditive,
    GaSuperadditive,
    GaSubadditive,
    GgSupermultiplicative,
    GgSubmultiplicative,
    HaSuperadditive,
    HaSubadditive,
    HgSuperadditive,
    HgSubadditive,
}

/// Property of `f` a chain relies on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Property {
    Additivity,
    Multiplicativity,
}

impl Corollary {
    pub const ALL: [Corollary; 14] = [
        Corollary::AaSubadditive,
        Corollary::AaSuperadditive,
        Corollary::AgSubmultiplicative,
        Corollary::AgSupermultiplicative,
        Corollary::AgSuperadditive,
        Corollary::AgSubadditive,
        Corollary::GaSuperadditive,
        Corollary::GaSubadditive,
        Corollary::GgSupermultiplicative,
        Corollary::GgSubmultiplicative,
        Corollary::HaSuperadditive,
        Corollary::HaSubadditive,
        Corollary::HgSuperadditive,
        Corollary::HgSubadditive,
    ];

    pub fn theorem(self) -> TheoremId {
        use Corollary::*;
        match self {
            AaSubadditive | AaSuperadditive => TheoremId::AA,
            AgSubmultiplicative | AgSupermultiplicative | AgSuperadditive | AgSubadditive => {
                TheoremId::AG
            }
            GaSuperadditive | GaSubadditive => TheoremId::GA,
            GgSupermultiplicative | GgSubmultiplicative => TheoremId::GG,
            HaSuperadditive | HaSubadditive => TheoremId::HA,
            HgSuperadditive | HgSubadditive => TheoremId::HG,
        }
    }

    /// Property of `f` and the side required for the convex direction.
    pub fn hypothesis(self) -> (Property, Requirement) {
        use Corollary::*;
        use Property::*;
        use Requirement::*;
        match self {
            AaSubadditive | AgSubadditive | GaSubadditive | HaSubadditive | HgSubadditive => {
                (Additivity, Subadditive)
            }
            AaSuperadditive | AgSuperadditive | GaSuperadditive | HaSuperadditive
            | HgSuperadditive => (Additivity, Superadditive),
            AgSubmultiplicative | GgSubmultiplicative => (Multiplicativity, Subadditive),
            AgSupermultiplicative | GgSupermultiplicative => (Multiplicativity, Superadditive),
        }
    }

    /// Hypothesis on `f` for the requested sense; concave flips the side.
    pub fn f_requirement(self, sense: Sense) -> (Property, Requirement) {
        let (p, r) = self.hypothesis();
        match sense {
            Sense::Convex => (p, r),
            Sense::Concave => (p, flip(r)),
        }
    }

    /// Product chains are evaluated in log domain.
    pub fn log_domain(self) -> bool {
        self.theorem().val_mean() == MeanKind::Geometric
    }

    pub fn link_labels(self) -> &'static [&'static str] {
        use Corollary::*;
        match self {
            AaSubadditive => &[
                "f(x+y+z) vs midpoint sum",
                "three-point",
                "central term split over x/3, y/3, z/3",
            ],
            AaSuperadditive => &["three-point", "point terms merged into f(x+y+z)"],
            AgSubmultiplicative => &["f(product of midpoints) vs midpoint product", "three-point"],
            AgSupermultiplicative => &["three-point", "point product merged into f(xyz)"],
            AgSuperadditive => &["half-point sums vs midpoint product", "three-point"],
            AgSubadditive => &[
                "three-point",
                "central factor bounded by f(x/3)+f(y/3)+f(z/3)",
            ],
            GaSuperadditive => &["three-point", "point terms merged into f(x+y+z)"],
            GaSubadditive => &["f(sum of geometric means) vs their sum", "three-point"],
            GgSupermultiplicative => &["three-point", "point product merged into f(xyz)"],
            GgSubmultiplicative => &[
                "f(xyz) vs geometric-mean product",
                "three-point",
                "central factor split over cube roots",
            ],
            HaSuperadditive => &[
                "halved harmonic means vs harmonic means",
                "three-point",
                "point terms merged into f(x+y+z)",
            ],
            HaSubadditive => &[
                "f(sum of harmonic means) vs their sum",
                "three-point",
                "central term tripled at xyz/q",
            ],
            HgSuperadditive => &["halved harmonic means vs harmonic means", "three-point"],
            HgSubadditive => &[
                "f(sum of harmonic means) vs their sum",
                "three-point",
                "central factor tripled at xyz/q",
            ],
        }
    }

    pub fn as_str(self) -> &'static str {
        use Corollary::*;
        match self {
            AaSubadditive => "aa-subadditive",
            AaSuperadditive => "aa-superadditive",
            AgSubmultiplicative => "ag-submultiplicative",
            AgSupermultiplicative => "ag-supermultiplicative",
            AgSuperadditive => "ag-superadditive",
            AgSubadditive => "ag-subadditive",
            GaSuperadditive => "ga-superadditive",
            GaSubadditive => "ga-subadditive",
            GgSupermultiplicative => "gg-supermultiplicative",
            GgSubmultiplicative => "gg-submultiplicative",
            HaSuperadditive => "ha-superadditive",
            HaSubadditive => "ha-subadditive",
            HgSuperadditive => "hg-superadditive",
            HgSubadditive => "hg-subadditive",
        }
    }
}

impl fmt::Display for Corollary {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

fn flip(r: Requirement) -> Requirement {
    match r {
        Requirement::Subadditive => Requirement::Superadditive,
        Requirement::Superadditive => Requirement::Subadditive,
    }
}

fn sum(f: &PointFunction, ps: [f64; 3]) -> Result<f64> {
    Ok(f.value(ps[0])? + f.value(ps[1])? + f.value(ps[2])?)
}

fn log_sum(f: &PointFunction, ps: [f64; 3]) -> Result<f64> {
    Ok(f.log_value(ps[0])? + f.log_value(ps[1])? + f.log_value(ps[2])?)
}

fn positive_ln(v: f64) -> Result<f64> {
    if v > 0.0 {
        Ok(v.ln())
    } else {
        Err(Error::Evaluation(format!(
            "{v} is not positive and cannot be raised to a real power"
        )))
    }
}

/// Every link of the chain at one triple, each as `(lhs, rhs)`; product
/// links are `(ln lhs, ln rhs)`. Links fail independently.
pub fn chained_links(
    cor: Corollary,
    h: &WeightFunction,
    f: &PointFunction,
    x: f64,
    y: f64,
    z: f64,
) -> Vec<Result<(f64, f64)>> {
    use Corollary::*;
    let p = [x, y, z];
    let s = x + y + z;
    let three = || popoviciu_sides(cor.theorem(), h, f, x, y, z);
    let weights = || -> Result<(f64, f64)> { Ok((h.eval(1.5)?, h.eval(0.5)?)) };
    let means = |k| three_point_means(k, x, y, z);
    match cor {
        AaSubadditive => vec![
            (|| {
                let (mids, _) = means(MeanKind::Arithmetic)?;
                Ok((f.value(s)?, sum(f, mids)?))
            })(),
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(MeanKind::Arithmetic)?;
                let tail = inner * sum(f, p)?;
                Ok((
                    outer * f.value(c)? + tail,
                    outer * sum(f, p.map(|v| v / 3.0))? + tail,
                ))
            })(),
        ],
        AaSuperadditive | GaSuperadditive => vec![
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(cor.theorem().arg_mean())?;
                let head = outer * f.value(c)?;
                Ok((head + inner * sum(f, p)?, head + inner * f.value(s)?))
            })(),
        ],
        AgSubmultiplicative => vec![
            (|| {
                let (mids, _) = means(MeanKind::Arithmetic)?;
                Ok((f.log_value(mids[0] * mids[1] * mids[2])?, log_sum(f, mids)?))
            })(),
            three(),
        ],
        AgSupermultiplicative | GgSupermultiplicative => vec![
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(cor.theorem().arg_mean())?;
                let head = outer * f.log_value(c)?;
                Ok((
                    head + inner * log_sum(f, p)?,
                    head + inner * f.log_value(x * y * z)?,
                ))
            })(),
        ],
        AgSuperadditive => vec![
            (|| {
                let half = |a: f64, b: f64| -> Result<f64> {
                    positive_ln(f.value(a / 2.0)? + f.value(b / 2.0)?)
                };
                let (mids, _) = means(MeanKind::Arithmetic)?;
                Ok((half(x, z)? + half(y, z)? + half(x, y)?, log_sum(f, mids)?))
            })(),
            three(),
        ],
        AgSubadditive => vec![
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(MeanKind::Arithmetic)?;
                let tail = inner * log_sum(f, p)?;
                Ok((
                    outer * f.log_value(c)? + tail,
                    outer * positive_ln(sum(f, p.map(|v| v / 3.0))?)? + tail,
                ))
            })(),
        ],
        GaSubadditive => vec![
            (|| {
                let (mids, _) = means(MeanKind::Geometric)?;
                Ok((f.value(mids[0] + mids[1] + mids[2])?, sum(f, mids)?))
            })(),
            three(),
        ],
        GgSubmultiplicative => vec![
            (|| {
                let (mids, _) = means(MeanKind::Geometric)?;
                Ok((f.log_value(x * y * z)?, log_sum(f, mids)?))
            })(),
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(MeanKind::Geometric)?;
                let tail = inner * log_sum(f, p)?;
                Ok((
                    outer * f.log_value(c)? + tail,
                    outer * log_sum(f, p.map(f64::cbrt))? + tail,
                ))
            })(),
        ],
        HaSuperadditive => vec![
            halved_harmonic_link(f, x, y, z),
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(MeanKind::Harmonic)?;
                let head = outer * f.value(c)?;
                Ok((head + inner * sum(f, p)?, head + inner * f.value(s)?))
            })(),
        ],
        HaSubadditive => vec![
            harmonic_sum_link(f, x, y, z),
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(MeanKind::Harmonic)?;
                let tail = inner * sum(f, p)?;
                Ok((
                    outer * f.value(c)? + tail,
                    3.0 * outer * f.value(c / 3.0)? + tail,
                ))
            })(),
        ],
        HgSuperadditive => vec![halved_harmonic_link(f, x, y, z), three()],
        HgSubadditive => vec![
            harmonic_sum_link(f, x, y, z),
            three(),
            (|| {
                let (outer, inner) = weights()?;
                let (_, c) = means(MeanKind::Harmonic)?;
                let tail = inner * log_sum(f, p)?;
                Ok((
                    outer * f.log_value(c)? + tail,
                    outer * positive_ln(3.0 * f.value(c / 3.0)?)? + tail,
                ))
            })(),
        ],
    }
}

/// `2 Σ f(xz/(x+z))` vs `Σ f(2xz/(x+z))`.
fn halved_harmonic_link(f: &PointFunction, x: f64, y: f64, z: f64) -> Result<(f64, f64)> {
    let (mids, _) = three_point_means(MeanKind::Harmonic, x, y, z)?;
    Ok((2.0 * sum(f, mids.map(|m| m / 2.0))?, sum(f, mids)?))
}

/// `f(Σ 2xz/(x+z))` vs `Σ f(2xz/(x+z))`.
fn harmonic_sum_link(f: &PointFunction, x: f64, y: f64, z: f64) -> Result<(f64, f64)> {
    let (mids, _) = three_point_means(MeanKind::Harmonic, x, y, z)?;
    Ok((f.value(mids[0] + mids[1] + mids[2])?, sum(f, mids)?))
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinkReport {
    pub label: String,
    pub tested: usize,
    pub skipped: usize,
    pub min_margin: f64,
    pub min_relative_margin: f64,
    pub violations: usize,
    pub witness: Option<TripleWitness>,
}

impl LinkReport {
    pub fn holds(&self) -> bool {
        self.violations == 0 && self.tested > 0
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ChainReport {
    pub corollary: Corollary,
    pub sense: Sense,
    pub relation: Relation,
    pub log_domain: bool,
    pub status: Status,
    pub links: Vec<LinkReport>,
}

/// Samples every link without checking hypotheses on `f` or `h`.
pub fn run_chain(
    cor: Corollary,
    h: &WeightFunction,
    f: &PointFunction,
    sense: Sense,
    plan: &SamplePlan,
    tol: f64,
) -> Result<ChainReport> {
    let (lo, hi) = plan.range(f.domain())?;
    let relation = match sense {
        Sense::Convex => Relation::Le,
        Sense::Concave => Relation::Ge,
    };
    let labels = cor.link_labels();
    let mut tallies: Vec<Tally<TripleWitness>> = labels.iter().map(|_| Tally::new()).collect();
    for [x, y, z] in plan.triples(lo, hi) {
        for (tally, link) in tallies.iter_mut().zip(chained_links(cor, h, f, x, y, z)) {
            match link {
                Ok((lhs, rhs)) => {
                    tally.record(relation, lhs, rhs, tol, || TripleWitness {
                        x,
                        y,
                        z,
                        lhs,
                        rhs,
                    });
                }
                Err(e) => tally.skip(e),
            }
        }
    }
    if tallies.iter().all(|t| t.tested == 0) {
        tallies[0].check_usable(cor.as_str())?;
    }
    let links: Vec<LinkReport> = labels
        .iter()
        .zip(tallies)
        .map(|(label, t)| LinkReport {
            label: label.to_string(),
            tested: t.tested,
            skipped: t.skipped,
            min_margin: t.min_margin,
            min_relative_margin: t.min_relative,
            violations: t.violations,
            witness: t.witness,
        })
        .collect();
    let status = if links.iter().all(LinkReport::holds) {
        Status::Holds
    } else {
        Status::Refuted
    };
    Ok(ChainReport {
        corollary: cor,
        sense,
        relation,
        log_domain: cor.log_domain(),
        status,
        links,
    })
}

/// Checks the chain's hypotheses on samples, then runs every link.
/// Errors with `HypothesisMismatch` when `f` or `h` is on the wrong side.
pub fn chained_check(
    cor: Corollary,
    h: &WeightFunction,
    f: &PointFunction,
    sense: Sense,
    plan: &SamplePlan,
    tol: f64,
) -> Result<ChainReport> {
    let (property, required) = cor.f_requirement(sense);
    let class = classify_f(f, property, plan, tol)?;
    if !class.tag.satisfies(required) {
        return Err(Error::HypothesisMismatch(format!(
            "{cor} ({sense}) needs f {} to be {:?}, but {} is {:?} on samples{}",
            match property {
                Property::Additivity => "additivity",
                Property::Multiplicativity => "multiplicativity",
            },
            required,
            f.name(),
            class.tag,
            class
                .witness()
                .map(|w| format!(
                    " (s = {}, t = {}: {} vs {})",
                    w.s, w.t, w.combined, w.separate
                ))
                .unwrap_or_default()
        )));
    }
    let h_required = cor.theorem().required_weight(sense);
    let h_tag = h.additivity().tag;
    if !h_tag.satisfies(h_required) {
        return Err(Error::HypothesisMismatch(format!(
            "{cor} ({sense}) needs h {:?}, but {} is {:?}",
            h_required,
            h.name(),
            h_tag
        )));
    }
    run_chain(cor, h, f, sense, plan, tol)
}

pub fn classify_f(
    f: &PointFunction,
    property: Property,
    plan: &SamplePlan,
    tol: f64,
) -> Result<AdditivityClass> {
    let g = |v: f64| f.value(v).unwrap_or(f64::NAN);
    match property {
        Property::Additivity => classify_additivity(&g, f.domain(), plan, tol),
        Property::Multiplicativity => classify_multiplicativity(&g, f.domain(), plan, tol),
    }
}
