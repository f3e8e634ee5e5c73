//! Corpus of worked examples and equality statements, and the audit that
//! measures each of them on samples.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::chain::{run_chain, Corollary};
use crate::compare::{scale, Relation};
use crate::convexity::{verify_class, ConvexitySpec, Sense};
use crate::error::{Error, Result};
use crate::function::{self, ln_cosh, PointFunction};
use crate::interval::Interval;
use crate::means::MeanKind;
use crate::popoviciu::{
    equality_sides, popoviciu_sides, three_point_means, verify_theorem, EqualityFamily, TheoremId,
};
use crate::report::Witness;
use crate::sampling::SamplePlan;
use crate::weights::WeightFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Expected {
    Holds,
    Equality,
    Suspect,
}

#[derive(Debug, Clone)]
pub enum Claim {
    /// `f` is in the class of `theorem` at weight `h` and satisfies the
    /// resulting three-point inequality.
    Application {
        theorem: TheoremId,
        h: WeightFunction,
        sense: Sense,
    },
    /// `f` is in the class and every link of the chain holds.
    Chain {
        corollary: Corollary,
        h: WeightFunction,
        sense: Sense,
    },
    /// One of the seven identity families.
    Equality { family: EqualityFamily },
    /// The three-point inequality of `theorem` at weight `h` is an identity for `f`.
    TheoremEquality {
        theorem: TheoremId,
        h: WeightFunction,
    },
}

impl Claim {
    pub fn label(&self) -> String {
        match self {
            Claim::Application { theorem, h, sense } => format!("{theorem} [{}] {sense}", h.name()),
            Claim::Chain {
                corollary,
                h,
                sense,
            } => format!("chain {corollary} [{}] {sense}", h.name()),
            Claim::Equality { family } => format!("equality {}", family.as_str()),
            Claim::TheoremEquality { theorem, h } => format!("{theorem} [{}] equality", h.name()),
        }
    }
}

pub type SidesFn = Arc<dyn Fn(f64, f64, f64) -> Result<(f64, f64)> + Send + Sync>;

/// An inequality exactly as printed in a worked example.
#[derive(Clone)]
pub struct PrintedLink {
    pub label: &'static str,
    /// `None` when the printed form has no relation symbol.
    pub relation: Option<Relation>,
    /// Sides are logarithms of the printed products.
    pub log_domain: bool,
    pub eval: SidesFn,
}

impl fmt::Debug for PrintedLink {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("PrintedLink")
            .field("label", &self.label)
            .field("relation", &self.relation)
            .field("log_domain", &self.log_domain)
            .finish()
    }
}

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub id: &'static str,
    pub function: PointFunction,
    pub claim: Claim,
    pub stated_domain: Interval,
    /// Box intersected with the stated domain for sampling.
    pub sampling_box: (f64, f64),
    /// Where the claim appears, in words.
    pub source: &'static str,
    pub expected: Expected,
    pub note: Option<&'static str>,
    pub printed: Vec<PrintedLink>,
}

fn link(
    label: &'static str,
    relation: Option<Relation>,
    log_domain: bool,
    eval: impl Fn(f64, f64, f64) -> Result<(f64, f64)> + Send + Sync + 'static,
) -> PrintedLink {
    PrintedLink {
        label,
        relation,
        log_domain,
        eval: Arc::new(eval),
    }
}

fn arith(x: f64, y: f64, z: f64) -> Result<([f64; 3], f64)> {
    three_point_means(MeanKind::Arithmetic, x, y, z)
}

fn geo(x: f64, y: f64, z: f64) -> Result<([f64; 3], f64)> {
    three_point_means(MeanKind::Geometric, x, y, z)
}

fn harm(x: f64, y: f64, z: f64) -> Result<([f64; 3], f64)> {
    three_point_means(MeanKind::Harmonic, x, y, z)
}

fn total(v: [f64; 3], g: impl Fn(f64) -> f64) -> f64 {
    g(v[0]) + g(v[1]) + g(v[2])
}

fn ln_checked(v: f64) -> Result<f64> {
    if v > 0.0 {
        Ok(v.ln())
    } else {
        Err(Error::Evaluation(format!("logarithm of {v}")))
    }
}

fn total_ln(v: [f64; 3], g: impl Fn(f64) -> f64) -> Result<f64> {
    Ok(ln_checked(g(v[0]))? + ln_checked(g(v[1]))? + ln_checked(g(v[2]))?)
}

fn recip_ln(v: f64) -> f64 {
    1.0 / v.ln()
}

fn positive_from_zero(hi_closed: bool) -> Interval {
    Interval::new(0.0, f64::INFINITY, false, hi_closed)
}

fn above_one() -> Interval {
    Interval::open(1.0, f64::INFINITY)
}

fn from_one() -> Interval {
    Interval::new(1.0, f64::INFINITY, true, false)
}

fn negative() -> Interval {
    Interval::open(f64::NEG_INFINITY, 0.0)
}

const LE: Option<Relation> = Some(Relation::Le);
const GE: Option<Relation> = Some(Relation::Ge);

fn app(theorem: TheoremId, h: WeightFunction, sense: Sense) -> Claim {
    Claim::Application { theorem, h, sense }
}

#[allow(clippy::too_many_arguments)]
fn entry(
    id: &'static str,
    function: PointFunction,
    stated_domain: Interval,
    sampling_box: (f64, f64),
    claim: Claim,
    expected: Expected,
    source: &'static str,
    note: Option<&'static str>,
    printed: Vec<PrintedLink>,
) -> CatalogEntry {
    CatalogEntry {
        id,
        function: function.with_domain(stated_domain),
        claim,
        stated_domain,
        sampling_box,
        source,
        expected,
        note,
        printed,
    }
}

/// Every worked example (one entry per example item) followed by every
/// equality statement.
pub fn builtin_claims() -> Vec<CatalogEntry> {
    use Expected::*;
    use Sense::*;
    use TheoremId::*;
    let id = WeightFunction::identity;
    let rec = WeightFunction::reciprocal;
    let one = WeightFunction::one;
    let pos = positive_from_zero(false);

    vec![
        entry(
            "power-aa-identity",
            function::power(2.0),
            pos,
            (0.0, 10.0),
            app(AA, id(), Convex),
            Holds,
            "example for x^p, p >= 1, under the identity-weight AA inequality (first item)",
            Some("p = 2"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = arith(x, y, z)?;
                Ok((2.0 / 3.0 * total(m, |v| v * v), c * c + total([x, y, z], |v| v * v) / 3.0))
            })],
        ),
        entry(
            "neg-log-aa-identity",
            function::neg_log(),
            Interval::open(0.0, 1.0),
            (0.0, 1.0),
            app(AA, id(), Convex),
            Holds,
            "example for -log x on (0,1) under the identity-weight AA inequality (second item)",
            None,
            vec![link("printed", GE, false, |x, y, z| {
                let s = x + y + z;
                let l = ((x + z) * (y + z) * (x + y)).powi(2);
                Ok((l, 64.0 / 27.0 * s.powi(3) * x * y * z))
            })],
        ),
        entry(
            "log-aa-reciprocal",
            function::log(),
            Interval::open(0.0, 1.0),
            (0.0, 1.0),
            app(AA, rec(), Concave),
            Suspect,
            "example for log x on (0,1) under the reciprocal-weight AA inequality",
            Some("log is negative on (0,1) while the class requires a positive function"),
            vec![link("printed", GE, false, |x, y, z| {
                let s = x + y + z;
                let l = ((x + z) * (y + z) * (x + y)).powi(3);
                Ok((l, 512.0 / 9.0 * s * s * (x * y * z).powi(6)))
            })],
        ),
        entry(
            "log-aa-one",
            function::log(),
            Interval::open(0.0, 1.0),
            (0.0, 1.0),
            app(AA, one(), Concave),
            Suspect,
            "example for log x on (0,1) under the unit-weight AA inequality",
            Some("log is negative on (0,1) although the example calls it non-negative"),
            vec![link("printed", GE, false, |x, y, z| {
                let s = x + y + z;
                Ok(((x + z) * (y + z) * (x + y), 8.0 / 3.0 * s * x * y * z))
            })],
        ),
        entry(
            "cosh-ag-identity",
            function::cosh(),
            Interval::real_line(),
            (-10.0, 10.0),
            app(AG, id(), Convex),
            Holds,
            "example for cosh on the real line under the identity-weight AG inequality",
            None,
            vec![link("printed", LE, true, |x, y, z| {
                let (m, c) = arith(x, y, z)?;
                Ok((2.0 * total(m, ln_cosh), 3.0 * ln_cosh(c) + total([x, y, z], ln_cosh)))
            })],
        ),
        entry(
            "arcsin-ag-reciprocal",
            function::arcsin(),
            Interval::new(0.0, 1.0, false, true),
            (0.0, 1.0),
            app(AG, rec(), Concave),
            Holds,
            "example for arcsin on [0,1] under the reciprocal-weight AG inequality",
            Some("domain opened at 0 where arcsin vanishes"),
            vec![link("printed", GE, true, |x, y, z| {
                let (m, c) = arith(x, y, z)?;
                Ok((
                    3.0 * total_ln(m, f64::asin)?,
                    2.0 * ln_checked(c.asin())? + 6.0 * total_ln([x, y, z], f64::asin)?,
                ))
            })],
        ),
        entry(
            "arcsin-ag-one",
            function::arcsin(),
            Interval::new(0.0, 1.0, false, true),
            (0.0, 1.0),
            app(AG, one(), Concave),
            Suspect,
            "example for arcsin on [0,1] under the unit-weight AG inequality",
            Some("printed form has no relation symbol; both directions are measured"),
            vec![link("printed", None, true, |x, y, z| {
                let (m, c) = arith(x, y, z)?;
                Ok((total_ln(m, f64::asin)?, ln_checked(c.asin())? + total_ln([x, y, z], f64::asin)?))
            })],
        ),
        entry(
            "power-ah-identity",
            function::power(2.0),
            from_one(),
            (1.0, 10.0),
            app(AH, id(), Concave),
            Holds,
            "example for x^p, p >= 1, x >= 1 under the identity-weight AH inequality",
            Some("p = 2"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = arith(x, y, z)?;
                let inv = |v: f64| v.powi(-2);
                Ok((2.0 / 3.0 * total(m, inv), total([x, y, z], inv) / 3.0 + inv(c)))
            })],
        ),
        entry(
            "neg-log-ah-reciprocal",
            function::neg_log(),
            above_one(),
            (1.0, 10.0),
            app(AH, rec(), Convex),
            Suspect,
            "example for -log x, x > 1 under the reciprocal-weight AH inequality",
            Some("-log is negative for x > 1; the printed last term is log of the geometric mean, not its reciprocal"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, _) = arith(x, y, z)?;
                Ok((
                    1.5 * total(m, recip_ln),
                    3.0 * total([x, y, z], recip_ln) + (x * y * z).ln() / 3.0,
                ))
            })],
        ),
        entry(
            "neg-log-ah-one",
            function::neg_log(),
            above_one(),
            (1.0, 10.0),
            app(AH, one(), Convex),
            Suspect,
            "example for -log x, x > 1 under the unit-weight AH inequality",
            Some("-log is negative for x > 1; the printed last term is log of the geometric mean, not its reciprocal"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, _) = arith(x, y, z)?;
                Ok((total(m, recip_ln), total([x, y, z], recip_ln) + (x * y * z).ln() / 3.0))
            })],
        ),
        entry(
            "cosh-ga-identity",
            function::cosh(),
            pos,
            (0.0, 10.0),
            app(GA, id(), Convex),
            Holds,
            "example for cosh on (0,inf) under the identity-weight GA inequality",
            None,
            vec![link("printed", LE, false, |x, y, z| {
                let (m, g) = geo(x, y, z)?;
                Ok((2.0 / 3.0 * total(m, f64::cosh), g.cosh() + total([x, y, z], f64::cosh) / 3.0))
            })],
        ),
        entry(
            "neg-square-ga-reciprocal",
            function::neg_square(),
            pos,
            (0.0, 10.0),
            app(GA, rec(), Concave),
            Suspect,
            "example for -x^2 on (0,inf) under the reciprocal-weight GA inequality",
            Some("-x^2 is negative while the class requires a positive function"),
            vec![link("printed", LE, false, |x, y, z| {
                let (_, g) = geo(x, y, z)?;
                Ok((1.5 * (x * z + y * z + x * y), g * g + 3.0 * (x * x + y * y + z * z)))
            })],
        ),
        entry(
            "neg-square-ga-one",
            function::neg_square(),
            pos,
            (0.0, 10.0),
            app(GA, one(), Concave),
            Suspect,
            "example for -x^2 on (0,inf) under the unit-weight GA inequality",
            Some("-x^2 is negative; the example names the convex class while the inequality is the concave one"),
            vec![link("printed", LE, false, |x, y, z| {
                let (_, g) = geo(x, y, z)?;
                Ok((x * z + y * z + x * y, g * g + x * x + y * y + z * z))
            })],
        ),
        entry(
            "cosh-ga-superadditive-chain",
            function::cosh(),
            pos,
            (0.0, 5.0),
            Claim::Chain { corollary: Corollary::GaSuperadditive, h: id(), sense: Convex },
            Holds,
            "example for cosh on (0,inf) under the GA chain for superadditive functions",
            Some("cosh(s+t) < cosh s + cosh t near 0, so the superadditivity hypothesis fails"),
            vec![
                link("printed three-point", LE, false, |x, y, z| {
                    let (m, g) = geo(x, y, z)?;
                    Ok((2.0 / 3.0 * total(m, f64::cosh), g.cosh() + total([x, y, z], f64::cosh) / 3.0))
                }),
                link("printed superadditive step", LE, false, |x, y, z| {
                    let (_, g) = geo(x, y, z)?;
                    Ok((
                        g.cosh() + total([x, y, z], f64::cosh) / 3.0,
                        g.cosh() + (x + y + z).cosh() / 3.0,
                    ))
                }),
            ],
        ),
        entry(
            "cosh-gg-identity",
            function::cosh(),
            pos,
            (0.0, 10.0),
            app(GG, id(), Convex),
            Holds,
            "example for cosh on (0,inf) under the identity-weight GG inequality",
            None,
            vec![link("printed", LE, true, |x, y, z| {
                let (m, g) = geo(x, y, z)?;
                Ok((2.0 * total(m, ln_cosh), 3.0 * ln_cosh(g) + total([x, y, z], ln_cosh)))
            })],
        ),
        entry(
            "exp-neg-gg-reciprocal",
            function::exp_neg(),
            pos,
            (0.0, 10.0),
            app(GG, rec(), Concave),
            Holds,
            "example for exp(-x) on (0,inf) under the reciprocal-weight GG inequality",
            None,
            vec![link("printed", LE, false, |x, y, z| {
                let (m, g) = geo(x, y, z)?;
                Ok((m[0] + m[1] + m[2], 2.0 / 3.0 * g + 2.0 * (x + y + z)))
            })],
        ),
        entry(
            "exp-neg-gg-one",
            function::exp_neg(),
            pos,
            (0.0, 10.0),
            app(GG, one(), Concave),
            Suspect,
            "example for exp(-x) on (0,inf) under the unit-weight GG inequality",
            Some("the statement pairs the concave class with the convex direction"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, g) = geo(x, y, z)?;
                Ok((m[0] + m[1] + m[2], g + x + y + z))
            })],
        ),
        entry(
            "cosh-gg-supermultiplicative-chain",
            function::cosh(),
            from_one(),
            (1.0, 4.0),
            Claim::Chain { corollary: Corollary::GgSupermultiplicative, h: id(), sense: Convex },
            Holds,
            "example for cosh on [1,inf) under the GG chain for supermultiplicative functions",
            Some("cosh(1)^2 > cosh(1), so cosh is not supermultiplicative from 1"),
            vec![
                link("printed three-point", LE, true, |x, y, z| {
                    let (m, g) = geo(x, y, z)?;
                    Ok((2.0 * total(m, ln_cosh), 3.0 * ln_cosh(g) + total([x, y, z], ln_cosh)))
                }),
                link("printed supermultiplicative step", LE, true, |x, y, z| {
                    let (_, g) = geo(x, y, z)?;
                    Ok((
                        3.0 * ln_cosh(g) + total([x, y, z], ln_cosh),
                        3.0 * ln_cosh(g) + ln_cosh(x * y * z),
                    ))
                }),
            ],
        ),
        entry(
            "cosh-gh-identity",
            function::cosh(),
            from_one(),
            (1.0, 4.0),
            app(GH, id(), Convex),
            Holds,
            "example for cosh, x >= 1 under the identity-weight GH inequality",
            None,
            vec![link("printed", GE, false, |x, y, z| {
                let (m, g) = geo(x, y, z)?;
                let inv = |v: f64| 1.0 / v.cosh();
                Ok((2.0 / 3.0 * total(m, inv), total([x, y, z], inv) / 3.0 + inv(g)))
            })],
        ),
        entry(
            "neg-log-gh-reciprocal",
            function::neg_log(),
            above_one(),
            (1.0, 10.0),
            app(GH, rec(), Convex),
            Suspect,
            "example for -log x, x > 1 under the reciprocal-weight GH inequality",
            Some("-log is negative for x > 1"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, g) = geo(x, y, z)?;
                Ok((1.5 * total(m, recip_ln), 3.0 * total([x, y, z], recip_ln) + recip_ln(g)))
            })],
        ),
        entry(
            "neg-log-gh-one",
            function::neg_log(),
            above_one(),
            (1.0, 10.0),
            app(GH, one(), Convex),
            Suspect,
            "example for -log x, x > 1 under the unit-weight GH inequality",
            Some("-log is negative for x > 1"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, g) = geo(x, y, z)?;
                Ok((total(m, recip_ln), total([x, y, z], recip_ln) + recip_ln(g)))
            })],
        ),
        entry(
            "arctan-ha-identity",
            function::arctan(),
            pos,
            (0.0, 10.0),
            app(HA, id(), Convex),
            Holds,
            "example for arctan on (0,inf) under the identity-weight HA inequality",
            None,
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok((2.0 / 3.0 * total(m, f64::atan), c.atan() + total([x, y, z], f64::atan) / 3.0))
            })],
        ),
        entry(
            "square-ha-reciprocal",
            function::square(),
            negative(),
            (-10.0, 0.0),
            app(HA, rec(), Concave),
            Suspect,
            "example for x^2, x < 0 under the reciprocal-weight HA inequality",
            Some("the parent inequality gives the coefficient 1/2 on the sum of squares, the example prints 1/18"),
            vec![link("printed", GE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok((
                    total(m, |v| (v / 2.0).powi(2)),
                    1.5 * (c / 3.0).powi(2) + (x * x + y * y + z * z) / 18.0,
                ))
            })],
        ),
        entry(
            "square-ha-one",
            function::square(),
            negative(),
            (-10.0, 0.0),
            app(HA, one(), Concave),
            Holds,
            "example for x^2 on (-inf,0) under the unit-weight HA inequality",
            None,
            vec![link("printed", GE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok((
                    total(m, |v| (v / 2.0).powi(2)),
                    2.25 * ((x * x + y * y + z * z) / 9.0 + (c / 3.0).powi(2)),
                ))
            })],
        ),
        entry(
            "exp-hg-identity",
            function::exp(),
            pos,
            (0.0, 10.0),
            app(HG, id(), Convex),
            Suspect,
            "example for exp on (0,inf) under the identity-weight HG inequality",
            Some("the parent inequality gives x + y + z as the last term, the example prints xyz"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok((2.0 * (m[0] + m[1] + m[2]), 3.0 * c + x * y * z))
            })],
        ),
        entry(
            "exp-neg-hg-reciprocal",
            function::exp_neg(),
            pos,
            (0.0, 10.0),
            app(HG, rec(), Concave),
            Suspect,
            "example for exp(-x) on (0,inf) under the reciprocal-weight HG inequality",
            Some("the parent inequality gives x + y + z as the last term, the example prints xyz"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok(((m[0] + m[1] + m[2]) / 2.0, c / 3.0 + x * y * z))
            })],
        ),
        entry(
            "exp-neg-hg-one",
            function::exp_neg(),
            pos,
            (0.0, 10.0),
            app(HG, one(), Concave),
            Holds,
            "example for exp(-x) on (0,inf) under the unit-weight HG inequality",
            None,
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok((m[0] + m[1] + m[2], c + x + y + z))
            })],
        ),
        entry(
            "arctan-hh-identity",
            function::arctan(),
            pos,
            (0.0, 10.0),
            app(HH, id(), Concave),
            Holds,
            "example for arctan on (0,inf) under the identity-weight HH inequality",
            None,
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                let inv = |v: f64| 1.0 / v.atan();
                Ok((2.0 / 3.0 * total(m, inv), total([x, y, z], inv) / 3.0 + inv(c)))
            })],
        ),
        entry(
            "neg-log-hh-reciprocal",
            function::neg_log(),
            above_one(),
            (1.0, 10.0),
            app(HH, rec(), Convex),
            Suspect,
            "example for -log x, x > 1 under the reciprocal-weight HH inequality",
            Some("-log is negative for x > 1"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok((1.5 * total(m, recip_ln), 3.0 * total([x, y, z], recip_ln) + recip_ln(c)))
            })],
        ),
        entry(
            "neg-log-hh-one",
            function::neg_log(),
            pos,
            (0.0, 10.0),
            app(HH, one(), Convex),
            Suspect,
            "example for -log x on (0,inf) under the unit-weight HH inequality",
            Some("-log changes sign at 1 on the stated domain"),
            vec![link("printed", LE, false, |x, y, z| {
                let (m, c) = harm(x, y, z)?;
                Ok((total(m, recip_ln), total([x, y, z], recip_ln) + recip_ln(c)))
            })],
        ),
        // Equality statements.
        entry(
            "affine-aa-equality",
            function::affine(2.0, 3.0),
            pos,
            (0.0, 10.0),
            Claim::TheoremEquality { theorem: AA, h: id() },
            Equality,
            "equality statement for affine functions under the identity-weight AA inequality",
            Some("represented by 2x + 3"),
            vec![],
        ),
        family_entry(
            EqualityFamily::AffineAA,
            "identity-aa-equality",
            "equality statement f(x) = x for the classical three-point inequality",
        ),
        entry(
            "exp-ag-equality",
            function::exp(),
            pos,
            (0.0, 5.0),
            Claim::TheoremEquality { theorem: AG, h: id() },
            Equality,
            "equality statement for e^x under the identity-weight AG inequality",
            None,
            vec![],
        ),
        family_entry(
            EqualityFamily::ReciprocalAH,
            "reciprocal-ah-equality",
            "equality statement for 1/x under the identity-weight AH inequality",
        ),
        family_entry(
            EqualityFamily::LogGA,
            "log-ga-equality",
            "equality statement for log x, x > 1 under the identity-weight GA inequality",
        ),
        entry(
            "exp-gg-equality",
            function::exp(),
            pos,
            (0.0, 5.0),
            Claim::TheoremEquality { theorem: GG, h: id() },
            Suspect,
            "equality statement for e^x under the identity-weight GG inequality",
            Some("log e^x is not affine in log x, so the geometric-mean sides differ"),
            vec![],
        ),
        family_entry(
            EqualityFamily::ReciprocalLogGH,
            "reciprocal-log-gh-equality",
            "equality statement for 1/log x, x > 1 under the identity-weight GH inequality",
        ),
        family_entry(
            EqualityFamily::ReciprocalHA,
            "reciprocal-ha-equality",
            "equality statement for 1/x under the identity-weight HA inequality",
        ),
        family_entry(
            EqualityFamily::ExpReciprocalHG,
            "exp-reciprocal-hg-equality",
            "equality statement for e^(1/x) under the identity-weight HG inequality",
        ),
        family_entry(
            EqualityFamily::IdentityHH,
            "identity-hh-equality",
            "equality statement for f(x) = x, x > 1 under the identity-weight HH inequality",
        ),
    ]
}

fn family_entry(family: EqualityFamily, id: &'static str, source: &'static str) -> CatalogEntry {
    let f = family.function();
    let domain = match family {
        EqualityFamily::AffineAA => positive_from_zero(false),
        EqualityFamily::IdentityHH => above_one(),
        _ => *f.domain(),
    };
    let (lo, hi) = family.sampling_box();
    entry(
        id,
        f,
        domain,
        (lo.max(0.0), hi),
        Claim::Equality { family },
        Expected::Equality,
        source,
        None,
        vec![],
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum AuditVerdict {
    Confirmed,
    RefutedOnSamples,
    DomainViolation,
    Inconclusive,
}

impl AuditVerdict {
    pub fn as_str(self) -> &'static str {
        match self {
            AuditVerdict::Confirmed => "confirmed",
            AuditVerdict::RefutedOnSamples => "refuted-on-samples",
            AuditVerdict::DomainViolation => "domain-violation",
            AuditVerdict::Inconclusive => "inconclusive",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Check {
    /// `lhs <= rhs` or `lhs >= rhs`.
    Inequality,
    /// `|lhs - rhs| <= tol * scale`.
    Residual,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Measurement {
    pub label: String,
    pub check: Check,
    pub relation: Option<Relation>,
    /// Counts towards the verdict.
    pub asserted: bool,
    pub tested: usize,
    pub skipped: usize,
    #[serde(with = "crate::report::nullable")]
    pub min_margin: f64,
    #[serde(with = "crate::report::nullable")]
    pub min_relative_margin: f64,
    #[serde(with = "crate::report::nullable")]
    pub max_abs_residual: f64,
    pub violations: usize,
    pub witness: Option<Witness>,
    pub error: Option<String>,
}

impl Measurement {
    fn failed(
        label: String,
        check: Check,
        relation: Option<Relation>,
        asserted: bool,
        err: Error,
    ) -> Self {
        Measurement {
            label,
            check,
            relation,
            asserted,
            tested: 0,
            skipped: 0,
            min_margin: f64::NAN,
            min_relative_margin: f64::NAN,
            max_abs_residual: f64::NAN,
            violations: 0,
            witness: None,
            error: Some(err.to_string()),
        }
    }

    pub fn holds(&self) -> bool {
        self.error.is_none() && self.violations == 0 && self.tested > 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PositivityWitness {
    pub x: f64,
    pub fx: Option<f64>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AuditFinding {
    pub entry: String,
    pub function: String,
    pub claim: String,
    pub stated_domain: String,
    pub source: String,
    pub expected: Expected,
    pub verdict: AuditVerdict,
    pub witness: Option<Witness>,
    pub positivity_violation: Option<PositivityWitness>,
    pub note: Option<String>,
    pub measurements: Vec<Measurement>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum AuditFilter {
    #[default]
    All,
    EqualityFamilies,
    Suspect,
}

impl AuditFilter {
    pub fn accepts(self, entry: &CatalogEntry) -> bool {
        match self {
            AuditFilter::All => true,
            AuditFilter::EqualityFamilies => matches!(entry.claim, Claim::Equality { .. }),
            AuditFilter::Suspect => entry.expected == Expected::Suspect,
        }
    }
}

pub fn run_audit(plan: &SamplePlan, tol: f64) -> Vec<AuditFinding> {
    run_audit_filtered(AuditFilter::All, plan, tol)
}

pub fn run_audit_filtered(filter: AuditFilter, plan: &SamplePlan, tol: f64) -> Vec<AuditFinding> {
    builtin_claims()
        .iter()
        .filter(|e| filter.accepts(e))
        .map(|e| audit_entry(e, plan, tol))
        .collect()
}

/// Measures one entry. Never fails; errors are recorded in the finding.
pub fn audit_entry(entry: &CatalogEntry, plan: &SamplePlan, tol: f64) -> AuditFinding {
    let plan = plan
        .clone()
        .with_bounds(entry.sampling_box.0, entry.sampling_box.1);
    let f = &entry.function;
    let suspect = entry.expected == Expected::Suspect;
    let mut ms = Vec::new();

    match &entry.claim {
        Claim::Application { theorem, h, sense } => {
            let spec =
                ConvexitySpec::new(theorem.arg_mean(), theorem.val_mean(), h.clone(), *sense);
            ms.push(class_measurement(&spec, f, &plan, tol, true));
            ms.push(theorem_measurement(
                *theorem, h, f, *sense, &plan, tol, true,
            ));
            if suspect {
                let flipped =
                    ConvexitySpec::new(spec.arg_mean, spec.val_mean, h.clone(), sense.flip());
                ms.push(class_measurement(&flipped, f, &plan, tol, false));
                ms.push(theorem_measurement(
                    *theorem,
                    h,
                    f,
                    sense.flip(),
                    &plan,
                    tol,
                    false,
                ));
            }
        }
        Claim::Chain {
            corollary,
            h,
            sense,
        } => {
            let t = corollary.theorem();
            let spec = ConvexitySpec::new(t.arg_mean(), t.val_mean(), h.clone(), *sense);
            ms.push(class_measurement(&spec, f, &plan, tol, true));
            ms.extend(chain_measurements(*corollary, h, f, *sense, &plan, tol));
        }
        Claim::Equality { family } => {
            let fam = *family;
            ms.push(residual_measurement(
                format!("identity {}", fam.as_str()),
                f,
                &plan,
                tol,
                true,
                move |x, y, z| equality_sides(fam, x, y, z),
            ));
        }
        Claim::TheoremEquality { theorem, h } => {
            let (t, h2, g) = (*theorem, h.clone(), f.clone());
            ms.push(residual_measurement(
                format!("{t} [{}] identity", h.name()),
                f,
                &plan,
                tol,
                true,
                move |x, y, z| popoviciu_sides(t, &h2, &g, x, y, z),
            ));
        }
    }

    for p in &entry.printed {
        match p.relation {
            Some(rel) => {
                ms.push(printed_measurement(p, rel, f, &plan, tol, true));
                if suspect {
                    ms.push(printed_measurement(p, rel.flip(), f, &plan, tol, false));
                }
            }
            None => {
                ms.push(printed_measurement(p, Relation::Le, f, &plan, tol, false));
                ms.push(printed_measurement(p, Relation::Ge, f, &plan, tol, false));
            }
        }
    }

    let positivity = positivity_violation(f, &plan);
    let asserted: Vec<&Measurement> = ms.iter().filter(|m| m.asserted).collect();
    let (verdict, witness) = if positivity.is_some() {
        (AuditVerdict::DomainViolation, None)
    } else if let Some(m) = asserted
        .iter()
        .find(|m| m.error.is_none() && m.violations > 0)
    {
        (AuditVerdict::RefutedOnSamples, m.witness)
    } else if asserted.is_empty() || asserted.iter().any(|m| m.error.is_some() || m.tested == 0) {
        (AuditVerdict::Inconclusive, None)
    } else {
        (AuditVerdict::Confirmed, None)
    };

    AuditFinding {
        entry: entry.id.to_string(),
        function: f.name().to_string(),
        claim: entry.claim.label(),
        stated_domain: entry.stated_domain.to_string(),
        source: entry.source.to_string(),
        expected: entry.expected,
        verdict,
        witness,
        positivity_violation: positivity,
        note: entry.note.map(str::to_string),
        measurements: ms,
    }
}

fn positivity_violation(f: &PointFunction, plan: &SamplePlan) -> Option<PositivityWitness> {
    let (lo, hi) = plan.range(f.domain()).ok()?;
    plan.points(lo, hi)
        .into_iter()
        .find_map(|x| match f.value(x) {
            Ok(v) if v > 0.0 => None,
            Ok(v) => Some(PositivityWitness { x, fx: Some(v) }),
            Err(_) => Some(PositivityWitness { x, fx: None }),
        })
}

fn class_measurement(
    spec: &ConvexitySpec,
    f: &PointFunction,
    plan: &SamplePlan,
    tol: f64,
    asserted: bool,
) -> Measurement {
    let label = format!("class {}", spec.label());
    match verify_class(spec, f, plan, tol) {
        Ok(v) => Measurement {
            label,
            check: Check::Inequality,
            relation: Some(spec.relation()),
            asserted,
            tested: v.samples_tested,
            skipped: v.skipped,
            min_margin: v.min_margin,
            min_relative_margin: v.min_relative_margin,
            max_abs_residual: f64::NAN,
            violations: v.violations,
            witness: v.witness.map(Witness::from),
            error: None,
        },
        Err(e) => Measurement::failed(label, Check::Inequality, Some(spec.relation()), asserted, e),
    }
}

fn theorem_measurement(
    id: TheoremId,
    h: &WeightFunction,
    f: &PointFunction,
    sense: Sense,
    plan: &SamplePlan,
    tol: f64,
    asserted: bool,
) -> Measurement {
    let label = format!("three-point {id} [{}] {sense}", h.name());
    match verify_theorem(id, h, f, sense, plan, tol) {
        Ok(r) => Measurement {
            label,
            check: Check::Inequality,
            relation: Some(r.relation),
            asserted,
            tested: r.triples_tested,
            skipped: r.skipped,
            min_margin: r.min_margin,
            min_relative_margin: r.min_relative_margin,
            max_abs_residual: r.max_abs_residual,
            violations: r.violations,
            witness: r.witnesses.first().copied().map(Witness::from),
            error: None,
        },
        Err(e) => Measurement::failed(
            label,
            Check::Inequality,
            Some(id.relation(sense)),
            asserted,
            e,
        ),
    }
}

fn chain_measurements(
    cor: Corollary,
    h: &WeightFunction,
    f: &PointFunction,
    sense: Sense,
    plan: &SamplePlan,
    tol: f64,
) -> Vec<Measurement> {
    let relation = match sense {
        Sense::Convex => Relation::Le,
        Sense::Concave => Relation::Ge,
    };
    match run_chain(cor, h, f, sense, plan, tol) {
        Ok(r) => r
            .links
            .into_iter()
            .map(|l| Measurement {
                label: format!("chain {cor}: {}", l.label),
                check: Check::Inequality,
                relation: Some(relation),
                asserted: true,
                tested: l.tested,
                skipped: l.skipped,
                min_margin: l.min_margin,
                min_relative_margin: l.min_relative_margin,
                max_abs_residual: f64::NAN,
                violations: l.violations,
                witness: l.witness.map(Witness::from),
                error: (l.tested == 0).then(|| "no usable samples".to_string()),
            })
            .collect(),
        Err(e) => vec![Measurement::failed(
            format!("chain {cor}"),
            Check::Inequality,
            Some(relation),
            true,
            e,
        )],
    }
}

/// Shared triple loop for printed forms and residuals.
fn sample_triples(
    f: &PointFunction,
    plan: &SamplePlan,
    eval: impl Fn(f64, f64, f64) -> Result<(f64, f64)>,
    mut visit: impl FnMut([f64; 3], f64, f64),
) -> Result<(usize, usize)> {
    let (lo, hi) = plan.range(f.domain())?;
    let (mut tested, mut skipped) = (0, 0);
    let mut first_error = None;
    for p in plan.triples(lo, hi) {
        if !p.iter().all(|&v| f.domain().contains(v)) {
            skipped += 1;
            continue;
        }
        match eval(p[0], p[1], p[2]) {
            Ok((l, r)) if l.is_finite() && r.is_finite() => {
                tested += 1;
                visit(p, l, r);
            }
            Ok((l, r)) => {
                skipped += 1;
                first_error
                    .get_or_insert_with(|| Error::Evaluation(format!("non-finite sides {l}, {r}")));
            }
            Err(e) => {
                skipped += 1;
                first_error.get_or_insert(e);
            }
        }
    }
    if tested == 0 {
        return Err(first_error
            .unwrap_or_else(|| Error::NoUsableSamples("no triple inside the domain".into())));
    }
    Ok((tested, skipped))
}

fn printed_measurement(
    p: &PrintedLink,
    rel: Relation,
    f: &PointFunction,
    plan: &SamplePlan,
    tol: f64,
    asserted: bool,
) -> Measurement {
    let label = format!("{} {}", p.label, rel.symbol());
    let mut min_margin = f64::INFINITY;
    let mut min_rel = f64::INFINITY;
    let mut violations = 0;
    let mut witness = None;
    let result = sample_triples(
        f,
        plan,
        |x, y, z| (p.eval)(x, y, z),
        |[x, y, z], l, r| {
            let m = rel.margin(l, r);
            min_margin = min_margin.min(m);
            min_rel = min_rel.min(m / scale(l, r));
            if rel.violated(l, r, tol) {
                violations += 1;
                witness.get_or_insert(Witness {
                    x,
                    y,
                    z: Some(z),
                    t: None,
                    lhs: l,
                    rhs: r,
                });
            }
        },
    );
    match result {
        Ok((tested, skipped)) => Measurement {
            label,
            check: Check::Inequality,
            relation: Some(rel),
            asserted,
            tested,
            skipped,
            min_margin,
            min_relative_margin: min_rel,
            max_abs_residual: f64::NAN,
            violations,
            witness,
            error: None,
        },
        Err(e) => Measurement::failed(label, Check::Inequality, Some(rel), asserted, e),
    }
}

fn residual_measurement(
    label: String,
    f: &PointFunction,
    plan: &SamplePlan,
    tol: f64,
    asserted: bool,
    eval: impl Fn(f64, f64, f64) -> Result<(f64, f64)>,
) -> Measurement {
    let mut max_abs: f64 = 0.0;
    let mut min_rel = f64::INFINITY;
    let mut violations = 0;
    let mut witness = None;
    let result = sample_triples(f, plan, eval, |[x, y, z], l, r| {
        let d = (l - r).abs();
        max_abs = max_abs.max(d);
        min_rel = min_rel.min(-d / scale(l, r));
        if d > tol * scale(l, r) {
            violations += 1;
            witness.get_or_insert(Witness {
                x,
                y,
                z: Some(z),
                t: None,
                lhs: l,
                rhs: r,
            });
        }
    });
    match result {
        Ok((tested, skipped)) => Measurement {
            label,
            check: Check::Residual,
            relation: None,
            asserted,
            tested,
            skipped,
            min_margin: -max_abs,
            min_relative_margin: min_rel,
            max_abs_residual: max_abs,
            violations,
            witness,
            error: None,
        },
        Err(e) => Measurement::failed(label, Check::Residual, None, asserted, e),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct AuditSummary {
    pub confirmed: usize,
    pub refuted_on_samples: usize,
    pub domain_violation: usize,
    pub inconclusive: usize,
}

pub fn summarize(findings: &[AuditFinding]) -> AuditSummary {
    let mut s = AuditSummary::default();
    for f in findings {
        match f.verdict {
            AuditVerdict::Confirmed => s.confirmed += 1,
            AuditVerdict::RefutedOnSamples => s.refuted_on_samples += 1,
            AuditVerdict::DomainViolation => s.domain_violation += 1,
            AuditVerdict::Inconclusive => s.inconclusive += 1,
        }
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    fn finding(id: &str) -> AuditFinding {
        let e = builtin_claims().into_iter().find(|e| e.id == id).unwrap();
        audit_entry(&e, &SamplePlan::small(), 1e-9)
    }

    #[test]
    fn corpus_shape() {
        let all = builtin_claims();
        assert_eq!(all.len(), 40);
        let mut ids: Vec<_> = all.iter().map(|e| e.id).collect();
        ids.sort();
        ids.dedup();
        assert_eq!(ids.len(), 40);
        assert_eq!(
            all.iter()
                .filter(|e| AuditFilter::EqualityFamilies.accepts(e))
                .count(),
            7
        );
        let theorems: std::collections::HashSet<_> = all
            .iter()
            .map(|e| match &e.claim {
                Claim::Application { theorem, .. } | Claim::TheoremEquality { theorem, .. } => {
                    *theorem
                }
                Claim::Chain { corollary, .. } => corollary.theorem(),
                Claim::Equality { family } => family.theorem(),
            })
            .collect();
        assert_eq!(theorems.len(), 9);
    }

    #[test]
    fn builtin_lookups() {
        let f = builtin_claims()
            .into_iter()
            .find(|e| e.id == "identity-hh-equality")
            .unwrap();
        assert_eq!(f.expected, Expected::Equality);
        let s = builtin_claims()
            .into_iter()
            .find(|e| e.id == "neg-square-ga-reciprocal")
            .unwrap();
        assert_eq!(s.expected, Expected::Suspect);
        let p = builtin_claims()
            .into_iter()
            .find(|e| e.id == "power-aa-identity")
            .unwrap();
        assert_eq!(p.expected, Expected::Holds);
    }

    #[test]
    fn audit_examples() {
        assert_eq!(finding("cosh-ag-identity").verdict, AuditVerdict::Confirmed);
        let r = finding("reciprocal-ah-equality");
        assert_eq!(r.verdict, AuditVerdict::Confirmed);
        assert!(r.measurements[0].max_abs_residual <= 1e-12);
        let n = finding("neg-square-ga-reciprocal");
        assert_eq!(n.verdict, AuditVerdict::DomainViolation);
        assert!(n.positivity_violation.unwrap().fx.unwrap() < 0.0);
    }

    #[test]
    fn missing_relation_is_measured_both_ways() {
        let a = finding("arcsin-ag-one");
        let printed: Vec<_> = a
            .measurements
            .iter()
            .filter(|m| m.label.starts_with("printed"))
            .collect();
        assert_eq!(printed.len(), 2);
        assert!(printed.iter().all(|m| !m.asserted));
    }

    #[test]
    fn exp_is_an_equality_for_ag_only() {
        assert_eq!(finding("exp-ag-equality").verdict, AuditVerdict::Confirmed);
        let f = finding("exp-gg-equality");
        assert!(f.measurements[0].violations > 0);
        assert_eq!(f.verdict, AuditVerdict::RefutedOnSamples);
    }

    #[test]
    fn audit_is_deterministic() {
        let plan = SamplePlan::small();
        let a = run_audit_filtered(AuditFilter::Suspect, &plan, 1e-9);
        let b = run_audit_filtered(AuditFilter::Suspect, &plan, 1e-9);
        assert_eq!(format!("{a:?}"), format!("{b:?}"));
    }
}
