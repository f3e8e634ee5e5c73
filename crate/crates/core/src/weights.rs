//! Weight functions `h` and the additive / multiplicative classifiers.

use std::fmt;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::compare::scale;
use crate::error::{Error, Result};
use crate::interval::Interval;
use crate::sampling::SamplePlan;

/// Weights are evaluated on `[0, 2]` so that `h(s + t)` and `h(2 - s - t)`
/// exist for every `s, t` in `[0, 1]`.
pub const WEIGHT_DOMAIN: (f64, f64) = (0.0, 2.0);

pub type ScalarFn = Arc<dyn Fn(f64) -> f64 + Send + Sync>;

#[derive(Clone)]
pub enum WeightFamily {
    Identity,
    Power(f64),
    Reciprocal,
    /// `h ≡ 1`
    Constant,
    Custom(ScalarFn),
}

impl fmt::Debug for WeightFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            WeightFamily::Identity => f.write_str("Identity"),
            WeightFamily::Power(r) => write!(f, "Power({r})"),
            WeightFamily::Reciprocal => f.write_str("Reciprocal"),
            WeightFamily::Constant => f.write_str("Constant"),
            WeightFamily::Custom(_) => f.write_str("Custom(..)"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct WeightFunction {
    name: String,
    family: WeightFamily,
}

impl WeightFunction {
    pub fn identity() -> Self {
        WeightFunction {
            name: "identity".into(),
            family: WeightFamily::Identity,
        }
    }

    pub fn power(r: f64) -> Self {
        WeightFunction {
            name: format!("power:{r}"),
            family: WeightFamily::Power(r),
        }
    }

    pub fn reciprocal() -> Self {
        WeightFunction {
            name: "reciprocal".into(),
            family: WeightFamily::Reciprocal,
        }
    }

    pub fn one() -> Self {
        WeightFunction {
            name: "one".into(),
            family: WeightFamily::Constant,
        }
    }

    pub fn custom(name: impl Into<String>, h: impl Fn(f64) -> f64 + Send + Sync + 'static) -> Self {
        WeightFunction {
            name: name.into(),
            family: WeightFamily::Custom(Arc::new(h)),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn family(&self) -> &WeightFamily {
        &self.family
    }

    /// Evaluates `h(t)` for `t` in `[0, 2]`.
    pub fn eval(&self, t: f64) -> Result<f64> {
        if !(WEIGHT_DOMAIN.0..=WEIGHT_DOMAIN.1).contains(&t) {
            return Err(Error::domain(format!("weight {} argument", self.name), t));
        }
        let value = match &self.family {
            WeightFamily::Identity => t,
            WeightFamily::Power(r) => {
                if t == 0.0 && *r < 0.0 {
                    return Err(Error::domain(format!("pole of {}", self.name), t));
                }
                t.powf(*r)
            }
            WeightFamily::Reciprocal => {
                if t == 0.0 {
                    return Err(Error::domain("pole of reciprocal weight", t));
                }
                1.0 / t
            }
            WeightFamily::Constant => 1.0,
            WeightFamily::Custom(h) => h(t),
        };
        if !value.is_finite() {
            return Err(Error::Evaluation(format!("{}({t}) = {value}", self.name)));
        }
        if t > 0.0 && t < 1.0 && value <= 0.0 {
            return Err(Error::domain(
                format!("weight {} must be positive on (0,1); value at t", self.name),
                t,
            ));
        }
        Ok(value)
    }

    /// Additivity class of `h`: analytic for the named families, sampled on
    /// `(0, 2)` for custom weights.
    pub fn additivity(&self) -> AdditivityClass {
        match &self.family {
            WeightFamily::Identity => power_weight_class(1.0),
            WeightFamily::Power(r) => power_weight_class(*r),
            WeightFamily::Reciprocal => power_weight_class(-1.0),
            WeightFamily::Constant => power_weight_class(0.0),
            WeightFamily::Custom(h) => {
                let h = h.clone();
                classify_additivity(
                    &|t| h(t),
                    &Interval::open(WEIGHT_DOMAIN.0, WEIGHT_DOMAIN.1),
                    &SamplePlan::small(),
                    crate::compare::DEFAULT_TOL,
                )
                .unwrap_or(AdditivityClass::analytic(AdditivityTag::Mixed))
            }
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum AdditivityTag {
    Additive,
    Subadditive,
    Superadditive,
    Mixed,
}

/// A one-sided requirement stated as a hypothesis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Requirement {
    Subadditive,
    Superadditive,
}

impl AdditivityTag {
    pub fn satisfies(self, req: Requirement) -> bool {
        matches!(
            (self, req),
            (AdditivityTag::Additive, _)
                | (AdditivityTag::Subadditive, Requirement::Subadditive)
                | (AdditivityTag::Superadditive, Requirement::Superadditive)
        )
    }
}

/// Pair `(s, t)` with `combined = g(s ∘ t)` and `separate = g(s) ⋆ g(t)`,
/// where `∘, ⋆` are `+, +` for additivity and `·, ·` for multiplicativity.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PairWitness {
    pub s: f64,
    pub t: f64,
    pub combined: f64,
    pub separate: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct AdditivityClass {
    pub tag: AdditivityTag,
    /// First pair with `combined < separate` strictly (breaks superadditivity).
    pub below: Option<PairWitness>,
    /// First pair with `combined > separate` strictly (breaks subadditivity).
    pub above: Option<PairWitness>,
    /// Zero for analytic classifications.
    pub samples_tested: usize,
}

impl AdditivityClass {
    fn analytic(tag: AdditivityTag) -> Self {
        AdditivityClass {
            tag,
            below: None,
            above: None,
            samples_tested: 0,
        }
    }

    /// The witness that demonstrates the complementary property fails.
    pub fn witness(&self) -> Option<PairWitness> {
        match self.tag {
            AdditivityTag::Subadditive => self.below,
            AdditivityTag::Superadditive => self.above,
            AdditivityTag::Mixed => self.below.or(self.above),
            AdditivityTag::Additive => None,
        }
    }
}

/// Classification of `t^k` on `(0, ∞)`. For `k < 0`, `(s+t)^k < s^k`, so the
/// power is subadditive; `0 <= k < 1` is concave through the origin (or
/// constant), hence subadditive; `k > 1` is superadditive.
pub fn power_weight_class(k: f64) -> AdditivityClass {
    let tag = if k == 1.0 {
        AdditivityTag::Additive
    } else if k > 1.0 {
        AdditivityTag::Superadditive
    } else {
        AdditivityTag::Subadditive
    };
    AdditivityClass::analytic(tag)
}

/// The widely quoted `x^k` additivity table. It assigns
/// `k ∈ (-1, 0)` to the superadditive side, which sampling contradicts.
pub fn printed_power_table(k: f64) -> AdditivityTag {
    if k == 1.0 {
        AdditivityTag::Additive
    } else if k <= -1.0 || (0.0..1.0).contains(&k) {
        AdditivityTag::Subadditive
    } else {
        AdditivityTag::Superadditive
    }
}

pub fn classify_additivity(
    g: &dyn Fn(f64) -> f64,
    domain: &Interval,
    plan: &SamplePlan,
    tol: f64,
) -> Result<AdditivityClass> {
    classify_pairs(g, domain, plan, tol, |s, t| s + t, |a, b| a + b, "sum")
}

/// Multiplicative analogue: compares `f(xy)` against `f(x) f(y)`.
/// `Subadditive` reads as submultiplicative, and so on.
pub fn classify_multiplicativity(
    f: &dyn Fn(f64) -> f64,
    domain: &Interval,
    plan: &SamplePlan,
    tol: f64,
) -> Result<AdditivityClass> {
    classify_pairs(f, domain, plan, tol, |s, t| s * t, |a, b| a * b, "product")
}

fn classify_pairs(
    g: &dyn Fn(f64) -> f64,
    domain: &Interval,
    plan: &SamplePlan,
    tol: f64,
    join: impl Fn(f64, f64) -> f64,
    combine: impl Fn(f64, f64) -> f64,
    what: &str,
) -> Result<AdditivityClass> {
    let (lo, hi) = plan.range(domain)?;
    let mut below = None;
    let mut above = None;
    let mut tested = 0;
    for [s, t] in plan.pairs(lo, hi) {
        let joined = join(s, t);
        if !domain.contains(joined) {
            continue;
        }
        let combined = g(joined);
        let separate = combine(g(s), g(t));
        if !combined.is_finite() || !separate.is_finite() {
            continue;
        }
        tested += 1;
        let gap = combined - separate;
        let slack = tol * scale(combined, separate);
        let w = PairWitness {
            s,
            t,
            combined,
            separate,
        };
        if gap < -slack && below.is_none() {
            below = Some(w);
        } else if gap > slack && above.is_none() {
            above = Some(w);
        }
    }
    if tested == 0 {
        return Err(Error::NoUsableSamples(format!(
            "no sampled pair has its {what} inside {domain}"
        )));
    }
    let tag = match (below.is_some(), above.is_some()) {
        (false, false) => AdditivityTag::Additive,
        (true, false) => AdditivityTag::Subadditive,
        (false, true) => AdditivityTag::Superadditive,
        (true, true) => AdditivityTag::Mixed,
    };
    Ok(AdditivityClass {
        tag,
        below,
        above,
        samples_tested: tested,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Interval {
        Interval::open(0.0, 1.0)
    }

    #[test]
    fn eval_examples() {
        assert_eq!(WeightFunction::identity().eval(0.5).unwrap(), 0.5);
        assert_eq!(WeightFunction::power(2.0).eval(1.5).unwrap(), 2.25);
        assert!(matches!(
            WeightFunction::reciprocal().eval(0.0),
            Err(Error::Domain { .. })
        ));
        assert!(WeightFunction::identity().eval(2.5).is_err());
        assert!(WeightFunction::identity().eval(-0.1).is_err());
        assert_eq!(WeightFunction::one().eval(1.5).unwrap(), 1.0);
        assert!(WeightFunction::power(-1.0).eval(0.0).is_err());
    }

    #[test]
    fn theorem_arguments_are_evaluable() {
        for h in [
            WeightFunction::identity(),
            WeightFunction::power(0.5),
            WeightFunction::reciprocal(),
            WeightFunction::one(),
        ] {
            assert!(h.eval(0.5).unwrap() > 0.0);
            assert!(h.eval(1.5).unwrap() > 0.0);
        }
    }

    #[test]
    fn custom_weight_must_be_positive_inside_unit_interval() {
        let h = WeightFunction::custom("shifted", |t| t - 0.5);
        assert!(h.eval(0.25).is_err());
        assert_eq!(h.eval(1.5).unwrap(), 1.0);
    }

    #[test]
    fn sampled_additivity_of_powers() {
        let plan = SamplePlan::default();
        let tol = 1e-9;
        let c1 = classify_additivity(&|t| t, &unit(), &plan, tol).unwrap();
        assert_eq!(c1.tag, AdditivityTag::Additive);
        let c2 = classify_additivity(&|t: f64| t.sqrt(), &unit(), &plan, tol).unwrap();
        assert_eq!(c2.tag, AdditivityTag::Subadditive);
        let w = c2.witness().unwrap();
        assert!(w.combined < w.separate);
        let c3 = classify_additivity(&|t| t * t, &unit(), &plan, tol).unwrap();
        assert_eq!(c3.tag, AdditivityTag::Superadditive);
    }

    #[test]
    fn printed_table_disagrees_on_negative_fractional_exponents() {
        assert_eq!(printed_power_table(1.0), AdditivityTag::Additive);
        assert_eq!(printed_power_table(-2.0), AdditivityTag::Subadditive);
        assert_eq!(printed_power_table(-1.0), AdditivityTag::Subadditive);
        assert_eq!(printed_power_table(0.5), AdditivityTag::Subadditive);
        assert_eq!(printed_power_table(-0.5), AdditivityTag::Superadditive);
        assert_eq!(printed_power_table(2.0), AdditivityTag::Superadditive);

        assert_eq!(power_weight_class(-0.5).tag, AdditivityTag::Subadditive);
        // 0.25^-0.5 + 0.25^-0.5 = 4 > 0.5^-0.5
        let c = classify_additivity(
            &|t: f64| t.powf(-0.5),
            &unit(),
            &SamplePlan::default(),
            1e-9,
        )
        .unwrap();
        assert_eq!(c.tag, AdditivityTag::Subadditive);
    }

    #[test]
    fn power_table_examples() {
        assert_eq!(power_weight_class(1.0).tag, AdditivityTag::Additive);
        assert_eq!(power_weight_class(-2.0).tag, AdditivityTag::Subadditive);
        assert_eq!(power_weight_class(3.0).tag, AdditivityTag::Superadditive);
    }

    #[test]
    fn multiplicativity_examples() {
        let plan = SamplePlan::default().with_bounds(0.0, 10.0);
        let id = classify_multiplicativity(&|x| x, &Interval::positive(), &plan, 1e-9).unwrap();
        assert_eq!(id.tag, AdditivityTag::Additive);

        // exp(-x): exp(-0.25) > exp(-1) but exp(-9) < exp(-6)
        let decay =
            classify_multiplicativity(&|x: f64| (-x).exp(), &Interval::positive(), &plan, 1e-9)
                .unwrap();
        assert_eq!(decay.tag, AdditivityTag::Mixed);
        assert!(decay.above.is_some() && decay.below.is_some());

        // cosh(1*1) < cosh(1)^2 while cosh(2*2) > cosh(2)^2: mixed, not supermultiplicative
        let plan = SamplePlan::default().with_bounds(1.0, 10.0);
        let c = classify_multiplicativity(
            &f64::cosh,
            &Interval::new(1.0, f64::INFINITY, true, false),
            &plan,
            1e-9,
        )
        .unwrap();
        assert_eq!(c.tag, AdditivityTag::Mixed);
        let b = c.below.unwrap();
        assert_eq!((b.s, b.t), (1.0, 1.0));
    }

    #[test]
    fn no_pair_inside_domain_is_an_error() {
        let plan = SamplePlan::small();
        let err = classify_additivity(&|t| t, &Interval::open(10.0, 11.0), &plan, 1e-9);
        assert!(matches!(err, Err(Error::NoUsableSamples(_))));
    }

    #[test]
    fn requirement_matching() {
        assert!(AdditivityTag::Additive.satisfies(Requirement::Subadditive));
        assert!(AdditivityTag::Additive.satisfies(Requirement::Superadditive));
        assert!(!AdditivityTag::Mixed.satisfies(Requirement::Superadditive));
        assert!(!AdditivityTag::Subadditive.satisfies(Requirement::Superadditive));
    }
}
