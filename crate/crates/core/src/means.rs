//! Classical and weighted arithmetic, geometric and harmonic means.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::compare::scale;
use crate::error::{Error, Result};
use crate::weights::WeightFunction;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum MeanKind {
    Arithmetic,
    Geometric,
    Harmonic,
}

impl MeanKind {
    pub const ALL: [MeanKind; 3] = [
        MeanKind::Arithmetic,
        MeanKind::Geometric,
        MeanKind::Harmonic,
    ];

    pub fn letter(self) -> char {
        match self {
            MeanKind::Arithmetic => 'A',
            MeanKind::Geometric => 'G',
            MeanKind::Harmonic => 'H',
        }
    }

    pub fn from_letter(c: char) -> Option<MeanKind> {
        match c.to_ascii_uppercase() {
            'A' => Some(MeanKind::Arithmetic),
            'G' => Some(MeanKind::Geometric),
            'H' => Some(MeanKind::Harmonic),
            _ => None,
        }
    }
}

impl fmt::Display for MeanKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

#[derive(Debug, Clone)]
pub struct MeanEvalContext {
    pub kind: MeanKind,
    pub h: WeightFunction,
    pub t: f64,
}

impl MeanEvalContext {
    pub fn new(kind: MeanKind, h: WeightFunction, t: f64) -> Result<Self> {
        if !(0.0..=1.0).contains(&t) {
            return Err(Error::domain("mean parameter t", t));
        }
        Ok(MeanEvalContext { kind, h, t })
    }
}

fn require_positive(what: &str, v: f64) -> Result<()> {
    if v > 0.0 && v.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(what, v))
    }
}

/// `A_h(a,b) = h(1-t) a + h(t) b`, `G_h(a,b) = a^{h(1-t)} b^{h(t)}`,
/// `H_h(a,b) = ab / (h(t) a + h(1-t) b)`.
pub fn mean_eval(ctx: &MeanEvalContext, a: f64, b: f64) -> Result<f64> {
    require_positive("mean argument a", a)?;
    require_positive("mean argument b", b)?;
    if !(0.0..=1.0).contains(&ctx.t) {
        return Err(Error::domain("mean parameter t", ctx.t));
    }
    let wt = ctx.h.eval(ctx.t)?;
    let ws = ctx.h.eval(1.0 - ctx.t)?;
    match ctx.kind {
        MeanKind::Arithmetic => Ok(ws * a + wt * b),
        MeanKind::Geometric => Ok((ws * a.ln() + wt * b.ln()).exp()),
        MeanKind::Harmonic => {
            let denom = wt * a + ws * b;
            if denom == 0.0 {
                return Err(Error::DivisionByZero("harmonic mean denominator"));
            }
            Ok(a * b / denom)
        }
    }
}

pub fn mean_classic(kind: MeanKind, a: f64, b: f64) -> Result<f64> {
    require_positive("mean argument a", a)?;
    require_positive("mean argument b", b)?;
    Ok(match kind {
        MeanKind::Arithmetic => 0.5 * (a + b),
        MeanKind::Geometric => (a * b).sqrt(),
        MeanKind::Harmonic => 2.0 * a * b / (a + b),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MeanChain {
    pub harmonic: f64,
    pub geometric: f64,
    pub arithmetic: f64,
    /// `G_h - H_h`
    pub lower_margin: f64,
    /// `A_h - G_h`
    pub upper_margin: f64,
    pub holds: bool,
}

/// Evaluates `H_h <= G_h <= A_h` at a single point.
pub fn check_am_gm_hm(h: &WeightFunction, t: f64, a: f64, b: f64, tol: f64) -> Result<MeanChain> {
    let at = |kind| mean_eval(&MeanEvalContext::new(kind, h.clone(), t)?, a, b);
    let harmonic = at(MeanKind::Harmonic)?;
    let geometric = at(MeanKind::Geometric)?;
    let arithmetic = at(MeanKind::Arithmetic)?;
    let lower_margin = geometric - harmonic;
    let upper_margin = arithmetic - geometric;
    let holds = lower_margin >= -tol * scale(harmonic, geometric)
        && upper_margin >= -tol * scale(geometric, arithmetic);
    Ok(MeanChain {
        harmonic,
        geometric,
        arithmetic,
        lower_margin,
        upper_margin,
        holds,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn ctx(kind: MeanKind, t: f64) -> MeanEvalContext {
        MeanEvalContext::new(kind, WeightFunction::identity(), t).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(
            mean_eval(&ctx(MeanKind::Arithmetic, 0.5), 2.0, 4.0).unwrap(),
            3.0
        );
        assert!((mean_eval(&ctx(MeanKind::Geometric, 0.5), 1.0, 9.0).unwrap() - 3.0).abs() < 1e-15);
        assert_eq!(
            mean_eval(&ctx(MeanKind::Arithmetic, 0.25), 4.0, 8.0).unwrap(),
            5.0
        );
        assert_eq!(
            mean_eval(&ctx(MeanKind::Harmonic, 0.5), 2.0, 6.0).unwrap(),
            3.0
        );
    }

    #[test]
    fn classic_examples() {
        assert_eq!(mean_classic(MeanKind::Arithmetic, 1.0, 3.0).unwrap(), 2.0);
        assert_eq!(mean_classic(MeanKind::Geometric, 4.0, 4.0).unwrap(), 4.0);
        assert_eq!(mean_classic(MeanKind::Harmonic, 1.0, 1.0).unwrap(), 1.0);
        assert!(mean_classic(MeanKind::Harmonic, 0.0, 1.0).is_err());
        assert!(mean_classic(MeanKind::Arithmetic, -1.0, 1.0).is_err());
    }

    #[test]
    fn weight_placement_is_asymmetric() {
        let h = WeightFunction::power(2.0);
        let a = mean_eval(
            &MeanEvalContext::new(MeanKind::Arithmetic, h.clone(), 0.25).unwrap(),
            1.0,
            2.0,
        )
        .unwrap();
        assert!((a - (0.5625 + 0.0625 * 2.0)).abs() < 1e-15);
        let hm = mean_eval(
            &MeanEvalContext::new(MeanKind::Harmonic, h, 0.25).unwrap(),
            1.0,
            2.0,
        )
        .unwrap();
        assert!((hm - 2.0 / (0.0625 + 0.5625 * 2.0)).abs() < 1e-15);
    }

    #[test]
    fn chain_classical() {
        let c = check_am_gm_hm(&WeightFunction::identity(), 0.5, 2.0, 8.0, 1e-9).unwrap();
        assert!(c.holds);
        assert!((c.harmonic - 3.2).abs() < 1e-12);
        assert!((c.geometric - 4.0).abs() < 1e-12);
        assert!((c.arithmetic - 5.0).abs() < 1e-12);
    }

    #[test]
    fn chain_reflexive() {
        for t in [0.1, 0.5, 0.9] {
            let c = check_am_gm_hm(&WeightFunction::identity(), t, 3.0, 3.0, 1e-9).unwrap();
            assert!(c.holds);
            assert!(c.lower_margin.abs() < 1e-14 && c.upper_margin.abs() < 1e-14);
        }
    }

    #[test]
    fn chain_fails_for_squared_weight() {
        let c = check_am_gm_hm(&WeightFunction::power(2.0), 0.5, 1.0, 4.0, 1e-9).unwrap();
        assert!(!c.holds);
        assert!((c.arithmetic - 1.25).abs() < 1e-15);
        assert!((c.geometric - 2f64.sqrt()).abs() < 1e-15);
        assert!((c.harmonic - 3.2).abs() < 1e-15);
    }

    #[test]
    fn endpoint_convention() {
        for kind in MeanKind::ALL {
            assert!((mean_eval(&ctx(kind, 0.0), 2.0, 7.0).unwrap() - 2.0).abs() < 1e-15);
            assert!((mean_eval(&ctx(kind, 1.0), 2.0, 7.0).unwrap() - 7.0).abs() < 1e-15);
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        assert!(
            MeanEvalContext::new(MeanKind::Arithmetic, WeightFunction::identity(), 1.5).is_err()
        );
        assert!(mean_eval(&ctx(MeanKind::Geometric, 0.5), 0.0, 1.0).is_err());
        let recip =
            MeanEvalContext::new(MeanKind::Arithmetic, WeightFunction::reciprocal(), 0.0).unwrap();
        assert!(mean_eval(&recip, 1.0, 2.0).is_err());
    }

    fn rel(a: f64, b: f64) -> f64 {
        (a - b).abs() / a.abs().max(b.abs()).max(1.0)
    }

    proptest! {
        #[test]
        fn classic_axioms(x in 1e-3f64..1e3, y in 1e-3f64..1e3, lambda in 1e-2f64..1e2) {
            for kind in MeanKind::ALL {
                let m = mean_classic(kind, x, y).unwrap();
                prop_assert!(rel(m, mean_classic(kind, y, x).unwrap()) < 1e-14);
                prop_assert!(rel(mean_classic(kind, x, x).unwrap(), x) < 1e-14);
                prop_assert!(m >= x.min(y) * (1.0 - 1e-14) && m <= x.max(y) * (1.0 + 1e-14));
                let scaled = mean_classic(kind, lambda * x, lambda * y).unwrap();
                prop_assert!(rel(scaled, lambda * m) < 1e-13);
            }
        }

        #[test]
        fn harmonic_is_reciprocal_of_arithmetic_of_reciprocals(
            t in 0.0f64..=1.0, a in 1e-3f64..1e3, b in 1e-3f64..1e3, r in 0.2f64..3.0
        ) {
            let h = WeightFunction::power(r);
            let hm = mean_eval(&MeanEvalContext::new(MeanKind::Harmonic, h.clone(), t).unwrap(), a, b);
            let am = mean_eval(&MeanEvalContext::new(MeanKind::Arithmetic, h, t).unwrap(), 1.0 / a, 1.0 / b);
            if let (Ok(hm), Ok(am)) = (hm, am) {
                prop_assert!(rel(hm, 1.0 / am) < 1e-12);
            }
        }

        #[test]
        fn identity_midpoint_matches_classic(a in 1e-3f64..1e3, b in 1e-3f64..1e3) {
            for kind in MeanKind::ALL {
                let weighted = mean_eval(&ctx(kind, 0.5), a, b).unwrap();
                prop_assert!(rel(weighted, mean_classic(kind, a, b).unwrap()) < 1e-14);
            }
        }

        #[test]
        fn identity_chain_always_holds(t in 0.0f64..=1.0, a in 1e-3f64..1e3, b in 1e-3f64..1e3) {
            prop_assert!(check_am_gm_hm(&WeightFunction::identity(), t, a, b, 1e-12).unwrap().holds);
        }
    }
}
