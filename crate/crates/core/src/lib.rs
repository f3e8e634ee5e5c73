//! Numerical verification of convexity with respect to pairs of generalized
//! means, and of the three-point Popoviciu-type inequalities built on them.

pub mod catalog;
pub mod chain;
pub mod compare;
pub mod convexity;
pub mod error;
pub mod function;
pub mod interval;
pub mod means;
pub mod parse;
pub mod popoviciu;
pub mod report;
pub mod sampling;
pub mod search;
pub mod weights;

pub use compare::{Relation, DEFAULT_TOL};
pub use error::{Error, Result};
pub use interval::Interval;
pub use means::{check_am_gm_hm, mean_classic, mean_eval, MeanEvalContext, MeanKind};
pub use sampling::SamplePlan;
pub use weights::{
    classify_additivity, classify_multiplicativity, power_weight_class, AdditivityClass,
    AdditivityTag, WeightFunction,
};
