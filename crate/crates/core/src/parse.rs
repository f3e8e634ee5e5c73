//! Text selectors for weights, functions, domains, theorems, classes and
//! chains, as typed on the command line.

use crate::chain::Corollary;
use crate::convexity::Sense;
use crate::error::{Error, Result};
use crate::function::{self, PointFunction};
use crate::means::MeanKind;
use crate::popoviciu::{EqualityFamily, TheoremId};
use crate::weights::WeightFunction;

fn parse_err(what: &str, input: &str) -> Error {
    Error::Parse(format!("unknown {what} '{input}'"))
}

/// A finite float; rejects `nan`, `inf` and empty input.
pub fn parse_number(s: &str) -> Result<f64> {
    let v: f64 = s
        .trim()
        .parse()
        .map_err(|_| Error::Parse(format!("not a number: '{s}'")))?;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::Parse(format!("not a finite number: '{s}'")))
    }
}

fn split_param(s: &str) -> (String, Option<&str>) {
    let s = s.trim();
    match s.split_once(':') {
        Some((name, rest)) => (
            name.trim().to_ascii_lowercase().replace('-', "_"),
            Some(rest),
        ),
        None => (s.to_ascii_lowercase().replace('-', "_"), None),
    }
}

/// `identity`, `power:<r>`, `reciprocal`, `one`.
pub fn parse_weight(s: &str) -> Result<WeightFunction> {
    match split_param(s) {
        (name, None) if name == "identity" || name == "t" => Ok(WeightFunction::identity()),
        (name, None) if name == "reciprocal" => Ok(WeightFunction::reciprocal()),
        (name, None) if name == "one" || name == "constant" => Ok(WeightFunction::one()),
        (name, Some(r)) if name == "power" => Ok(WeightFunction::power(parse_number(r)?)),
        _ => Err(parse_err("weight", s)),
    }
}

/// Builtin function names, with `power:<p>`, `affine:<a>,<b>` and
/// `constant:<c>` for the parametric families.
pub fn parse_function(s: &str) -> Result<PointFunction> {
    let (name, param) = split_param(s);
    let f = match (name.as_str(), param) {
        ("square", None) => function::square(),
        ("neg_square", None) => function::neg_square(),
        ("log", None) => function::log(),
        ("neg_log", None) => function::neg_log(),
        ("cosh", None) => function::cosh(),
        ("arcsin", None) => function::arcsin(),
        ("arctan", None) => function::arctan(),
        ("exp", None) => function::exp(),
        ("exp_neg", None) => function::exp_neg(),
        ("reciprocal", None) => function::reciprocal(),
        ("reciprocal_log", None) => function::reciprocal_log(),
        ("exp_reciprocal", None) => function::exp_reciprocal(),
        ("identity", None) => function::identity(),
        ("power", Some(p)) => function::power(parse_number(p)?),
        ("constant", Some(c)) => function::constant(parse_number(c)?),
        ("affine", Some(ab)) => {
            let (a, b) = ab
                .split_once(',')
                .ok_or_else(|| Error::Parse(format!("affine needs 'a,b', got '{ab}'")))?;
            function::affine(parse_number(a)?, parse_number(b)?)
        }
        _ => return Err(parse_err("function", s)),
    };
    Ok(f)
}

/// `lo,hi` with `lo < hi`; either end may be `-inf`/`inf`, not both.
pub fn parse_domain(s: &str) -> Result<(f64, f64)> {
    let (a, b) = s
        .split_once(',')
        .ok_or_else(|| Error::Parse(format!("domain must be 'lo,hi', got '{s}'")))?;
    let end = |t: &str| -> Result<f64> {
        match t.trim() {
            "-inf" => Ok(f64::NEG_INFINITY),
            "inf" | "+inf" => Ok(f64::INFINITY),
            other => parse_number(other),
        }
    };
    let (lo, hi) = (end(a)?, end(b)?);
    if lo >= hi {
        return Err(Error::Parse(format!("empty domain {lo},{hi}")));
    }
    Ok((lo, hi))
}

fn mean_pair(s: &str) -> Option<(MeanKind, MeanKind)> {
    let letters: Vec<char> = s
        .trim()
        .replace("_t", "")
        .replace("_h", "")
        .chars()
        .collect();
    match letters[..] {
        [a, b] => Some((MeanKind::from_letter(a)?, MeanKind::from_letter(b)?)),
        _ => None,
    }
}

/// `AA` … `HH`, case-insensitive.
pub fn parse_theorem(s: &str) -> Result<TheoremId> {
    let t = s.trim();
    if t.len() != 2 {
        return Err(parse_err("theorem", s));
    }
    mean_pair(t)
        .map(|(a, v)| TheoremId::new(a, v))
        .ok_or_else(|| parse_err("theorem", s))
}

/// A class as `AG` or `A_tG_h`: argument mean first, value mean second.
pub fn parse_class(s: &str) -> Result<(MeanKind, MeanKind)> {
    mean_pair(s).ok_or_else(|| parse_err("class", s))
}

pub fn parse_sense(s: &str) -> Result<Sense> {
    match s.trim().to_ascii_lowercase().as_str() {
        "convex" => Ok(Sense::Convex),
        "concave" => Ok(Sense::Concave),
        _ => Err(parse_err("sense", s)),
    }
}

pub fn parse_corollary(s: &str) -> Result<Corollary> {
    let t = s.trim().to_ascii_lowercase().replace('_', "-");
    Corollary::ALL
        .into_iter()
        .find(|c| c.as_str() == t)
        .ok_or_else(|| parse_err("chain", s))
}

pub fn parse_equality_family(s: &str) -> Result<EqualityFamily> {
    let t = s.trim().to_ascii_lowercase().replace('_', "-");
    EqualityFamily::ALL
        .into_iter()
        .find(|f| f.as_str() == t)
        .ok_or_else(|| parse_err("equality family", s))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn weights() {
        assert_eq!(parse_weight("identity").unwrap().name(), "identity");
        assert_eq!(parse_weight("power:2").unwrap().name(), "power:2");
        assert_eq!(
            parse_weight("one").unwrap().name(),
            WeightFunction::one().name()
        );
        assert!(parse_weight("power:").is_err());
        assert!(parse_weight("power:nan").is_err());
        assert!(parse_weight("cube").is_err());
    }

    #[test]
    fn functions() {
        for f in function::builtin_functions() {
            let parsed = parse_function(f.name()).unwrap();
            assert_eq!(parsed.name(), f.name());
        }
        assert_eq!(parse_function("neg-log").unwrap().name(), "neg_log");
        assert_eq!(
            parse_function("affine:2,3").unwrap().value(1.0).unwrap(),
            5.0
        );
        assert!(parse_function("affine:2").is_err());
        assert!(parse_function("tanh").is_err());
    }

    #[test]
    fn domains() {
        assert_eq!(parse_domain("0.1,10").unwrap(), (0.1, 10.0));
        assert_eq!(
            parse_domain(" -inf , 0 ").unwrap(),
            (f64::NEG_INFINITY, 0.0)
        );
        assert!(parse_domain("10,0.1").is_err());
        assert!(parse_domain("1").is_err());
        assert!(parse_domain("nan,1").is_err());
    }

    #[test]
    fn theorems_and_classes() {
        for id in TheoremId::ALL {
            assert_eq!(parse_theorem(id.as_str()).unwrap(), id);
            assert_eq!(parse_theorem(&id.as_str().to_lowercase()).unwrap(), id);
        }
        assert!(parse_theorem("XX").is_err());
        assert!(parse_theorem("AAA").is_err());
        assert_eq!(
            parse_class("A_tG_h").unwrap(),
            (MeanKind::Arithmetic, MeanKind::Geometric)
        );
        assert_eq!(
            parse_class("hh").unwrap(),
            (MeanKind::Harmonic, MeanKind::Harmonic)
        );
        assert!(parse_class("A").is_err());
    }

    #[test]
    fn names() {
        assert_eq!(parse_sense("Concave").unwrap(), Sense::Concave);
        assert!(parse_sense("flat").is_err());
        for c in Corollary::ALL {
            assert_eq!(parse_corollary(c.as_str()).unwrap(), c);
        }
        for f in EqualityFamily::ALL {
            assert_eq!(parse_equality_family(f.as_str()).unwrap(), f);
        }
    }
}
