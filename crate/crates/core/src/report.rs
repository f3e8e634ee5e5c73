//! Report files: witnesses, the config echo, fixed-precision JSON and CSV.

use std::io;

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use serde_json::ser::Formatter;

use crate::convexity::GapWitness;
use crate::error::{Error, Result};
use crate::popoviciu::TripleWitness;

pub const SCHEMA_VERSION: u32 = 1;

/// A sample where an inequality failed: `(x, y, t)` for two-point
/// inequalities, `(x, y, z)` for three-point ones.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Witness {
    pub x: f64,
    pub y: f64,
    pub z: Option<f64>,
    pub t: Option<f64>,
    #[serde(with = "nullable")]
    pub lhs: f64,
    #[serde(with = "nullable")]
    pub rhs: f64,
}

impl From<GapWitness> for Witness {
    fn from(w: GapWitness) -> Self {
        Witness {
            x: w.x,
            y: w.y,
            z: None,
            t: Some(w.t),
            lhs: w.lhs,
            rhs: w.rhs,
        }
    }
}

impl From<TripleWitness> for Witness {
    fn from(w: TripleWitness) -> Self {
        Witness {
            x: w.x,
            y: w.y,
            z: Some(w.z),
            t: None,
            lhs: w.lhs,
            rhs: w.rhs,
        }
    }
}

/// 17 significant digits in scientific notation; `None` for non-finite values.
pub fn format_float(v: f64) -> Option<String> {
    v.is_finite().then(|| format!("{v:.16e}"))
}

/// Serde adapter for floats that may be non-finite: written as `null`,
/// read back as NaN.
pub mod nullable {
    use super::*;

    pub fn serialize<S: Serializer>(v: &f64, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(*v)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> std::result::Result<f64, D::Error> {
        Ok(Option::<f64>::deserialize(d)?.unwrap_or(f64::NAN))
    }
}

/// Echo of the command line that produced a report.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub theorem: Option<String>,
    pub class: Option<String>,
    pub target: Option<String>,
    pub sense: Option<String>,
    pub h: Option<String>,
    pub f: Option<String>,
    pub domain: Option<[f64; 2]>,
    pub only: Option<String>,
    pub grid: usize,
    pub t_grid: usize,
    pub random: usize,
    pub budget: Option<usize>,
    pub seed: u64,
    pub tol: f64,
}

impl RunConfig {
    pub fn new(command: impl Into<String>) -> Self {
        RunConfig {
            command: command.into(),
            theorem: None,
            class: None,
            target: None,
            sense: None,
            h: None,
            f: None,
            domain: None,
            only: None,
            grid: 33,
            t_grid: 17,
            random: 10_000,
            budget: None,
            seed: 42,
            tol: crate::compare::DEFAULT_TOL,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportVerdict {
    Holds,
    Refuted,
    Error,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportFile {
    pub schema_version: u32,
    pub config: RunConfig,
    pub verdict: ReportVerdict,
    #[serde(with = "nullable")]
    pub min_margin: f64,
    pub witnesses: Vec<Witness>,
    pub skipped: usize,
    pub samples: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub message: Option<String>,
    /// Command-specific payload (audit findings, classification matrix, search trace).
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub details: Option<serde_json::Value>,
}

impl ReportFile {
    pub fn new(config: RunConfig, verdict: ReportVerdict) -> Self {
        ReportFile {
            schema_version: SCHEMA_VERSION,
            config,
            verdict,
            min_margin: f64::NAN,
            witnesses: Vec::new(),
            skipped: 0,
            samples: 0,
            message: None,
            details: None,
        }
    }
}

struct FixedFloats;

impl Formatter for FixedFloats {
    fn write_f64<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f64) -> io::Result<()> {
        writer.write_all(format!("{value:.16e}").as_bytes())
    }

    fn write_f32<W: ?Sized + io::Write>(&mut self, writer: &mut W, value: f32) -> io::Result<()> {
        self.write_f64(writer, f64::from(value))
    }
}

/// Compact JSON with every float written by [`format_float`] and a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut out = Vec::new();
    let mut ser = serde_json::Serializer::with_formatter(&mut out, FixedFloats);
    value
        .serialize(&mut ser)
        .map_err(|e| Error::Evaluation(format!("json encoding: {e}")))?;
    out.push(b'\n');
    String::from_utf8(out).map_err(|e| Error::Evaluation(e.to_string()))
}

pub fn decode_report(text: &str) -> Result<ReportFile> {
    let report: ReportFile =
        serde_json::from_str(text).map_err(|e| Error::Parse(format!("report: {e}")))?;
    if report.schema_version != SCHEMA_VERSION {
        return Err(Error::Parse(format!(
            "unsupported schema_version {}",
            report.schema_version
        )));
    }
    Ok(report)
}

/// One row per witness, header `x,y,z,t,lhs,rhs`; absent or non-finite cells are empty.
pub fn witnesses_csv(witnesses: &[Witness]) -> String {
    let cell = |v: Option<f64>| v.and_then(format_float).unwrap_or_default();
    let mut out = String::from("x,y,z,t,lhs,rhs\n");
    for w in witnesses {
        let row = [Some(w.x), Some(w.y), w.z, w.t, Some(w.lhs), Some(w.rhs)].map(cell);
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn formatting_round_trips() {
        for v in [
            0.0,
            1.0,
            -2.5,
            1.0 / 3.0,
            1e-300,
            6.02214076e23,
            f64::MIN_POSITIVE,
        ] {
            let s = format_float(v).unwrap();
            assert_eq!(s.parse::<f64>().unwrap(), v, "{s}");
        }
        assert_eq!(format_float(1.5).unwrap(), "1.5000000000000000e0");
        assert!(format_float(f64::NAN).is_none());
        assert!(format_float(f64::INFINITY).is_none());
    }

    fn sample_report() -> ReportFile {
        let mut r = ReportFile::new(RunConfig::new("verify"), ReportVerdict::Refuted);
        r.min_margin = -0.25;
        r.samples = 10;
        r.witnesses.push(Witness {
            x: 0.1,
            y: 1.0 / 3.0,
            z: Some(7.0),
            t: None,
            lhs: 2.0,
            rhs: 1.75,
        });
        r.details = Some(serde_json::json!({"note": "x", "value": 0.5, "count": 3}));
        r
    }

    #[test]
    fn json_round_trip_is_byte_stable() {
        let r = sample_report();
        let a = to_json(&r).unwrap();
        let back = decode_report(&a).unwrap();
        assert_eq!(back, r);
        assert_eq!(to_json(&back).unwrap(), a);
        assert!(a.contains("\"min_margin\":-2.5000000000000000e-1"));
        assert!(a.contains("\"count\":3"));
    }

    #[test]
    fn non_finite_is_null() {
        let mut r = sample_report();
        r.min_margin = f64::INFINITY;
        let a = to_json(&r).unwrap();
        assert!(a.contains("\"min_margin\":null"));
        assert!(decode_report(&a).unwrap().min_margin.is_nan());
    }

    #[test]
    fn rejects_other_schema_versions() {
        let a = to_json(&sample_report())
            .unwrap()
            .replace("\"schema_version\":1", "\"schema_version\":2");
        assert!(matches!(decode_report(&a), Err(Error::Parse(_))));
        assert!(decode_report("{").is_err());
    }

    #[test]
    fn csv_rows() {
        let csv = witnesses_csv(&sample_report().witnesses);
        let lines: Vec<_> = csv.lines().collect();
        assert_eq!(lines[0], "x,y,z,t,lhs,rhs");
        assert_eq!(lines.len(), 2);
        assert!(lines[1].contains(",7.0000000000000000e0,,"));
    }
}
