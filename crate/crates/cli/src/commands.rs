use std::fmt::Write as _;

use meanconvex::catalog::{run_audit_filtered, summarize, AuditFilter};
use meanconvex::chain::{classify_f, Property};
use meanconvex::convexity::{verify_class, ConvexitySpec, Sense};
use meanconvex::function::PointFunction;
use meanconvex::parse;
use meanconvex::popoviciu::verify_theorem;
use meanconvex::report::{ReportFile, ReportVerdict, RunConfig, Witness};
use meanconvex::search::{search as run_search, SearchTarget};
use meanconvex::{check_am_gm_hm, AdditivityTag, Error, MeanKind, Relation, Result, SamplePlan};
use serde::Serialize;
use serde_json::json;

use crate::output::Outcome;
use crate::{ClaimArgs, OnlyFilter, SampleArgs};

/// Box used when no `--domain` is given; cut to the function's domain.
const DEFAULT_BOX: (f64, f64) = (-10.0, 10.0);

const SEED_ENV: &str = "MEANCONVEX_SEED";

fn effective_seed(flag: u64) -> Result<u64> {
    match std::env::var(SEED_ENV) {
        Ok(v) => v.trim().parse().map_err(|_| {
            Error::Parse(format!(
                "{SEED_ENV} is not a 64-bit unsigned integer: '{v}'"
            ))
        }),
        Err(_) => Ok(flag),
    }
}

fn base_config(command: &str, s: &SampleArgs) -> RunConfig {
    let mut c = RunConfig::new(command);
    c.grid = s.grid;
    c.t_grid = s.t_grid;
    c.random = s.random;
    c.seed = s.seed;
    c.tol = s.tol;
    c
}

fn claim_config(command: &str, claim: &ClaimArgs, s: &SampleArgs) -> RunConfig {
    let mut c = base_config(command, s);
    c.theorem = claim.theorem.clone();
    c.class = claim.class.clone();
    c.sense = Some(claim.sense.clone());
    c.h = Some(claim.h.clone());
    c.f = claim.f.clone();
    c
}

fn plan_for(s: &SampleArgs, seed: u64, bounds: (f64, f64)) -> SamplePlan {
    SamplePlan {
        grid: s.grid,
        t_grid: s.t_grid,
        random: s.random,
        seed,
        bounds: Some(bounds),
    }
}

fn bounds_for(domain: Option<&str>) -> Result<(f64, f64)> {
    domain.map_or(Ok(DEFAULT_BOX), parse::parse_domain)
}

fn details<T: Serialize>(v: &T) -> Option<serde_json::Value> {
    serde_json::to_value(v).ok()
}

fn failure(config: RunConfig, err: Error) -> Outcome {
    let mut report = ReportFile::new(config, ReportVerdict::Error);
    report.message = Some(err.to_string());
    Outcome {
        report,
        text: String::new(),
        exit: 2,
    }
}

fn finish(
    mut config: RunConfig,
    seed: u64,
    run: impl FnOnce(&mut RunConfig) -> Result<Outcome>,
) -> Outcome {
    config.seed = seed;
    let echo = config.clone();
    run(&mut config).unwrap_or_else(|e| failure(echo, e))
}

fn verdict_exit(violations: usize) -> (ReportVerdict, u8) {
    if violations == 0 {
        (ReportVerdict::Holds, 0)
    } else {
        (ReportVerdict::Refuted, 1)
    }
}

fn witness_line(w: &Witness) -> String {
    let mut s = format!("x={:e} y={:e}", w.x, w.y);
    if let Some(z) = w.z {
        let _ = write!(s, " z={z:e}");
    }
    if let Some(t) = w.t {
        let _ = write!(s, " t={t:e}");
    }
    let _ = write!(s, " lhs={:e} rhs={:e}", w.lhs, w.rhs);
    s
}

fn function_arg(claim: &ClaimArgs) -> Result<PointFunction> {
    let name = claim
        .f
        .as_deref()
        .ok_or_else(|| Error::Parse("--f is required".into()))?;
    parse::parse_function(name)
}

pub fn verify(claim: &ClaimArgs, s: &SampleArgs) -> Outcome {
    let mut config = claim_config("verify", claim, s);
    config.domain = claim
        .domain
        .as_deref()
        .and_then(|d| parse::parse_domain(d).ok())
        .map(|(a, b)| [a, b]);
    let seed = match effective_seed(s.seed) {
        Ok(v) => v,
        Err(e) => return failure(config, e),
    };
    finish(config, seed, |config| {
        let f = function_arg(claim)?;
        let h = parse::parse_weight(&claim.h)?;
        let sense = parse::parse_sense(&claim.sense)?;
        let plan = plan_for(s, seed, bounds_for(claim.domain.as_deref())?);
        plan.region(f.domain())?;
        match (&claim.theorem, &claim.class) {
            (Some(t), _) => {
                let id = parse::parse_theorem(t)?;
                let r = verify_theorem(id, &h, &f, sense, &plan, s.tol)?;
                let (verdict, exit) = verdict_exit(r.violations);
                let mut report = ReportFile::new(config.clone(), verdict);
                report.min_margin = r.min_margin;
                report.witnesses = r.witnesses.iter().copied().map(Witness::from).collect();
                report.skipped = r.skipped;
                report.samples = r.triples_tested;
                report.details = details(&r);
                let mut text = format!(
                    "{id} [{}] {sense} f={}: {:?} on {} triples ({} skipped), {} violations, min margin {:e}\n",
                    h.name(),
                    f.name(),
                    verdict,
                    r.triples_tested,
                    r.skipped,
                    r.violations,
                    r.min_margin
                );
                if !r.weight_hypothesis_met {
                    let _ = writeln!(
                        text,
                        "note: h is {:?}, the theorem needs {:?}",
                        r.weight_class, r.weight_requirement
                    );
                }
                for w in &report.witnesses {
                    let _ = writeln!(text, "witness {}", witness_line(w));
                }
                Ok(Outcome { report, text, exit })
            }
            (None, Some(c)) => {
                let (arg, val) = parse::parse_class(c)?;
                let spec = ConvexitySpec::new(arg, val, h.clone(), sense);
                let v = verify_class(&spec, &f, &plan, s.tol)?;
                let (verdict, exit) = verdict_exit(v.violations);
                let mut report = ReportFile::new(config.clone(), verdict);
                report.min_margin = v.min_margin;
                report.witnesses = v.witness.map(Witness::from).into_iter().collect();
                report.skipped = v.skipped;
                report.samples = v.samples_tested;
                report.details = details(&v);
                let mut text = format!(
                    "{} f={}: {:?} on {} samples ({} skipped), {} violations, min margin {:e}\n",
                    spec.label(),
                    f.name(),
                    verdict,
                    v.samples_tested,
                    v.skipped,
                    v.violations,
                    v.min_margin
                );
                for w in &report.witnesses {
                    let _ = writeln!(text, "witness {}", witness_line(w));
                }
                Ok(Outcome { report, text, exit })
            }
            (None, None) => Err(Error::Parse(
                "one of --theorem or --class is required".into(),
            )),
        }
    })
}

pub fn audit(only: Option<OnlyFilter>, s: &SampleArgs) -> Outcome {
    let mut config = base_config("audit", s);
    config.only = only.map(|o| {
        match o {
            OnlyFilter::EqualityFamilies => "equality-families",
            OnlyFilter::Suspect => "suspect",
        }
        .to_string()
    });
    let seed = match effective_seed(s.seed) {
        Ok(v) => v,
        Err(e) => return failure(config, e),
    };
    finish(config, seed, |config| {
        let filter = match only {
            None => AuditFilter::All,
            Some(OnlyFilter::EqualityFamilies) => AuditFilter::EqualityFamilies,
            Some(OnlyFilter::Suspect) => AuditFilter::Suspect,
        };
        // Each entry supplies its own sampling box.
        let plan = SamplePlan {
            grid: s.grid,
            t_grid: s.t_grid,
            random: s.random,
            seed,
            bounds: None,
        };
        let findings = run_audit_filtered(filter, &plan, s.tol);
        let summary = summarize(&findings);
        let mut report = ReportFile::new(config.clone(), ReportVerdict::Holds);
        report.samples = findings
            .iter()
            .flat_map(|f| &f.measurements)
            .map(|m| m.tested)
            .sum();
        report.skipped = findings
            .iter()
            .flat_map(|f| &f.measurements)
            .map(|m| m.skipped)
            .sum();
        report.witnesses = findings.iter().filter_map(|f| f.witness).collect();
        report.details = Some(json!({ "summary": summary, "findings": findings }));
        let mut text = String::new();
        for f in &findings {
            let _ = writeln!(
                text,
                "{:<36} {:<20} {}",
                f.entry,
                f.verdict.as_str(),
                f.claim
            );
            if let Some(w) = &f.witness {
                let _ = writeln!(text, "    witness {}", witness_line(w));
            }
            if let Some(p) = &f.positivity_violation {
                let _ = writeln!(text, "    f({:e}) = {:?} is not positive", p.x, p.fx);
            }
        }
        let _ = writeln!(
            text,
            "{} entries: confirmed {} / refuted-on-samples {} / domain-violation {} / inconclusive {}",
            findings.len(),
            summary.confirmed,
            summary.refuted_on_samples,
            summary.domain_violation,
            summary.inconclusive
        );
        Ok(Outcome {
            report,
            text,
            exit: 0,
        })
    })
}

pub fn search(target: Option<&str>, claim: &ClaimArgs, budget: usize, s: &SampleArgs) -> Outcome {
    let mut config = claim_config("search", claim, s);
    config.target = target.map(str::to_string);
    config.budget = Some(budget);
    config.domain = claim
        .domain
        .as_deref()
        .and_then(|d| parse::parse_domain(d).ok())
        .map(|(a, b)| [a, b]);
    let seed = match effective_seed(s.seed) {
        Ok(v) => v,
        Err(e) => return failure(config, e),
    };
    finish(config, seed, |config| {
        let bounds = bounds_for(claim.domain.as_deref())?;
        let sense = parse::parse_sense(&claim.sense)?;
        let t = match (target, &claim.theorem, &claim.class) {
            (Some("hlawka"), ..) => SearchTarget::Hlawka { reversed: false },
            (Some("hlawka-reversed"), ..) => SearchTarget::Hlawka { reversed: true },
            (Some(other), ..) => return Err(Error::Parse(format!("unknown target '{other}'"))),
            (None, Some(id), _) => SearchTarget::Theorem {
                id: parse::parse_theorem(id)?,
                h: parse::parse_weight(&claim.h)?,
                f: function_arg(claim)?,
                sense,
            },
            (None, None, Some(c)) => {
                let (arg, val) = parse::parse_class(c)?;
                SearchTarget::Class {
                    spec: ConvexitySpec::new(arg, val, parse::parse_weight(&claim.h)?, sense),
                    f: function_arg(claim)?,
                }
            }
            (None, None, None) => {
                return Err(Error::Parse(
                    "one of --target, --theorem or --class is required".into(),
                ))
            }
        };
        let out = run_search(&t, bounds, budget, seed, s.tol)?;
        let (verdict, exit) = if out.found {
            (ReportVerdict::Refuted, 0)
        } else {
            (ReportVerdict::Holds, 1)
        };
        let mut report = ReportFile::new(config.clone(), verdict);
        report.witnesses = out.witness.into_iter().collect();
        report.samples = out.evaluations;
        if let Some(w) = out.witness {
            let rel = if w.lhs > w.rhs {
                Relation::Le
            } else {
                Relation::Ge
            };
            report.min_margin = rel.margin(w.lhs, w.rhs);
        }
        report.details = details(&out);
        let mut text = format!("{}: ", t.label());
        match (&out.first, &out.witness) {
            (Some(first), Some(w)) => {
                let _ = writeln!(text, "witness found after {} evaluations", out.evaluations);
                let _ = writeln!(text, "first  {}", witness_line(first));
                let _ = writeln!(
                    text,
                    "shrunk {} ({} moves)",
                    witness_line(w),
                    out.shrink_moves
                );
            }
            _ => {
                let _ = writeln!(
                    text,
                    "no witness in {} evaluations (inconclusive, not a proof)",
                    out.evaluations
                );
            }
        }
        Ok(Outcome { report, text, exit })
    })
}

fn tag_name(tag: AdditivityTag, multiplicative: bool) -> &'static str {
    match (tag, multiplicative) {
        (AdditivityTag::Additive, false) => "additive",
        (AdditivityTag::Subadditive, false) => "subadditive",
        (AdditivityTag::Superadditive, false) => "superadditive",
        (AdditivityTag::Mixed, false) => "neither sub- nor superadditive",
        (AdditivityTag::Additive, true) => "multiplicative",
        (AdditivityTag::Subadditive, true) => "submultiplicative",
        (AdditivityTag::Superadditive, true) => "supermultiplicative",
        (AdditivityTag::Mixed, true) => "neither sub- nor supermultiplicative",
    }
}

fn cell(holds_convex: Option<bool>, holds_concave: Option<bool>) -> &'static str {
    match (holds_convex, holds_concave) {
        (Some(true), Some(true)) => "equality",
        (Some(true), Some(false)) => "convex",
        (Some(false), Some(true)) => "concave",
        (Some(false), Some(false)) => "neither",
        _ => "n/a",
    }
}

pub fn classify(f: Option<&str>, h: &str, domain: Option<&str>, s: &SampleArgs) -> Outcome {
    let mut config = base_config("classify", s);
    config.f = f.map(str::to_string);
    config.h = Some(h.to_string());
    config.domain = domain
        .and_then(|d| parse::parse_domain(d).ok())
        .map(|(a, b)| [a, b]);
    let seed = match effective_seed(s.seed) {
        Ok(v) => v,
        Err(e) => return failure(config, e),
    };
    finish(config, seed, |config| {
        let weight = parse::parse_weight(h)?;
        let h_class = weight.additivity();
        let mut text = format!("h = {}: {}\n", weight.name(), tag_name(h_class.tag, false));
        if let Some(w) = h_class.witness() {
            let _ = writeln!(
                text,
                "    h({:e} + {:e}) = {:e} vs {:e}",
                w.s, w.t, w.combined, w.separate
            );
        }
        let mut body = json!({ "weight": { "name": weight.name(), "additivity": h_class } });
        if let Some(name) = f {
            let func = parse::parse_function(name)?;
            let plan = plan_for(s, seed, bounds_for(domain)?);
            let region = plan.region(func.domain())?;
            let additivity = classify_f(&func, Property::Additivity, &plan, s.tol).ok();
            let multiplicativity = classify_f(&func, Property::Multiplicativity, &plan, s.tol).ok();
            let _ = writeln!(
                text,
                "f = {} on {region}: {}, {}",
                func.name(),
                additivity
                    .as_ref()
                    .map_or("additivity n/a", |c| tag_name(c.tag, false)),
                multiplicativity
                    .as_ref()
                    .map_or("multiplicativity n/a", |c| tag_name(c.tag, true)),
            );
            // Geometric and harmonic argument means need positive points.
            let bounds = plan.bounds.unwrap_or(DEFAULT_BOX);
            let positive = SamplePlan {
                bounds: Some((bounds.0.max(f64::MIN_POSITIVE), bounds.1)),
                ..plan.clone()
            };
            let mut matrix = Vec::new();
            let _ = writeln!(
                text,
                "{:>6} {:>10} {:>10} {:>10}",
                "arg\\val", "A", "G", "H"
            );
            for arg in MeanKind::ALL {
                let _ = write!(text, "{:>7}", arg.letter());
                for val in MeanKind::ALL {
                    let arg_plan = if arg == MeanKind::Arithmetic {
                        &plan
                    } else {
                        &positive
                    };
                    let run = |sense| {
                        let spec = ConvexitySpec::new(arg, val, weight.clone(), sense);
                        verify_class(&spec, &func, arg_plan, s.tol).ok()
                    };
                    let (cv, cc) = (run(Sense::Convex), run(Sense::Concave));
                    let label = cell(
                        cv.as_ref().map(|v| v.violations == 0),
                        cc.as_ref().map(|v| v.violations == 0),
                    );
                    let _ = write!(text, " {label:>10}");
                    matrix.push(json!({
                        "arg": arg.letter().to_string(),
                        "val": val.letter().to_string(),
                        "verdict": label,
                        "convex_violations": cv.as_ref().map(|v| v.violations),
                        "concave_violations": cc.as_ref().map(|v| v.violations),
                        "samples": cv.as_ref().map(|v| v.samples_tested),
                    }));
                }
                text.push('\n');
            }
            body["function"] = json!({
                "name": func.name(),
                "region": region.to_string(),
                "additivity": additivity,
                "multiplicativity": multiplicativity,
            });
            body["matrix"] = json!(matrix);
        }
        let mut report = ReportFile::new(config.clone(), ReportVerdict::Holds);
        report.details = Some(body);
        Ok(Outcome {
            report,
            text,
            exit: 0,
        })
    })
}

pub fn means(h: &str, t: f64, a: f64, b: f64, tol: f64) -> Outcome {
    let mut config = RunConfig::new("means");
    config.h = Some(h.to_string());
    config.tol = tol;
    config.grid = 0;
    config.t_grid = 0;
    config.random = 0;
    let echo = config.clone();
    let run = || -> Result<Outcome> {
        let weight = parse::parse_weight(h)?;
        let c = check_am_gm_hm(&weight, t, a, b, tol)?;
        let (verdict, exit) = if c.holds {
            (ReportVerdict::Holds, 0)
        } else {
            (ReportVerdict::Refuted, 1)
        };
        let mut report = ReportFile::new(config.clone(), verdict);
        report.min_margin = c.lower_margin.min(c.upper_margin);
        report.samples = 1;
        report.details = Some(json!({ "t": t, "a": a, "b": b, "chain": c }));
        let text = format!(
            "h = {}, t = {t}: H = {:e}, G = {:e}, A = {:e}; H <= G <= A {}\n",
            weight.name(),
            c.harmonic,
            c.geometric,
            c.arithmetic,
            if c.holds { "holds" } else { "fails" }
        );
        Ok(Outcome { report, text, exit })
    };
    run().unwrap_or_else(|e| failure(echo, e))
}
