//! Counterexample search: seeded random probing followed by coordinate
//! descent that pulls a violating point toward small coordinates.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::compare::Relation;
use crate::convexity::{defining_gap, ConvexitySpec, Sense};
use crate::error::{Error, Result};
use crate::function::PointFunction;
use crate::interval::Interval;
use crate::popoviciu::{hlawka_check, popoviciu_sides, TheoremId};
use crate::report::Witness;
use crate::sampling::{seeded_rng, T_MAX, T_MIN};
use crate::weights::WeightFunction;

pub const DEFAULT_BUDGET: usize = 100_000;

const SHRINK_STEPS: [f64; 6] = [1.0, 0.5, 0.25, 0.1, 0.01, 0.001];

#[derive(Debug, Clone)]
pub enum SearchTarget {
    Theorem {
        id: TheoremId,
        h: WeightFunction,
        f: PointFunction,
        sense: Sense,
    },
    Class {
        spec: ConvexitySpec,
        f: PointFunction,
    },
    /// `|x|+|y|+|z|+|x+y+z| >= |x+z|+|z+y|+|x+y|`, or its reverse.
    Hlawka { reversed: bool },
}

impl SearchTarget {
    fn relation(&self) -> Relation {
        match self {
            SearchTarget::Theorem { id, sense, .. } => id.relation(*sense),
            SearchTarget::Class { spec, .. } => spec.relation(),
            SearchTarget::Hlawka { reversed: false } => Relation::Ge,
            SearchTarget::Hlawka { reversed: true } => Relation::Le,
        }
    }

    fn domain(&self) -> Interval {
        match self {
            SearchTarget::Theorem { f, .. } | SearchTarget::Class { f, .. } => *f.domain(),
            SearchTarget::Hlawka { .. } => Interval::real_line(),
        }
    }

    fn three_point(&self) -> bool {
        !matches!(self, SearchTarget::Class { .. })
    }

    /// Sides at `p = [x, y, z]`, or `[x, y, t]` for class targets.
    fn sides(&self, p: [f64; 3]) -> Result<(f64, f64)> {
        match self {
            SearchTarget::Theorem { id, h, f, .. } => popoviciu_sides(*id, h, f, p[0], p[1], p[2]),
            SearchTarget::Class { spec, f } => defining_gap(spec, f, p[0], p[1], p[2]),
            SearchTarget::Hlawka { .. } => {
                let (l, r, _) = hlawka_check(p[0], p[1], p[2]);
                Ok((l, r))
            }
        }
    }

    pub fn label(&self) -> String {
        match self {
            SearchTarget::Theorem { id, h, f, sense } => {
                format!("{id} [{}] {sense} f={}", h.name(), f.name())
            }
            SearchTarget::Class { spec, f } => format!("{} f={}", spec.label(), f.name()),
            SearchTarget::Hlawka { reversed: false } => "hlawka".into(),
            SearchTarget::Hlawka { reversed: true } => "hlawka-reversed".into(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SearchOutcome {
    pub found: bool,
    pub evaluations: usize,
    /// First violating point of the random phase.
    pub first: Option<Witness>,
    /// The same violation after shrinking.
    pub witness: Option<Witness>,
    pub shrink_moves: usize,
}

fn witness(three_point: bool, p: [f64; 3], l: f64, r: f64) -> Witness {
    if three_point {
        Witness {
            x: p[0],
            y: p[1],
            z: Some(p[2]),
            t: None,
            lhs: l,
            rhs: r,
        }
    } else {
        Witness {
            x: p[0],
            y: p[1],
            z: None,
            t: Some(p[2]),
            lhs: l,
            rhs: r,
        }
    }
}

struct Probe<'a> {
    target: &'a SearchTarget,
    domain: Interval,
    relation: Relation,
    tol: f64,
    evaluations: usize,
}

impl Probe<'_> {
    fn violation(&mut self, p: [f64; 3]) -> Option<(f64, f64)> {
        self.evaluations += 1;
        let spatial = if self.target.three_point() { 3 } else { 2 };
        if !p[..spatial].iter().all(|&v| self.domain.contains(v)) {
            return None;
        }
        match self.target.sides(p) {
            Ok((l, r))
                if l.is_finite() && r.is_finite() && self.relation.violated(l, r, self.tol) =>
            {
                Some((l, r))
            }
            _ => None,
        }
    }
}

fn size(p: &[f64]) -> (f64, f64) {
    let max = p.iter().fold(0.0_f64, |m, v| m.max(v.abs()));
    (max, p.iter().map(|v| v.abs()).sum())
}

/// Looks for a violation inside `bounds` (cut to the target's domain) with at
/// most `budget` evaluations. Deterministic for a given seed.
pub fn search(
    target: &SearchTarget,
    bounds: (f64, f64),
    budget: usize,
    seed: u64,
    tol: f64,
) -> Result<SearchOutcome> {
    let domain = target.domain();
    let region = domain.intersect_box(bounds.0, bounds.1);
    if region.is_degenerate() {
        return Err(Error::NoUsableSamples(format!(
            "box [{}, {}] does not intersect domain {domain}",
            bounds.0, bounds.1
        )));
    }
    let (lo, hi) = region.sampling_range()?;
    let mut probe = Probe {
        target,
        domain: region,
        relation: target.relation(),
        tol,
        evaluations: 0,
    };
    let three = target.three_point();
    let spatial = if three { 3 } else { 2 };

    let mut rng = seeded_rng(seed);
    let mut hit = None;
    while probe.evaluations < budget {
        let mut p = [0.0; 3];
        for v in p.iter_mut().take(spatial) {
            *v = rng.gen_range(lo..=hi);
        }
        if !three {
            p[2] = rng.gen_range(T_MIN..=T_MAX);
        }
        if let Some((l, r)) = probe.violation(p) {
            hit = Some((p, l, r));
            break;
        }
    }
    let Some((mut best, mut l, mut r)) = hit else {
        return Ok(SearchOutcome {
            found: false,
            evaluations: probe.evaluations,
            first: None,
            witness: None,
            shrink_moves: 0,
        });
    };
    let first = witness(three, best, l, r);

    let anchor = 0.0_f64.clamp(lo, hi);
    let mut moves = 0;
    'outer: loop {
        let mut improved = false;
        // Whole-point contraction first, then one coordinate at a time.
        let axes = (0..spatial).map(Some);
        for axis in std::iter::once(None).chain(axes) {
            for step in SHRINK_STEPS {
                if probe.evaluations >= budget {
                    break 'outer;
                }
                let mut cand = best;
                for i in 0..spatial {
                    if axis.is_none() || axis == Some(i) {
                        cand[i] = best[i] + (anchor - best[i]) * step;
                    }
                }
                if size(&cand[..spatial]) >= size(&best[..spatial]) {
                    continue;
                }
                if let Some((cl, cr)) = probe.violation(cand) {
                    best = cand;
                    (l, r) = (cl, cr);
                    moves += 1;
                    improved = true;
                    break;
                }
            }
        }
        if !improved {
            break;
        }
    }

    Ok(SearchOutcome {
        found: true,
        evaluations: probe.evaluations,
        first: Some(first),
        witness: Some(witness(three, best, l, r)),
        shrink_moves: moves,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::function;

    fn square_target(sense: Sense) -> SearchTarget {
        SearchTarget::Theorem {
            id: TheoremId::AA,
            h: WeightFunction::identity(),
            f: function::square(),
            sense,
        }
    }

    #[test]
    fn concave_square_is_refuted_and_shrunk() {
        let out = search(
            &square_target(Sense::Concave),
            (0.1, 10.0),
            DEFAULT_BUDGET,
            42,
            1e-9,
        )
        .unwrap();
        assert!(out.found);
        let (first, w) = (out.first.unwrap(), out.witness.unwrap());
        let m = |w: &Witness| w.x.abs().max(w.y.abs()).max(w.z.unwrap().abs());
        assert!(m(&w) <= m(&first));
        assert!(out.shrink_moves > 0);
        let (l, r) = popoviciu_sides(
            TheoremId::AA,
            &WeightFunction::identity(),
            &function::square(),
            w.x,
            w.y,
            w.z.unwrap(),
        )
        .unwrap();
        assert_eq!((l, r), (w.lhs, w.rhs));
        assert!(Relation::Ge.violated(l, r, 1e-9));
    }

    #[test]
    fn convex_square_has_no_witness() {
        let out = search(&square_target(Sense::Convex), (0.1, 10.0), 20_000, 42, 1e-9).unwrap();
        assert!(!out.found);
        assert_eq!(out.evaluations, 20_000);
    }

    #[test]
    fn reversed_hlawka_is_refuted_by_mixed_signs() {
        let out = search(
            &SearchTarget::Hlawka { reversed: true },
            (-10.0, 10.0),
            DEFAULT_BUDGET,
            42,
            1e-9,
        )
        .unwrap();
        let w = out.witness.unwrap();
        let z = w.z.unwrap();
        assert!(w.lhs > w.rhs);
        let signs = [w.x, w.y, z];
        assert!(signs.iter().any(|v| *v > 0.0) && signs.iter().any(|v| *v < 0.0));
        let (l, r, _) = hlawka_check(1.0, 1.0, -1.0);
        assert!(l > r);
    }

    #[test]
    fn class_search_reports_t() {
        let spec = ConvexitySpec::new(
            crate::means::MeanKind::Arithmetic,
            crate::means::MeanKind::Arithmetic,
            WeightFunction::identity(),
            Sense::Concave,
        );
        let target = SearchTarget::Class {
            spec,
            f: function::square(),
        };
        let out = search(&target, (0.1, 10.0), 10_000, 7, 1e-9).unwrap();
        let w = out.witness.unwrap();
        assert!(w.z.is_none() && w.t.is_some());
    }

    #[test]
    fn deterministic_per_seed() {
        let t = square_target(Sense::Concave);
        let a = search(&t, (0.1, 10.0), 5_000, 9, 1e-9).unwrap();
        let b = search(&t, (0.1, 10.0), 5_000, 9, 1e-9).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn disjoint_box_is_an_error() {
        let t = SearchTarget::Theorem {
            id: TheoremId::AA,
            h: WeightFunction::identity(),
            f: function::neg_log(),
            sense: Sense::Convex,
        };
        assert!(search(&t, (2.0, 3.0), 100, 1, 1e-9).is_err());
    }
}
