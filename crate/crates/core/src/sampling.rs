use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interval::{Interval, ENDPOINT_DELTA};

pub const T_MIN: f64 = ENDPOINT_DELTA;
pub const T_MAX: f64 = 1.0 - ENDPOINT_DELTA;

pub fn seeded_rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Deterministic sampling description: a Cartesian grid plus seeded uniform
/// random points. Grid samples always precede random samples, so sample
/// indices (and therefore "first witness" selection) are stable.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    /// Grid points per spatial axis.
    pub grid: usize,
    /// Grid points on the t axis.
    pub t_grid: usize,
    /// Seeded uniform random samples appended after the grid.
    pub random: usize,
    pub seed: u64,
    /// Optional closed box intersected with the function domain.
    pub bounds: Option<(f64, f64)>,
}

impl Default for SamplePlan {
    fn default() -> Self {
        SamplePlan {
            grid: 33,
            t_grid: 17,
            random: 10_000,
            seed: 42,
            bounds: None,
        }
    }
}

impl SamplePlan {
    pub fn with_bounds(mut self, lo: f64, hi: f64) -> Self {
        self.bounds = Some((lo, hi));
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Self {
        self.seed = seed;
        self
    }

    pub fn small() -> Self {
        SamplePlan {
            grid: 9,
            t_grid: 5,
            random: 500,
            ..Default::default()
        }
    }

    pub fn is_empty(&self) -> bool {
        self.grid == 0 && self.random == 0
    }

    /// Effective sampling domain: `domain` cut to the plan's box.
    pub fn region(&self, domain: &Interval) -> Result<Interval> {
        if self.is_empty() {
            return Err(Error::Precondition("sample plan is empty".into()));
        }
        let region = match self.bounds {
            Some((lo, hi)) => domain.intersect_box(lo, hi),
            None => *domain,
        };
        if region.is_degenerate() {
            return Err(Error::NoUsableSamples(format!(
                "box {:?} does not intersect domain {domain}",
                self.bounds
            )));
        }
        Ok(region)
    }

    pub fn range(&self, domain: &Interval) -> Result<(f64, f64)> {
        self.region(domain)?.sampling_range()
    }

    pub fn points(&self, lo: f64, hi: f64) -> Vec<f64> {
        let mut out = linspace(lo, hi, self.grid);
        let mut rng = seeded_rng(self.seed);
        out.extend((0..self.random).map(|_| uniform(&mut rng, lo, hi)));
        out
    }

    pub fn pairs(&self, lo: f64, hi: f64) -> Vec<[f64; 2]> {
        let axis = linspace(lo, hi, self.grid);
        let mut out = Vec::with_capacity(axis.len().pow(2) + self.random);
        for &x in &axis {
            for &y in &axis {
                out.push([x, y]);
            }
        }
        let mut rng = seeded_rng(self.seed);
        out.extend(
            (0..self.random).map(|_| [uniform(&mut rng, lo, hi), uniform(&mut rng, lo, hi)]),
        );
        out
    }

    pub fn triples(&self, lo: f64, hi: f64) -> Vec<[f64; 3]> {
        let axis = linspace(lo, hi, self.grid);
        let mut out = Vec::with_capacity(axis.len().pow(3) + self.random);
        for &x in &axis {
            for &y in &axis {
                for &z in &axis {
                    out.push([x, y, z]);
                }
            }
        }
        let mut rng = seeded_rng(self.seed);
        out.extend((0..self.random).map(|_| {
            [
                uniform(&mut rng, lo, hi),
                uniform(&mut rng, lo, hi),
                uniform(&mut rng, lo, hi),
            ]
        }));
        out
    }

    /// `(x, y, t)` samples with `t` restricted to `[T_MIN, T_MAX]`.
    pub fn xyt(&self, lo: f64, hi: f64) -> Vec<[f64; 3]> {
        let axis = linspace(lo, hi, self.grid);
        let ts = self.t_values();
        let mut out = Vec::with_capacity(axis.len().pow(2) * ts.len() + self.random);
        for &x in &axis {
            for &y in &axis {
                for &t in &ts {
                    out.push([x, y, t]);
                }
            }
        }
        let mut rng = seeded_rng(self.seed);
        out.extend((0..self.random).map(|_| {
            [
                uniform(&mut rng, lo, hi),
                uniform(&mut rng, lo, hi),
                uniform(&mut rng, T_MIN, T_MAX),
            ]
        }));
        out
    }

    pub fn t_values(&self) -> Vec<f64> {
        linspace(T_MIN, T_MAX, self.t_grid)
    }
}

pub fn linspace(lo: f64, hi: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![0.5 * (lo + hi)],
        _ => {
            let last = (n - 1) as f64;
            (0..n)
                .map(|i| {
                    if i == n - 1 {
                        hi
                    } else {
                        lo + (hi - lo) * (i as f64 / last)
                    }
                })
                .collect()
        }
    }
}

fn uniform(rng: &mut ChaCha8Rng, lo: f64, hi: f64) -> f64 {
    if hi > lo {
        rng.gen_range(lo..=hi)
    } else {
        lo
    }
}
