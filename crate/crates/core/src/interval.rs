use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Inward offset applied to open or positivity-breaking endpoints before sampling.
pub const ENDPOINT_DELTA: f64 = 1e-6;

/// A real interval with independent open/closed flags. Infinite endpoints are
/// always treated as open.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lo: f64,
    pub hi: f64,
    pub lo_closed: bool,
    pub hi_closed: bool,
}

impl Interval {
    pub fn new(lo: f64, hi: f64, lo_closed: bool, hi_closed: bool) -> Self {
        Interval {
            lo,
            hi,
            lo_closed: lo_closed && lo.is_finite(),
            hi_closed: hi_closed && hi.is_finite(),
        }
    }

    pub fn open(lo: f64, hi: f64) -> Self {
        Self::new(lo, hi, false, false)
    }

    pub fn closed(lo: f64, hi: f64) -> Self {
        Self::new(lo, hi, true, true)
    }

    pub fn real_line() -> Self {
        Self::open(f64::NEG_INFINITY, f64::INFINITY)
    }

    pub fn positive() -> Self {
        Self::open(0.0, f64::INFINITY)
    }

    pub fn contains(&self, x: f64) -> bool {
        if x.is_nan() {
            return false;
        }
        let above = if self.lo_closed {
            x >= self.lo
        } else {
            x > self.lo
        };
        let below = if self.hi_closed {
            x <= self.hi
        } else {
            x < self.hi
        };
        above && below
    }

    pub fn is_bounded(&self) -> bool {
        self.lo.is_finite() && self.hi.is_finite()
    }

    pub fn is_degenerate(&self) -> bool {
        self.hi.partial_cmp(&self.lo) != Some(std::cmp::Ordering::Greater)
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    /// Intersection with a closed box `[lo, hi]`.
    pub fn intersect_box(&self, lo: f64, hi: f64) -> Interval {
        let (new_lo, lo_closed) = if lo > self.lo {
            (lo, true)
        } else if lo == self.lo {
            (lo, self.lo_closed)
        } else {
            (self.lo, self.lo_closed)
        };
        let (new_hi, hi_closed) = if hi < self.hi {
            (hi, true)
        } else if hi == self.hi {
            (hi, self.hi_closed)
        } else {
            (self.hi, self.hi_closed)
        };
        Interval::new(new_lo, new_hi, lo_closed, hi_closed)
    }

    /// The closed range actually sampled: open endpoints move inward by
    /// `ENDPOINT_DELTA` times the width (or absolute delta for tiny widths).
    pub fn sampling_range(&self) -> Result<(f64, f64)> {
        if !self.is_bounded() {
            return Err(Error::Precondition(format!(
                "cannot sample unbounded interval {self}; supply a bounding box"
            )));
        }
        if self.is_degenerate() {
            return Err(Error::Precondition(format!("degenerate interval {self}")));
        }
        let step = (ENDPOINT_DELTA * self.width().min(1.0))
            .max(4.0 * f64::EPSILON * self.lo.abs().max(self.hi.abs()));
        let lo = if self.lo_closed {
            self.lo
        } else {
            self.lo + step
        };
        let hi = if self.hi_closed {
            self.hi
        } else {
            self.hi - step
        };
        Ok((lo, hi))
    }
}

impl std::fmt::Display for Interval {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(
            f,
            "{}{}, {}{}",
            if self.lo_closed { '[' } else { '(' },
            self.lo,
            self.hi,
            if self.hi_closed { ']' } else { ')' }
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn membership_respects_flags() {
        let i = Interval::new(0.0, 1.0, true, false);
        assert!(i.contains(0.0));
        assert!(!i.contains(1.0));
        assert!(i.contains(0.5));
        assert!(!i.contains(f64::NAN));
        assert!(Interval::real_line().contains(-1e300));
    }

    #[test]
    fn box_intersection_closes_cut_endpoints() {
        let i = Interval::positive().intersect_box(0.1, 10.0);
        assert_eq!(i, Interval::closed(0.1, 10.0));
        let j = Interval::open(0.0, 1.0).intersect_box(-5.0, 5.0);
        assert_eq!(j, Interval::open(0.0, 1.0));
    }

    #[test]
    fn open_endpoints_shrink_for_sampling() {
        let (lo, hi) = Interval::open(0.0, 1.0).sampling_range().unwrap();
        assert!(lo > 0.0 && lo <= 1e-6);
        assert!((1.0 - 1e-6..1.0).contains(&hi));
        let (lo, hi) = Interval::closed(1.0, 4.0).sampling_range().unwrap();
        assert_eq!((lo, hi), (1.0, 4.0));
        assert!(Interval::positive().sampling_range().is_err());
    }
}
