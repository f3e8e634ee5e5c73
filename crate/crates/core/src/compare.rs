//! Margin and tolerance conventions shared by every checker.
//!
//! A margin is oriented so that a nonnegative value means the claimed relation
//! holds. A relation is violated only when the margin drops below
//! `-tol * max(1, |lhs|, |rhs|)`.

use serde::{Deserialize, Serialize};

pub const DEFAULT_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Relation {
    /// lhs <= rhs
    Le,
    /// lhs >= rhs
    Ge,
}

impl Relation {
    pub fn flip(self) -> Self {
        match self {
            Relation::Le => Relation::Ge,
            Relation::Ge => Relation::Le,
        }
    }

    pub fn margin(self, lhs: f64, rhs: f64) -> f64 {
        match self {
            Relation::Le => rhs - lhs,
            Relation::Ge => lhs - rhs,
        }
    }

    pub fn violated(self, lhs: f64, rhs: f64, tol: f64) -> bool {
        let m = self.margin(lhs, rhs);
        m.is_nan() || m < -tol * scale(lhs, rhs)
    }

    pub fn symbol(self) -> &'static str {
        match self {
            Relation::Le => "<=",
            Relation::Ge => ">=",
        }
    }
}

pub fn scale(lhs: f64, rhs: f64) -> f64 {
    1f64.max(lhs.abs()).max(rhs.abs())
}

/// `|a - b| <= tol * max(1, |a|, |b|)`
pub fn close(a: f64, b: f64, tol: f64) -> bool {
    (a - b).abs() <= tol * scale(a, b)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn margins_are_oriented() {
        assert_eq!(Relation::Le.margin(1.0, 3.0), 2.0);
        assert_eq!(Relation::Ge.margin(1.0, 3.0), -2.0);
        assert!(!Relation::Le.violated(1.0, 3.0, 0.0));
        assert!(Relation::Ge.violated(1.0, 3.0, 0.0));
    }

    #[test]
    fn tolerance_scales_with_magnitude() {
        // 1e6 * 1e-9 = 1e-3 slack
        assert!(!Relation::Le.violated(1e6 + 5e-4, 1e6, 1e-9));
        assert!(Relation::Le.violated(1e6 + 5e-3, 1e6, 1e-9));
        assert!(Relation::Le.violated(f64::NAN, 1.0, 1e-9));
    }
}
