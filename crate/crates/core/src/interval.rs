use serde::{Deserialize, Serialize};

/// A closed interval `[lower, upper]` of nonnegative norm values.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Interval {
    pub lower: f64,
    pub upper: f64,
}

impl Interval {
    pub fn new(lower: f64, upper: f64) -> Self {
        Interval { lower, upper }
    }

    pub fn exact(v: f64) -> Self {
        Interval { lower: v, upper: v }
    }

    pub fn width(&self) -> f64 {
        self.upper - self.lower
    }

    /// Width relative to the upper end (zero for the zero interval).
    pub fn relative_width(&self) -> f64 {
        if self.upper == 0.0 {
            0.0
        } else {
            self.width() / self.upper
        }
    }

    pub fn scale(&self, factor: f64) -> Self {
        Interval::new(self.lower * factor, self.upper * factor)
    }

    pub fn contains(&self, v: f64, rel_tol: f64) -> bool {
        let slack = rel_tol * self.upper.abs().max(v.abs());
        v >= self.lower - slack && v <= self.upper + slack
    }

    pub fn intersects(&self, other: &Interval, rel_tol: f64) -> bool {
        let slack = rel_tol * self.upper.max(other.upper);
        self.lower <= other.upper + slack && other.lower <= self.upper + slack
    }
}
