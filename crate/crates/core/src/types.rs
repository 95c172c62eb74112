use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// An evaluated point: abscissa and objective value.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Point2 {
    pub x: f64,
    pub y: f64,
}

impl Point2 {
    pub const fn new(x: f64, y: f64) -> Self {
        Self { x, y }
    }
}

/// A closed search interval `[lo, hi]` with finite endpoints and `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if lo.is_finite() && hi.is_finite() && lo < hi {
            Ok(Self { lo, hi })
        } else {
            Err(Error::InvalidInterval { lo, hi })
        }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn midpoint(&self) -> f64 {
        0.5 * (self.lo + self.hi)
    }

    pub fn contains(&self, x: f64) -> bool {
        self.lo <= x && x <= self.hi
    }
}

/// Shape of the objective as established by a solver.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum FunctionClass {
    Constant,
    MonotoneIncreasing,
    MonotoneDecreasing,
    FlatBottom,
    StrictInterior,
}

impl FunctionClass {
    pub const ALL: [FunctionClass; 5] = [
        FunctionClass::Constant,
        FunctionClass::MonotoneIncreasing,
        FunctionClass::MonotoneDecreasing,
        FunctionClass::FlatBottom,
        FunctionClass::StrictInterior,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            FunctionClass::Constant => "constant",
            FunctionClass::MonotoneIncreasing => "monotone_increasing",
            FunctionClass::MonotoneDecreasing => "monotone_decreasing",
            FunctionClass::FlatBottom => "flat_bottom",
            FunctionClass::StrictInterior => "strict_interior",
        }
    }

    pub fn is_monotone(&self) -> bool {
        matches!(
            self,
            FunctionClass::MonotoneIncreasing | FunctionClass::MonotoneDecreasing
        )
    }
}

impl fmt::Display for FunctionClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for FunctionClass {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        FunctionClass::ALL
            .into_iter()
            .find(|c| c.as_str() == s)
            .ok_or_else(|| format!("unknown function class `{s}`"))
    }
}

/// Whether a run met its stopping rule or ran out of evaluations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Status {
    Converged,
    BudgetExhausted,
}

impl Status {
    pub fn as_str(&self) -> &'static str {
        match self {
            Status::Converged => "converged",
            Status::BudgetExhausted => "budget_exhausted",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// Result of a minimization run.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinimizeOutcome {
    pub x_min: f64,
    pub f_min: f64,
    /// Number of objective evaluations spent, including recognizer probes.
    pub evaluations: usize,
    pub classification: FunctionClass,
    pub status: Status,
}

impl MinimizeOutcome {
    pub fn converged(&self) -> bool {
        self.status == Status::Converged
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn interval_validation() {
        assert!(Interval::new(0.0, 1.0).is_ok());
        for (lo, hi) in [(1.0, 1.0), (2.0, 1.0), (f64::NAN, 1.0), (0.0, f64::INFINITY)] {
            assert!(matches!(Interval::new(lo, hi), Err(Error::InvalidInterval { .. })));
        }
        let i = Interval::new(-1.0, 3.0).unwrap();
        assert_eq!((i.width(), i.midpoint()), (4.0, 1.0));
        assert!(i.contains(-1.0) && i.contains(3.0) && !i.contains(3.5));
    }

    #[test]
    fn class_names_round_trip() {
        for c in FunctionClass::ALL {
            assert_eq!(c.as_str().parse::<FunctionClass>().unwrap(), c);
        }
        assert!("sideways".parse::<FunctionClass>().is_err());
        assert_eq!(FunctionClass::FlatBottom.to_string(), "flat_bottom");
    }
}
