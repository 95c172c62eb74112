use crate::error::{Error, Result};

/// Stopping tolerance shared by every solver.
///
/// The position-dependent tolerance is `e0(x) = epsilon * |x| + floor`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerance {
    epsilon: f64,
    floor: f64,
    max_evaluations: usize,
}

impl Default for Tolerance {
    fn default() -> Self {
        Self {
            epsilon: 1e-5,
            floor: 1e-10,
            max_evaluations: 1000,
        }
    }
}

impl Tolerance {
    pub fn new(epsilon: f64, floor: f64, max_evaluations: usize) -> Result<Self> {
        if !(epsilon > 0.0 && epsilon < 1.0) {
            return Err(Error::InvalidTolerance(format!(
                "epsilon must lie in (0, 1), got {epsilon}"
            )));
        }
        if !(floor > 0.0 && floor.is_finite()) {
            return Err(Error::InvalidTolerance(format!(
                "floor must be positive and finite, got {floor}"
            )));
        }
        if max_evaluations == 0 {
            return Err(Error::InvalidTolerance(
                "max_evaluations must be positive".into(),
            ));
        }
        Ok(Self {
            epsilon,
            floor,
            max_evaluations,
        })
    }

    /// Relative tolerance `epsilon` with the default floor and budget.
    pub fn with_epsilon(epsilon: f64) -> Result<Self> {
        let d = Self::default();
        Self::new(epsilon, d.floor, d.max_evaluations)
    }

    pub fn with_max_evaluations(self, max_evaluations: usize) -> Result<Self> {
        Self::new(self.epsilon, self.floor, max_evaluations)
    }

    pub fn epsilon(&self) -> f64 {
        self.epsilon
    }

    pub fn floor(&self) -> f64 {
        self.floor
    }

    pub fn max_evaluations(&self) -> usize {
        self.max_evaluations
    }

    #[inline]
    pub fn e0(&self, x: f64) -> f64 {
        self.epsilon * x.abs() + self.floor
    }
}

/// Free-function form of [`Tolerance::e0`].
#[inline]
pub fn e0(tol: &Tolerance, x: f64) -> f64 {
    tol.e0(x)
}

/// Brent-style termination test: the whole bracket `[a, b]` lies within
/// `2 * e0(m_x)` of the current best abscissa.
#[inline]
pub fn stop_test(a: f64, b: f64, m_x: f64, tol: &Tolerance) -> bool {
    (m_x - 0.5 * (a + b)).abs() + 0.5 * (b - a) <= 2.0 * tol.e0(m_x)
}
