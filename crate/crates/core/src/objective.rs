use crate::error::{Error, Result};
use crate::types::Point2;

/// Wraps a scalar objective, counting every evaluation and recording the
/// evaluated points in order.
///
/// There is no memoization: asking twice for the same abscissa costs two
/// evaluations. One instance belongs to exactly one minimization run.
pub struct CountingObjective<F> {
    target: F,
    transcript: Vec<Point2>,
    budget: Option<usize>,
}

impl<F> CountingObjective<F>
where
    F: FnMut(f64) -> f64,
{
    pub fn new(target: F) -> Self {
        Self {
            target,
            transcript: Vec::new(),
            budget: None,
        }
    }

    /// Caps the number of evaluations; further requests fail with
    /// [`Error::BudgetExhausted`].
    pub fn with_budget(mut self, limit: usize) -> Self {
        self.budget = Some(limit);
        self
    }

    /// Tightens the evaluation cap. A looser cap than the current one is ignored.
    pub fn limit_budget(&mut self, limit: usize) {
        self.budget = Some(self.budget.map_or(limit, |b| b.min(limit)));
    }

    pub fn budget(&self) -> Option<usize> {
        self.budget
    }

    pub fn eval(&mut self, x: f64) -> Result<Point2> {
        if !x.is_finite() {
            return Err(Error::NonFiniteAbscissa { x });
        }
        if let Some(limit) = self.budget {
            if self.transcript.len() >= limit {
                return Err(Error::BudgetExhausted { limit });
            }
        }
        let y = (self.target)(x);
        if !y.is_finite() {
            return Err(Error::NonFinite { x });
        }
        let p = Point2::new(x, y);
        self.transcript.push(p);
        Ok(p)
    }

    pub fn count(&self) -> usize {
        self.transcript.len()
    }

    pub fn transcript(&self) -> &[Point2] {
        &self.transcript
    }

    /// Lowest-ordinate point seen so far (earliest on ties).
    pub fn best(&self) -> Option<Point2> {
        self.transcript
            .iter()
            .copied()
            .reduce(|best, p| if p.y < best.y { p } else { best })
    }

    /// Evaluates the raw target without counting or recording.
    pub fn peek(&mut self, x: f64) -> f64 {
        (self.target)(x)
    }

    pub fn into_transcript(self) -> Vec<Point2> {
        self.transcript
    }
}

/// Free-function form of [`CountingObjective::eval`].
pub fn eval<F: FnMut(f64) -> f64>(obj: &mut CountingObjective<F>, x: f64) -> Result<Point2> {
    obj.eval(x)
}
