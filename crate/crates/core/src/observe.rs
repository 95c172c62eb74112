//! Hooks for watching a solver work: the bracket after each iteration and the
//! kind of step that produced each probe.

/// How a probe abscissa was chosen.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum StepKind {
    /// Starting point(s) of the method.
    Initial,
    /// Vertex of an interpolating parabola.
    Parabolic,
    /// Golden-section fallback.
    Golden,
    /// Ratio-section probe (passive step or fallback).
    Ratio,
    /// Symmetric probe pair of the dichotomous search.
    Dichotomy,
    /// Endpoint probe issued by the monotonicity recognizer.
    Recognizer,
}

pub trait Observer {
    /// The current uncertainty interval, reported once per iteration.
    fn bracket(&mut self, _lo: f64, _hi: f64) {}

    /// Called just before a probe is evaluated.
    fn step(&mut self, _kind: StepKind, _x: f64) {}
}

impl Observer for () {}

/// Records everything it is told.
#[derive(Debug, Default, Clone)]
pub struct Recorder {
    pub brackets: Vec<(f64, f64)>,
    pub steps: Vec<(StepKind, f64)>,
}

impl Observer for Recorder {
    fn bracket(&mut self, lo: f64, hi: f64) {
        self.brackets.push((lo, hi));
    }

    fn step(&mut self, kind: StepKind, x: f64) {
        self.steps.push((kind, x));
    }
}

impl Recorder {
    pub fn count(&self, kind: StepKind) -> usize {
        self.steps.iter().filter(|(k, _)| *k == kind).count()
    }
}
