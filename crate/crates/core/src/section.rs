//! Segment-elimination solvers: dichotomous bisection, golden section and the
//! passive ratio-section search.

use crate::classify::{detect_flat_bottom, detect_monotone_with};
use crate::error::{Error, Result};
use crate::objective::CountingObjective;
use crate::observe::{Observer, StepKind};
use crate::run::guarded;
use crate::tolerance::{stop_test, Tolerance};
use crate::types::{FunctionClass, Interval, MinimizeOutcome, Point2};

/// `(sqrt(5) - 1) / 2`, the golden-section contraction factor.
pub const GOLDEN_CONTRACTION: f64 = 0.618_033_988_749_894_8;

/// Section ratio `c` in `(0, 1)`: a new probe is placed at
/// `c * end + (1 - c) * best` on the chosen sub-segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioConfig {
    c: f64,
}

impl RatioConfig {
    pub fn new(c: f64) -> Result<Self> {
        if c > 0.0 && c < 1.0 {
            Ok(Self { c })
        } else {
            Err(Error::InvalidRatio(c))
        }
    }

    pub fn c(&self) -> f64 {
        self.c
    }

    /// Divides the segment between `from` and `end` in ratio `c`, measured from `from`.
    #[inline]
    pub fn section(&self, from: f64, end: f64) -> f64 {
        self.c * end + (1.0 - self.c) * from
    }
}

pub fn minimize_bisection<F>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
{
    minimize_bisection_with(obj, interval, tol, &mut ())
}

/// Dichotomous search: each iteration evaluates a pair straddling the midpoint
/// at distance `e0(mid) / 2` and keeps the half holding the smaller value.
pub fn minimize_bisection_with<F, O>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    observer: &mut O,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
    O: Observer + ?Sized,
{
    guarded(obj, tol, |obj| {
        let (mut a, mut b) = (interval.lo(), interval.hi());
        let mut best: Option<Point2> = None;
        let keep = |p: Point2, best: &mut Option<Point2>| {
            if best.map_or(true, |q| p.y < q.y) {
                *best = Some(p);
            }
        };
        loop {
            observer.bracket(a, b);
            let mid = 0.5 * (a + b);
            if stop_test(a, b, mid, tol) {
                break;
            }
            let delta = 0.5 * tol.e0(mid);
            let (x1, x2) = (mid - delta, mid + delta);
            observer.step(StepKind::Dichotomy, x1);
            let p1 = obj.eval(x1)?;
            observer.step(StepKind::Dichotomy, x2);
            let p2 = obj.eval(x2)?;
            keep(p1, &mut best);
            keep(p2, &mut best);
            if p1.y <= p2.y {
                b = x2;
            } else {
                a = x1;
            }
        }
        let best = match best {
            Some(p) => p,
            None => {
                let mid = 0.5 * (a + b);
                observer.step(StepKind::Initial, mid);
                obj.eval(mid)?
            }
        };
        Ok((best, FunctionClass::StrictInterior))
    })
}

/// Golden-section bracket `[lo, lo + width]` with its two interior points.
///
/// The bracket is stored as an origin and a width so that each step scales
/// the width by exactly [`GOLDEN_CONTRACTION`].
#[derive(Debug, Clone, Copy)]
pub struct GoldenSection {
    lo: f64,
    width: f64,
    left: Point2,
    right: Point2,
}

impl GoldenSection {
    const INNER: f64 = 1.0 - GOLDEN_CONTRACTION;

    /// Evaluates the two interior golden points of `interval`.
    pub fn start<F, O>(
        obj: &mut CountingObjective<F>,
        interval: Interval,
        observer: &mut O,
    ) -> Result<Self>
    where
        F: FnMut(f64) -> f64,
        O: Observer + ?Sized,
    {
        let (lo, width) = (interval.lo(), interval.width());
        let x1 = lo + Self::INNER * width;
        let x2 = lo + GOLDEN_CONTRACTION * width;
        observer.step(StepKind::Initial, x1);
        let left = obj.eval(x1)?;
        observer.step(StepKind::Initial, x2);
        let right = obj.eval(x2)?;
        Ok(Self {
            lo,
            width,
            left,
            right,
        })
    }

    /// Drops the sub-segment beyond the worse interior point and evaluates
    /// one new interior point.
    pub fn step<F, O>(&mut self, obj: &mut CountingObjective<F>, observer: &mut O) -> Result<()>
    where
        F: FnMut(f64) -> f64,
        O: Observer + ?Sized,
    {
        let width = GOLDEN_CONTRACTION * self.width;
        if self.left.y <= self.right.y {
            self.width = width;
            self.right = self.left;
            let x = self.lo + Self::INNER * width;
            observer.step(StepKind::Golden, x);
            self.left = obj.eval(x)?;
        } else {
            self.lo = self.left.x;
            self.width = width;
            self.left = self.right;
            let x = self.lo + GOLDEN_CONTRACTION * width;
            observer.step(StepKind::Golden, x);
            self.right = obj.eval(x)?;
        }
        Ok(())
    }

    pub fn bracket(&self) -> (f64, f64) {
        (self.lo, self.lo + self.width)
    }

    pub fn width(&self) -> f64 {
        self.width
    }

    pub fn best(&self) -> Point2 {
        if self.left.y <= self.right.y {
            self.left
        } else {
            self.right
        }
    }
}

pub fn minimize_golden<F>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
{
    minimize_golden_with(obj, interval, tol, &mut ())
}

pub fn minimize_golden_with<F, O>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    observer: &mut O,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
    O: Observer + ?Sized,
{
    guarded(obj, tol, |obj| {
        let mut gs = GoldenSection::start(obj, interval, observer)?;
        loop {
            let (a, b) = gs.bracket();
            observer.bracket(a, b);
            if stop_test(a, b, gs.best().x, tol) {
                break;
            }
            gs.step(obj, observer)?;
        }
        Ok((gs.best(), FunctionClass::StrictInterior))
    })
}

/// Why a passive ratio-section run stopped.
#[derive(Debug, Clone, Copy, PartialEq)]
pub(crate) enum Finish {
    Converged(Point2),
    Flat(Point2),
    Monotone(Point2, FunctionClass),
}

impl Finish {
    pub(crate) fn into_result(self) -> (Point2, FunctionClass) {
        match self {
            Finish::Converged(p) => (p, FunctionClass::StrictInterior),
            Finish::Flat(p) => (p, FunctionClass::FlatBottom),
            Finish::Monotone(p, class) => (p, class),
        }
    }
}

/// State of the passive ratio-section search: the bracket `[a, b]` and the
/// best point `m` strictly inside it.
#[derive(Debug, Clone, Copy)]
pub(crate) struct PassiveSearch {
    pub(crate) interval: Interval,
    pub(crate) a: f64,
    pub(crate) b: f64,
    pub(crate) m: Point2,
    /// Transcript index at which this run started.
    pub(crate) start: usize,
    pub(crate) ratio: RatioConfig,
}

impl PassiveSearch {
    pub(crate) fn start<F, O>(
        obj: &mut CountingObjective<F>,
        interval: Interval,
        ratio: RatioConfig,
        observer: &mut O,
    ) -> Result<Self>
    where
        F: FnMut(f64) -> f64,
        O: Observer + ?Sized,
    {
        let start = obj.count();
        let mid = interval.midpoint();
        observer.step(StepKind::Initial, mid);
        let m = obj.eval(mid)?;
        Ok(Self {
            interval,
            a: interval.lo(),
            b: interval.hi(),
            m,
            start,
            ratio,
        })
    }

    pub(crate) fn converged(&self, tol: &Tolerance) -> bool {
        stop_test(self.a, self.b, self.m.x, tol)
            || (self.m.x - self.a).max(self.b - self.m.x) <= tol.e0(self.m.x)
    }

    /// One iteration: place a probe on the longer side of `m`, run the
    /// recognizers, then shrink the bracket.
    pub(crate) fn advance<F, O>(
        &mut self,
        obj: &mut CountingObjective<F>,
        tol: &Tolerance,
        observer: &mut O,
    ) -> Result<Option<Finish>>
    where
        F: FnMut(f64) -> f64,
        O: Observer + ?Sized,
    {
        let m = self.m;
        let px = if m.x - self.a > self.b - m.x {
            self.ratio.section(m.x, self.a)
        } else {
            self.ratio.section(m.x, self.b)
        };
        observer.step(StepKind::Ratio, px);
        let p = obj.eval(px)?;

        if let Some(q) = detect_flat_bottom(&obj.transcript()[self.start..]) {
            return Ok(Some(Finish::Flat(q)));
        }
        if obj.count() - self.start == 4 {
            let w = obj.transcript()[self.start..].to_vec();
            if distinct_abscissas(&w) {
                let verdict = detect_monotone_with(&w, self.interval, obj, tol, observer)?;
                if let Some(q) = detect_flat_bottom(&obj.transcript()[self.start..]) {
                    return Ok(Some(Finish::Flat(q)));
                }
                if let Some(v) = verdict {
                    return Ok(Some(Finish::Monotone(v.minimizer, v.direction.class())));
                }
            }
        }

        if p.y < m.y {
            if p.x < m.x {
                self.b = m.x;
            } else {
                self.a = m.x;
            }
            self.m = p;
        } else if p.x < m.x {
            self.a = p.x;
        } else {
            self.b = p.x;
        }
        Ok(None)
    }
}

pub(crate) fn distinct_abscissas(w: &[Point2]) -> bool {
    let mut xs: Vec<f64> = w.iter().map(|p| p.x).collect();
    xs.sort_by(f64::total_cmp);
    xs.windows(2).all(|pair| pair[0] != pair[1])
}

pub fn minimize_ratio_p<F>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    cfg: RatioConfig,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
{
    minimize_ratio_p_with(obj, interval, tol, cfg, &mut ())
}

/// Passive ratio-section search.
///
/// Starts from the midpoint and, on every iteration, probes the longer of
/// `[a, m]` and `[m, b]` at `c * end + (1 - c) * m` (ties go right). A single
/// evaluation is spent per iteration. Three equal ordinates stop the run as a
/// flat bottom; after the fourth point the monotonicity recognizer runs once.
pub fn minimize_ratio_p_with<F, O>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    cfg: RatioConfig,
    observer: &mut O,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
    O: Observer + ?Sized,
{
    guarded(obj, tol, |obj| {
        let mut search = PassiveSearch::start(obj, interval, cfg, observer)?;
        loop {
            observer.bracket(search.a, search.b);
            if search.converged(tol) {
                return Ok(Finish::Converged(search.m).into_result());
            }
            if let Some(done) = search.advance(obj, tol, observer)? {
                return Ok(done.into_result());
            }
        }
    })
}
