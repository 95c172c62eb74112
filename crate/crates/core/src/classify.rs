//! Fast recognizers for monotone objectives and flat-bottomed plateaus.

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::objective::CountingObjective;
use crate::observe::{Observer, StepKind};
use crate::tolerance::Tolerance;
use crate::types::{FunctionClass, Interval, Point2};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Direction {
    Increasing,
    Decreasing,
}

impl Direction {
    pub fn class(self) -> FunctionClass {
        match self {
            Direction::Increasing => FunctionClass::MonotoneIncreasing,
            Direction::Decreasing => FunctionClass::MonotoneDecreasing,
        }
    }
}

/// A confirmed monotonicity hypothesis. The minimizer is the interval
/// endpoint on the low side of the function.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MonotoneVerdict {
    pub direction: Direction,
    pub minimizer: Point2,
    pub extra_evaluations: usize,
}

/// Checks whether the points in `w` suggest a monotone objective and, if so,
/// confirms the hypothesis with at most two probes at the low end of
/// `interval`.
///
/// The points are sorted by abscissa. If their ordinates are non-strictly
/// increasing the probe `u` goes to `interval.lo()`, which must not exceed the
/// smallest sampled ordinate, and then `v` goes to `lo + e0(lo)`, which must
/// not fall below `u`. The decreasing case mirrors this at `interval.hi()`.
pub fn detect_monotone<F>(
    w: &[Point2],
    interval: Interval,
    obj: &mut CountingObjective<F>,
    tol: &Tolerance,
) -> Result<Option<MonotoneVerdict>>
where
    F: FnMut(f64) -> f64,
{
    detect_monotone_with(w, interval, obj, tol, &mut ())
}

pub fn detect_monotone_with<F, O>(
    w: &[Point2],
    interval: Interval,
    obj: &mut CountingObjective<F>,
    tol: &Tolerance,
    observer: &mut O,
) -> Result<Option<MonotoneVerdict>>
where
    F: FnMut(f64) -> f64,
    O: Observer + ?Sized,
{
    if w.len() < 4 {
        return Err(Error::Precondition(format!(
            "monotonicity check needs at least 4 points, got {}",
            w.len()
        )));
    }
    let mut sorted = w.to_vec();
    sorted.sort_by(|p, q| p.x.total_cmp(&q.x));
    if sorted.windows(2).any(|pair| pair[0].x == pair[1].x) {
        return Err(Error::Precondition(
            "monotonicity check needs pairwise-distinct abscissas".into(),
        ));
    }
    if sorted.iter().any(|p| !interval.contains(p.x)) {
        return Err(Error::Precondition(
            "monotonicity check points must lie inside the interval".into(),
        ));
    }

    let increasing = sorted.windows(2).all(|pair| pair[0].y <= pair[1].y);
    let decreasing = sorted.windows(2).all(|pair| pair[0].y >= pair[1].y);
    let (direction, end, inward, lowest) = if increasing {
        (
            Direction::Increasing,
            interval.lo(),
            1.0,
            sorted[0].y,
        )
    } else if decreasing {
        (
            Direction::Decreasing,
            interval.hi(),
            -1.0,
            sorted[sorted.len() - 1].y,
        )
    } else {
        return Ok(None);
    };

    observer.step(StepKind::Recognizer, end);
    let u = obj.eval(end)?;
    if u.y > lowest {
        return Ok(None);
    }
    let vx = end + inward * tol.e0(end);
    observer.step(StepKind::Recognizer, vx);
    let v = obj.eval(vx)?;
    if u.y > v.y {
        return Ok(None);
    }
    Ok(Some(MonotoneVerdict {
        direction,
        minimizer: u,
        extra_evaluations: 2,
    }))
}

/// Looks for three points with pairwise-distinct abscissas and bit-identical
/// ordinates. Returns the earliest point (in `w` order) that belongs to such a
/// triple.
pub fn detect_flat_bottom(w: &[Point2]) -> Option<Point2> {
    // ordinate bits -> (index of first point, distinct abscissas seen, up to 3)
    let mut groups: HashMap<u64, (usize, Vec<u64>)> = HashMap::new();
    let mut earliest: Option<usize> = None;
    for (i, p) in w.iter().enumerate() {
        let (first, xs) = groups.entry(p.y.to_bits()).or_insert((i, Vec::new()));
        if xs.len() < 3 && !xs.contains(&p.x.to_bits()) {
            xs.push(p.x.to_bits());
            if xs.len() == 3 {
                earliest = Some(earliest.map_or(*first, |e| e.min(*first)));
            }
        }
    }
    earliest.map(|i| w[i])
}
