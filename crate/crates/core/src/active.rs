//! Active ratio-section search: a passive bootstrap in bisection mode until a
//! bracketing triple exists, then guarded successive parabolic steps.

use crate::error::{Error, Result};
use crate::objective::CountingObjective;
use crate::observe::{Observer, StepKind};
use crate::run::guarded;
use crate::section::{PassiveSearch, RatioConfig};
use crate::tolerance::Tolerance;
use crate::types::{FunctionClass, Interval, MinimizeOutcome, Point2};

/// Default section ratio of the active search.
pub const DEFAULT_ACTIVE_RATIO: f64 = 1e-3;

/// Iterations without halving the bracket before a bisecting probe is forced.
const STALL_LIMIT: usize = 3;

/// Three points with `left.x < mid.x < right.x` and `mid` strictly below
/// both neighbours.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BracketTriple {
    left: Point2,
    mid: Point2,
    right: Point2,
}

impl BracketTriple {
    pub fn new(left: Point2, mid: Point2, right: Point2) -> Result<Self> {
        if !(left.x < mid.x && mid.x < right.x) {
            return Err(Error::Precondition(
                "bracket triple abscissas must be strictly increasing".into(),
            ));
        }
        if !(mid.y < left.y && mid.y < right.y) {
            return Err(Error::Precondition(
                "bracket triple middle ordinate must be strictly lowest".into(),
            ));
        }
        Ok(Self { left, mid, right })
    }

    pub fn left(&self) -> Point2 {
        self.left
    }

    pub fn mid(&self) -> Point2 {
        self.mid
    }

    pub fn right(&self) -> Point2 {
        self.right
    }

    pub fn width(&self) -> f64 {
        self.right.x - self.left.x
    }

    /// Finds the bracketing triple among `points` whose middle ordinate is
    /// smallest. Neighbours are adjacent in abscissa order.
    pub fn find(points: &[Point2]) -> Option<Self> {
        let mut sorted = points.to_vec();
        sorted.sort_by(|p, q| p.x.total_cmp(&q.x));
        sorted.dedup_by(|p, q| p.x == q.x);
        sorted
            .windows(3)
            .filter(|t| t[1].y < t[0].y && t[1].y < t[2].y)
            .min_by(|s, t| s[1].y.total_cmp(&t[1].y))
            .map(|t| Self {
                left: t[0],
                mid: t[1],
                right: t[2],
            })
    }
}

/// Abscissa of the vertex of the parabola through the three points.
pub fn parabola_vertex(t: &BracketTriple) -> Result<f64> {
    vertex_through(t.left, t.mid, t.right)
}

/// Vertex abscissa of the parabola through any three points; [`Error::NoVertex`]
/// when they are collinear.
pub fn vertex_through(l: Point2, m: Point2, r: Point2) -> Result<f64> {
    let (xl2, xm2, xr2) = (l.x * l.x, m.x * m.x, r.x * r.x);
    let num = l.y * (xm2 - xr2) + m.y * (xr2 - xl2) + r.y * (xl2 - xm2);
    let den = l.y * (m.x - r.x) + m.y * (r.x - l.x) + r.y * (l.x - m.x);
    if den == 0.0 || !den.is_finite() {
        return Err(Error::NoVertex);
    }
    let v = 0.5 * num / den;
    if v.is_finite() {
        Ok(v)
    } else {
        Err(Error::NoVertex)
    }
}

pub fn minimize_ratio_a<F>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    cfg: RatioConfig,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
{
    minimize_ratio_a_with(obj, interval, tol, cfg, &mut ())
}

/// Active ratio-section search.
///
/// The bootstrap runs passive steps with ratio 0.5 (and their recognizers)
/// until the evaluated points contain a [`BracketTriple`]. The triple is then
/// refined by parabolic steps. A vertex that is undefined, outside the
/// bracket or closer than `e0` to the middle point is replaced by a
/// ratio-section probe `c * s + (1 - c) * mid` towards the farther endpoint
/// `s`, displaced at least `e0` from `mid`.
pub fn minimize_ratio_a_with<F, O>(
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
    let bisection = RatioConfig::new(0.5)?;
    guarded(obj, tol, |obj| {
        let mut search = PassiveSearch::start(obj, interval, bisection, observer)?;
        let mut triple = loop {
            if let Some(t) = BracketTriple::find(&obj.transcript()[search.start..]) {
                break t;
            }
            observer.bracket(search.a, search.b);
            if search.converged(tol) {
                return Ok((search.m, FunctionClass::StrictInterior));
            }
            if let Some(done) = search.advance(obj, tol, observer)? {
                return Ok(done.into_result());
            }
        };

        // Width at the last time the bracket halved, and iterations since.
        let mut reference = triple.width();
        let mut stalled = 0;
        loop {
            let BracketTriple { left, mid, right } = triple;
            observer.bracket(left.x, right.x);
            if right.x - left.x <= 0.5 * reference {
                reference = right.x - left.x;
                stalled = 0;
            }
            if left.y == mid.y || mid.y == right.y {
                return Ok((mid, FunctionClass::FlatBottom));
            }
            let guard = tol.e0(mid.x);
            if right.x - left.x <= 2.0 * guard
                || (mid.x - left.x <= guard && right.x - mid.x <= guard)
            {
                return Ok((mid, FunctionClass::StrictInterior));
            }

            let far = if mid.x - left.x > right.x - mid.x {
                left.x
            } else {
                right.x
            };
            let parabolic = parabola_vertex(&triple)
                .ok()
                .filter(|&r| left.x < r && r < right.x && (r - mid.x).abs() >= guard);
            let (kind, rx) = match parabolic {
                _ if stalled >= STALL_LIMIT => {
                    stalled = 0;
                    (StepKind::Ratio, 0.5 * (mid.x + far))
                }
                Some(r) => (StepKind::Parabolic, r),
                None => {
                    let mut r = cfg.section(mid.x, far);
                    if (r - mid.x).abs() < guard {
                        r = mid.x + guard.copysign(far - mid.x);
                    }
                    if r == far {
                        return Ok((mid, FunctionClass::StrictInterior));
                    }
                    (StepKind::Ratio, r)
                }
            };
            observer.step(kind, rx);
            let p = obj.eval(rx)?;
            stalled += 1;

            triple = if p.y < mid.y {
                if p.x < mid.x {
                    BracketTriple { left, mid: p, right: mid }
                } else {
                    BracketTriple { left: mid, mid: p, right }
                }
            } else if p.x < mid.x {
                BracketTriple { left: p, mid, right }
            } else {
                BracketTriple { left, mid, right: p }
            };
        }
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn triple(a: (f64, f64), b: (f64, f64), c: (f64, f64)) -> BracketTriple {
        BracketTriple::new(
            Point2::new(a.0, a.1),
            Point2::new(b.0, b.1),
            Point2::new(c.0, c.1),
        )
        .unwrap()
    }

    #[test]
    fn vertex_examples() {
        assert_eq!(parabola_vertex(&triple((-1.0, 1.0), (0.0, 0.0), (1.0, 1.0))).unwrap(), 0.0);
        assert_eq!(parabola_vertex(&triple((0.0, 1.0), (1.0, 0.0), (3.0, 4.0))).unwrap(), 1.0);
    }

    #[test]
    fn collinear_points_have_no_vertex() {
        let p = |x: f64| Point2::new(x, 2.0 * x + 1.0);
        assert_eq!(vertex_through(p(0.0), p(1.0), p(2.0)), Err(Error::NoVertex));
    }

    #[test]
    fn triple_invariants_are_enforced() {
        let p = Point2::new;
        assert!(BracketTriple::new(p(0.0, 1.0), p(1.0, 2.0), p(2.0, 3.0)).is_err());
        assert!(BracketTriple::new(p(1.0, 1.0), p(0.0, 0.0), p(2.0, 3.0)).is_err());
    }

    #[test]
    fn find_prefers_lowest_middle() {
        let p = Point2::new;
        let pts = [p(3.0, 0.5), p(0.0, 2.0), p(1.0, 1.0), p(2.0, 1.5), p(4.0, 0.7)];
        let t = BracketTriple::find(&pts).unwrap();
        assert_eq!(t.mid(), p(3.0, 0.5));
        assert_eq!(t.left(), p(2.0, 1.5));
        assert_eq!(t.right(), p(4.0, 0.7));
        assert!(BracketTriple::find(&[p(0.0, 1.0), p(1.0, 2.0), p(2.0, 3.0)]).is_none());
    }

    #[test]
    fn constant_is_flat_in_three() {
        let mut obj = CountingObjective::new(|_| 1.0);
        let out = minimize_ratio_a(
            &mut obj,
            Interval::new(0.5, 1.5).unwrap(),
            &Tolerance::default(),
            RatioConfig::new(DEFAULT_ACTIVE_RATIO).unwrap(),
        )
        .unwrap();
        assert_eq!(out.evaluations, 3);
        assert_eq!(out.classification, FunctionClass::FlatBottom);
    }

    #[test]
    fn first_parabolic_step_hits_quadratic_minimum() {
        let mut obj = CountingObjective::new(|x: f64| 0.2 + (x - 1.5).powf(2.0));
        let mut rec = crate::observe::Recorder::default();
        let out = minimize_ratio_a_with(
            &mut obj,
            Interval::new(0.3, 3.2).unwrap(),
            &Tolerance::default(),
            RatioConfig::new(DEFAULT_ACTIVE_RATIO).unwrap(),
            &mut rec,
        )
        .unwrap();
        let first = rec
            .steps
            .iter()
            .find(|(k, _)| *k == StepKind::Parabolic)
            .unwrap();
        assert!((first.1 - 1.5).abs() < 1e-12);
        assert!((out.x_min - 1.5).abs() < 1e-12);
    }
}
