//! Brent's combined parabolic / golden-section minimizer and the modernized
//! variant with a ratio-section fallback and the fast recognizers.

use crate::classify::{detect_flat_bottom, detect_monotone_with};
use crate::objective::CountingObjective;
use crate::observe::{Observer, StepKind};
use crate::run::guarded;
use crate::section::RatioConfig;
use crate::tolerance::{stop_test, Tolerance};
use crate::types::{FunctionClass, Interval, MinimizeOutcome, Point2};
use crate::error::Result;

/// `(3 - sqrt(5)) / 2`: Brent's golden fallback ratio and start offset.
pub const GOLDEN_STEP: f64 = 0.381_966_011_250_105_1;

/// Default fallback ratio of the modernized method.
pub const DEFAULT_BRENT_M_RATIO: f64 = 0.2;

/// Settings of the modernized method.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BrentMOptions {
    pub ratio: RatioConfig,
    /// Run the flat-bottom and monotonicity recognizers.
    pub recognizers: bool,
}

impl BrentMOptions {
    pub fn new(ratio: RatioConfig) -> Self {
        Self {
            ratio,
            recognizers: true,
        }
    }
}

/// Brent's working set: bracket `[a, b]`, best point `x`, second best `w`,
/// previous second best `v`, last step `d` and the step before it `e`.
#[derive(Debug, Clone, Copy)]
pub struct BrentState {
    pub a: f64,
    pub b: f64,
    pub x: Point2,
    pub w: Point2,
    pub v: Point2,
    pub d: f64,
    pub e: f64,
}

pub fn brent_minimize<F>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
{
    brent_minimize_with(obj, interval, tol, &mut ())
}

pub fn brent_minimize_with<F, O>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    observer: &mut O,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
    O: Observer + ?Sized,
{
    run(obj, interval, tol, GOLDEN_STEP, StepKind::Golden, false, observer)
}

pub fn brent_m_minimize<F>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    cfg: RatioConfig,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
{
    brent_m_minimize_with(obj, interval, tol, BrentMOptions::new(cfg), &mut ())
}

pub fn brent_m_minimize_with<F, O>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    opts: BrentMOptions,
    observer: &mut O,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
    O: Observer + ?Sized,
{
    run(
        obj,
        interval,
        tol,
        opts.ratio.c(),
        StepKind::Ratio,
        opts.recognizers,
        observer,
    )
}

fn run<F, O>(
    obj: &mut CountingObjective<F>,
    interval: Interval,
    tol: &Tolerance,
    fallback: f64,
    fallback_kind: StepKind,
    recognizers: bool,
    observer: &mut O,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
    O: Observer + ?Sized,
{
    guarded(obj, tol, |obj| {
        let start = obj.count();
        let (a, b) = (interval.lo(), interval.hi());
        let x0 = a + GOLDEN_STEP * (b - a);
        observer.step(StepKind::Initial, x0);
        let x = obj.eval(x0)?;
        let mut s = BrentState {
            a,
            b,
            x,
            w: x,
            v: x,
            d: 0.0,
            e: 0.0,
        };
        let mut monotone_checked = !recognizers;

        loop {
            observer.bracket(s.a, s.b);
            let m = 0.5 * (s.a + s.b);
            let tol1 = tol.e0(s.x.x);
            let tol2 = 2.0 * tol1;
            if stop_test(s.a, s.b, s.x.x, tol) {
                return Ok((s.x, FunctionClass::StrictInterior));
            }

            let mut parabolic = false;
            if s.e.abs() > tol1 {
                let (x, w, v) = (s.x, s.w, s.v);
                let mut r = (x.x - w.x) * (x.y - v.y);
                let mut q = (x.x - v.x) * (x.y - w.y);
                let mut p = (x.x - v.x) * q - (x.x - w.x) * r;
                q = 2.0 * (q - r);
                if q > 0.0 {
                    p = -p;
                } else {
                    q = -q;
                }
                r = s.e;
                s.e = s.d;
                if p.abs() < (0.5 * q * r).abs() && p > q * (s.a - x.x) && p < q * (s.b - x.x) {
                    s.d = p / q;
                    let u = x.x + s.d;
                    if u - s.a < tol2 || s.b - u < tol2 {
                        s.d = if x.x < m { tol1 } else { -tol1 };
                    }
                    parabolic = true;
                }
            }
            if !parabolic {
                s.e = if s.x.x < m { s.b - s.x.x } else { s.a - s.x.x };
                s.d = fallback * s.e;
            }
            let ux = if s.d.abs() >= tol1 {
                s.x.x + s.d
            } else if s.d > 0.0 {
                s.x.x + tol1
            } else {
                s.x.x - tol1
            };
            observer.step(
                if parabolic { StepKind::Parabolic } else { fallback_kind },
                ux,
            );
            let u = obj.eval(ux)?;

            if recognizers {
                if let Some(q) = detect_flat_bottom(&obj.transcript()[start..]) {
                    return Ok((q, FunctionClass::FlatBottom));
                }
                if !monotone_checked {
                    if let Some(first4) = first_distinct(&obj.transcript()[start..], 4) {
                        monotone_checked = true;
                        let verdict = detect_monotone_with(&first4, interval, obj, tol, observer)?;
                        if let Some(q) = detect_flat_bottom(&obj.transcript()[start..]) {
                            return Ok((q, FunctionClass::FlatBottom));
                        }
                        if let Some(v) = verdict {
                            return Ok((v.minimizer, v.direction.class()));
                        }
                    }
                }
            }

            if u.y <= s.x.y {
                if u.x < s.x.x {
                    s.b = s.x.x;
                } else {
                    s.a = s.x.x;
                }
                s.v = s.w;
                s.w = s.x;
                s.x = u;
            } else {
                if u.x < s.x.x {
                    s.a = u.x;
                } else {
                    s.b = u.x;
                }
                if u.y <= s.w.y || s.w.x == s.x.x {
                    s.v = s.w;
                    s.w = u;
                } else if u.y <= s.v.y || s.v.x == s.x.x || s.v.x == s.w.x {
                    s.v = u;
                }
            }
        }
    })
}

/// The first `n` points with pairwise-distinct abscissas, if there are that many.
fn first_distinct(points: &[Point2], n: usize) -> Option<Vec<Point2>> {
    let mut out: Vec<Point2> = Vec::with_capacity(n);
    for p in points {
        if out.iter().all(|q| q.x != p.x) {
            out.push(*p);
            if out.len() == n {
                return Some(out);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::observe::Recorder;

    fn f12(x: f64) -> f64 {
        0.2 + (x - 1.5).powf(2.0)
    }

    #[test]
    fn golden_step_constant() {
        assert!((GOLDEN_STEP - (3.0 - 5f64.sqrt()) / 2.0).abs() < 1e-16);
    }

    #[test]
    fn brent_finds_quadratic_minimum() {
        let tol = Tolerance::default();
        let mut obj = CountingObjective::new(f12);
        let out = brent_minimize(&mut obj, Interval::new(0.3, 3.2).unwrap(), &tol).unwrap();
        assert!((out.x_min - 1.5).abs() < 3.0 * tol.e0(1.5));
        assert_eq!(out.classification, FunctionClass::StrictInterior);
        assert!(out.evaluations < 12, "{}", out.evaluations);
    }

    #[test]
    fn brent_m_constant_is_flat_in_three() {
        let mut obj = CountingObjective::new(|_| 1.0);
        let out = brent_m_minimize(
            &mut obj,
            Interval::new(0.5, 1.5).unwrap(),
            &Tolerance::default(),
            RatioConfig::new(DEFAULT_BRENT_M_RATIO).unwrap(),
        )
        .unwrap();
        assert_eq!(out.evaluations, 3);
        assert_eq!(out.classification, FunctionClass::FlatBottom);
    }

    #[test]
    fn brent_m_monotone_is_exact() {
        let mut obj = CountingObjective::new(|x: f64| 20.0 + 16.0 / x);
        let out = brent_m_minimize(
            &mut obj,
            Interval::new(2.6, 6.8).unwrap(),
            &Tolerance::default(),
            RatioConfig::new(DEFAULT_BRENT_M_RATIO).unwrap(),
        )
        .unwrap();
        assert_eq!(out.evaluations, 6);
        assert_eq!(out.x_min, 6.8);
        assert_eq!(out.classification, FunctionClass::MonotoneDecreasing);
    }

    #[test]
    fn golden_ratio_without_recognizers_matches_classic() {
        let iv = Interval::new(0.3, 3.2).unwrap();
        let tol = Tolerance::default();
        let mut classic = CountingObjective::new(f12);
        brent_minimize(&mut classic, iv, &tol).unwrap();
        let mut modern = CountingObjective::new(f12);
        let opts = BrentMOptions {
            ratio: RatioConfig::new(GOLDEN_STEP).unwrap(),
            recognizers: false,
        };
        brent_m_minimize_with(&mut modern, iv, &tol, opts, &mut ()).unwrap();
        assert_eq!(classic.transcript(), modern.transcript());
    }

    #[test]
    fn parabolic_and_fallback_steps_are_logged() {
        let mut obj = CountingObjective::new(|x: f64| (x - 0.7).powf(4.0) + x);
        let mut rec = Recorder::default();
        brent_minimize_with(&mut obj, Interval::new(-2.0, 3.0).unwrap(), &Tolerance::default(), &mut rec)
            .unwrap();
        assert!(rec.count(StepKind::Parabolic) > 0);
        assert!(rec.count(StepKind::Golden) > 0);
        assert_eq!(rec.count(StepKind::Ratio), 0);
    }
}
