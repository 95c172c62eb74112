//! Randomized property harness over synthetic targets `a|x - v|^p + k`.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::Result;
use crate::method::Method;
use crate::objective::CountingObjective;
use crate::observe::{Observer, StepKind};
use crate::tolerance::{e0, Tolerance};
use crate::types::{Interval, MinimizeOutcome};


/// `a|x - v|^p + k` on an interval strictly containing `v`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SyntheticTarget {
    pub a: f64,
    pub v: f64,
    pub p: f64,
    pub k: f64,
    pub interval: Interval,
}

impl SyntheticTarget {
    pub fn eval(&self, x: f64) -> f64 {
        self.a * (x - self.v).abs().powf(self.p) + self.k
    }

    /// Draws a target. The offset `k` is at most `a (e0(v)/10)^p` under the
    /// default tolerance, so the power term is never absorbed by `k` at the
    /// scale the solvers resolve.
    pub fn random(rng: &mut impl Rng) -> Self {
        let a = 10f64.powf(rng.gen_range(-1.0..2.0));
        let p = rng.gen_range(1.0..=6.0);
        let v = rng.gen_range(-10.0..10.0);
        let w = 10f64.powf(rng.gen_range(-1.0..1.3));
        let lo = v - w * rng.gen_range(0.02..0.98);
        let interval = Interval::new(lo, lo + w).expect("positive width");
        let resolution = e0(&Tolerance::default(), v) / 10.0;
        let k = rng.gen_range(0.0..=1.0) * a * resolution.powf(p);
        SyntheticTarget { a, v, p, k, interval }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum Violation {
    /// The bracket reported after some iteration excluded the minimizer.
    LostBracket { iteration: usize, lo: f64, hi: f64 },
    /// The answer is further from the minimizer than allowed.
    Inaccurate { x_min: f64, allowed: f64 },
    Failed(String),
}

#[derive(Debug, Clone)]
pub struct HarnessCase {
    pub target: SyntheticTarget,
    pub method: Method,
    pub outcome: Option<MinimizeOutcome>,
    pub violations: Vec<Violation>,
}

#[derive(Debug, Clone)]
pub struct HarnessReport {
    pub seed: u64,
    pub targets: usize,
    pub cases: Vec<HarnessCase>,
}

impl HarnessReport {
    pub fn failures(&self) -> impl Iterator<Item = &HarnessCase> {
        self.cases.iter().filter(|c| !c.violations.is_empty())
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

struct BracketCheck {
    lo: f64,
    hi: f64,
    iteration: usize,
    violations: Vec<Violation>,
}

impl Observer for BracketCheck {
    fn bracket(&mut self, lo: f64, hi: f64) {
        self.iteration += 1;
        if lo > self.hi || hi < self.lo {
            self.violations.push(Violation::LostBracket {
                iteration: self.iteration,
                lo,
                hi,
            });
        }
    }

    fn step(&mut self, _kind: StepKind, _x: f64) {}
}

/// Abscissas around `v` whose computed value is bit-equal to `f(v)`. Close
/// to `v` the power term drops below half an ulp of `k`, so the minimizer
/// set in floating point is an interval rather than a point.
pub fn numerical_minimizer_set(target: &SyntheticTarget) -> (f64, f64) {
    let fv = target.eval(target.v);
    let edge = |outside: f64| {
        let (mut inside, mut outside) = (target.v, outside);
        for _ in 0..200 {
            let mid = 0.5 * (inside + outside);
            if mid == inside || mid == outside {
                break;
            }
            if target.eval(mid) == fv {
                inside = mid;
            } else {
                outside = mid;
            }
        }
        inside
    };
    (edge(target.interval.lo()), edge(target.interval.hi()))
}

/// Runs one target through one method and checks both properties against
/// the set returned by [`numerical_minimizer_set`].
pub fn check_case(target: &SyntheticTarget, method: &Method, tol: &Tolerance) -> HarnessCase {
    let f = |x: f64| target.eval(x);
    let (set_lo, set_hi) = numerical_minimizer_set(target);
    let mut check = BracketCheck {
        lo: set_lo,
        hi: set_hi,
        iteration: 0,
        violations: Vec::new(),
    };
    let mut obj = CountingObjective::new(f);
    let outcome = method.minimize_with(&mut obj, target.interval, tol, &mut check);
    let mut violations = check.violations;
    let outcome = match outcome {
        Ok(o) => {
            let allowed = 10.0 * e0(tol, target.v);
            let distance = if o.x_min < set_lo {
                set_lo - o.x_min
            } else {
                (o.x_min - set_hi).max(0.0)
            };
            if distance > allowed {
                violations.push(Violation::Inaccurate {
                    x_min: o.x_min,
                    allowed,
                });
            }
            Some(o)
        }
        Err(e) => {
            violations.push(Violation::Failed(e.to_string()));
            None
        }
    };
    HarnessCase {
        target: *target,
        method: *method,
        outcome,
        violations,
    }
}

/// Draws `targets` targets from `seed` and checks every method on each.
pub fn run_harness(seed: u64, targets: usize, methods: &[Method], tol: &Tolerance) -> Result<HarnessReport> {
    use rayon::prelude::*;

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let drawn: Vec<SyntheticTarget> = (0..targets).map(|_| SyntheticTarget::random(&mut rng)).collect();
    let cases = drawn
        .par_iter()
        .flat_map_iter(|t| methods.iter().map(move |m| check_case(t, m, tol)))
        .collect();
    Ok(HarnessReport {
        seed,
        targets,
        cases,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn draws_are_reproducible() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let t = SyntheticTarget::random(&mut a);
            assert_eq!(t, SyntheticTarget::random(&mut b));
            assert!(t.interval.lo() < t.v && t.v < t.interval.hi());
            assert!((1.0..=6.0).contains(&t.p));
        }
    }

    #[test]
    fn lost_bracket_is_reported() {
        let mut c = BracketCheck {
            lo: 1.0,
            hi: 1.0,
            iteration: 0,
            violations: vec![],
        };
        c.bracket(0.0, 2.0);
        c.bracket(1.5, 2.0);
        assert_eq!(c.violations.len(), 1);
    }
}
