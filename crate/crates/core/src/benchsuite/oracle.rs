//! Independent reference minimizer: dense grid scan plus local refinement.

use crate::error::Result;
use crate::section::GOLDEN_CONTRACTION;
use crate::types::Interval;

use super::functions::table3;

pub const GRID_POINTS: usize = 1_000_000;
const REFINE_WIDTH: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReferenceMinimum {
    pub x_star: f64,
    pub f_star: f64,
    /// Set of abscissas where the objective equals `f_star` exactly, when it
    /// is wider than a single grid cell.
    pub plateau: Option<Interval>,
}

/// Reference minimizer of benchmark problem `id`.
pub fn reference_minimizer(id: usize) -> Result<ReferenceMinimum> {
    let f = table3(id)?;
    Ok(scan_minimizer(f.evaluator, f.interval, GRID_POINTS))
}

/// Grid scan over `grid + 1` equispaced points. A contiguous run of grid
/// points at the minimal value is reported as a plateau, with both edges
/// located by bisection; otherwise the best grid cell pair is refined by
/// golden section to `1e-12` width.
pub fn scan_minimizer(f: impl Fn(f64) -> f64, interval: Interval, grid: usize) -> ReferenceMinimum {
    let (lo, hi) = (interval.lo(), interval.hi());
    let h = (hi - lo) / grid as f64;
    let at = |i: usize| if i == grid { hi } else { lo + h * i as f64 };

    let mut f_min = f64::INFINITY;
    let mut first = 0;
    let mut last = 0;
    let mut hits = 0usize;
    for i in 0..=grid {
        let y = f(at(i));
        if y < f_min {
            f_min = y;
            first = i;
            last = i;
            hits = 1;
        } else if y == f_min {
            last = i;
            hits += 1;
        }
    }

    if hits >= 2 && last - first + 1 == hits {
        let edge = |inside: f64, outside: f64| {
            let (mut inside, mut outside) = (inside, outside);
            for _ in 0..200 {
                let mid = 0.5 * (inside + outside);
                if mid == inside || mid == outside {
                    break;
                }
                if f(mid) == f_min {
                    inside = mid;
                } else {
                    outside = mid;
                }
            }
            inside
        };
        let p_lo = if first == 0 { lo } else { edge(at(first), at(first - 1)) };
        let p_hi = if last == grid { hi } else { edge(at(last), at(last + 1)) };
        let plateau = Interval::new(p_lo, p_hi).ok();
        return ReferenceMinimum {
            x_star: 0.5 * (p_lo + p_hi),
            f_star: f_min,
            plateau,
        };
    }

    let (mut a, mut b) = (at(first.saturating_sub(1)), at((first + 1).min(grid)));
    let mut best = (at(first), f_min);
    let consider = |x: f64, y: f64, best: &mut (f64, f64)| {
        if y < best.1 {
            *best = (x, y);
        }
    };
    let mut x1 = b - GOLDEN_CONTRACTION * (b - a);
    let mut x2 = a + GOLDEN_CONTRACTION * (b - a);
    let (mut y1, mut y2) = (f(x1), f(x2));
    consider(x1, y1, &mut best);
    consider(x2, y2, &mut best);
    while b - a > REFINE_WIDTH {
        if y1 <= y2 {
            b = x2;
            x2 = x1;
            y2 = y1;
            x1 = b - GOLDEN_CONTRACTION * (b - a);
            y1 = f(x1);
            consider(x1, y1, &mut best);
        } else {
            a = x1;
            x1 = x2;
            y1 = y2;
            x2 = a + GOLDEN_CONTRACTION * (b - a);
            y2 = f(x2);
            consider(x2, y2, &mut best);
        }
    }
    ReferenceMinimum {
        x_star: best.0,
        f_star: best.1,
        plateau: None,
    }
}
