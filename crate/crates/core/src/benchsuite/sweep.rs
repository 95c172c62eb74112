//! Parameter sweeps: mean evaluation count of the passive search against its
//! section ratio, and total count of the active search against the ratio
//! exponent `j` (with `c = 10^(j/2)`).

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::method::Method;
use crate::polyfit::{argmin_on, fit_polynomial, Polynomial};
use crate::section::RatioConfig;
use crate::tolerance::Tolerance;
use crate::types::Point2;

use super::functions::{table3, BenchFunction};
use super::runner::run_cell;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RatioSample {
    pub c: f64,
    pub mean_evaluations: f64,
    /// Problems that finished without error at this ratio.
    pub runs: usize,
}

#[derive(Debug, Clone)]
pub struct RatioSweep {
    pub samples: Vec<RatioSample>,
    pub fit: Option<Polynomial>,
}

impl RatioSweep {
    pub fn points(&self) -> Vec<Point2> {
        self.samples
            .iter()
            .map(|s| Point2::new(s.c, s.mean_evaluations))
            .collect()
    }

    /// Sample with the smallest mean count (first on ties).
    pub fn raw_argmin(&self) -> Option<RatioSample> {
        self.samples
            .iter()
            .copied()
            .reduce(|best, s| if s.mean_evaluations < best.mean_evaluations { s } else { best })
    }

    /// Minimizer of the smoothing polynomial over the sampled range.
    pub fn smoothed_argmin(&self) -> Option<f64> {
        let fit = self.fit.as_ref()?;
        let lo = self.samples.first()?.c;
        let hi = self.samples.last()?.c;
        Some(argmin_on(fit, lo, hi, 100_000))
    }

    pub fn mean_at(&self, c: f64) -> Option<f64> {
        self.samples
            .iter()
            .find(|s| (s.c - c).abs() < 1e-9)
            .map(|s| s.mean_evaluations)
    }
}

/// The ratio grid `from, from + step, ...` up to `to`, rounded to 12 decimals.
pub fn ratio_grid(from: f64, to: f64, step: f64) -> Result<Vec<f64>> {
    if !(from > 0.0 && from < to && to < 1.0 && step > 0.0) {
        return Err(Error::Precondition(format!(
            "ratio sweep needs 0 < from < to < 1 and step > 0, got from={from} to={to} step={step}"
        )));
    }
    let n = ((to - from) / step + 1e-9).floor() as usize;
    Ok((0..=n)
        .map(|i| ((from + step * i as f64) * 1e12).round() / 1e12)
        .collect())
}

/// Mean passive-search evaluation count over `ids` for each ratio on the
/// grid, smoothed by a least-squares polynomial of degree `fit_degree`.
pub fn sweep_ratio_c(
    ids: &[usize],
    from: f64,
    to: f64,
    step: f64,
    tol: &Tolerance,
    fit_degree: usize,
) -> Result<RatioSweep> {
    let functions = load(ids)?;
    let grid = ratio_grid(from, to, step)?;
    let samples: Vec<RatioSample> = grid
        .par_iter()
        .filter_map(|&c| {
            let method = Method::RatioP(RatioConfig::new(c).ok()?);
            let counts: Vec<usize> = functions
                .iter()
                .filter_map(|f| run_cell(&method, f, tol).ok().map(|o| o.evaluations))
                .collect();
            (!counts.is_empty()).then(|| RatioSample {
                c,
                mean_evaluations: counts.iter().sum::<usize>() as f64 / counts.len() as f64,
                runs: counts.len(),
            })
        })
        .collect();
    let points: Vec<Point2> = samples
        .iter()
        .map(|s| Point2::new(s.c, s.mean_evaluations))
        .collect();
    let fit = if fit_degree > 0 && points.len() > fit_degree + 1 {
        Some(fit_polynomial(&points, fit_degree)?)
    } else {
        None
    };
    Ok(RatioSweep { samples, fit })
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExponentSample {
    pub j: i32,
    pub c: f64,
    pub total_evaluations: usize,
    /// Problems that failed at this exponent and are missing from the total.
    pub failures: usize,
}

/// The active search's ratio for exponent `j`.
pub fn exponent_ratio(j: i32) -> f64 {
    10f64.powf(j as f64 / 2.0)
}

/// Total active-search evaluation count over `ids` for every integer `j` in
/// `j_from..=j_to`, using `c = 10^(j/2)`.
pub fn sweep_ratio_a_exponent(
    ids: &[usize],
    j_from: i32,
    j_to: i32,
    tol: &Tolerance,
) -> Result<Vec<ExponentSample>> {
    if !(-15 <= j_from && j_from <= j_to && j_to <= -2) {
        return Err(Error::Precondition(format!(
            "exponent range must lie within [-15, -2], got {j_from}..={j_to}"
        )));
    }
    let functions = load(ids)?;
    (j_from..=j_to)
        .collect::<Vec<_>>()
        .par_iter()
        .map(|&j| {
            let c = exponent_ratio(j);
            let method = Method::RatioA(RatioConfig::new(c)?);
            let results: Vec<_> = functions.iter().map(|f| run_cell(&method, f, tol)).collect();
            Ok(ExponentSample {
                j,
                c,
                total_evaluations: results.iter().filter_map(|r| r.as_ref().ok()).map(|o| o.evaluations).sum(),
                failures: results.iter().filter(|r| r.is_err()).count(),
            })
        })
        .collect()
}

fn load(ids: &[usize]) -> Result<Vec<BenchFunction>> {
    if ids.is_empty() {
        return Err(Error::Precondition("sweep needs at least one problem".into()));
    }
    ids.iter().map(|&id| table3(id)).collect()
}
