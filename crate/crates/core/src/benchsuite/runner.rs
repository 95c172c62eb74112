use rayon::prelude::*;

use crate::error::Error;
use crate::method::Method;
use crate::objective::CountingObjective;
use crate::tolerance::Tolerance;
use crate::types::MinimizeOutcome;

use super::functions::{table3, BenchFunction};

/// One (method, problem) cell.
#[derive(Debug, Clone)]
pub struct BenchRow {
    pub method: Method,
    pub function_id: usize,
    pub outcome: Result<MinimizeOutcome, Error>,
}

impl BenchRow {
    pub fn evaluations(&self) -> Option<usize> {
        self.outcome.as_ref().ok().map(|o| o.evaluations)
    }
}

/// Rows in (method, problem) order plus per-method column sums.
#[derive(Debug, Clone)]
pub struct BenchReport {
    pub methods: Vec<Method>,
    pub function_ids: Vec<usize>,
    pub rows: Vec<BenchRow>,
    /// Σk per method, in `methods` order; failed cells contribute nothing.
    pub totals: Vec<usize>,
}

impl BenchReport {
    pub fn rows_for(&self, method: &Method) -> impl Iterator<Item = &BenchRow> + '_ {
        let method = *method;
        self.rows.iter().filter(move |r| r.method == method)
    }

    pub fn cell(&self, method: &Method, id: usize) -> Option<&BenchRow> {
        self.rows
            .iter()
            .find(|r| r.method == *method && r.function_id == id)
    }

    pub fn total(&self, method: &Method) -> Option<usize> {
        self.methods
            .iter()
            .position(|m| m == method)
            .map(|i| self.totals[i])
    }

    /// Totals divided by the smallest total (the fastest method reads 1).
    pub fn relative(&self) -> Vec<f64> {
        let fastest = self.totals.iter().copied().filter(|&t| t > 0).min().unwrap_or(1);
        self.totals
            .iter()
            .map(|&t| t as f64 / fastest as f64)
            .collect()
    }

    /// Ratio of `slow`'s total to `fast`'s total.
    pub fn speedup(&self, slow: &Method, fast: &Method) -> Option<f64> {
        match (self.total(slow), self.total(fast)) {
            (Some(s), Some(f)) if f > 0 => Some(s as f64 / f as f64),
            _ => None,
        }
    }

    pub fn failed_cells(&self) -> usize {
        self.rows.iter().filter(|r| r.outcome.is_err()).count()
    }
}

/// Runs `method` on one problem with a fresh objective.
pub fn run_cell(method: &Method, f: &BenchFunction, tol: &Tolerance) -> Result<MinimizeOutcome, Error> {
    let mut obj = CountingObjective::new(f.evaluator);
    method.minimize(&mut obj, f.interval, tol)
}

/// Runs every method on every problem. Cells are independent and run in
/// parallel; the report order does not depend on completion order.
pub fn run_benchmark(methods: &[Method], ids: &[usize], tol: &Tolerance) -> Result<BenchReport, Error> {
    if methods.is_empty() || ids.is_empty() {
        return Err(Error::Precondition(
            "benchmark needs at least one method and one problem".into(),
        ));
    }
    let functions = ids
        .iter()
        .map(|&id| table3(id))
        .collect::<Result<Vec<_>, _>>()?;
    let cells: Vec<(Method, &BenchFunction)> = methods
        .iter()
        .flat_map(|m| functions.iter().map(move |f| (*m, f)))
        .collect();
    let rows: Vec<BenchRow> = cells
        .par_iter()
        .map(|(method, f)| BenchRow {
            method: *method,
            function_id: f.id,
            outcome: run_cell(method, f, tol),
        })
        .collect();
    let totals = methods
        .iter()
        .map(|m| {
            rows.iter()
                .filter(|r| r.method == *m)
                .filter_map(BenchRow::evaluations)
                .sum()
        })
        .collect();
    Ok(BenchReport {
        methods: methods.to_vec(),
        function_ids: ids.to_vec(),
        rows,
        totals,
    })
}
