//! Shared plumbing for solver runs: budget enforcement and outcome assembly.

use crate::error::{Error, Result};
use crate::objective::CountingObjective;
use crate::tolerance::Tolerance;
use crate::types::{FunctionClass, MinimizeOutcome, Point2, Status};

/// Runs `body` with the objective capped at `tol.max_evaluations()` fresh
/// evaluations. Running out of budget is not an error: the best point seen
/// so far is reported with [`Status::BudgetExhausted`].
pub(crate) fn guarded<F, B>(
    obj: &mut CountingObjective<F>,
    tol: &Tolerance,
    body: B,
) -> Result<MinimizeOutcome>
where
    F: FnMut(f64) -> f64,
    B: FnOnce(&mut CountingObjective<F>) -> Result<(Point2, FunctionClass)>,
{
    let start = obj.count();
    obj.limit_budget(start + tol.max_evaluations());
    match body(obj) {
        Ok((best, classification)) => Ok(MinimizeOutcome {
            x_min: best.x,
            f_min: best.y,
            evaluations: obj.count() - start,
            classification,
            status: Status::Converged,
        }),
        Err(Error::BudgetExhausted { limit }) => {
            let best = obj.transcript()[start..]
                .iter()
                .copied()
                .reduce(|best, p| if p.y < best.y { p } else { best })
                .ok_or(Error::BudgetExhausted { limit })?;
            Ok(MinimizeOutcome {
                x_min: best.x,
                f_min: best.y,
                evaluations: obj.count() - start,
                classification: FunctionClass::StrictInterior,
                status: Status::BudgetExhausted,
            })
        }
        Err(e) => Err(e),
    }
}
