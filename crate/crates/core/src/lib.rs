//! Derivative-free minimization of a function of one variable on a closed
//! interval.
//!
//! The solvers count every evaluation of the objective. Ratio-section and
//! modified Brent searches also recognize constant, monotone and flat-bottom
//! objectives after a handful of evaluations and report the class they found.
//!
//! ```
//! use ratiosect::{minimize_ratio_p, CountingObjective, Interval, RatioConfig, Tolerance};
//!
//! let mut obj = CountingObjective::new(|x: f64| (x - 1.5).powi(2));
//! let out = minimize_ratio_p(
//!     &mut obj,
//!     Interval::new(0.0, 4.0).unwrap(),
//!     &Tolerance::default(),
//!     RatioConfig::new(0.2).unwrap(),
//! )
//! .unwrap();
//! assert!((out.x_min - 1.5).abs() < 1e-4);
//! ```

mod active;
pub mod benchsuite;
mod brent;
mod classify;
mod error;
mod method;
mod objective;
mod observe;
mod polyfit;
mod run;
mod section;
mod tolerance;
mod types;

pub use active::{
    minimize_ratio_a, minimize_ratio_a_with, parabola_vertex, vertex_through, BracketTriple,
    DEFAULT_ACTIVE_RATIO,
};
pub use brent::{
    brent_m_minimize, brent_m_minimize_with, brent_minimize, brent_minimize_with, BrentMOptions,
    BrentState, DEFAULT_BRENT_M_RATIO, GOLDEN_STEP,
};
pub use classify::{detect_flat_bottom, detect_monotone, detect_monotone_with, Direction, MonotoneVerdict};
pub use error::{Error, Result};
pub use method::{Method, MethodKind, DEFAULT_PASSIVE_RATIO};
pub use objective::{eval, CountingObjective};
pub use observe::{Observer, Recorder, StepKind};
pub use polyfit::{argmin_on, fit_polynomial, gauss_solve, LinearSystem, Polynomial};
pub use section::{
    minimize_bisection, minimize_bisection_with, minimize_golden, minimize_golden_with,
    minimize_ratio_p, minimize_ratio_p_with, GoldenSection, RatioConfig, GOLDEN_CONTRACTION,
};
pub use tolerance::{e0, stop_test, Tolerance};
pub use types::{FunctionClass, Interval, MinimizeOutcome, Point2, Status};
