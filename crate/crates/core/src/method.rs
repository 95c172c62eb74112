//! Uniform handle over every solver, used by the benchmark runner and the CLI.

use std::fmt;
use std::str::FromStr;

use crate::active::{minimize_ratio_a_with, DEFAULT_ACTIVE_RATIO};
use crate::brent::{brent_m_minimize_with, brent_minimize_with, BrentMOptions, DEFAULT_BRENT_M_RATIO};
use crate::error::Result;
use crate::objective::CountingObjective;
use crate::observe::Observer;
use crate::section::{minimize_bisection_with, minimize_golden_with, minimize_ratio_p_with, RatioConfig};
use crate::tolerance::Tolerance;
use crate::types::{Interval, MinimizeOutcome};

/// Default section ratio of the passive search.
pub const DEFAULT_PASSIVE_RATIO: f64 = 0.2;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum MethodKind {
    Bisect,
    Golden,
    RatioP,
    RatioA,
    Brent,
    BrentM,
}

impl MethodKind {
    pub const ALL: [MethodKind; 6] = [
        MethodKind::Bisect,
        MethodKind::Golden,
        MethodKind::RatioP,
        MethodKind::RatioA,
        MethodKind::Brent,
        MethodKind::BrentM,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            MethodKind::Bisect => "bisect",
            MethodKind::Golden => "golden",
            MethodKind::RatioP => "ratio-p",
            MethodKind::RatioA => "ratio-a",
            MethodKind::Brent => "brent",
            MethodKind::BrentM => "brent-m",
        }
    }

    /// Whether the method is parameterized by a section ratio.
    pub fn takes_ratio(&self) -> bool {
        self.default_ratio().is_some()
    }

    pub fn default_ratio(&self) -> Option<f64> {
        match self {
            MethodKind::RatioP => Some(DEFAULT_PASSIVE_RATIO),
            MethodKind::RatioA => Some(DEFAULT_ACTIVE_RATIO),
            MethodKind::BrentM => Some(DEFAULT_BRENT_M_RATIO),
            _ => None,
        }
    }
}

impl fmt::Display for MethodKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for MethodKind {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        MethodKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| {
                let names: Vec<_> = MethodKind::ALL.iter().map(|k| k.name()).collect();
                format!("unknown method `{s}` (expected one of {})", names.join(", "))
            })
    }
}

/// A solver together with its parameters.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Method {
    Bisect,
    Golden,
    RatioP(RatioConfig),
    RatioA(RatioConfig),
    Brent,
    BrentM(RatioConfig),
}

impl Method {
    /// Builds a method, using the kind's default ratio when `c` is `None`.
    /// A ratio given to a method that takes none is ignored.
    pub fn new(kind: MethodKind, c: Option<f64>) -> Result<Self> {
        let ratio = || RatioConfig::new(c.or(kind.default_ratio()).unwrap_or(0.5));
        Ok(match kind {
            MethodKind::Bisect => Method::Bisect,
            MethodKind::Golden => Method::Golden,
            MethodKind::RatioP => Method::RatioP(ratio()?),
            MethodKind::RatioA => Method::RatioA(ratio()?),
            MethodKind::Brent => Method::Brent,
            MethodKind::BrentM => Method::BrentM(ratio()?),
        })
    }

    pub fn kind(&self) -> MethodKind {
        match self {
            Method::Bisect => MethodKind::Bisect,
            Method::Golden => MethodKind::Golden,
            Method::RatioP(_) => MethodKind::RatioP,
            Method::RatioA(_) => MethodKind::RatioA,
            Method::Brent => MethodKind::Brent,
            Method::BrentM(_) => MethodKind::BrentM,
        }
    }

    pub fn ratio(&self) -> Option<f64> {
        match self {
            Method::RatioP(r) | Method::RatioA(r) | Method::BrentM(r) => Some(r.c()),
            _ => None,
        }
    }

    /// Whether the method reports monotone and flat-bottom classifications.
    pub fn classifies(&self) -> bool {
        matches!(self, Method::RatioP(_) | Method::RatioA(_) | Method::BrentM(_))
    }

    /// Short label: the method name, with the ratio when there is one.
    pub fn label(&self) -> String {
        match self.ratio() {
            Some(c) => format!("{}(c={})", self.kind(), c),
            None => self.kind().to_string(),
        }
    }

    pub fn minimize<F>(
        &self,
        obj: &mut CountingObjective<F>,
        interval: Interval,
        tol: &Tolerance,
    ) -> Result<MinimizeOutcome>
    where
        F: FnMut(f64) -> f64,
    {
        self.minimize_with(obj, interval, tol, &mut ())
    }

    pub fn minimize_with<F, O>(
        &self,
        obj: &mut CountingObjective<F>,
        interval: Interval,
        tol: &Tolerance,
        observer: &mut O,
    ) -> Result<MinimizeOutcome>
    where
        F: FnMut(f64) -> f64,
        O: Observer + ?Sized,
    {
        match *self {
            Method::Bisect => minimize_bisection_with(obj, interval, tol, observer),
            Method::Golden => minimize_golden_with(obj, interval, tol, observer),
            Method::RatioP(r) => minimize_ratio_p_with(obj, interval, tol, r, observer),
            Method::RatioA(r) => minimize_ratio_a_with(obj, interval, tol, r, observer),
            Method::Brent => brent_minimize_with(obj, interval, tol, observer),
            Method::BrentM(r) => {
                brent_m_minimize_with(obj, interval, tol, BrentMOptions::new(r), observer)
            }
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}
