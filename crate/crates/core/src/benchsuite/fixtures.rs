//! The versioned fixture file: problem definitions, published evaluation
//! counts and frozen reference minimizers.
//!
//! Format: UTF-8 text, one record per line, fields separated by a single tab.
//! Lines starting with `#` are comments; the last comment line before the
//! first record names the columns:
//!
//! ```text
//! id lo hi class expression bisect golden ratio_p_c0.5 ratio_p_c0.2 ratio_a brent brent_m x_star f_star plateau_lo plateau_hi
//! ```
//!
//! Counts are non-negative integers. The oracle columns hold round-trip
//! decimal floats, or `-` when absent (`plateau_*` is `-` for problems
//! without a plateau).

use std::fmt::Write as _;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::method::Method;
use crate::types::FunctionClass;

pub const FIXTURE_TEXT: &str = include_str!("../../fixtures/table3.tsv");

pub const COLUMNS: [&str; 16] = [
    "id",
    "lo",
    "hi",
    "class",
    "expression",
    "bisect",
    "golden",
    "ratio_p_c0.5",
    "ratio_p_c0.2",
    "ratio_a",
    "brent",
    "brent_m",
    "x_star",
    "f_star",
    "plateau_lo",
    "plateau_hi",
];

/// A published column of evaluation counts.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ReferenceColumn {
    Bisect,
    Golden,
    RatioPHalf,
    RatioPFifth,
    RatioA,
    Brent,
    BrentM,
}

impl ReferenceColumn {
    pub const ALL: [ReferenceColumn; 7] = [
        ReferenceColumn::Bisect,
        ReferenceColumn::Golden,
        ReferenceColumn::RatioPHalf,
        ReferenceColumn::RatioPFifth,
        ReferenceColumn::RatioA,
        ReferenceColumn::Brent,
        ReferenceColumn::BrentM,
    ];

    pub fn name(&self) -> &'static str {
        COLUMNS[5 + *self as usize]
    }

    /// Published totals over problems 1-20 and over 7-20.
    pub fn published_totals(&self) -> (usize, usize) {
        match self {
            ReferenceColumn::Bisect => (772, 568),
            ReferenceColumn::Golden => (587, 431),
            ReferenceColumn::RatioPHalf => (467, 436),
            ReferenceColumn::RatioPFifth => (341, 308),
            ReferenceColumn::RatioA => (227, 196),
            ReferenceColumn::Brent => (345, 214),
            ReferenceColumn::BrentM => (204, 176),
        }
    }

    /// The published column a configured method corresponds to, if any.
    pub fn for_method(method: &Method) -> Option<Self> {
        let near = |a: f64, b: f64| (a - b).abs() < 1e-12;
        match *method {
            Method::Bisect => Some(ReferenceColumn::Bisect),
            Method::Golden => Some(ReferenceColumn::Golden),
            Method::RatioP(r) if near(r.c(), 0.5) => Some(ReferenceColumn::RatioPHalf),
            Method::RatioP(r) if near(r.c(), 0.2) => Some(ReferenceColumn::RatioPFifth),
            Method::RatioA(r) if near(r.c(), 1e-3) => Some(ReferenceColumn::RatioA),
            Method::Brent => Some(ReferenceColumn::Brent),
            Method::BrentM(r) if near(r.c(), 0.2) => Some(ReferenceColumn::BrentM),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct ReferenceCounts([Option<usize>; 7]);

impl ReferenceCounts {
    pub fn get(&self, column: ReferenceColumn) -> Option<usize> {
        self.0[column as usize]
    }

    pub fn for_method(&self, method: &Method) -> Option<usize> {
        ReferenceColumn::for_method(method).and_then(|c| self.get(c))
    }
}

/// Frozen reference minimizer of one problem.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct OracleRecord {
    pub x_star: f64,
    pub f_star: f64,
    pub plateau: Option<(f64, f64)>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct FixtureRecord {
    pub id: usize,
    pub lo: f64,
    pub hi: f64,
    pub class: FunctionClass,
    pub expression: String,
    pub counts: ReferenceCounts,
    pub oracle: Option<OracleRecord>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Fixture {
    pub records: Vec<FixtureRecord>,
}

impl Fixture {
    pub fn get(&self, id: usize) -> Option<&FixtureRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Column sum over the given problem ids.
    pub fn total(&self, column: ReferenceColumn, ids: impl IntoIterator<Item = usize>) -> usize {
        ids.into_iter()
            .filter_map(|id| self.get(id).and_then(|r| r.counts.get(column)))
            .sum()
    }
}

/// The fixture compiled into the crate.
pub fn fixture() -> &'static Fixture {
    static CELL: OnceLock<Fixture> = OnceLock::new();
    CELL.get_or_init(|| parse_fixture(FIXTURE_TEXT).expect("bundled fixture parses"))
}

pub fn parse_fixture(text: &str) -> Result<Fixture> {
    let mut records = Vec::new();
    for (n, line) in text.lines().enumerate() {
        let line_no = n + 1;
        let bad = |reason: String| Error::Fixture {
            line: line_no,
            reason,
        };
        if line.trim().is_empty() || line.starts_with('#') {
            continue;
        }
        let fields: Vec<&str> = line.split('\t').collect();
        if fields.len() != COLUMNS.len() {
            return Err(bad(format!(
                "expected {} fields, found {}",
                COLUMNS.len(),
                fields.len()
            )));
        }
        let float = |i: usize| -> Result<f64> {
            fields[i]
                .parse::<f64>()
                .map_err(|e| bad(format!("{}: {e}", COLUMNS[i])))
        };
        let opt_float = |i: usize| -> Result<Option<f64>> {
            if fields[i] == "-" {
                Ok(None)
            } else {
                float(i).map(Some)
            }
        };
        let id = fields[0]
            .parse::<usize>()
            .map_err(|e| bad(format!("id: {e}")))?;
        let class = fields[3].parse::<FunctionClass>().map_err(bad)?;
        let mut counts = [None; 7];
        for (k, slot) in counts.iter_mut().enumerate() {
            let field = fields[5 + k];
            if field != "-" {
                *slot = Some(
                    field
                        .parse::<usize>()
                        .map_err(|e| bad(format!("{}: {e}", COLUMNS[5 + k])))?,
                );
            }
        }
        let oracle = match (opt_float(12)?, opt_float(13)?) {
            (Some(x_star), Some(f_star)) => {
                let plateau = match (opt_float(14)?, opt_float(15)?) {
                    (Some(a), Some(b)) => Some((a, b)),
                    (None, None) => None,
                    _ => return Err(bad("plateau needs both ends or neither".into())),
                };
                Some(OracleRecord {
                    x_star,
                    f_star,
                    plateau,
                })
            }
            (None, None) => None,
            _ => return Err(bad("x_star and f_star must both be present".into())),
        };
        records.push(FixtureRecord {
            id,
            lo: float(1)?,
            hi: float(2)?,
            class,
            expression: fields[4].to_string(),
            counts: ReferenceCounts(counts),
            oracle,
        });
    }
    Ok(Fixture { records })
}

/// Serializes records in the bundled format, preceded by `header` comment lines.
pub fn render_fixture(header: &[&str], records: &[FixtureRecord]) -> String {
    let mut out = String::new();
    for h in header {
        let _ = writeln!(out, "# {h}");
    }
    let _ = writeln!(out, "# {}", COLUMNS.join("\t"));
    let opt = |v: Option<f64>| v.map_or_else(|| "-".to_string(), |x| format!("{x:?}"));
    for r in records {
        let counts: Vec<String> = r
            .counts
            .0
            .iter()
            .map(|c| c.map_or_else(|| "-".to_string(), |c| c.to_string()))
            .collect();
        let (xs, fs, pl, ph) = match r.oracle {
            Some(o) => (
                Some(o.x_star),
                Some(o.f_star),
                o.plateau.map(|p| p.0),
                o.plateau.map(|p| p.1),
            ),
            None => (None, None, None, None),
        };
        let _ = writeln!(
            out,
            "{}\t{:?}\t{:?}\t{}\t{}\t{}\t{}\t{}\t{}\t{}",
            r.id,
            r.lo,
            r.hi,
            r.class,
            r.expression,
            counts.join("\t"),
            opt(xs),
            opt(fs),
            opt(pl),
            opt(ph)
        );
    }
    out
}
