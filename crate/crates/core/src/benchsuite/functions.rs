//! The twenty benchmark problems.
//!
//! Each evaluator is written with the same primitive operations, in the same
//! order, as its expression text so that a parsed expression reproduces it
//! bit for bit. Powers always go through [`power`].

use crate::error::{Error, Result};
use crate::types::{FunctionClass, Interval};

use super::fixtures::{fixture, OracleRecord, ReferenceCounts};

/// One benchmark problem.
#[derive(Debug, Clone, Copy)]
pub struct BenchFunction {
    pub id: usize,
    /// Closed form in the CLI expression syntax.
    pub expression: &'static str,
    pub evaluator: fn(f64) -> f64,
    pub interval: Interval,
    pub class_label: FunctionClass,
    pub reference_counts: ReferenceCounts,
    /// Frozen output of the reference minimizer, when the fixture carries it.
    pub oracle: Option<OracleRecord>,
}

impl BenchFunction {
    pub fn eval(&self, x: f64) -> f64 {
        (self.evaluator)(x)
    }
}

pub const FUNCTION_COUNT: usize = 20;

/// `base^exponent` as the benchmark problems and the CLI evaluate it.
/// Integer exponents up to 64 in magnitude use binary exponentiation so the
/// result does not depend on whether the optimizer rewrites `powf`.
pub fn power(base: f64, exponent: f64) -> f64 {
    if exponent.fract() != 0.0 || exponent.abs() > 64.0 {
        return base.powf(exponent);
    }
    let mut n = exponent.abs() as u32;
    let (mut acc, mut sq) = (1.0, base);
    while n > 0 {
        if n & 1 == 1 {
            acc *= sq;
        }
        n >>= 1;
        if n > 0 {
            sq *= sq;
        }
    }
    if exponent < 0.0 {
        1.0 / acc
    } else {
        acc
    }
}

pub(crate) struct Definition {
    pub id: usize,
    pub expression: &'static str,
    pub evaluator: fn(f64) -> f64,
    pub lo: f64,
    pub hi: f64,
    pub class_label: FunctionClass,
}

use FunctionClass::{Constant, FlatBottom, MonotoneDecreasing, MonotoneIncreasing, StrictInterior};

pub(crate) const DEFINITIONS: [Definition; FUNCTION_COUNT] = [
    Definition { id: 1, expression: "1", evaluator: f1, lo: 0.5, hi: 1.5, class_label: Constant },
    Definition { id: 2, expression: "20 + 16/x", evaluator: f2, lo: 2.6, hi: 6.8, class_label: MonotoneDecreasing },
    Definition { id: 3, expression: "1.5 + exp(x)", evaluator: f3, lo: 1.2, hi: 3.7, class_label: MonotoneIncreasing },
    Definition { id: 4, expression: "1.5 + max(4*cos(x), 1)", evaluator: f4, lo: 0.1, hi: 4.9, class_label: FlatBottom },
    Definition { id: 5, expression: "1.2 + max(5*exp(x) - 1, 1)", evaluator: f5, lo: -1.6, hi: 1.1, class_label: FlatBottom },
    Definition { id: 6, expression: "1.5 + max(cos(4 - x^2), 0.5)", evaluator: f6, lo: 3.2, hi: 3.5, class_label: FlatBottom },
    Definition { id: 7, expression: "1.5 + max(exp(-x), cos(x), x^4, x^2)", evaluator: f7, lo: -0.6, hi: 1.1, class_label: StrictInterior },
    Definition { id: 8, expression: "0.2 + max(13*(x-2)^2, 20*(x-1))", evaluator: f8, lo: -1.2, hi: 2.7, class_label: StrictInterior },
    Definition { id: 9, expression: "1.2 + abs(x-1)", evaluator: f9, lo: 0.5, hi: 6.5, class_label: StrictInterior },
    Definition { id: 10, expression: "12 + 1000*abs(x-2)^8.4", evaluator: f10, lo: 1.0, hi: 4.3, class_label: StrictInterior },
    Definition { id: 11, expression: "0.3 + cos(x^2 + 2*x - 3)", evaluator: f11, lo: -0.9, hi: 0.9, class_label: StrictInterior },
    Definition { id: 12, expression: "0.2 + (x-1.5)^2", evaluator: f12, lo: 0.3, hi: 3.2, class_label: StrictInterior },
    Definition { id: 13, expression: "100 + (1 - exp(x)*sin(x))^2", evaluator: f13, lo: 0.1, hi: 1.0, class_label: StrictInterior },
    Definition { id: 14, expression: "1.2 - cos(x^2)", evaluator: f14, lo: -1.2, hi: 1.5, class_label: StrictInterior },
    Definition { id: 15, expression: "1.2 + 5*exp(-x^2) + x", evaluator: f15, lo: 0.3, hi: 11.5, class_label: StrictInterior },
    Definition { id: 16, expression: "1.2 + exp(-x) + 3.5*sin(x)", evaluator: f16, lo: -1.6, hi: 0.8, class_label: StrictInterior },
    Definition { id: 17, expression: "2.3 + 3*exp(x) - x^2 + 5*x", evaluator: f17, lo: -15.0, hi: 7.0, class_label: StrictInterior },
    Definition { id: 18, expression: "1.2 + 3*cosh(x-2) - 2*sinh(x-3)", evaluator: f18, lo: -2.1, hi: 2.5, class_label: StrictInterior },
    Definition { id: 19, expression: "2.3 + (exp(3-x) + 4*(x-2))^2", evaluator: f19, lo: -0.5, hi: 2.5, class_label: StrictInterior },
    Definition { id: 20, expression: "1.2 + abs(x-2)^3.6", evaluator: f20, lo: 0.1, hi: 1.0, class_label: StrictInterior },
];

fn f1(_x: f64) -> f64 {
    1.0
}
fn f2(x: f64) -> f64 {
    20.0 + 16.0 / x
}
fn f3(x: f64) -> f64 {
    1.5 + x.exp()
}
fn f4(x: f64) -> f64 {
    1.5 + (4.0 * x.cos()).max(1.0)
}
fn f5(x: f64) -> f64 {
    1.2 + (5.0 * x.exp() - 1.0).max(1.0)
}
fn f6(x: f64) -> f64 {
    1.5 + (4.0 - power(x, 2.0)).cos().max(0.5)
}
fn f7(x: f64) -> f64 {
    1.5 + (-x).exp().max(x.cos()).max(power(x, 4.0)).max(power(x, 2.0))
}
fn f8(x: f64) -> f64 {
    0.2 + (13.0 * power(x - 2.0, 2.0)).max(20.0 * (x - 1.0))
}
fn f9(x: f64) -> f64 {
    1.2 + (x - 1.0).abs()
}
fn f10(x: f64) -> f64 {
    12.0 + 1000.0 * power((x - 2.0).abs(), 8.4)
}
fn f11(x: f64) -> f64 {
    0.3 + (power(x, 2.0) + 2.0 * x - 3.0).cos()
}
fn f12(x: f64) -> f64 {
    0.2 + power(x - 1.5, 2.0)
}
fn f13(x: f64) -> f64 {
    100.0 + power(1.0 - x.exp() * x.sin(), 2.0)
}
fn f14(x: f64) -> f64 {
    1.2 - power(x, 2.0).cos()
}
fn f15(x: f64) -> f64 {
    1.2 + 5.0 * (-power(x, 2.0)).exp() + x
}
fn f16(x: f64) -> f64 {
    1.2 + (-x).exp() + 3.5 * x.sin()
}
fn f17(x: f64) -> f64 {
    2.3 + 3.0 * x.exp() - power(x, 2.0) + 5.0 * x
}
fn f18(x: f64) -> f64 {
    1.2 + 3.0 * (x - 2.0).cosh() - 2.0 * (x - 3.0).sinh()
}
fn f19(x: f64) -> f64 {
    2.3 + power((3.0 - x).exp() + 4.0 * (x - 2.0), 2.0)
}
fn f20(x: f64) -> f64 {
    1.2 + power((x - 2.0).abs(), 3.6)
}

/// Benchmark problem `id` (1..=20).
pub fn table3(id: usize) -> Result<BenchFunction> {
    let def = DEFINITIONS
        .get(id.wrapping_sub(1))
        .ok_or(Error::UnknownFunction(id))?;
    let rec = fixture().get(id);
    Ok(BenchFunction {
        id: def.id,
        expression: def.expression,
        evaluator: def.evaluator,
        interval: Interval::new(def.lo, def.hi)?,
        class_label: def.class_label,
        reference_counts: rec.map(|r| r.counts).unwrap_or_default(),
        oracle: rec.and_then(|r| r.oracle),
    })
}

/// All twenty problems in id order.
pub fn all_functions() -> Vec<BenchFunction> {
    (1..=FUNCTION_COUNT).map(|id| table3(id).expect("valid id")).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        let f12 = table3(12).unwrap();
        assert_eq!(f12.interval, Interval::new(0.3, 3.2).unwrap());
        assert_eq!(f12.eval(1.5), 0.2);
        let f1 = table3(1).unwrap();
        for x in [0.5, 0.77, 1.5] {
            assert_eq!(f1.eval(x), 1.0);
        }
        assert!((table3(9).unwrap().eval(3.0) - 3.2).abs() < 1e-15);
    }

    #[test]
    fn out_of_range_ids() {
        assert_eq!(table3(0).unwrap_err(), Error::UnknownFunction(0));
        assert_eq!(table3(21).unwrap_err(), Error::UnknownFunction(21));
    }

    #[test]
    fn class_labels_by_group() {
        for f in all_functions() {
            let want = match f.id {
                1 => FunctionClass::Constant,
                2 => FunctionClass::MonotoneDecreasing,
                3 => FunctionClass::MonotoneIncreasing,
                4..=6 => FunctionClass::FlatBottom,
                _ => FunctionClass::StrictInterior,
            };
            assert_eq!(f.class_label, want, "id {}", f.id);
        }
    }
}
