//! Acceptance suite. Prints one PASS/FAIL line per criterion and exits
//! non-zero if any criterion fails.

use std::process::ExitCode;
use std::time::{Duration, Instant};

use nalgebra::{DMatrix, DVector};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use ratiosect::benchsuite::{
    fixture, run_benchmark, run_harness, sweep_ratio_a_exponent, sweep_ratio_c, table3, BenchReport,
};
use ratiosect::{
    brent_m_minimize_with, brent_minimize, e0, fit_polynomial, parabola_vertex, BracketTriple,
    BrentMOptions, CountingObjective, Error, FunctionClass, GoldenSection, Method, MethodKind,
    Point2, Polynomial, RatioConfig, Tolerance, GOLDEN_CONTRACTION, GOLDEN_STEP,
};

struct Verdict {
    pass: bool,
    detail: String,
}

impl Verdict {
    fn new(pass: bool, detail: impl Into<String>) -> Self {
        Self {
            pass,
            detail: detail.into(),
        }
    }
}

fn within(value: f64, target: f64, band: f64) -> bool {
    (value - target).abs() <= band * target
}

fn standard_methods() -> Vec<Method> {
    vec![
        Method::Bisect,
        Method::Golden,
        Method::new(MethodKind::RatioP, Some(0.5)).unwrap(),
        Method::new(MethodKind::RatioP, Some(0.2)).unwrap(),
        Method::new(MethodKind::RatioA, None).unwrap(),
        Method::Brent,
        Method::new(MethodKind::BrentM, None).unwrap(),
    ]
}

fn sum_over(report: &BenchReport, method: &Method, ids: std::ops::RangeInclusive<usize>) -> usize {
    report
        .rows_for(method)
        .filter(|r| ids.contains(&r.function_id))
        .filter_map(|r| r.evaluations())
        .sum()
}

fn fast_recognition() -> Verdict {
    let tol = Tolerance::default();
    let mut methods: Vec<Method> = [0.01, 0.1, 0.2, 0.3, 0.5, 0.618, 0.8, 0.99]
        .iter()
        .map(|&c| Method::new(MethodKind::RatioP, Some(c)).unwrap())
        .collect();
    methods.push(Method::new(MethodKind::RatioA, None).unwrap());
    methods.push(Method::new(MethodKind::BrentM, None).unwrap());
    let expect = [
        (1, 3, FunctionClass::FlatBottom, None),
        (2, 6, FunctionClass::MonotoneDecreasing, Some(6.8)),
        (3, 6, FunctionClass::MonotoneIncreasing, Some(1.2)),
    ];
    let mut bad = Vec::new();
    for m in &methods {
        for &(id, k, class, x) in &expect {
            let f = table3(id).unwrap();
            let mut obj = CountingObjective::new(f.evaluator);
            match m.minimize(&mut obj, f.interval, &tol) {
                Ok(o) if o.evaluations == k && o.classification == class && x.map_or(true, |x| o.x_min == x) => {}
                Ok(o) => bad.push(format!("{} f{id}: k={} {} x={}", m, o.evaluations, o.classification, o.x_min)),
                Err(e) => bad.push(format!("{} f{id}: {e}", m)),
            }
        }
    }
    Verdict::new(bad.is_empty(), format!("{} methods x 3 problems; mismatches: {:?}", methods.len(), bad))
}

fn oracle_correctness() -> Verdict {
    let tol = Tolerance::default();
    let report = run_benchmark(&standard_methods(), &(1..=19).collect::<Vec<_>>(), &tol).unwrap();
    let mut bad = Vec::new();
    for row in &report.rows {
        let oracle = fixture().get(row.function_id).and_then(|r| r.oracle).unwrap();
        let (lo, hi) = oracle.plateau.unwrap_or((oracle.x_star, oracle.x_star));
        match &row.outcome {
            Ok(o) => {
                let d = if o.x_min < lo { lo - o.x_min } else { (o.x_min - hi).max(0.0) };
                let allowed = 10.0 * e0(&tol, oracle.x_star);
                if d > allowed {
                    bad.push(format!("{} f{}: |dx|={d:.3e} > {allowed:.3e}", row.method, row.function_id));
                }
            }
            Err(e) => bad.push(format!("{} f{}: {e}", row.method, row.function_id)),
        }
    }
    Verdict::new(bad.is_empty(), format!("{} cells; violations: {:?}", report.rows.len(), bad))
}

fn passive_totals(report: &BenchReport) -> Verdict {
    let [bisect, golden, ratio_p] = [Method::Bisect, Method::Golden, report.methods[2]]
        .map(|m| report.total(&m).unwrap());
    let pass = within(bisect as f64, 772.0, 0.15)
        && within(golden as f64, 587.0, 0.15)
        && within(ratio_p as f64, 467.0, 0.15)
        && bisect > golden
        && golden > ratio_p;
    Verdict::new(
        pass,
        format!("bisect {bisect} (772), golden {golden} (587), ratio-p(0.5) {ratio_p} (467); band 15%"),
    )
}

fn ratio_fifth_totals(report: &BenchReport) -> Verdict {
    let m = report.methods[3];
    let all = report.total(&m).unwrap();
    let strict = sum_over(report, &m, 7..=20);
    let vs_bisect = report.speedup(&Method::Bisect, &m).unwrap();
    let vs_golden = report.speedup(&Method::Golden, &m).unwrap();
    let pass = within(all as f64, 341.0, 0.15)
        && within(strict as f64, 308.0, 0.15)
        && vs_bisect >= 1.9
        && vs_golden >= 1.4;
    Verdict::new(
        pass,
        format!(
            "ratio-p(0.2) {all} (341), ids 7-20 {strict} (308); speedup vs bisect {vs_bisect:.2}, vs golden {vs_golden:.2}"
        ),
    )
}

fn sweep_shape() -> Verdict {
    let ids: Vec<usize> = (7..=20).collect();
    let sweep = sweep_ratio_c(&ids, 0.01, 0.80, 0.01, &Tolerance::default(), 5).unwrap();
    let k2 = sweep.mean_at(0.2).unwrap();
    let k5 = sweep.mean_at(0.5).unwrap();
    let argmin = sweep.smoothed_argmin().unwrap();
    let pass = k2 <= 0.85 * k5 && (0.1..=0.35).contains(&argmin);
    Verdict::new(
        pass,
        format!("mean K(0.2) {k2:.2}, K(0.5) {k5:.2}; smoothed argmin c = {argmin:.3}"),
    )
}

fn active_search(report: &BenchReport) -> Verdict {
    let m = report.methods[4];
    let all = report.total(&m).unwrap();
    let strict = sum_over(report, &m, 7..=20);
    let ids: Vec<usize> = (7..=20).collect();
    let sweep = sweep_ratio_a_exponent(&ids, -15, -2, &Tolerance::default()).unwrap();
    let best = sweep
        .iter()
        .min_by_key(|s| s.total_evaluations)
        .unwrap();
    let first = sweep.first().unwrap().total_evaluations;
    let last = sweep.last().unwrap().total_evaluations;
    let u_shape = first > best.total_evaluations && last > best.total_evaluations;
    let pass = within(strict as f64, 196.0, 0.2)
        && within(all as f64, 227.0, 0.2)
        && u_shape
        && (-8..=-5).contains(&best.j);
    let curve: Vec<usize> = sweep.iter().map(|s| s.total_evaluations).collect();
    Verdict::new(
        pass,
        format!(
            "ratio-a {all} (227), ids 7-20 {strict} (196); j-sweep -15..-2 {curve:?}, min at j = {}",
            best.j
        ),
    )
}

fn brent_pair(report: &BenchReport) -> Verdict {
    let tol = Tolerance::default();
    let bm = report.methods[6];
    let (b_all, b_strict) = (report.total(&Method::Brent).unwrap(), sum_over(report, &Method::Brent, 7..=20));
    let (m_all, m_strict) = (report.total(&bm).unwrap(), sum_over(report, &bm, 7..=20));
    let mut endpoint_notes = Vec::new();
    let mut endpoints_ok = true;
    for (id, end) in [(2, 6.8), (3, 1.2)] {
        let m = report.cell(&bm, id).unwrap().outcome.as_ref().unwrap().x_min;
        let b = report.cell(&Method::Brent, id).unwrap().outcome.as_ref().unwrap().x_min;
        let err = (b - end).abs() / e0(&tol, end);
        endpoints_ok &= m == end && err <= 3.0;
        endpoint_notes.push(format!("f{id}: brent-m x={m}, brent err {err:.2} e0"));
    }
    let pass = within(b_all as f64, 345.0, 0.15)
        && within(b_strict as f64, 214.0, 0.15)
        && within(m_all as f64, 204.0, 0.2)
        && within(m_strict as f64, 176.0, 0.2)
        && m_all < b_all
        && m_strict < b_strict
        && endpoints_ok;
    Verdict::new(
        pass,
        format!(
            "brent {b_all} (345), ids 7-20 {b_strict} (214); brent-m {m_all} (204), ids 7-20 {m_strict} (176); {}",
            endpoint_notes.join(", ")
        ),
    )
}

fn degeneration() -> Verdict {
    let tol = Tolerance::default();
    let opts = BrentMOptions {
        ratio: RatioConfig::new(GOLDEN_STEP).unwrap(),
        recognizers: false,
    };
    let mut differing = Vec::new();
    for id in 1..=20 {
        let f = table3(id).unwrap();
        let mut a = CountingObjective::new(f.evaluator);
        let mut b = CountingObjective::new(f.evaluator);
        let ra = brent_minimize(&mut a, f.interval, &tol);
        let rb = brent_m_minimize_with(&mut b, f.interval, &tol, opts, &mut ());
        let same_bits = a.transcript().len() == b.transcript().len()
            && a.transcript().iter().zip(b.transcript()).all(|(p, q)| {
                p.x.to_bits() == q.x.to_bits() && p.y.to_bits() == q.y.to_bits()
            });
        if !same_bits || ra != rb {
            differing.push(id);
        }
    }
    Verdict::new(differing.is_empty(), format!("transcripts differ on ids {differing:?}"))
}

fn golden_contraction() -> Verdict {
    let f = table3(12).unwrap();
    let mut obj = CountingObjective::new(f.evaluator);
    let mut g = GoldenSection::start(&mut obj, f.interval, &mut ()).unwrap();
    let mut worst: f64 = 0.0;
    for _ in 0..30 {
        let before = g.width();
        g.step(&mut obj, &mut ()).unwrap();
        worst = worst.max((g.width() / before - GOLDEN_CONTRACTION).abs());
    }
    Verdict::new(worst <= 1e-12, format!("max |ratio - (sqrt 5 - 1)/2| over 30 steps = {worst:.2e}"))
}

fn vertex_recovery() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    let mut worst: f64 = 0.0;
    for _ in 0..1000 {
        let a = 10f64.powf(rng.gen_range(-2.0..2.0));
        let v = rng.gen_range(-50.0..50.0);
        let k = rng.gen_range(-10.0..10.0);
        let q = |x: f64| a * (x - v) * (x - v) + k;
        let dl: f64 = rng.gen_range(0.1..5.0);
        let dr = rng.gen_range(0.1..5.0);
        let dm = rng.gen_range(-0.45..0.45) * dl.min(dr);
        let p = |x: f64| Point2::new(x, q(x));
        let t = BracketTriple::new(p(v - dl), p(v + dm), p(v + dr)).unwrap();
        let r = parabola_vertex(&t).unwrap();
        worst = worst.max((r - v).abs() / v.abs().max(1.0));
    }
    let line = |x: f64| Point2::new(x, 3.0 * x - 1.0);
    let collinear = ratiosect::vertex_through(line(0.0), line(1.0), line(2.0));
    let pass = worst <= 1e-9 && collinear == Err(Error::NoVertex);
    Verdict::new(pass, format!("worst relative vertex error {worst:.2e}; collinear -> {collinear:?}"))
}

fn normal_equation_residual(points: &[Point2], degree: usize) -> f64 {
    let n = points.len();
    let a = DMatrix::from_fn(n, degree + 1, |i, j| points[i].x.powi(j as i32));
    let y = DVector::from_iterator(n, points.iter().map(|p| p.y));
    let coef = (a.transpose() * &a).lu().solve(&(a.transpose() * &y)).unwrap();
    (&a * coef - y).norm_squared()
}

fn polyfit_checks() -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let mut worst: f64 = 0.0;
    for degree in 0..=6 {
        for _ in 0..20 {
            let coef: Vec<f64> = (0..=degree).map(|_| rng.gen_range(-5.0..5.0)).collect();
            let truth = Polynomial::new(coef.clone()).unwrap();
            let pts: Vec<Point2> = (0..40)
                .map(|i| {
                    let x = -2.0 + 5.0 * i as f64 / 39.0;
                    Point2::new(x, truth.eval(x))
                })
                .collect();
            let fit = fit_polynomial(&pts, degree).unwrap();
            for (c, t) in fit.coefficients().iter().zip(&coef) {
                worst = worst.max((c - t).abs());
            }
        }
    }
    let ids: Vec<usize> = (7..=20).collect();
    let sweep = sweep_ratio_c(&ids, 0.01, 0.80, 0.01, &Tolerance::default(), 5).unwrap();
    let ours = sweep.fit.as_ref().unwrap().residual(&sweep.points());
    let oracle = normal_equation_residual(&sweep.points(), 5);
    let rel = (ours - oracle).abs() / oracle;
    Verdict::new(
        worst <= 1e-9 && rel <= 1e-6,
        format!("max coefficient error {worst:.2e}; sweep residual {ours:.6} vs oracle {oracle:.6} (rel {rel:.2e})"),
    )
}

fn randomized_bracketing() -> Verdict {
    let report = run_harness(12, 500, &standard_methods(), &Tolerance::default()).unwrap();
    let failures: Vec<String> = report
        .failures()
        .take(5)
        .map(|c| format!("{} on {:?}: {:?}", c.method, c.target, c.violations))
        .collect();
    let count = report.failures().count();
    Verdict::new(
        count == 0,
        format!("{} targets x {} methods, {count} failing cases {failures:?}", report.targets, standard_methods().len()),
    )
}

fn main() -> ExitCode {
    let timed = |f: &dyn Fn() -> Verdict| {
        let t = Instant::now();
        let v = f();
        (v, t.elapsed())
    };
    let tol = Tolerance::default();
    let report = run_benchmark(&standard_methods(), &(1..=20).collect::<Vec<_>>(), &tol).unwrap();

    let criteria: Vec<(&str, Option<Duration>, Box<dyn Fn() -> Verdict + '_>)> = vec![
        ("1 fast recognition", Some(Duration::from_secs(1)), Box::new(fast_recognition)),
        ("2 oracle correctness", Some(Duration::from_secs(5)), Box::new(oracle_correctness)),
        ("3 c = 0.5 totals", None, Box::new(|| passive_totals(&report))),
        ("4 c = 0.2 totals", None, Box::new(|| ratio_fifth_totals(&report))),
        ("5 ratio sweep shape", None, Box::new(sweep_shape)),
        ("6 active search", None, Box::new(|| active_search(&report))),
        ("7 brent and brent-m", None, Box::new(|| brent_pair(&report))),
        ("8 degeneration", None, Box::new(degeneration)),
        ("9 golden contraction", None, Box::new(golden_contraction)),
        ("10 parabola vertex", None, Box::new(vertex_recovery)),
        ("11 polyfit", None, Box::new(polyfit_checks)),
        ("12 randomized bracketing", Some(Duration::from_secs(30)), Box::new(randomized_bracketing)),
    ];

    let mut failed = 0;
    for (name, limit, check) in &criteria {
        let (v, took) = timed(check.as_ref());
        let in_time = limit.map_or(true, |l| took <= l);
        let pass = v.pass && in_time;
        failed += usize::from(!pass);
        let timing = match limit {
            Some(l) => format!(" [{:.2}s, limit {}s]", took.as_secs_f64(), l.as_secs()),
            None => format!(" [{:.2}s]", took.as_secs_f64()),
        };
        println!("criterion {name}: {} {}{timing}", if pass { "PASS" } else { "FAIL" }, v.detail);
    }
    println!("{} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
