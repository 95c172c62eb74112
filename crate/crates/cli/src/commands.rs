use std::ffi::OsString;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use ratiosect::benchsuite::{
    run_benchmark, run_harness, sweep_ratio_a_exponent, sweep_ratio_c, table3, BenchReport,
};
use ratiosect::{CountingObjective, Interval, Method, MethodKind, Status, Tolerance};

use crate::expr::parse_expression;
use crate::output::{self, Format};
use crate::select::{parse_ids, parse_methods};

const ALL_METHODS: &str = "bisect,golden,ratio-p,ratio-a,brent,brent-m";

#[derive(Debug, Parser)]
#[command(name = "ratiosect", version, about = "Derivative-free minimization on an interval")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Minimize an expression in `x` over [a, b].
    Minimize(MinimizeArgs),
    /// Run methods over the benchmark problems and tabulate evaluation counts.
    Bench(BenchArgs),
    /// Mean passive-search count against the section ratio c.
    SweepC(SweepCArgs),
    /// Active-search total count against the exponent j, with c = 10^(j/2).
    SweepJ(SweepJArgs),
    /// Randomized bracketing check on synthetic targets a|x - v|^p + k.
    Harness(HarnessArgs),
}

#[derive(Debug, Args)]
struct Common {
    /// Relative tolerance.
    #[arg(long, default_value_t = 1e-5)]
    eps: f64,
    /// Evaluation budget per run.
    #[arg(long, default_value_t = 1000)]
    max_evals: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
    /// Write the table here instead of standard output.
    #[arg(long)]
    out: Option<PathBuf>,
}

impl Common {
    fn tolerance(&self) -> Result<Tolerance, String> {
        Tolerance::new(self.eps, Tolerance::default().floor(), self.max_evals).map_err(|e| e.to_string())
    }
}

#[derive(Debug, Args)]
struct MinimizeArgs {
    /// Objective, e.g. "0.2 + (x-1.5)^2".
    #[arg(long)]
    expr: String,
    #[arg(long, allow_negative_numbers = true)]
    a: f64,
    #[arg(long, allow_negative_numbers = true)]
    b: f64,
    #[arg(long, default_value = "brent-m")]
    method: MethodKind,
    /// Section ratio for ratio-p, ratio-a and brent-m.
    #[arg(long)]
    c: Option<f64>,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct BenchArgs {
    /// Comma-separated methods; `name=c` sets a ratio for one entry.
    #[arg(long, default_value = ALL_METHODS)]
    methods: String,
    /// Ratio for every listed method that takes one and has none of its own.
    #[arg(long)]
    c: Option<f64>,
    #[arg(long, default_value = "1-20")]
    functions: String,
    /// Add the published counts and per-cell differences.
    #[arg(long)]
    compare_paper: bool,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct SweepCArgs {
    #[arg(long, default_value = "7-20")]
    functions: String,
    #[arg(long, default_value_t = 0.01)]
    from: f64,
    #[arg(long, default_value_t = 0.80)]
    to: f64,
    #[arg(long, default_value_t = 0.01)]
    step: f64,
    /// Degree of the least-squares smoothing polynomial; 0 disables it.
    #[arg(long, default_value_t = 5)]
    fit_degree: usize,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct SweepJArgs {
    #[arg(long, default_value = "7-20")]
    functions: String,
    #[arg(long, default_value_t = -15, allow_negative_numbers = true)]
    from: i32,
    #[arg(long, default_value_t = -2, allow_negative_numbers = true)]
    to: i32,
    #[command(flatten)]
    common: Common,
}

#[derive(Debug, Args)]
struct HarnessArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 500)]
    targets: usize,
    #[arg(long, default_value = ALL_METHODS)]
    methods: String,
    #[arg(long)]
    c: Option<f64>,
    #[command(flatten)]
    common: Common,
}

/// Exit codes: 0 success, 1 usage, parse or input error, 2 a run did not
/// converge (or the harness found a violation).
enum Failure {
    Usage(String),
    NotConverged(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Usage(s)
    }
}

/// Parses `args` (program name first) and runs the command.
pub fn run<I, T>(args: I) -> ExitCode
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    let result = match cli.command {
        Command::Minimize(a) => minimize(a),
        Command::Bench(a) => bench(a),
        Command::SweepC(a) => sweep_c(a),
        Command::SweepJ(a) => sweep_j(a),
        Command::Harness(a) => harness(a),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::NotConverged(msg)) => {
            eprintln!("{msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(common: &Common, text: &str) -> Result<(), Failure> {
    match &common.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Usage(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn render<T: Serialize>(format: Format, rows: &[T], markdown: impl FnOnce() -> String) -> String {
    match format {
        Format::Csv => output::csv(rows),
        Format::JsonLines => output::json_lines(rows),
        Format::Markdown => markdown(),
    }
}

#[derive(Serialize)]
struct MinimizeRecord {
    method: String,
    x_min: f64,
    f_min: f64,
    evaluations: usize,
    classification: &'static str,
    status: &'static str,
}

fn minimize(args: MinimizeArgs) -> Result<(), Failure> {
    let expr = parse_expression(&args.expr).map_err(|e| format!("in --expr: {e}"))?;
    let interval = Interval::new(args.a, args.b).map_err(|e| e.to_string())?;
    if args.c.is_some() && !args.method.takes_ratio() {
        return Err(format!("--c does not apply to {}", args.method).into());
    }
    let method = Method::new(args.method, args.c).map_err(|e| e.to_string())?;
    let tol = args.common.tolerance()?;
    let mut obj = CountingObjective::new(|x| expr.eval(x));
    let out = method.minimize(&mut obj, interval, &tol).map_err(|e| e.to_string())?;
    let rec = MinimizeRecord {
        method: method.label(),
        x_min: out.x_min,
        f_min: out.f_min,
        evaluations: out.evaluations,
        classification: out.classification.as_str(),
        status: out.status.as_str(),
    };
    let text = render(args.common.format, std::slice::from_ref(&rec), || {
        let header = ["quantity", "value"].map(String::from);
        let rows = [
            ("method", rec.method.clone()),
            ("x_min", rec.x_min.to_string()),
            ("f_min", rec.f_min.to_string()),
            ("evaluations", rec.evaluations.to_string()),
            ("classification", rec.classification.to_string()),
            ("status", rec.status.to_string()),
        ]
        .map(|(k, v)| vec![k.to_string(), v])
        .to_vec();
        output::markdown(&header, &rows)
    });
    emit(&args.common, &text)?;
    if out.status == Status::BudgetExhausted {
        return Err(Failure::NotConverged(format!(
            "budget of {} evaluations exhausted",
            tol.max_evaluations()
        )));
    }
    Ok(())
}

#[derive(Serialize)]
struct BenchRecord {
    method: String,
    function_id: usize,
    evaluations: Option<usize>,
    x_min: Option<f64>,
    f_min: Option<f64>,
    classification: Option<&'static str>,
    status: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    reference_evaluations: Option<Option<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    delta: Option<Option<i64>>,
}

fn reference_count(method: &Method, id: usize) -> Option<usize> {
    table3(id).ok()?.reference_counts.for_method(method)
}

fn bench(args: BenchArgs) -> Result<(), Failure> {
    let methods = parse_methods(&args.methods, args.c)?;
    let ids = parse_ids(&args.functions)?;
    let tol = args.common.tolerance()?;
    let report = run_benchmark(&methods, &ids, &tol).map_err(|e| e.to_string())?;

    let mut rows = Vec::with_capacity(report.rows.len());
    for r in &report.rows {
        let ok = r.outcome.as_ref().ok();
        if let Err(e) = &r.outcome {
            eprintln!("{} on function {}: {e}", r.method, r.function_id);
        }
        let published = reference_count(&r.method, r.function_id);
        let evaluations = ok.map(|o| o.evaluations);
        rows.push(BenchRecord {
            method: r.method.label(),
            function_id: r.function_id,
            evaluations,
            x_min: ok.map(|o| o.x_min),
            f_min: ok.map(|o| o.f_min),
            classification: ok.map(|o| o.classification.as_str()),
            status: ok.map_or_else(|| "error".to_string(), |o| o.status.as_str().to_string()),
            reference_evaluations: args.compare_paper.then_some(published),
            delta: args
                .compare_paper
                .then(|| Some(evaluations? as i64 - published? as i64)),
        });
    }
    let text = render(args.common.format, &rows, || bench_markdown(&report, args.compare_paper));
    emit(&args.common, &text)?;
    if report.failed_cells() == report.rows.len() {
        return Err(Failure::Usage("every benchmark cell failed".into()));
    }
    Ok(())
}

/// Functions as rows, methods as columns, then the totals and the totals
/// relative to the fastest method.
fn bench_markdown(report: &BenchReport, compare: bool) -> String {
    let mut header = vec!["function".to_string()];
    header.extend(report.methods.iter().map(Method::label));
    let cell = |m: &Method, id: usize| {
        let k = report
            .cell(m, id)
            .and_then(|r| r.evaluations())
            .map_or_else(|| "-".to_string(), |k| k.to_string());
        match (compare, reference_count(m, id)) {
            (true, Some(p)) => format!("{k} ({p})"),
            _ => k,
        }
    };
    let mut rows: Vec<Vec<String>> = report
        .function_ids
        .iter()
        .map(|&id| {
            let mut row = vec![id.to_string()];
            row.extend(report.methods.iter().map(|m| cell(m, id)));
            row
        })
        .collect();
    let mut total = vec!["Σk".to_string()];
    total.extend(report.methods.iter().zip(&report.totals).map(|(m, t)| {
        let published: Option<usize> = compare
            .then(|| report.function_ids.iter().map(|&id| reference_count(m, id)).sum())
            .flatten();
        match published {
            Some(p) => format!("{t} ({p})"),
            None => t.to_string(),
        }
    }));
    rows.push(total);
    let mut relat = vec!["Relat".to_string()];
    relat.extend(report.relative().iter().map(|r| format!("{r:.2}")));
    rows.push(relat);
    output::markdown(&header, &rows)
}

#[derive(Serialize)]
struct SweepCRecord {
    c: f64,
    mean_evaluations: f64,
    smoothed_value: Option<f64>,
}

fn sweep_c(args: SweepCArgs) -> Result<(), Failure> {
    let ids = parse_ids(&args.functions)?;
    let tol = args.common.tolerance()?;
    let sweep = sweep_ratio_c(&ids, args.from, args.to, args.step, &tol, args.fit_degree)
        .map_err(|e| e.to_string())?;
    let rows: Vec<SweepCRecord> = sweep
        .samples
        .iter()
        .map(|s| SweepCRecord {
            c: s.c,
            mean_evaluations: s.mean_evaluations,
            smoothed_value: sweep.fit.as_ref().map(|p| p.eval(s.c)),
        })
        .collect();
    let text = render(args.common.format, &rows, || {
        let header = ["c", "mean K", "smoothed"].map(String::from);
        let body: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    format!("{:.2}", r.c),
                    format!("{:.3}", r.mean_evaluations),
                    r.smoothed_value.map_or_else(|| "-".into(), |v| format!("{v:.3}")),
                ]
            })
            .collect();
        output::markdown(&header, &body)
    });
    emit(&args.common, &text)?;
    if let Some(c) = sweep.smoothed_argmin() {
        eprintln!("smoothed minimum at c = {c:.4}");
    }
    Ok(())
}

#[derive(Serialize)]
struct SweepJRecord {
    j: i32,
    c: f64,
    total_evaluations: usize,
}

fn sweep_j(args: SweepJArgs) -> Result<(), Failure> {
    let ids = parse_ids(&args.functions)?;
    let tol = args.common.tolerance()?;
    let sweep = sweep_ratio_a_exponent(&ids, args.from, args.to, &tol).map_err(|e| e.to_string())?;
    for s in sweep.iter().filter(|s| s.failures > 0) {
        eprintln!("j = {}: {} problems failed and are not counted", s.j, s.failures);
    }
    let rows: Vec<SweepJRecord> = sweep
        .iter()
        .map(|s| SweepJRecord {
            j: s.j,
            c: s.c,
            total_evaluations: s.total_evaluations,
        })
        .collect();
    let text = render(args.common.format, &rows, || {
        let header = ["j", "c", "Σk"].map(String::from);
        let body: Vec<Vec<String>> = rows
            .iter()
            .map(|r| vec![r.j.to_string(), format!("{:e}", r.c), r.total_evaluations.to_string()])
            .collect();
        output::markdown(&header, &body)
    });
    emit(&args.common, &text)
}

#[derive(Serialize)]
struct HarnessRecord {
    method: String,
    targets: usize,
    failures: usize,
    mean_evaluations: f64,
}

fn harness(args: HarnessArgs) -> Result<(), Failure> {
    let methods = parse_methods(&args.methods, args.c)?;
    let tol = args.common.tolerance()?;
    let report = run_harness(args.seed, args.targets, &methods, &tol).map_err(|e| e.to_string())?;
    let rows: Vec<HarnessRecord> = methods
        .iter()
        .map(|m| {
            let cases: Vec<_> = report.cases.iter().filter(|c| c.method == *m).collect();
            let evals: Vec<usize> = cases.iter().filter_map(|c| c.outcome.map(|o| o.evaluations)).collect();
            HarnessRecord {
                method: m.label(),
                targets: cases.len(),
                failures: cases.iter().filter(|c| !c.violations.is_empty()).count(),
                mean_evaluations: evals.iter().sum::<usize>() as f64 / evals.len().max(1) as f64,
            }
        })
        .collect();
    let text = render(args.common.format, &rows, || {
        let header = ["method", "targets", "failures", "mean K"].map(String::from);
        let body: Vec<Vec<String>> = rows
            .iter()
            .map(|r| {
                vec![
                    r.method.clone(),
                    r.targets.to_string(),
                    r.failures.to_string(),
                    format!("{:.2}", r.mean_evaluations),
                ]
            })
            .collect();
        output::markdown(&header, &body)
    });
    emit(&args.common, &text)?;
    let failures: Vec<_> = report.failures().collect();
    for c in &failures {
        eprintln!("{} on {:?}: {:?}", c.method, c.target, c.violations);
    }
    if failures.is_empty() {
        Ok(())
    } else {
        Err(Failure::NotConverged(format!("{} failing cases (seed {})", failures.len(), args.seed)))
    }
}
