use proptest::prelude::*;

use ratiosect::benchsuite::scan_minimizer;
use ratiosect::{
    detect_flat_bottom, detect_monotone, e0, fit_polynomial, gauss_solve, minimize_ratio_p,
    CountingObjective, Interval, LinearSystem, Method, MethodKind, Point2, Polynomial,
    RatioConfig, Recorder, Tolerance,
};

fn all_methods() -> Vec<Method> {
    [
        (MethodKind::Bisect, None),
        (MethodKind::Golden, None),
        (MethodKind::RatioP, Some(0.5)),
        (MethodKind::RatioP, Some(0.2)),
        (MethodKind::RatioA, None),
        (MethodKind::Brent, None),
        (MethodKind::BrentM, None),
    ]
    .iter()
    .map(|&(k, c)| Method::new(k, c).unwrap())
    .collect()
}

prop_compose! {
    /// Quadratic or quartic bowl with its minimizer strictly inside the
    /// interval. The offset is small enough not to swallow the bowl at the
    /// `e0` scale, and minimizers stay away from the origin, where the
    /// absolute floor of `e0` is finer than the objective's resolution.
    fn bowl()(
        a in 0.05f64..50.0,
        v in prop_oneof![-5.0f64..-0.5, 0.5f64..5.0],
        quartic in any::<bool>(),
        left in 0.05f64..0.95,
        width in 0.2f64..10.0,
        k in -1.0f64..1.0,
    ) -> (f64, f64, i32, f64, Interval) {
        let lo = v - left * width;
        let n = if quartic { 4 } else { 2 };
        let k = k * a * (e0(&Tolerance::default(), v) / 10.0).powi(n);
        (a, v, n, k, Interval::new(lo, lo + width).unwrap())
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn every_bracket_holds_the_grid_minimizer((a, v, n, k, interval) in bowl()) {
        let f = move |x: f64| a * (x - v).powi(n) + k;
        let reference = scan_minimizer(f, interval, 20_000);
        let (set_lo, set_hi) = reference
            .plateau
            .map_or((reference.x_star, reference.x_star), |p| (p.lo(), p.hi()));
        let tol = Tolerance::default();
        for method in all_methods() {
            let mut rec = Recorder::default();
            let mut obj = CountingObjective::new(f);
            let out = method.minimize_with(&mut obj, interval, &tol, &mut rec).unwrap();
            for &(lo, hi) in &rec.brackets {
                let slack = 2.0 * e0(&tol, v);
                prop_assert!(lo <= set_hi + slack && hi >= set_lo - slack,
                    "{method}: bracket [{lo}, {hi}] misses [{set_lo}, {set_hi}]");
            }
            let miss = (out.x_min - v).abs();
            prop_assert!(miss <= 10.0 * e0(&tol, v) + (set_hi - set_lo), "{method}: |dx| = {miss}");
        }
    }

    #[test]
    fn flat_detection_ignores_order(
        ys in prop::collection::vec(0u8..3, 3..12),
        seed in any::<u64>(),
    ) {
        let pts: Vec<Point2> = ys.iter().enumerate().map(|(i, &y)| Point2::new(i as f64, y as f64)).collect();
        let mut shuffled = pts.clone();
        let n = shuffled.len();
        for i in 0..n {
            let j = (seed.wrapping_mul(6364136223846793005).wrapping_add(i as u64) % n as u64) as usize;
            shuffled.swap(i, j);
        }
        let found = detect_flat_bottom(&pts);
        let again = detect_flat_bottom(&shuffled);
        prop_assert_eq!(found.is_some(), again.is_some());
        if let Some(q) = again {
            prop_assert!(pts.iter().filter(|p| p.y == q.y).count() >= 3);
        }
    }

    #[test]
    fn straddled_interior_minimum_is_never_monotone(
        v in 0.2f64..0.8,
        xs in prop::collection::btree_set(1u32..999, 4..8),
    ) {
        let f = move |x: f64| (x - v).abs() + 0.5;
        let xs: Vec<f64> = xs.iter().map(|&i| i as f64 / 1000.0).collect();
        prop_assume!(xs.first().unwrap() < &v && xs.last().unwrap() > &v);
        let w: Vec<Point2> = xs.iter().map(|&x| Point2::new(x, f(x))).collect();
        let mut obj = CountingObjective::new(f);
        let verdict = detect_monotone(&w, Interval::new(0.0, 1.0).unwrap(), &mut obj, &Tolerance::default()).unwrap();
        prop_assert!(verdict.is_none());
        prop_assert!(obj.count() <= 2);
    }

    #[test]
    fn strictly_monotone_targets_cost_six(
        slope in prop_oneof![-20.0f64..-0.01, 0.01f64..20.0],
        lo in -10.0f64..10.0,
        width in 0.1f64..20.0,
        c in 0.01f64..0.99,
    ) {
        let interval = Interval::new(lo, lo + width).unwrap();
        let mut obj = CountingObjective::new(move |x: f64| slope * x + x.powi(3) * slope.signum() * 1e-3);
        let out = minimize_ratio_p(&mut obj, interval, &Tolerance::default(), RatioConfig::new(c).unwrap()).unwrap();
        prop_assert_eq!(out.evaluations, 6);
        let end = if slope > 0.0 { interval.lo() } else { interval.hi() };
        prop_assert_eq!(out.x_min, end);
    }

    #[test]
    fn ratio_a_brackets_never_widen((a, v, n, k, interval) in bowl(), j in -12i32..-2) {
        let f = move |x: f64| a * (x - v).powi(n) + k;
        let method = Method::new(MethodKind::RatioA, Some(10f64.powf(j as f64 / 2.0))).unwrap();
        let mut rec = Recorder::default();
        let mut obj = CountingObjective::new(f);
        method.minimize_with(&mut obj, interval, &Tolerance::default(), &mut rec).unwrap();
        for pair in rec.brackets.windows(2) {
            prop_assert!(pair[1].1 - pair[1].0 <= pair[0].1 - pair[0].0);
        }
    }

    #[test]
    fn polyfit_recovers_generators(coef in prop::collection::vec(-5.0f64..5.0, 1..7), shift in -3.0f64..3.0) {
        let truth = Polynomial::new(coef.clone()).unwrap();
        let pts: Vec<Point2> = (0..30)
            .map(|i| {
                let x = shift + 2.0 * i as f64 / 29.0;
                Point2::new(x, truth.eval(x))
            })
            .collect();
        let fit = fit_polynomial(&pts, coef.len() - 1).unwrap();
        for (c, t) in fit.coefficients().iter().zip(&coef) {
            prop_assert!((c - t).abs() <= 1e-7 * (1.0 + t.abs()), "{c} vs {t}");
        }
    }

    #[test]
    fn diagonally_dominant_systems_solve(
        entries in prop::collection::vec(-1.0f64..1.0, 64),
        rhs in prop::collection::vec(-10.0f64..10.0, 8),
    ) {
        let mut m: Vec<Vec<f64>> = entries.chunks(8).map(<[f64]>::to_vec).collect();
        for (i, row) in m.iter_mut().enumerate() {
            row[i] = 9.0 * row[i].signum().max(0.5);
        }
        let sys = LinearSystem::new(m.clone(), rhs.clone()).unwrap();
        let x = gauss_solve(&sys).unwrap();
        let scale = rhs.iter().fold(1.0f64, |s, b| s.max(b.abs()));
        for (row, b) in m.iter().zip(&rhs) {
            let r: f64 = row.iter().zip(&x).map(|(a, x)| a * x).sum::<f64>() - b;
            prop_assert!(r.abs() <= 1e-12 * scale * 8.0);
        }
    }
}
