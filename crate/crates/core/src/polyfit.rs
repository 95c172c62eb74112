//! Least-squares polynomial smoothing via the normal equations and a
//! partial-pivoting Gaussian elimination.

use crate::error::{Error, Result};
use crate::types::Point2;

/// Polynomial with coefficients in ascending degree order.
#[derive(Debug, Clone, PartialEq)]
pub struct Polynomial {
    coefficients: Vec<f64>,
}

impl Polynomial {
    pub fn new(coefficients: Vec<f64>) -> Result<Self> {
        if coefficients.is_empty() {
            return Err(Error::Precondition("a polynomial needs at least one coefficient".into()));
        }
        if coefficients.iter().any(|c| !c.is_finite()) {
            return Err(Error::Precondition("polynomial coefficients must be finite".into()));
        }
        Ok(Self { coefficients })
    }

    pub fn coefficients(&self) -> &[f64] {
        &self.coefficients
    }

    pub fn degree(&self) -> usize {
        self.coefficients.len() - 1
    }

    pub fn eval(&self, x: f64) -> f64 {
        self.coefficients.iter().rev().fold(0.0, |acc, &c| acc * x + c)
    }

    /// Sum of squared residuals over `points`.
    pub fn residual(&self, points: &[Point2]) -> f64 {
        points
            .iter()
            .map(|p| {
                let r = self.eval(p.x) - p.y;
                r * r
            })
            .sum()
    }
}

/// Square system `matrix * x = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct LinearSystem {
    matrix: Vec<Vec<f64>>,
    rhs: Vec<f64>,
}

impl LinearSystem {
    pub fn new(matrix: Vec<Vec<f64>>, rhs: Vec<f64>) -> Result<Self> {
        let n = rhs.len();
        if matrix.len() != n || matrix.iter().any(|row| row.len() != n) {
            return Err(Error::Precondition(format!(
                "linear system must be square and match a right-hand side of length {n}"
            )));
        }
        Ok(Self { matrix, rhs })
    }

    pub fn matrix(&self) -> &[Vec<f64>] {
        &self.matrix
    }

    pub fn rhs(&self) -> &[f64] {
        &self.rhs
    }

    pub fn dim(&self) -> usize {
        self.rhs.len()
    }
}

/// Gaussian elimination with partial pivoting followed by back substitution.
pub fn gauss_solve(sys: &LinearSystem) -> Result<Vec<f64>> {
    let n = sys.dim();
    let mut a = sys.matrix.clone();
    let mut b = sys.rhs.clone();
    let scale = a
        .iter()
        .flatten()
        .fold(0.0_f64, |m, v| m.max(v.abs()));
    let tiny = scale * f64::EPSILON * n as f64;

    for col in 0..n {
        let pivot = (col..n)
            .max_by(|&i, &j| a[i][col].abs().total_cmp(&a[j][col].abs()))
            .unwrap_or(col);
        if !(a[pivot][col].abs() > tiny) {
            return Err(Error::Singular { column: col });
        }
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            let factor = a[row][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            for k in col..n {
                a[row][k] -= factor * a[col][k];
            }
            b[row] -= factor * b[col];
        }
    }

    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|k| a[row][k] * x[k]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    Ok(x)
}

/// Least-squares polynomial of degree `degree` through `points`.
///
/// Abscissas are mapped affinely onto `[-1, 1]` before the power sums are
/// formed; the solution is expanded back into the original variable.
pub fn fit_polynomial(points: &[Point2], degree: usize) -> Result<Polynomial> {
    if points.len() < 2 || degree >= points.len() - 1 {
        return Err(Error::Precondition(format!(
            "degree {degree} requires more than {} points, got {}",
            degree + 1,
            points.len()
        )));
    }
    let mut xs: Vec<f64> = points.iter().map(|p| p.x).collect();
    xs.sort_by(f64::total_cmp);
    xs.dedup();
    if xs.len() < degree + 1 {
        return Err(Error::RankDeficient {
            needed: degree + 1,
            found: xs.len(),
        });
    }
    let (lo, hi) = (xs[0], xs[xs.len() - 1]);
    let center = 0.5 * (lo + hi);
    let half = 0.5 * (hi - lo);

    let m = degree;
    let mut power_sums = vec![0.0; 2 * m + 1];
    let mut rhs = vec![0.0; m + 1];
    for p in points {
        let t = (p.x - center) / half;
        let mut tp = 1.0;
        for j in 0..=2 * m {
            power_sums[j] += tp;
            if j <= m {
                rhs[j] += p.y * tp;
            }
            tp *= t;
        }
    }
    let matrix = (0..=m)
        .map(|i| (0..=m).map(|j| power_sums[i + j]).collect())
        .collect();
    let scaled = gauss_solve(&LinearSystem::new(matrix, rhs)?).map_err(|e| match e {
        Error::Singular { .. } => Error::RankDeficient {
            needed: degree + 1,
            found: xs.len(),
        },
        other => other,
    })?;

    // p(x) = sum_k q_k ((x - center) / half)^k, expanded in powers of x.
    let mut coefficients = vec![0.0; m + 1];
    let mut inv_half_k = 1.0;
    for (k, &q) in scaled.iter().enumerate() {
        let qk = q * inv_half_k;
        let mut binom = 1.0;
        for i in 0..=k {
            coefficients[i] += qk * binom * (-center).powi((k - i) as i32);
            binom = binom * (k - i) as f64 / (i + 1) as f64;
        }
        inv_half_k /= half;
    }
    Polynomial::new(coefficients)
}

/// Minimizer of `poly` on `[lo, hi]` by a dense scan of `samples + 1` points.
pub fn argmin_on(poly: &Polynomial, lo: f64, hi: f64, samples: usize) -> f64 {
    let step = (hi - lo) / samples as f64;
    (0..=samples)
        .map(|i| lo + step * i as f64)
        .min_by(|&x, &y| poly.eval(x).total_cmp(&poly.eval(y)))
        .unwrap_or(lo)
}
