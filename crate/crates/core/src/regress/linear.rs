//! OLS, Ridge, Lasso, and cross-validated penalty selection.

use super::{DesignMatrix, Method, RegressError, RegressionResult};
use nalgebra::{DMatrix, DVector};
use rand::seq::SliceRandom;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;
use statrs::distribution::{ContinuousCDF, FisherSnedecor, StudentsT};

/// Maximum coordinate-descent sweeps before giving up.
const LASSO_MAX_SWEEPS: usize = 100_000;
/// Convergence threshold on the largest coefficient change per sweep.
const LASSO_TOLERANCE: f64 = 1e-8;

/// Ordinary least squares via QR, with classical standard errors,
/// per-coefficient t tests, and the joint F test of all slopes.
pub fn ols(y: &[f64], x: &DesignMatrix) -> Result<RegressionResult, RegressError> {
    let n = x.rows();
    if y.len() != n {
        return Err(RegressError::DimensionMismatch { y: y.len(), x: n });
    }
    let p = x.parameters();
    if n < p {
        return Err(RegressError::NotEnoughRows {
            rows: n,
            parameters: p,
        });
    }
    let full = x.full_matrix();
    check_rank(&full, x)?;
    let qr = full.clone().qr();
    let yv = DVector::from_column_slice(y);
    // least squares via the thin factorization: R beta = Q' y
    let r = qr.r();
    let qty = qr.q().transpose() * &yv;
    let beta = r
        .solve_upper_triangular(&qty)
        .ok_or_else(|| RegressError::RankDeficient(x.names.clone()))?;

    let fitted = &full * &beta;
    let residuals: Vec<f64> = yv.iter().zip(fitted.iter()).map(|(a, b)| a - b).collect();
    let ssr: f64 = residuals.iter().map(|e| e * e).sum();
    let mean_y = y.iter().sum::<f64>() / n as f64;
    let sst: f64 = if x.intercept {
        y.iter().map(|v| (v - mean_y) * (v - mean_y)).sum()
    } else {
        y.iter().map(|v| v * v).sum()
    };
    let r_squared = if sst > 0.0 { 1.0 - ssr / sst } else { 1.0 };
    let adj_r_squared = if n > p && sst > 0.0 {
        1.0 - (1.0 - r_squared) * (n as f64 - 1.0) / (n - p) as f64
    } else {
        r_squared
    };

    // classical inference needs residual degrees of freedom
    let (std_errors, t_values, p_values, f_statistic) = if n > p {
        let sigma2 = ssr / (n - p) as f64;
        let xtx_inverse = invert_gram(&r, x)?;
        let se: Vec<f64> = (0..p).map(|j| (sigma2 * xtx_inverse[(j, j)]).sqrt()).collect();
        let t: Vec<f64> = beta.iter().zip(&se).map(|(b, s)| b / s).collect();
        let dist = StudentsT::new(0.0, 1.0, (n - p) as f64)
            .map_err(|e| RegressError::Degenerate(e.to_string()))?;
        let pv: Vec<f64> = t.iter().map(|&t| 2.0 * (1.0 - dist.cdf(t.abs()))).collect();
        let k_slopes = x.predictors();
        let f = if x.intercept && k_slopes > 0 && sst > 0.0 {
            let f_stat = ((sst - ssr) / k_slopes as f64) / (ssr / (n - p) as f64);
            let f_dist = FisherSnedecor::new(k_slopes as f64, (n - p) as f64)
                .map_err(|e| RegressError::Degenerate(e.to_string()))?;
            let p_value = if f_stat.is_finite() {
                1.0 - f_dist.cdf(f_stat)
            } else {
                0.0
            };
            Some((f_stat, p_value))
        } else {
            None
        };
        (Some(se), Some(t), Some(pv), f)
    } else {
        (None, None, None, None)
    };

    Ok(RegressionResult {
        method: Method::Ols,
        lambda: None,
        names: x.parameter_names(),
        coefficients: beta.iter().copied().collect(),
        std_errors,
        t_values,
        p_values,
        r_squared,
        adj_r_squared,
        f_statistic,
        residuals,
        n_observations: n,
        n_predictors: x.predictors(),
        standardization: x.standardization.clone(),
    })
}

/// Name columns that are (nearly) linear combinations of earlier ones,
/// via modified Gram-Schmidt on the full matrix.
fn check_rank(full: &DMatrix<f64>, x: &DesignMatrix) -> Result<(), RegressError> {
    let names = x.parameter_names();
    let mut basis: Vec<DVector<f64>> = Vec::new();
    let mut offending = Vec::new();
    for j in 0..full.ncols() {
        let mut v = full.column(j).into_owned();
        let original = v.norm();
        for b in &basis {
            let projection = b.dot(&v);
            v -= b * projection;
        }
        let remaining = v.norm();
        if remaining <= 1e-10 * original.max(1.0) {
            offending.push(names[j].clone());
        } else {
            basis.push(v / remaining);
        }
    }
    if offending.is_empty() {
        Ok(())
    } else {
        Err(RegressError::RankDeficient(offending))
    }
}

/// (X'X)^-1 from the R factor of a QR decomposition.
fn invert_gram(r: &DMatrix<f64>, x: &DesignMatrix) -> Result<DMatrix<f64>, RegressError> {
    let p = r.ncols();
    let r_square = r.rows(0, p).into_owned();
    let identity = DMatrix::identity(p, p);
    let r_inverse = r_square
        .solve_upper_triangular(&identity)
        .ok_or_else(|| RegressError::RankDeficient(x.names.clone()))?;
    Ok(&r_inverse * r_inverse.transpose())
}

/// Ridge regression on the standardized scale: slopes solve
/// `(Z'Z + lambda I) b = Z'(y - mean(y))`; the intercept is the response
/// mean and is never penalized.
pub fn ridge(y: &[f64], x: &DesignMatrix, lambda: f64) -> Result<RegressionResult, RegressError> {
    if lambda < 0.0 {
        return Err(RegressError::NegativeLambda(lambda));
    }
    let n = x.rows();
    if y.len() != n {
        return Err(RegressError::DimensionMismatch { y: y.len(), x: n });
    }
    let standardized = x.standardize()?;
    let z = &standardized.data;
    let mean_y = y.iter().sum::<f64>() / n as f64;
    let y_centered = DVector::from_iterator(n, y.iter().map(|v| v - mean_y));
    let k = z.ncols();
    let mut gram = z.transpose() * z;
    for j in 0..k {
        gram[(j, j)] += lambda;
    }
    let rhs = z.transpose() * &y_centered;
    let slopes = gram
        .clone()
        .cholesky()
        .map(|c| c.solve(&rhs))
        .or_else(|| gram.lu().solve(&rhs))
        .ok_or_else(|| RegressError::RankDeficient(x.names.clone()))?;

    finish_penalized(Method::Ridge, lambda, y, mean_y, &standardized, slopes.as_slice())
}

/// Lasso via cyclic coordinate descent with soft thresholding on the
/// standardized scale, minimizing `sum (y_i - x_i b)^2 + lambda sum |b_j|`.
/// Thresholded coefficients are exactly zero.
pub fn lasso(y: &[f64], x: &DesignMatrix, lambda: f64) -> Result<RegressionResult, RegressError> {
    if lambda < 0.0 {
        return Err(RegressError::NegativeLambda(lambda));
    }
    let n = x.rows();
    if y.len() != n {
        return Err(RegressError::DimensionMismatch { y: y.len(), x: n });
    }
    let standardized = x.standardize()?;
    let z = &standardized.data;
    let k = z.ncols();
    let mean_y = y.iter().sum::<f64>() / n as f64;
    let y_centered: Vec<f64> = y.iter().map(|v| v - mean_y).collect();

    let column_ss: Vec<f64> = (0..k).map(|j| z.column(j).norm_squared()).collect();
    let mut b = vec![0.0; k];
    let mut residual = y_centered.clone();
    let mut converged = false;
    let mut sweeps = 0;
    while sweeps < LASSO_MAX_SWEEPS {
        sweeps += 1;
        let mut max_change: f64 = 0.0;
        for j in 0..k {
            let column = z.column(j);
            // partial residual correlation with coordinate j added back
            let mut rho = 0.0;
            for i in 0..n {
                rho += column[i] * residual[i];
            }
            rho += column_ss[j] * b[j];
            let updated = soft_threshold(rho, lambda / 2.0) / column_ss[j];
            let change = updated - b[j];
            if change != 0.0 {
                for i in 0..n {
                    residual[i] -= column[i] * change;
                }
            }
            max_change = max_change.max(change.abs());
            b[j] = updated;
        }
        if max_change < LASSO_TOLERANCE {
            converged = true;
            break;
        }
    }
    if !converged {
        return Err(RegressError::NonConvergence { sweeps, last: b });
    }

    finish_penalized(Method::Lasso, lambda, y, mean_y, &standardized, &b)
}

fn soft_threshold(value: f64, threshold: f64) -> f64 {
    if value > threshold {
        value - threshold
    } else if value < -threshold {
        value + threshold
    } else {
        0.0
    }
}

/// The lasso objective `sum (y_c - Z b)^2 + lambda sum |b|` on the
/// standardized scale; exposed for oracle checks.
pub fn lasso_objective(y: &[f64], x: &DesignMatrix, b: &[f64], lambda: f64) -> f64 {
    let standardized = if x.standardization.is_some() {
        x.clone()
    } else {
        x.standardize().expect("standardizable design")
    };
    let n = x.rows();
    let mean_y = y.iter().sum::<f64>() / n as f64;
    let mut sse = 0.0;
    for i in 0..n {
        let mut fitted = 0.0;
        for j in 0..standardized.data.ncols() {
            fitted += standardized.data[(i, j)] * b[j];
        }
        let e = (y[i] - mean_y) - fitted;
        sse += e * e;
    }
    sse + lambda * b.iter().map(|v| v.abs()).sum::<f64>()
}

/// Smallest penalty at which every lasso slope is exactly zero for this
/// problem: `2 max_j |z_j' y_c|`.
pub fn lasso_lambda_max(y: &[f64], x: &DesignMatrix) -> Result<f64, RegressError> {
    let standardized = x.standardize()?;
    let n = x.rows();
    let mean_y = y.iter().sum::<f64>() / n as f64;
    let y_centered = DVector::from_iterator(n, y.iter().map(|v| v - mean_y));
    let correlations = standardized.data.transpose() * y_centered;
    Ok(2.0 * correlations.iter().fold(0.0f64, |acc, v| acc.max(v.abs())))
}

fn finish_penalized(
    method: Method,
    lambda: f64,
    y: &[f64],
    mean_y: f64,
    standardized: &DesignMatrix,
    slopes: &[f64],
) -> Result<RegressionResult, RegressError> {
    let n = standardized.rows();
    let z = &standardized.data;
    let mut residuals = Vec::with_capacity(n);
    let mut ssr = 0.0;
    for i in 0..n {
        let mut fitted = mean_y;
        for (j, &slope) in slopes.iter().enumerate() {
            fitted += z[(i, j)] * slope;
        }
        let e = y[i] - fitted;
        residuals.push(e);
        ssr += e * e;
    }
    let sst: f64 = y.iter().map(|v| (v - mean_y) * (v - mean_y)).sum();
    let r_squared = if sst > 0.0 { 1.0 - ssr / sst } else { 1.0 };
    let p = slopes.len() + 1;
    let adj_r_squared = if n > p && sst > 0.0 {
        1.0 - (1.0 - r_squared) * (n as f64 - 1.0) / (n - p) as f64
    } else {
        r_squared
    };
    let mut names = vec!["intercept".to_string()];
    names.extend(standardized.names.iter().cloned());
    let mut coefficients = vec![mean_y];
    coefficients.extend_from_slice(slopes);
    Ok(RegressionResult {
        method,
        lambda: Some(lambda),
        names,
        coefficients,
        std_errors: None,
        t_values: None,
        p_values: None,
        r_squared,
        adj_r_squared,
        f_statistic: None,
        residuals,
        n_observations: n,
        n_predictors: standardized.predictors(),
        standardization: standardized.standardization.clone(),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PenaltyKind {
    Ridge,
    Lasso,
}

/// Pick the penalty minimizing k-fold cross-validated squared error.
/// Fold assignment is a seeded shuffle, so selection is reproducible;
/// ties resolve to the smallest penalty.
pub fn select_lambda(
    y: &[f64],
    x: &DesignMatrix,
    grid: &[f64],
    kind: PenaltyKind,
    folds: usize,
    seed: u64,
) -> Result<f64, RegressError> {
    if grid.is_empty() {
        return Err(RegressError::EmptyGrid);
    }
    if let Some(&bad) = grid.iter().find(|&&l| l < 0.0) {
        return Err(RegressError::NegativeLambda(bad));
    }
    let n = x.rows();
    if y.len() != n {
        return Err(RegressError::DimensionMismatch { y: y.len(), x: n });
    }
    let folds = folds.max(2);
    if folds > n {
        return Err(RegressError::FoldsExceedObservations {
            folds,
            observations: n,
        });
    }
    let mut candidates: Vec<f64> = grid.to_vec();
    candidates.sort_by(|a, b| a.partial_cmp(b).expect("finite lambdas"));
    candidates.dedup();

    let mut indices: Vec<usize> = (0..n).collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    indices.shuffle(&mut rng);
    let fold_of: Vec<usize> = {
        let mut assignment = vec![0; n];
        for (position, &row) in indices.iter().enumerate() {
            assignment[row] = position % folds;
        }
        assignment
    };

    let mut best: Option<(f64, f64)> = None;
    for &lambda in &candidates {
        let mut error = 0.0;
        for fold in 0..folds {
            let train_rows: Vec<usize> = (0..n).filter(|&i| fold_of[i] != fold).collect();
            let test_rows: Vec<usize> = (0..n).filter(|&i| fold_of[i] == fold).collect();
            let train_y: Vec<f64> = train_rows.iter().map(|&i| y[i]).collect();
            let columns: Vec<Vec<f64>> = (0..x.predictors())
                .map(|j| train_rows.iter().map(|&i| x.data[(i, j)]).collect())
                .collect();
            let name_refs: Vec<&str> = x.names.iter().map(String::as_str).collect();
            let train_x = DesignMatrix::from_columns(&name_refs, &columns, x.intercept)?;
            let fit = match kind {
                PenaltyKind::Ridge => ridge(&train_y, &train_x, lambda)?,
                PenaltyKind::Lasso => lasso(&train_y, &train_x, lambda)?,
            };
            for &i in &test_rows {
                let row: Vec<f64> = (0..x.predictors()).map(|j| x.data[(i, j)]).collect();
                let e = y[i] - fit.predict(&row);
                error += e * e;
            }
        }
        let improves = match best {
            None => true,
            Some((_, best_error)) => error < best_error,
        };
        if improves {
            best = Some((lambda, error));
        }
    }
    Ok(best.expect("non-empty grid").0)
}
