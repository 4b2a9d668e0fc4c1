//! Diagnostic tests: Breusch-Pagan heteroskedasticity (LM and F
//! variants), the Chow stability test, and the one-sided positivity test
//! of the size coefficients.

use super::linear::ols;
use super::{DesignMatrix, RegressError, RegressionResult};
use statrs::distribution::{ChiSquared, ContinuousCDF, FisherSnedecor, StudentsT};

#[derive(Debug, Clone, Copy)]
pub struct BreuschPagan {
    pub lm: f64,
    pub p_lm: f64,
    pub f: f64,
    pub p_f: f64,
}

/// Breusch-Pagan test: regress squared residuals on the original
/// predictors; `LM = n R^2_aux` against chi-square(k), plus the
/// auxiliary regression's F statistic.
pub fn breusch_pagan(residuals: &[f64], x: &DesignMatrix) -> Result<BreuschPagan, RegressError> {
    let n = x.rows();
    if residuals.len() != n {
        return Err(RegressError::DimensionMismatch {
            y: residuals.len(),
            x: n,
        });
    }
    let squared: Vec<f64> = residuals.iter().map(|e| e * e).collect();
    let mean = squared.iter().sum::<f64>() / n as f64;
    let sst: f64 = squared.iter().map(|v| (v - mean) * (v - mean)).sum();
    if sst <= f64::EPSILON * mean.max(1.0) {
        // constant squared residuals carry no heteroskedasticity signal
        return Ok(BreuschPagan {
            lm: 0.0,
            p_lm: 1.0,
            f: 0.0,
            p_f: 1.0,
        });
    }
    let aux = DesignMatrix {
        names: x.names.clone(),
        data: x.data.clone(),
        intercept: true,
        standardization: None,
    };
    let fit = ols(&squared, &aux)?;
    let k = x.predictors();
    let r2 = fit.r_squared.clamp(0.0, 1.0);
    let lm = n as f64 * r2;
    let chi = ChiSquared::new(k as f64).map_err(|e| RegressError::Degenerate(e.to_string()))?;
    let p_lm = 1.0 - chi.cdf(lm);
    let (f, p_f) = match fit.f_statistic {
        Some(pair) => pair,
        None => (0.0, 1.0),
    };
    Ok(BreuschPagan { lm, p_lm, f, p_f })
}

#[derive(Debug, Clone, Copy)]
pub struct Chow {
    pub f: f64,
    pub p: f64,
}

/// Chow test of coefficient equality between two groups:
/// `F = [(SSR_pooled - SSR1 - SSR2)/k] / [(SSR1 + SSR2)/(n - 2k)]`
/// with k the number of fitted parameters per group.
pub fn chow_test(y: &[f64], x: &DesignMatrix, group_two: &[bool]) -> Result<Chow, RegressError> {
    let n = x.rows();
    if y.len() != n || group_two.len() != n {
        return Err(RegressError::DimensionMismatch { y: y.len(), x: n });
    }
    let parameters = x.parameters();
    let rows_two = group_two.iter().filter(|&&g| g).count();
    let rows_one = n - rows_two;
    for (group, rows) in [(1, rows_one), (2, rows_two)] {
        if rows <= parameters {
            return Err(RegressError::GroupTooSmall {
                group,
                rows,
                parameters,
            });
        }
    }
    let pooled = ols(y, x)?;
    let ssr_pooled: f64 = pooled.residuals.iter().map(|e| e * e).sum();
    let mut ssr_split = 0.0;
    for target in [false, true] {
        let rows: Vec<usize> = (0..n).filter(|&i| group_two[i] == target).collect();
        let sub_y: Vec<f64> = rows.iter().map(|&i| y[i]).collect();
        let columns: Vec<Vec<f64>> = (0..x.predictors())
            .map(|j| rows.iter().map(|&i| x.data[(i, j)]).collect())
            .collect();
        let name_refs: Vec<&str> = x.names.iter().map(String::as_str).collect();
        let sub_x = DesignMatrix::from_columns(&name_refs, &columns, x.intercept)?;
        let fit = ols(&sub_y, &sub_x)?;
        ssr_split += fit.residuals.iter().map(|e| e * e).sum::<f64>();
    }
    let df2 = (n - 2 * parameters) as f64;
    let f = ((ssr_pooled - ssr_split) / parameters as f64) / (ssr_split / df2);
    let dist = FisherSnedecor::new(parameters as f64, df2)
        .map_err(|e| RegressError::Degenerate(e.to_string()))?;
    let p = if f.is_finite() {
        1.0 - dist.cdf(f.max(0.0))
    } else {
        0.0
    };
    Ok(Chow { f, p })
}

/// One-sided positivity test: true iff every named coefficient is
/// positive and individually significant at `alpha` (P(T > t) < alpha).
pub fn mars_test(
    result: &RegressionResult,
    names: &[&str],
    alpha: f64,
) -> Result<bool, RegressError> {
    let t_values = result
        .t_values
        .as_ref()
        .ok_or_else(|| RegressError::Degenerate("fit carries no t statistics".into()))?;
    let df = (result.n_observations - result.names.len()) as f64;
    if df <= 0.0 {
        return Err(RegressError::Degenerate("no residual degrees of freedom".into()));
    }
    let dist =
        StudentsT::new(0.0, 1.0, df).map_err(|e| RegressError::Degenerate(e.to_string()))?;
    for name in names {
        let index = result
            .index_of(name)
            .ok_or_else(|| RegressError::MissingCoefficient(name.to_string()))?;
        if result.coefficients[index] <= 0.0 {
            return Ok(false);
        }
        let one_sided = 1.0 - dist.cdf(t_values[index]);
        if one_sided >= alpha {
            return Ok(false);
        }
    }
    Ok(true)
}
