//! Regression toolkit: standardized design matrices, OLS with classical
//! inference, Ridge and Lasso on the standardized scale, cross-validated
//! penalty selection, diagnostic tests, and the dummy-coefficient
//! equilibrium extrapolation.

mod diagnostics;
mod extrapolate;
mod linear;
mod report;

pub use diagnostics::{breusch_pagan, chow_test, mars_test, BreuschPagan, Chow};
pub use extrapolate::{extrapolate_equilibrium, Extrapolation};
pub use linear::{lasso, lasso_lambda_max, lasso_objective, ols, ridge, select_lambda, PenaltyKind};
pub use report::{report_csv, report_text};

use nalgebra::DMatrix;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum RegressError {
    #[error("response length {y} does not match design rows {x}")]
    DimensionMismatch { y: usize, x: usize },
    #[error("columns must have equal lengths")]
    RaggedColumns,
    #[error("column `{0}` is constant; cannot standardize")]
    ConstantColumn(String),
    #[error("design is rank deficient; offending column(s): {}", .0.join(", "))]
    RankDeficient(Vec<String>),
    #[error("need more observations ({rows}) than parameters ({parameters})")]
    NotEnoughRows { rows: usize, parameters: usize },
    #[error("penalty must be non-negative, got {0}")]
    NegativeLambda(f64),
    #[error("coordinate descent did not converge after {sweeps} sweeps")]
    NonConvergence { sweeps: usize, last: Vec<f64> },
    #[error("lambda grid is empty")]
    EmptyGrid,
    #[error("{folds} folds exceed {observations} observations")]
    FoldsExceedObservations { folds: usize, observations: usize },
    #[error("coefficient `{0}` not present in the fit")]
    MissingCoefficient(String),
    #[error("group {group} has {rows} rows; needs more than {parameters}")]
    GroupTooSmall {
        group: usize,
        rows: usize,
        parameters: usize,
    },
    #[error("need at least two points, got {0}")]
    TooFewPoints(usize),
    #[error("dummy coefficient {value} at index {index} is positive")]
    PositiveCoefficient { index: usize, value: f64 },
    #[error("degenerate problem: {0}")]
    Degenerate(String),
}

/// Per-column standardization record: (mean, sample standard deviation).
pub type Standardization = Vec<(f64, f64)>;

/// Observation-by-predictor design matrix. The intercept is implicit and
/// never stored as a column.
#[derive(Debug, Clone)]
pub struct DesignMatrix {
    pub names: Vec<String>,
    pub data: DMatrix<f64>,
    pub intercept: bool,
    /// Set when the columns have been standardized.
    pub standardization: Option<Standardization>,
}

impl DesignMatrix {
    /// Build from named columns; all columns must have equal length.
    pub fn from_columns(
        names: &[&str],
        columns: &[Vec<f64>],
        intercept: bool,
    ) -> Result<Self, RegressError> {
        assert_eq!(names.len(), columns.len());
        let rows = columns.first().map(Vec::len).unwrap_or(0);
        if columns.iter().any(|c| c.len() != rows) {
            return Err(RegressError::RaggedColumns);
        }
        let data = DMatrix::from_fn(rows, columns.len(), |i, j| columns[j][i]);
        Ok(DesignMatrix {
            names: names.iter().map(|s| s.to_string()).collect(),
            data,
            intercept,
            standardization: None,
        })
    }

    pub fn rows(&self) -> usize {
        self.data.nrows()
    }

    pub fn predictors(&self) -> usize {
        self.data.ncols()
    }

    /// Parameters estimated by an OLS fit on this design.
    pub fn parameters(&self) -> usize {
        self.predictors() + usize::from(self.intercept)
    }

    /// Column-wise standardization to mean zero and unit sample standard
    /// deviation (n-1 convention). The record of means and sds is kept
    /// for prediction on the original scale.
    pub fn standardize(&self) -> Result<DesignMatrix, RegressError> {
        let n = self.rows();
        if n < 2 {
            return Err(RegressError::NotEnoughRows {
                rows: n,
                parameters: 2,
            });
        }
        let mut data = self.data.clone();
        let mut record = Vec::with_capacity(self.predictors());
        for j in 0..self.predictors() {
            let column = self.data.column(j);
            let mean = column.sum() / n as f64;
            let ss: f64 = column.iter().map(|&v| (v - mean) * (v - mean)).sum();
            let sd = (ss / (n as f64 - 1.0)).sqrt();
            if sd <= f64::EPSILON * mean.abs().max(1.0) {
                return Err(RegressError::ConstantColumn(self.names[j].clone()));
            }
            for i in 0..n {
                data[(i, j)] = (self.data[(i, j)] - mean) / sd;
            }
            record.push((mean, sd));
        }
        Ok(DesignMatrix {
            names: self.names.clone(),
            data,
            intercept: self.intercept,
            standardization: Some(record),
        })
    }

    /// Full matrix including the leading intercept column when present.
    pub(crate) fn full_matrix(&self) -> DMatrix<f64> {
        if self.intercept {
            let n = self.rows();
            let k = self.predictors();
            DMatrix::from_fn(n, k + 1, |i, j| {
                if j == 0 {
                    1.0
                } else {
                    self.data[(i, j - 1)]
                }
            })
        } else {
            self.data.clone()
        }
    }

    /// Parameter names including the intercept when present.
    pub(crate) fn parameter_names(&self) -> Vec<String> {
        let mut names = Vec::with_capacity(self.parameters());
        if self.intercept {
            names.push("intercept".to_string());
        }
        names.extend(self.names.iter().cloned());
        names
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Ols,
    Ridge,
    Lasso,
}

impl Method {
    pub fn as_str(self) -> &'static str {
        match self {
            Method::Ols => "ols",
            Method::Ridge => "ridge",
            Method::Lasso => "lasso",
        }
    }
}

/// Fit output shared by all three estimators. Classical inference
/// columns are present for OLS only; Ridge and Lasso report coefficients
/// on the standardized scale with the standardization attached.
#[derive(Debug, Clone)]
pub struct RegressionResult {
    pub method: Method,
    pub lambda: Option<f64>,
    /// Parameter names; "intercept" first when fitted.
    pub names: Vec<String>,
    pub coefficients: Vec<f64>,
    pub std_errors: Option<Vec<f64>>,
    pub t_values: Option<Vec<f64>>,
    pub p_values: Option<Vec<f64>>,
    pub r_squared: f64,
    pub adj_r_squared: f64,
    /// Joint F test of all slopes: (statistic, p value).
    pub f_statistic: Option<(f64, f64)>,
    pub residuals: Vec<f64>,
    pub n_observations: usize,
    pub n_predictors: usize,
    /// Standardization applied to predictors before fitting, if any.
    pub standardization: Option<Standardization>,
}

impl RegressionResult {
    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    pub fn coefficient(&self, name: &str) -> Option<f64> {
        self.index_of(name).map(|i| self.coefficients[i])
    }

    /// Slope coefficients (everything except the intercept).
    pub fn slopes(&self) -> &[f64] {
        if self.names.first().map(String::as_str) == Some("intercept") {
            &self.coefficients[1..]
        } else {
            &self.coefficients
        }
    }

    /// Predict the response for one raw predictor row, applying the
    /// stored standardization when present.
    pub fn predict(&self, row: &[f64]) -> f64 {
        assert_eq!(row.len(), self.n_predictors);
        let has_intercept = self.names.first().map(String::as_str) == Some("intercept");
        let mut value = if has_intercept { self.coefficients[0] } else { 0.0 };
        let slopes = self.slopes();
        for (j, &x) in row.iter().enumerate() {
            let z = match &self.standardization {
                Some(record) => (x - record[j].0) / record[j].1,
                None => x,
            };
            value += slopes[j] * z;
        }
        value
    }
}
