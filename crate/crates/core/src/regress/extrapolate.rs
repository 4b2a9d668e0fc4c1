//! Equilibrium-year extrapolation: fit a least-squares line through
//! yearly dummy coefficients and report where it reaches zero.

use super::RegressError;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Extrapolation {
    /// Coefficient change per year.
    pub slope: f64,
    /// Fitted value at the mean year.
    pub mean_level: f64,
    pub mean_year: f64,
    pub last_year: f64,
    /// Year the fitted line reaches zero; `None` when the slope is not
    /// positive (the gap never closes).
    pub crossing_year: Option<f64>,
}

impl Extrapolation {
    /// Years between the last observation and the fitted crossing.
    pub fn years_from_last(&self) -> Option<f64> {
        self.crossing_year.map(|y| y - self.last_year)
    }
}

/// Least-squares line through (year, coefficient) points, solved in
/// centered form: slope = Sxy / Sxx, level at the mean year = mean(y).
pub fn extrapolate_equilibrium(points: &[(f64, f64)]) -> Result<Extrapolation, RegressError> {
    if points.len() < 2 {
        return Err(RegressError::TooFewPoints(points.len()));
    }
    if let Some((index, &(_, value))) = points.iter().enumerate().find(|(_, &(_, c))| c > 0.0) {
        return Err(RegressError::PositiveCoefficient { index, value });
    }
    let n = points.len() as f64;
    let mean_year = points.iter().map(|&(x, _)| x).sum::<f64>() / n;
    let mean_level = points.iter().map(|&(_, y)| y).sum::<f64>() / n;
    let sxx: f64 = points
        .iter()
        .map(|&(x, _)| (x - mean_year) * (x - mean_year))
        .sum();
    if sxx <= 0.0 {
        return Err(RegressError::Degenerate(
            "all observations share one year".into(),
        ));
    }
    let sxy: f64 = points
        .iter()
        .map(|&(x, y)| (x - mean_year) * (y - mean_level))
        .sum();
    let slope = sxy / sxx;
    let crossing_year = if slope > 0.0 {
        Some(mean_year - mean_level / slope)
    } else {
        None
    };
    let last_year = points
        .iter()
        .map(|&(x, _)| x)
        .fold(f64::NEG_INFINITY, f64::max);
    Ok(Extrapolation {
        slope,
        mean_level,
        mean_year,
        last_year,
        crossing_year,
    })
}
