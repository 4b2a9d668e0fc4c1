//! Regression report rendering: CSV rows and a plain-text table in the
//! coefficient (standard error) style.

use super::RegressionResult;

/// One CSV row per parameter: name, coefficient, se, t, p. Inference
/// columns are blank when the estimator does not provide them.
pub fn report_csv(result: &RegressionResult) -> String {
    let mut out = String::from("name,coefficient,std_error,t_value,p_value\n");
    for (index, name) in result.names.iter().enumerate() {
        let se = result
            .std_errors
            .as_ref()
            .map(|v| v[index].to_string())
            .unwrap_or_default();
        let t = result
            .t_values
            .as_ref()
            .map(|v| v[index].to_string())
            .unwrap_or_default();
        let p = result
            .p_values
            .as_ref()
            .map(|v| v[index].to_string())
            .unwrap_or_default();
        out.push_str(&format!(
            "{},{},{},{},{}\n",
            name, result.coefficients[index], se, t, p
        ));
    }
    out
}

/// Plain-text table: coefficient (standard error) per parameter plus the
/// fit summary line.
pub fn report_text(result: &RegressionResult) -> String {
    let mut out = String::new();
    let lambda = result
        .lambda
        .map(|l| format!(", lambda = {l}"))
        .unwrap_or_default();
    out.push_str(&format!(
        "method: {}{lambda}   n = {}\n",
        result.method.as_str(),
        result.n_observations
    ));
    let width = result.names.iter().map(String::len).max().unwrap_or(4);
    for (index, name) in result.names.iter().enumerate() {
        let se_text = match &result.std_errors {
            Some(se) => format!(" ({:.5})", se[index]),
            None => String::new(),
        };
        let p_text = match &result.p_values {
            Some(p) => format!("   p = {:.4}", p[index]),
            None => String::new(),
        };
        out.push_str(&format!(
            "  {:width$}  {:>10.4}{}{}\n",
            name, result.coefficients[index], se_text, p_text,
        ));
    }
    out.push_str(&format!(
        "  R^2 = {:.4}   adj R^2 = {:.4}",
        result.r_squared, result.adj_r_squared
    ));
    if let Some((f, p)) = result.f_statistic {
        out.push_str(&format!("   F = {f:.4} (p = {p:.4})"));
    }
    out.push('\n');
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::regress::{ols, DesignMatrix};

    #[test]
    fn csv_and_text_cover_all_parameters() {
        let x = DesignMatrix::from_columns(
            &["x"],
            &[vec![1.0, 2.0, 3.0, 4.0, 5.0]],
            true,
        )
        .unwrap();
        let y = vec![2.1, 2.9, 4.2, 4.9, 6.1];
        let fit = ols(&y, &x).unwrap();
        let csv = report_csv(&fit);
        assert_eq!(csv.lines().count(), 3);
        assert!(csv.starts_with("name,coefficient,std_error,t_value,p_value"));
        let text = report_text(&fit);
        assert!(text.contains("intercept"));
        assert!(text.contains("R^2"));
        assert!(text.contains("F ="));
    }
}
