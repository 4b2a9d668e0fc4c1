//! Simulation configuration: every model constant in one place.

use serde::{Deserialize, Serialize};
use thiserror::Error;

/// All constants of the network model. Every field has a default, so a
/// TOML config may set any subset; unknown keys are rejected.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct SimConfig {
    /// Number of countries (nodes). Node 0 is the US hub, nodes 1 and 2
    /// are the rival currency issuers.
    pub n_countries: usize,
    /// Number of simulated months.
    pub horizon_months: usize,
    /// Months over which contagion pressure decays linearly to zero
    /// after the trigger.
    pub decay_horizon_months: usize,
    /// Scale of the per-month inherent-shock probability.
    pub p_inherent_scale: f64,
    /// Scale of the per-month neighbor-influence probability.
    pub p_neighbor_scale: f64,
    /// Neighbor mean-dedollarization level (inclusive) that opens the
    /// peer-influence channel.
    pub neighbor_threshold: f64,
    /// Dedollarization level (strict) above which a USD country adopts
    /// an alternative currency.
    pub switch_threshold: f64,
    /// Pareto shape for peripheral GDP draws.
    pub pareto_shape: f64,
    /// Pareto scale (minimum) for peripheral GDP draws, in USD.
    pub pareto_scale: f64,
    /// Annual GDP growth used to extrapolate the US series.
    pub growth_us: f64,
    /// Annual GDP growth used to extrapolate the China series.
    pub growth_cn: f64,
    /// Annual GDP growth used to extrapolate the Russia series.
    pub growth_ru: f64,
    /// Annual GDP growth of peripheral countries.
    pub growth_periph: f64,
    /// Degree floor for every node (capped at n-1 in small worlds).
    pub min_degree: usize,
    /// Number of Monte Carlo runs in an ensemble.
    pub runs: usize,
    /// US base inflation rate.
    pub base_inflation: f64,
    /// Dollars injected per month. `None` means 0.2% of current US GDP
    /// each month.
    pub money_printed_per_step: Option<f64>,
    /// Annual interest rate applied to newly printed money when accruing
    /// US debt service.
    pub debt_interest_rate: f64,
    /// US debt-interest burden at month 0, USD per year. The default
    /// approximates the 2010 US net-interest burden.
    pub initial_debt_interest: f64,
    /// Military spending as a fraction of GDP. The default is the mean
    /// spending-to-output ratio observed in the bundled reserve panel.
    pub ms_share: f64,
    /// Foreign-exchange reserves as a fraction of GDP.
    pub fer_share: f64,
    /// Initial dollar fraction of every country's reserves.
    pub initial_dollar_share: f64,
    /// Master seed; per-run streams are derived from it.
    pub master_seed: u64,
}

impl Default for SimConfig {
    fn default() -> Self {
        Self {
            n_countries: 195,
            horizon_months: 300,
            decay_horizon_months: 180,
            p_inherent_scale: 0.02,
            p_neighbor_scale: 0.008,
            neighbor_threshold: 0.25,
            switch_threshold: 0.5,
            pareto_shape: 2.5,
            pareto_scale: 0.5e12,
            growth_us: 0.02,
            growth_cn: 0.03,
            growth_ru: 0.01,
            growth_periph: 0.02,
            min_degree: 10,
            runs: 100,
            base_inflation: 0.02,
            money_printed_per_step: None,
            debt_interest_rate: 0.04,
            initial_debt_interest: 0.22e12,
            ms_share: 0.0175,
            fer_share: 0.10,
            initial_dollar_share: 0.56,
            master_seed: 42,
        }
    }
}

#[derive(Debug, Error)]
pub enum ConfigError {
    #[error("field `{field}` must lie in [0, 1], got {value}")]
    FractionOutOfRange { field: &'static str, value: f64 },
    #[error("pareto_shape must be > 1, got {0}")]
    ParetoShape(f64),
    #[error("pareto_scale must be > 0, got {0}")]
    ParetoScale(f64),
    #[error("n_countries must be at least 3 (US, China, Russia), got {0}")]
    TooFewCountries(usize),
    #[error("decay_horizon_months must be at least 1")]
    DecayHorizon,
    #[error("runs must be at least 1")]
    Runs,
    #[error("growth rate `{field}` must be > -1, got {value}")]
    GrowthRate { field: &'static str, value: f64 },
    #[error("{field} must be non-negative, got {value}")]
    Negative { field: &'static str, value: f64 },
    #[error("config parse error: {0}")]
    Parse(String),
}

impl SimConfig {
    /// Parse a TOML document, rejecting unknown keys, then validate.
    pub fn from_toml_str(text: &str) -> Result<Self, ConfigError> {
        let config: SimConfig =
            toml::from_str(text).map_err(|e| ConfigError::Parse(e.to_string()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> Result<(), ConfigError> {
        if self.n_countries < 3 {
            return Err(ConfigError::TooFewCountries(self.n_countries));
        }
        let fractions = [
            ("p_inherent_scale", self.p_inherent_scale),
            ("p_neighbor_scale", self.p_neighbor_scale),
            ("neighbor_threshold", self.neighbor_threshold),
            ("switch_threshold", self.switch_threshold),
            ("base_inflation", self.base_inflation),
            ("ms_share", self.ms_share),
            ("fer_share", self.fer_share),
            ("initial_dollar_share", self.initial_dollar_share),
        ];
        for (field, value) in fractions {
            if !(0.0..=1.0).contains(&value) {
                return Err(ConfigError::FractionOutOfRange { field, value });
            }
        }
        if self.pareto_shape <= 1.0 {
            return Err(ConfigError::ParetoShape(self.pareto_shape));
        }
        if self.pareto_scale <= 0.0 {
            return Err(ConfigError::ParetoScale(self.pareto_scale));
        }
        if self.decay_horizon_months < 1 {
            return Err(ConfigError::DecayHorizon);
        }
        if self.runs < 1 {
            return Err(ConfigError::Runs);
        }
        let growths = [
            ("growth_us", self.growth_us),
            ("growth_cn", self.growth_cn),
            ("growth_ru", self.growth_ru),
            ("growth_periph", self.growth_periph),
        ];
        for (field, value) in growths {
            if value <= -1.0 {
                return Err(ConfigError::GrowthRate { field, value });
            }
        }
        let non_negative = [
            ("debt_interest_rate", self.debt_interest_rate),
            ("initial_debt_interest", self.initial_debt_interest),
            (
                "money_printed_per_step",
                self.money_printed_per_step.unwrap_or(0.0),
            ),
        ];
        for (field, value) in non_negative {
            if value < 0.0 {
                return Err(ConfigError::Negative { field, value });
            }
        }
        Ok(())
    }

    /// Dollars printed in the given month. The default policy scales
    /// with current US GDP.
    pub fn money_printed(&self, us_gdp: f64) -> f64 {
        self.money_printed_per_step.unwrap_or(0.002 * us_gdp)
    }

    /// Degree floor after capping at n-1 for small worlds.
    pub fn degree_floor(&self) -> usize {
        self.min_degree.min(self.n_countries - 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_are_valid() {
        SimConfig::default().validate().unwrap();
    }

    #[test]
    fn toml_roundtrip_with_partial_fields() {
        let config = SimConfig::from_toml_str("n_countries = 50\nmaster_seed = 7\n").unwrap();
        assert_eq!(config.n_countries, 50);
        assert_eq!(config.master_seed, 7);
        assert_eq!(config.decay_horizon_months, 180);
    }

    #[test]
    fn unknown_key_is_rejected() {
        let err = SimConfig::from_toml_str("n_contries = 50\n").unwrap_err();
        assert!(matches!(err, ConfigError::Parse(_)));
    }

    #[test]
    fn invalid_probability_is_rejected() {
        let err = SimConfig::from_toml_str("p_inherent_scale = 1.5\n").unwrap_err();
        assert!(matches!(err, ConfigError::FractionOutOfRange { .. }));
    }

    #[test]
    fn degree_floor_caps_at_n_minus_one() {
        let config = SimConfig {
            n_countries: 3,
            min_degree: 2,
            ..SimConfig::default()
        };
        assert_eq!(config.degree_floor(), 2);
        let config = SimConfig {
            n_countries: 5,
            min_degree: 10,
            ..SimConfig::default()
        };
        config.validate().unwrap();
        assert_eq!(config.degree_floor(), 4);
    }
}
